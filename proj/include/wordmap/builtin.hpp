#pragma once

#include <string>
#include <vector>

#include "wordmap/character_table.hpp"
#include "wordmap/group.hpp"

namespace wordmap {

// Names of the shipped groups: Z1..Z12, S3, S4, D4, D5, Q8, A4.
const std::vector<std::string>& builtin_group_names();

bool is_builtin_group(const std::string& name);

// Shipped multiplication table and character table.  Repeated calls return
// the same shared objects.  Throws ValidationError for unknown names.
GroupPtr builtin_group(const std::string& name);
TablePtr builtin_table(const std::string& name);

}  // namespace wordmap
