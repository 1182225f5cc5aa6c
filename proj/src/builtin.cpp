#include "wordmap/builtin.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <string_view>

#include "wordmap/errors.hpp"

namespace wordmap {

namespace detail {
struct BuiltinData {
  std::string_view name;
  std::string_view group_text;
  std::string_view table_text;
};
extern const BuiltinData kBuiltinData[];
extern const unsigned kBuiltinCount;
}  // namespace detail

namespace {

struct Entry {
  GroupPtr group;
  TablePtr table;
};

const detail::BuiltinData& find_data(const std::string& name) {
  for (unsigned i = 0; i < detail::kBuiltinCount; ++i)
    if (detail::kBuiltinData[i].name == name) return detail::kBuiltinData[i];
  throw ValidationError("unknown built-in group '" + name + "'");
}

const Entry& entry(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, Entry> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  const auto& data = find_data(name);
  std::istringstream gin{std::string(data.group_text)};
  Entry e;
  e.group = read_group(gin);
  std::istringstream tin{std::string(data.table_text)};
  e.table = read_character_table(tin, e.group);
  return cache.emplace(name, std::move(e)).first->second;
}

}  // namespace

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (int n = 1; n <= 12; ++n) out.push_back("Z" + std::to_string(n));
    for (const char* s : {"S3", "S4", "D4", "D5", "Q8", "A4"}) out.emplace_back(s);
    return out;
  }();
  return names;
}

bool is_builtin_group(const std::string& name) {
  for (const auto& n : builtin_group_names())
    if (n == name) return true;
  return false;
}

GroupPtr builtin_group(const std::string& name) { return entry(name).group; }
TablePtr builtin_table(const std::string& name) { return entry(name).table; }

}  // namespace wordmap
