#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wordmap {

// Index of an element inside a FiniteGroup.
using Element = std::uint32_t;

// Composition convention, used everywhere in this library: products are read
// left to right.  For permutations p*q means "apply p, then q", i.e.
// (p*q)(i) = q(p(i)).  A word x1 x2 ... evaluates to g1*g2*...
class FiniteGroup {
 public:
  // Validates identity, inverses, Latin-square rows/columns and associativity
  // (exhaustive for order <= 24, sampled above).  Throws ValidationError.
  FiniteGroup(std::string name, std::vector<std::vector<Element>> mul_table,
              std::vector<std::string> element_names = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element conjugate(Element g, Element by) const { return mul(mul(inverse(by), g), by); }

  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }
  const std::vector<Element>& inverse_table() const noexcept { return inverse_; }
  const std::vector<std::string>& element_names() const noexcept { return names_; }

  bool same_structure(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  std::string name_;
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  Element identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// 0-based images: perm[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

// Parses 1-based cycle notation such as "(1 2)(3 4)" or "()" on `degree`
// points.  Commas between points are allowed.
Permutation parse_cycles(const std::string& text, std::size_t degree);

// Closure of the generated permutation group.  Elements are discovered
// breadth-first from the identity, multiplying on the right by each generator
// in turn; element i is named by its cycle notation.  Throws ValidationError
// if the closure grows past max_order.
GroupPtr group_from_generators(std::string name, std::span<const Permutation> generators,
                               std::size_t max_order = 10000);

struct ConjugacyClasses {
  GroupPtr group;
  std::vector<std::size_t> class_of;       // element -> class
  std::vector<Element> representatives;    // smallest element index per class
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> centralizer_sizes;
  std::vector<std::size_t> power_class;    // class of g^2 for g in the class
  std::vector<std::size_t> inverse_class;  // class of g^-1

  std::size_t count() const noexcept { return representatives.size(); }
};

using ClassesPtr = std::shared_ptr<const ConjugacyClasses>;

// Classes are numbered by their smallest element, so class 0 is {identity}.
ClassesPtr conjugacy_classes(const GroupPtr& group);

// Group file: "group <name> order <N>" followed by N rows of N indices.
GroupPtr read_group(std::istream& in);
GroupPtr load_group_file(const std::string& path);
void write_group(std::ostream& out, const FiniteGroup& group);

}  // namespace wordmap
