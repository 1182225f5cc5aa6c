#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wordmap/group.hpp"

namespace wordmap {

using Complex = std::complex<double>;

inline constexpr double kTableTolerance = 1e-9;

// Irreducible characters of a group, one row per character, one column per
// conjugacy class (in ConjugacyClasses order).  Construction validates
// degrees, sum of squared degrees, and row and column orthogonality.
class CharacterTable {
 public:
  CharacterTable(ClassesPtr classes, std::vector<std::vector<Complex>> rows,
                 std::optional<std::uint64_t> seed = std::nullopt,
                 double tolerance = kTableTolerance);

  const FiniteGroup& group() const noexcept { return *classes_->group; }
  const GroupPtr& group_ptr() const noexcept { return classes_->group; }
  const ConjugacyClasses& classes() const noexcept { return *classes_; }
  const ClassesPtr& classes_ptr() const noexcept { return classes_; }

  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Complex>& row(std::size_t chi) const { return rows_.at(chi); }
  const std::vector<std::vector<Complex>>& rows() const noexcept { return rows_; }
  Complex value(std::size_t chi, std::size_t cls) const { return rows_.at(chi).at(cls); }
  Complex at_element(std::size_t chi, Element g) const { return rows_.at(chi).at(classes_->class_of.at(g)); }
  int degree(std::size_t chi) const { return degrees_.at(chi); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  // Seed of the random class-sum combination, for computed tables.
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

 private:
  ClassesPtr classes_;
  std::vector<std::vector<Complex>> rows_;
  std::vector<int> degrees_;
  std::optional<std::uint64_t> seed_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Character-table file:
//   chartable <group> classes <k>
//   <k class representative indices>
//   <k class sizes>
//   <one line of k values "a+bi" per character>
// Columns are matched to conjugacy_classes(group) through the
// representatives; all checks use the sizes stated in the file, which must
// then agree with the group's actual classes.
TablePtr read_character_table(std::istream& in, const GroupPtr& group);
TablePtr load_character_table(const GroupPtr& group, const std::string& path);
void write_character_table(std::ostream& out, const CharacterTable& table);

inline constexpr std::uint64_t kDefaultTableSeed = 20130101;

struct ComputeOptions {
  std::uint64_t seed = kDefaultTableSeed;
  std::size_t max_order = 120;
  int max_attempts = 16;
};

// Burnside-Dixon style: common eigenvectors of the class-sum multiplication
// matrices, separated with a random real combination of them (retrying on an
// eigenvalue collision).  Rows sorted by degree, then by values.
TablePtr compute_character_table(const GroupPtr& group, const ComputeOptions& options = {});

// (1/|G|) sum_g chi(g^2), rounded to -1, 0 or +1.  Throws ValidationError if
// the sum is not within tolerance of one of them.
int fs_indicator(const CharacterTable& table, std::size_t chi, double tolerance = 1e-6);

// All values of the row are real (max imaginary part <= 1e-9).
bool is_real_character(const CharacterTable& table, std::size_t chi);

// Index of the trivial character.
std::size_t trivial_character(const CharacterTable& table);

// Sorts rows by degree, then lexicographically by values (descending real,
// then imaginary part), so the trivial character comes first.
void sort_rows(std::vector<std::vector<Complex>>& rows);

}  // namespace wordmap
