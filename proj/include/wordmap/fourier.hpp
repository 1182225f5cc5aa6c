#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordmap/character_table.hpp"
#include "wordmap/group.hpp"
#include "wordmap/reduction.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr double kCoefficientTolerance = 1e-6;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // max number of substitutions
  unsigned threads = 0;                   // 0: std::thread::hardware_concurrency()
};

// |G|^d, or BudgetError if it exceeds the budget.
std::uint64_t substitution_count(std::size_t order, std::size_t rank, std::uint64_t budget);

// A function on G that is constant on conjugacy classes, stored per class.
struct ClassFunction {
  ClassesPtr classes;
  std::vector<Complex> values;
  // Exact values when the function counts something (N_w).
  std::optional<std::vector<std::uint64_t>> counts;

  Complex at(Element g) const { return values.at(classes->class_of.at(g)); }
};

struct FourierExpansion {
  TablePtr table;
  std::vector<Complex> coefficients;  // one per table row
};

// N_w by evaluating w on all |G|^d substitutions.  This is the brute-force
// oracle the closed forms and reductions are checked against.
ClassFunction distribution(const Word& w, const ClassesPtr& classes, const EnumerationOptions& options = {});
ClassFunction distribution(const Word& w, const GroupPtr& group, const EnumerationOptions& options = {});

// <f, chi> = (1/|G|) sum_g f(g) conj(chi(g)) for every row.
FourierExpansion project(const ClassFunction& f, const TablePtr& table);

// sum_chi coeff(chi) chi
ClassFunction reconstruct(const FourierExpansion& e);

ClassFunction character_function(const CharacterTable& table, std::size_t chi);
Complex inner_product(const ClassFunction& a, const ClassFunction& b);
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);
// (a * b)(g) = (1/|G|) sum_h a(h) b(h^-1 g)
ClassFunction convolve(const ClassFunction& a, const ClassFunction& b);

// Evaluates the claim carried by a ReducedForm for one character, or for all
// of them with a single pass over the residual substitutions.
Complex coefficient_formula(const ReducedForm& rf, const CharacterTable& table, std::size_t chi,
                            const EnumerationOptions& options = {});
std::vector<Complex> coefficient_formula_all(const ReducedForm& rf, const CharacterTable& table,
                                             const EnumerationOptions& options = {});

// Substitutions the formula sums over; 0 when it is a closed form (d = 0).
std::uint64_t formula_evaluations(const ReducedForm& rf, std::size_t order);

// Coefficient of w1*w2 for words with disjoint letters: (|G|/chi(1)) c1 c2.
Complex disjoint_product_coeff(Complex c1, Complex c2, const CharacterTable& table, std::size_t chi);

// N_{[w,y]}^chi for y not in w, from the expansion of N_w:
// (|G|/chi(1)) sum_psi <psi chi, chi> N_w^psi.
Complex commutator_with_fresh(const FourierExpansion& fw, std::size_t chi);

// N_{[[x,y],z]}^chi = (|G|^2/chi(1)) sum_psi <psi chi, chi> / psi(1).
Complex nested_commutator_coeff(const CharacterTable& table, std::size_t chi);

// Coefficient of w^-1 from that of w.
inline Complex inverse_coeff(Complex c) { return std::conj(c); }

enum class QuarticVariant {
  absolute,  // [a,b] d [a,c] d^-1 : sum_g |chi(g)|^4
  plain      // {a,b} d {a,c} d^-1 : sum_g chi(g)^4
};

// (|G|^2/chi(1)^3) times the class sum of the variant.
Complex quartic_pair_coeff(const CharacterTable& table, std::size_t chi, QuarticVariant variant);

struct Rational {
  long long num = 0;
  long long den = 1;
  std::string to_string() const;
};

// p/q within `tolerance` of c, with q the smallest divisor of
// denominator_multiple that works.  Nothing if c is not (nearly) real.
std::optional<Rational> rational_annotation(Complex c, long long denominator_multiple,
                                            double tolerance = kCoefficientTolerance);

// Denominator multiple for the coefficients of a ReducedForm on one row:
// |G| * chi(1)^max(b, 1).
long long annotation_denominator(const ReducedForm& rf, const CharacterTable& table, std::size_t chi);

}  // namespace wordmap
