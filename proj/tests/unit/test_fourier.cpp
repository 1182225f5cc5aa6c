#include <gtest/gtest.h>

#include <random>

#include "support/corpus.hpp"
#include "wordmap/fourier.hpp"
#include "wordmap/letters.hpp"

using namespace wordmap;
using wordmap::testing::max_abs_diff;
using wordmap::testing::oracle_coefficients;

namespace {

constexpr double kTol = 1e-6;

Word over(const char* text, const char* alphabet) { return parse_word(text, Alphabet::parse_list(alphabet)); }

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(Distribution, EmptyWord) {
  const auto f = distribution(parse_word("1"), builtin_group("S3"));
  ASSERT_TRUE(f.counts.has_value());
  EXPECT_EQ((*f.counts)[0], 1u);
  for (std::size_t c = 1; c < f.counts->size(); ++c) EXPECT_EQ((*f.counts)[c], 0u);
}

TEST(Distribution, SingleLetterIsUniform) {
  const auto f = distribution(parse_word("x"), builtin_group("D5"));
  for (auto c : *f.counts) EXPECT_EQ(c, 1u);
}

TEST(Distribution, CommutatorOnS3) {
  const auto g = builtin_group("S3");
  const auto f = distribution(parse_word("[x,y]"), g);
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < f.classes->count(); ++c) total += (*f.counts)[c] * f.classes->sizes[c];
  EXPECT_EQ(total, 36u);
  EXPECT_EQ((*f.counts)[0], 18u);
}

TEST(Distribution, ThreadPartitionsAgree) {
  const Word w = parse_word("[x,y][z,x]");
  const auto g = builtin_group("S4");
  const auto one = distribution(w, g, {kDefaultBudget, 1});
  for (unsigned t : {2u, 3u, 7u}) EXPECT_EQ(*distribution(w, g, {kDefaultBudget, t}).counts, *one.counts) << t;
}

TEST(Distribution, Budget) {
  EXPECT_THROW(distribution(parse_word("[x,y][z,t]"), builtin_group("S4"), {1000, 0}), BudgetError);
  EXPECT_NO_THROW(distribution(parse_word("[x,y]"), builtin_group("S4"), {576, 0}));
  EXPECT_THROW(distribution(parse_word("[x,y]"), builtin_group("S4"), {575, 0}), BudgetError);
  EXPECT_EQ(substitution_count(6, 0, 1), 1u);
  EXPECT_THROW(substitution_count(24, 30, kDefaultBudget), BudgetError);
}

TEST(Project, CommutatorOnS3) {
  const auto t = builtin_table("S3");
  const auto c = oracle_coefficients(parse_word("[x,y]"), t);
  EXPECT_LT(max_abs_diff(c, {6, 6, 3}), kTol);
}

TEST(Project, CharacterIsOrthonormal) {
  for (const auto& name : builtin_group_names()) {
    const auto t = builtin_table(name);
    for (std::size_t chi = 0; chi < t->size(); ++chi) {
      const auto e = project(character_function(*t, chi), t);
      for (std::size_t psi = 0; psi < t->size(); ++psi)
        EXPECT_NEAR(std::abs(e.coefficients[psi] - Complex(psi == chi ? 1.0 : 0.0)), 0.0, 1e-9);
    }
  }
}

TEST(Project, SquaresOnQuaternions) {
  const auto c = oracle_coefficients(parse_word("x^2"), builtin_table("Q8"));
  EXPECT_LT(max_abs_diff(c, {1, 1, 1, 1, -1}), kTol);
}

TEST(Project, RejectsForeignTable) {
  const auto f = distribution(parse_word("x"), builtin_group("Z4"));
  EXPECT_THROW(project(f, builtin_table("S3")), ValidationError);
}

TEST(Counting, IntegralValuesAndReconstruction) {
  for (const auto& name : builtin_group_names()) {
    const auto t = builtin_table(name);
    const std::size_t n = t->group().order();
    for (const auto& e : wordmap::testing::corpus()) {
      const Word w = wordmap::testing::corpus_word(e);
      if (!wordmap::testing::within_budget(n, w.alphabet().rank(), 400'000)) continue;
      const auto f = distribution(w, t->classes_ptr());
      std::uint64_t total = 0;
      for (std::size_t c = 0; c < f.classes->count(); ++c) total += (*f.counts)[c] * f.classes->sizes[c];
      EXPECT_EQ(total, power(n, w.alphabet().rank())) << e.text << " on " << name;
      const auto back = reconstruct(project(f, t));
      for (std::size_t c = 0; c < f.classes->count(); ++c)
        EXPECT_NEAR(std::abs(back.values[c] - f.values[c]), 0.0, kTol) << e.text << " on " << name;
    }
  }
}

// The master property: every reduced form evaluates to the brute-force
// coefficients, in both reduction orders.
TEST(Soundness, NormalFormsMatchOracle) {
  for (const auto& name : builtin_group_names()) {
    const auto t = builtin_table(name);
    const std::size_t n = t->group().order();
    for (const auto& e : wordmap::testing::corpus()) {
      const Word w = wordmap::testing::corpus_word(e);
      if (!wordmap::testing::within_budget(n, w.alphabet().rank(), 400'000)) continue;
      const auto oracle = oracle_coefficients(w, t);
      for (auto order : {ReductionOrder::squares_first, ReductionOrder::dismissibles_first}) {
        const ReducedForm rf = normalize(w, order);
        EXPECT_LT(max_abs_diff(coefficient_formula_all(rf, *t), oracle), kTol)
            << e.text << " on " << name << (order == ReductionOrder::squares_first ? " squares" : " dismissibles");
      }
    }
  }
}

TEST(Soundness, RandomWords) {
  std::mt19937_64 rng(99);
  const Alphabet a = Alphabet::parse_list("x,y,z");
  for (const char* name : {"S3", "Q8", "Z4", "D4"}) {
    const auto t = builtin_table(name);
    for (int i = 0; i < 40; ++i) {
      const Word w = wordmap::testing::random_word(rng, a, 3 + i % 6);
      const auto oracle = oracle_coefficients(w, t);
      EXPECT_LT(max_abs_diff(coefficient_formula_all(normalize(w), *t), oracle), kTol) << w.to_string() << " on " << name;
    }
  }
}

TEST(Formula, FrobeniusClosedForm) {
  const ReducedForm rf = normalize(parse_word("[y1,y2]"));
  for (const auto& name : builtin_group_names()) {
    const auto t = builtin_table(name);
    EXPECT_EQ(formula_evaluations(rf, t->group().order()), 0u);
    for (std::size_t chi = 0; chi < t->size(); ++chi)
      EXPECT_NEAR(std::abs(coefficient_formula(rf, *t, chi) - Complex(double(t->group().order()) / t->degree(chi))), 0, kTol);
  }
}

TEST(Formula, BraceVanishesOnNonRealCharacters) {
  const auto t = builtin_table("Z3");
  const auto c = coefficient_formula_all(normalize(parse_word("{x,y}")), *t);
  EXPECT_LT(max_abs_diff(c, {3, 0, 0}), kTol);
}

TEST(Formula, WorkedExampleOnS3) {
  const Word w = parse_word("x1 y1 x1 x2 y3 x2 x1 y1^-1 x1^3 y2 x3^-1 y3^-1 x3^2 y2^-1 x3");
  const auto t = builtin_table("S3");
  const ReducedForm rf = normalize(w, ReductionOrder::dismissibles_first);
  EXPECT_EQ(formula_evaluations(rf, 6), 216u);
  EXPECT_LT(max_abs_diff(coefficient_formula_all(rf, *t), oracle_coefficients(w, t)), kTol);
}

TEST(Formula, EmptyWordAndSingles) {
  const auto t = builtin_table("S4");
  const auto empty = coefficient_formula_all(normalize(parse_word("1")), *t);
  for (std::size_t chi = 0; chi < t->size(); ++chi) EXPECT_NEAR(empty[chi].real(), t->degree(chi) / 24.0, 1e-12);
  const auto xy2 = coefficient_formula_all(normalize(over("x y", "x,y")), *t);
  const auto xy3 = coefficient_formula_all(normalize(over("x y", "x,y,z")), *t);
  EXPECT_NEAR(xy2[0].real(), 24, 1e-9);
  EXPECT_NEAR(xy3[0].real(), 576, 1e-9);
  for (std::size_t chi = 1; chi < t->size(); ++chi) {
    EXPECT_EQ(xy2[chi], Complex(0));
    EXPECT_EQ(xy3[chi], Complex(0));
  }
}

TEST(Formula, BudgetAndIndexChecks) {
  const auto t = builtin_table("S4");
  const ReducedForm rf = normalize(parse_word("x^3 y^3 z^3 t^3 u^3 v^3"));
  EXPECT_THROW(coefficient_formula_all(rf, *t), BudgetError);
  EXPECT_THROW(coefficient_formula(normalize(parse_word("[x,y]")), *t, 99), ValidationError);
}

TEST(SquareTheorem, RandomInstances) {
  std::mt19937_64 rng(31);
  const Alphabet ab = Alphabet::parse_list("a,b");
  const Alphabet aby = Alphabet::parse_list("a,b,y");
  std::uniform_int_distribution<std::size_t> len(0, 2);
  for (const char* name : {"S3", "Z4", "Q8"}) {
    const auto t = builtin_table(name);
    const double order = static_cast<double>(t->group().order());
    for (int i = 0; i < 20; ++i) {
      const Word w1 = wordmap::testing::random_word(rng, ab, len(rng)), w2 = wordmap::testing::random_word(rng, ab, len(rng)),
                 w3 = wordmap::testing::random_word(rng, ab, len(rng));
      const Word y(aby, {{2, 1}});
      const Word w = w1.over(aby) * y * w2.over(aby) * y * w3.over(aby);
      const Word residual = w1 * invert(w2) * w3;
      const auto cw = oracle_coefficients(w, t);
      const auto cr = oracle_coefficients(residual, t);
      for (std::size_t chi = 0; chi < t->size(); ++chi)
        EXPECT_NEAR(std::abs(order / t->degree(chi) * fs_indicator(*t, chi) * cr[chi] - cw[chi]), 0, kTol)
            << w.to_string() << " on " << name;
      // square_reduce produces the same residual word up to free reduction.
      EXPECT_EQ(free_reduce(square_reduce(w, 2).residual), free_reduce(residual));
    }
  }
}

TEST(RealCharacters, BraceAndCommutatorDistributions) {
  const Word comm = parse_word("[x,y]"), brace = parse_word("{x,y}");
  for (const auto& name : builtin_group_names()) {
    const auto t = builtin_table(name);
    bool all_real = true;
    for (std::size_t chi = 0; chi < t->size(); ++chi) all_real = all_real && is_real_character(*t, chi);
    const bool same = *distribution(comm, t->classes_ptr()).counts == *distribution(brace, t->classes_ptr()).counts;
    EXPECT_EQ(same, all_real) << name;
  }
  EXPECT_NE(*distribution(comm, builtin_group("Z5")).counts, *distribution(brace, builtin_group("Z5")).counts);
}

TEST(ConjugateSymmetry, InverseWords) {
  for (const char* name : {"Z3", "Z5", "S3", "A4", "Q8"}) {
    const auto t = builtin_table(name);
    for (const auto& e : wordmap::testing::corpus()) {
      const Word w = wordmap::testing::corpus_word(e);
      if (!wordmap::testing::within_budget(t->group().order(), w.alphabet().rank(), 400'000)) continue;
      const auto c = oracle_coefficients(w, t), ci = oracle_coefficients(invert(w), t);
      for (std::size_t chi = 0; chi < t->size(); ++chi)
        EXPECT_NEAR(std::abs(inverse_coeff(c[chi]) - ci[chi]), 0, kTol) << e.text << " on " << name;
    }
  }
  EXPECT_EQ(inverse_coeff(Complex(2, 0)), Complex(2, 0));
  EXPECT_EQ(inverse_coeff(Complex(0, 0)), Complex(0, 0));
}

TEST(Disjoint, Products) {
  const auto t = builtin_table("S3");
  const auto comm = oracle_coefficients(parse_word("[x,y]"), t);
  const auto two = oracle_coefficients(parse_word("[x,y][z,u]"), t);
  const auto braces = oracle_coefficients(parse_word("{x,y}{z,u}"), t);
  const auto brace = oracle_coefficients(parse_word("{x,y}"), t);
  for (std::size_t chi = 0; chi < t->size(); ++chi) {
    const double q = 6.0 / t->degree(chi);
    EXPECT_NEAR(std::abs(disjoint_product_coeff(comm[chi], comm[chi], *t, chi) - two[chi]), 0, kTol);
    EXPECT_NEAR(std::abs(two[chi] - q * q * q), 0, kTol);
    EXPECT_NEAR(std::abs(disjoint_product_coeff(brace[chi], brace[chi], *t, chi) - braces[chi]), 0, kTol);
    const Complex empty = t->degree(chi) / 6.0;
    EXPECT_NEAR(std::abs(disjoint_product_coeff(comm[chi], empty, *t, chi) - comm[chi]), 0, 1e-12);
  }
  // On Z3 the brace product is supported on the trivial character only.
  const auto z3 = builtin_table("Z3");
  const auto zb = oracle_coefficients(parse_word("{x,y}{z,u}"), z3);
  EXPECT_LT(max_abs_diff(zb, {27, 0, 0}), kTol);
}

TEST(FreshCommutator, MatchesOracle) {
  for (const char* name : {"S3", "Q8", "Z4", "A4"}) {
    const auto t = builtin_table(name);
    const double order = static_cast<double>(t->group().order());
    for (const char* inner : {"x", "x^2", "x^3", "[x,z]"}) {
      const Word w = parse_word(inner);
      std::vector<std::string> names = w.alphabet().names();
      names.push_back("y");
      const Alphabet big(names);
      const Word y(big, {{names.size() - 1, 1}});
      const Word comm = w.over(big) * y * invert(w.over(big)) * invert(y);
      const auto fw = project(distribution(w, t->classes_ptr()), t);
      const auto oracle = oracle_coefficients(comm, t);
      for (std::size_t chi = 0; chi < t->size(); ++chi) {
        EXPECT_NEAR(std::abs(commutator_with_fresh(fw, chi) - oracle[chi]), 0, kTol) << inner << " on " << name;
        if (std::string(inner) == "x") EXPECT_NEAR(commutator_with_fresh(fw, chi).real(), order / t->degree(chi), kTol);
      }
      // Trivial character: |G|^d with d the rank of w.
      EXPECT_NEAR(commutator_with_fresh(fw, 0).real(), power(t->group().order(), w.alphabet().rank()), kTol);
    }
  }
}

TEST(NestedCommutator, MatchesOracle) {
  const Word w = parse_word("[[x,y],z]");
  for (const auto& name : builtin_group_names()) {
    const auto t = builtin_table(name);
    const double order = static_cast<double>(t->group().order());
    EXPECT_NEAR(std::abs(nested_commutator_coeff(*t, 0) - order * order), 0, kTol);
    if (t->group().order() > 12) continue;
    const auto oracle = oracle_coefficients(w, t);
    for (std::size_t chi = 0; chi < t->size(); ++chi)
      EXPECT_NEAR(std::abs(nested_commutator_coeff(*t, chi) - oracle[chi]), 0, kTol) << name;
  }
  for (int n = 2; n <= 12; ++n) {
    const auto t = builtin_table("Z" + std::to_string(n));
    for (std::size_t chi = 0; chi < t->size(); ++chi)
      EXPECT_NEAR(std::abs(nested_commutator_coeff(*t, chi) - double(n * n)), 0, kTol);
  }
}

TEST(Quartic, Variants) {
  for (const auto& name : builtin_group_names()) {
    const auto t = builtin_table(name);
    const double cube = std::pow(double(t->group().order()), 3);
    EXPECT_NEAR(std::abs(quartic_pair_coeff(*t, 0, QuarticVariant::absolute) - cube), 0, 1e-6 * cube);
    EXPECT_NEAR(std::abs(quartic_pair_coeff(*t, 0, QuarticVariant::plain) - cube), 0, 1e-6 * cube);
  }
  const auto z3 = builtin_table("Z3");
  for (std::size_t chi = 1; chi < 3; ++chi)
    EXPECT_GT(std::abs(quartic_pair_coeff(*z3, chi, QuarticVariant::absolute) -
                       quartic_pair_coeff(*z3, chi, QuarticVariant::plain)),
              1.0);
  for (const char* name : {"S3", "Z3", "Q8", "Z4"}) {
    const auto t = builtin_table(name);
    const auto abs_oracle = oracle_coefficients(parse_word("[a,b] d [a,c] d^-1"), t);
    const auto plain_oracle = oracle_coefficients(parse_word("{a,b} d {a,c} d^-1"), t);
    for (std::size_t chi = 0; chi < t->size(); ++chi) {
      EXPECT_NEAR(std::abs(quartic_pair_coeff(*t, chi, QuarticVariant::absolute) - abs_oracle[chi]), 0, kTol) << name;
      EXPECT_NEAR(std::abs(quartic_pair_coeff(*t, chi, QuarticVariant::plain) - plain_oracle[chi]), 0, kTol) << name;
    }
  }
}

TEST(ClassFunctions, IrreducibleConvolution) {
  for (const auto& name : builtin_group_names()) {
    const auto t = builtin_table(name);
    for (std::size_t chi = 0; chi < t->size(); ++chi) {
      const auto a = character_function(*t, chi);
      for (std::size_t psi = 0; psi < t->size(); ++psi) {
        const auto conv = convolve(a, character_function(*t, psi));
        for (std::size_t c = 0; c < t->classes().count(); ++c) {
          const Complex expected = chi == psi ? a.values[c] / double(t->degree(chi)) : Complex(0);
          EXPECT_NEAR(std::abs(conv.values[c] - expected), 0, 1e-9) << name;
        }
      }
    }
  }
}

TEST(ClassFunctions, InnerAndPointwiseProducts) {
  const auto t = builtin_table("S4");
  const auto std3 = character_function(*t, 3);
  EXPECT_NEAR(std::abs(inner_product(std3, std3) - Complex(1)), 0, 1e-9);
  // std x std = 1 + 2-dim + std + (sign x std).
  const auto sq = project(pointwise_product(std3, std3), t);
  EXPECT_LT(max_abs_diff(sq.coefficients, {1, 0, 1, 1, 1}), 1e-9);
}

TEST(Annotations, Rationals) {
  auto r = rational_annotation(Complex(1.0 / 6.0), 6);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->to_string(), "1/6");
  EXPECT_EQ(rational_annotation(Complex(27.0), 12)->to_string(), "27");
  EXPECT_EQ(rational_annotation(Complex(-0.75), 12)->to_string(), "-3/4");
  EXPECT_FALSE(rational_annotation(Complex(0.1), 6));
  EXPECT_FALSE(rational_annotation(Complex(1, 1), 6));
  const ReducedForm rf = normalize(parse_word("1"));
  EXPECT_EQ(annotation_denominator(rf, *builtin_table("S3"), 2), 12);
}
