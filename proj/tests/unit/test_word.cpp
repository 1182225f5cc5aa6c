#include <gtest/gtest.h>

#include <random>

#include "support/corpus.hpp"
#include "wordmap/builtin.hpp"
#include "wordmap/errors.hpp"
#include "wordmap/fourier.hpp"
#include "wordmap/word.hpp"

using namespace wordmap;

namespace {

Word w(const char* text, const char* alphabet = nullptr) {
  return alphabet ? parse_word(text, Alphabet::parse_list(alphabet)) : parse_word(text);
}

// Counts per element over all substitutions, without going through classes.
std::vector<std::uint64_t> element_counts(const Word& word, const FiniteGroup& g) {
  std::vector<std::uint64_t> counts(g.order(), 0);
  const std::size_t d = word.alphabet().rank();
  Assignment x(d, 0);
  for (;;) {
    ++counts[evaluate(word, x, g)];
    std::size_t i = d;
    while (i > 0 && ++x[i - 1] == g.order()) x[--i] = 0;
    if (i == 0) break;
  }
  return counts;
}

}  // namespace

TEST(Parse, CommutatorSugar) {
  const Word c = w("[x,y]");
  EXPECT_EQ(c.alphabet(), Alphabet::parse_list("x,y"));
  EXPECT_EQ(c.to_string(), "x*y*x^-1*y^-1");
  EXPECT_TRUE(c.alphabet_inferred());
}

TEST(Parse, BraceSugar) { EXPECT_EQ(w("{x,y}").to_string(), "x*y*x*y^-1"); }

TEST(Parse, NegativeExponentExpands) {
  const Word c = w("x^-3");
  ASSERT_EQ(c.length(), 3u);
  for (const auto& l : c.letters()) EXPECT_EQ(l.sign, -1);
}

TEST(Parse, NestedGroupsAndPowers) {
  EXPECT_EQ(w("(x y)^2").to_string(), "x*y*x*y");
  EXPECT_EQ(w("[x,y]^-1").to_string(), "y*x*y^-1*x^-1");
  EXPECT_EQ(w("[[x,y],z]").length(), 10u);
  EXPECT_EQ(w("x * y").to_string(), "x*y");
  EXPECT_EQ(w("x_1 x_2").alphabet().rank(), 2u);
}

TEST(Parse, SymbolsUseMaximalMunch) {
  EXPECT_EQ(w("y1y2").alphabet().rank(), 1u);
  EXPECT_EQ(w("y1 y2").alphabet().rank(), 2u);
}

TEST(Parse, EmptyWordLiteral) {
  const Word e = w("1");
  EXPECT_TRUE(e.empty());
  EXPECT_EQ(e.alphabet().rank(), 0u);
  EXPECT_EQ(e.to_string(), "1");
}

TEST(Parse, ExplicitAlphabetKeepsRank) {
  const Word c = w("x y", "x,y,z");
  EXPECT_EQ(c.alphabet().rank(), 3u);
  EXPECT_FALSE(c.alphabet_inferred());
}

TEST(Parse, Errors) {
  EXPECT_THROW(w("x^0"), ParseError);
  EXPECT_THROW(w("[x,y"), ParseError);
  EXPECT_THROW(w(""), ParseError);
  EXPECT_THROW(w("x ^"), ParseError);
  EXPECT_THROW(w("x$"), ParseError);
  EXPECT_THROW(w("x z", "x,y"), AlphabetError);
  try {
    w("x y )");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(FreeReduce, Cancellation) {
  EXPECT_TRUE(free_reduce(w("x x^-1")).empty());
  EXPECT_EQ(free_reduce(w("x y y^-1 x")).to_string(), "x^2");
  const Word r = w("x y x^-1");
  EXPECT_EQ(free_reduce(r), r);
}

TEST(FreeReduce, IdempotentAndReduced) {
  std::mt19937_64 rng(7);
  const Alphabet a = Alphabet::parse_list("x,y,z");
  for (int i = 0; i < 200; ++i) {
    const Word r = free_reduce(wordmap::testing::random_word(rng, a, 12));
    EXPECT_TRUE(r.is_reduced());
    EXPECT_EQ(free_reduce(r), r);
    EXPECT_EQ(r.alphabet(), a);
  }
}

TEST(Invert, Basics) {
  EXPECT_EQ(invert(w("x y")).to_string(), "y^-1*x^-1");
  EXPECT_TRUE(invert(w("1")).empty());
  EXPECT_EQ(invert(w("[x,y]")), w("[y,x]", "x,y"));
}

TEST(CyclicShift, Basics) {
  EXPECT_EQ(cyclic_shift(w("x y z"), 1).to_string(), "y*z*x");
  EXPECT_EQ(cyclic_shift(w("x y z"), 3), w("x y z"));
  EXPECT_EQ(cyclic_shift(w("x y z"), -1).to_string(), "z*x*y");
  EXPECT_TRUE(cyclic_shift(w("1"), 5).empty());
}

TEST(Evaluate, Basics) {
  const auto s3 = builtin_group("S3");
  EXPECT_EQ(evaluate(w("1"), {}, *s3), s3->identity());
  // Commuting pair: x and a power of x.
  for (Element x = 0; x < s3->order(); ++x)
    EXPECT_EQ(evaluate(w("[x,y]"), {x, s3->mul(x, x)}, *s3), s3->identity());
}

TEST(Evaluate, CommutatorOfTranspositionsIsThreeCycle) {
  const Permutation gens[] = {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
  const auto s3 = group_from_generators("S3", gens);
  const auto& names = s3->element_names();
  auto find = [&](const std::string& n) {
    return static_cast<Element>(std::find(names.begin(), names.end(), n) - names.begin());
  };
  const Element x = find("(1 2)"), y = find("(1 3)");
  ASSERT_LT(x, s3->order());
  ASSERT_LT(y, s3->order());
  // (1 2)(1 3)(1 2)(1 3) applied left to right: 1 -> 3, 3 -> 2, 2 -> 1.
  EXPECT_EQ(names[evaluate(w("[x,y]"), {x, y}, *s3)], "(1 3 2)");
}

TEST(Evaluate, ConcatenationIsMultiplicative) {
  std::mt19937_64 rng(11);
  const auto g = builtin_group("S4");
  const Alphabet a = Alphabet::parse_list("x,y,z");
  std::uniform_int_distribution<Element> el(0, static_cast<Element>(g->order() - 1));
  for (int i = 0; i < 100; ++i) {
    const Word u = wordmap::testing::random_word(rng, a, 5), v = wordmap::testing::random_word(rng, a, 4);
    const Assignment x{el(rng), el(rng), el(rng)};
    EXPECT_EQ(evaluate(u * v, x, *g), g->mul(evaluate(u, x, *g), evaluate(v, x, *g)));
  }
}

// For short corpus words on small built-in groups, N_w is unchanged by free
// reduction and cyclic shifts, and inversion reverses it.
TEST(Evaluate, DistributionInvariants) {
  for (const auto& name : builtin_group_names()) {
    const auto g = builtin_group(name);
    if (g->order() > 12) continue;
    for (const auto& e : wordmap::testing::corpus()) {
      const Word word = wordmap::testing::corpus_word(e);
      if (word.length() > 5) continue;
      const auto base = element_counts(word, *g);
      EXPECT_EQ(element_counts(free_reduce(word), *g), base) << e.text << " on " << name;
      for (std::size_t k = 0; k < word.length(); ++k)
        EXPECT_EQ(element_counts(cyclic_shift(word, static_cast<std::int64_t>(k)), *g), base) << e.text << " shift " << k;
      const auto inv = element_counts(invert(word), *g);
      for (Element h = 0; h < g->order(); ++h) EXPECT_EQ(inv[h], base[g->inverse(h)]) << e.text << " on " << name;
    }
  }
}
