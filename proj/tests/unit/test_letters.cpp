#include <gtest/gtest.h>

#include <random>

#include "support/corpus.hpp"
#include "wordmap/letters.hpp"

using namespace wordmap;

namespace {

LetterClass kind(const char* text, const char* gen) {
  const Word w = parse_word(text);
  return classify(w)[w.alphabet().index_of(gen)].kind;
}

}  // namespace

TEST(Classify, Commutator) {
  EXPECT_EQ(kind("[x,y]", "x"), LetterClass::dismissible);
  EXPECT_EQ(kind("[x,y]", "y"), LetterClass::dismissible);
}

TEST(Classify, Brace) {
  EXPECT_EQ(kind("{x,y}", "x"), LetterClass::square);
  EXPECT_EQ(kind("{x,y}", "y"), LetterClass::dismissible);
}

TEST(Classify, ConjugateOfSingle) {
  EXPECT_EQ(kind("x y x^-1", "x"), LetterClass::dismissible);
  EXPECT_EQ(kind("x y x^-1", "y"), LetterClass::single);
  EXPECT_EQ(kind("x", "x"), LetterClass::single);
}

TEST(Classify, SquaresGeneralAndAbsent) {
  EXPECT_EQ(kind("x^-1 y x^-1", "x"), LetterClass::square);
  EXPECT_EQ(kind("x^3", "x"), LetterClass::general);
  EXPECT_EQ(kind("x^2 y x^-1", "x"), LetterClass::general);
  const Word w = parse_word("x y", Alphabet::parse_list("x,y,z"));
  EXPECT_EQ(classify(w)[2].kind, LetterClass::absent);
  EXPECT_EQ(classify(w).with(LetterClass::single), (std::vector<std::size_t>{0, 1}));
}

TEST(Classify, ReducesFirst) {
  const auto p = classify(parse_word("x y y^-1 x"));
  EXPECT_FALSE(p.reduced_input);
  EXPECT_EQ(p.word.to_string(), "x^2");
  EXPECT_EQ(p[0].kind, LetterClass::square);
  EXPECT_EQ(p[1].kind, LetterClass::absent);
  EXPECT_EQ(p[0].positions, (std::vector<std::size_t>{0, 1}));
}

TEST(Classify, ProfileInvariants) {
  std::mt19937_64 rng(3);
  const Alphabet a = Alphabet::parse_list("x,y,z,t");
  for (int i = 0; i < 300; ++i) {
    const Word w = free_reduce(wordmap::testing::random_word(rng, a, 9));
    const auto p = classify(w);
    std::size_t total = 0;
    for (const auto& g : p.generators) {
      total += g.positive + g.negative;
      EXPECT_EQ(g.positions.size(), g.positive + g.negative);
      EXPECT_EQ(g.kind == LetterClass::single, g.positive + g.negative == 1);
      EXPECT_EQ(g.kind == LetterClass::square,
                (g.positive == 2 && g.negative == 0) || (g.positive == 0 && g.negative == 2));
      EXPECT_EQ(g.kind == LetterClass::dismissible, g.positive == 1 && g.negative == 1);
      EXPECT_EQ(g.kind == LetterClass::absent, g.positive + g.negative == 0);
    }
    EXPECT_EQ(total, w.length());

    const auto q = classify(invert(w));
    for (std::size_t g = 0; g < a.rank(); ++g) {
      EXPECT_EQ(q[g].positive, p[g].negative);
      EXPECT_EQ(q[g].negative, p[g].positive);
      EXPECT_EQ(q[g].kind, p[g].kind);
    }
  }
}

// Cyclic shifts of a cyclically reduced word are reduced and keep every class.
TEST(Classify, InvariantUnderCyclicShift) {
  std::mt19937_64 rng(5);
  const Alphabet a = Alphabet::parse_list("x,y,z");
  int checked = 0;
  while (checked < 200) {
    const Word w = free_reduce(wordmap::testing::random_word(rng, a, 8));
    if (w.length() < 2 || w.letters().front().cancels(w.letters().back())) continue;
    ++checked;
    const auto p = classify(w);
    for (std::size_t k = 1; k < w.length(); ++k) {
      const auto q = classify(cyclic_shift(w, static_cast<std::int64_t>(k)));
      EXPECT_TRUE(q.reduced_input);
      for (std::size_t g = 0; g < a.rank(); ++g) EXPECT_EQ(q[g].kind, p[g].kind);
    }
  }
}
