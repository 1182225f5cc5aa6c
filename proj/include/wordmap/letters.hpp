#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "wordmap/word.hpp"

namespace wordmap {

enum class LetterClass { absent, single, square, dismissible, general };

std::string_view to_string(LetterClass c);

struct GeneratorProfile {
  std::size_t positive = 0;  // occurrences as x
  std::size_t negative = 0;  // occurrences as x^-1
  std::vector<std::size_t> positions;
  LetterClass kind = LetterClass::absent;
};

struct OccurrenceProfile {
  Word word;              // the freely reduced word that was classified
  bool reduced_input = true;  // false if classify had to reduce its input
  std::vector<GeneratorProfile> generators;  // indexed like word.alphabet()

  const GeneratorProfile& operator[](std::size_t g) const { return generators.at(g); }
  std::vector<std::size_t> with(LetterClass kind) const;
};

// Counts occurrences per generator of free_reduce(w).
//   single:      one occurrence in total
//   square:      two occurrences with the same sign
//   dismissible: exactly one x and one x^-1
//   general:     anything else that occurs
OccurrenceProfile classify(const Word& w);

}  // namespace wordmap
