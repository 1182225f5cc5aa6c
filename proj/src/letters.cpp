#include "wordmap/letters.hpp"

namespace wordmap {

std::string_view to_string(LetterClass c) {
  switch (c) {
    case LetterClass::absent: return "absent";
    case LetterClass::single: return "single";
    case LetterClass::square: return "square";
    case LetterClass::dismissible: return "dismissible";
    case LetterClass::general: return "general";
  }
  return "?";
}

std::vector<std::size_t> OccurrenceProfile::with(LetterClass kind) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < generators.size(); ++g)
    if (generators[g].kind == kind) out.push_back(g);
  return out;
}

OccurrenceProfile classify(const Word& w) {
  OccurrenceProfile out;
  out.word = free_reduce(w);
  out.reduced_input = out.word.length() == w.length();
  out.generators.resize(w.alphabet().rank());
  const auto& letters = out.word.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto& p = out.generators[letters[i].generator];
    (letters[i].sign > 0 ? p.positive : p.negative) += 1;
    p.positions.push_back(i);
  }
  for (auto& p : out.generators) {
    const std::size_t total = p.positive + p.negative;
    if (total == 0)
      p.kind = LetterClass::absent;
    else if (total == 1)
      p.kind = LetterClass::single;
    else if (total == 2 && (p.positive == 2 || p.negative == 2))
      p.kind = LetterClass::square;
    else if (p.positive == 1 && p.negative == 1)
      p.kind = LetterClass::dismissible;
    else
      p.kind = LetterClass::general;
  }
  return out;
}

}  // namespace wordmap
