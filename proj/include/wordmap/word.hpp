#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wordmap/group.hpp"

namespace wordmap {

// Ordered, duplicate-free list of generator names.  The rank of the ambient
// free group is part of a word's identity: N_w changes when unused
// generators are added.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // "a,b,c"; whitespace around names is ignored.  The empty string gives the
  // rank-0 alphabet.
  static Alphabet parse_list(std::string_view text);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t generator) const { return names_.at(generator); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws AlphabetError

  Alphabet without(std::size_t generator) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

struct Letter {
  std::size_t generator = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const noexcept { return {generator, -sign}; }
  bool cancels(const Letter& other) const noexcept {
    return generator == other.generator && sign == -other.sign;
  }
  bool operator==(const Letter&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet, std::vector<Letter> letters = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Set when parse_word had to infer the alphabet from the text.
  bool alphabet_inferred() const noexcept { return inferred_; }
  Word& mark_inferred(bool inferred = true) {
    inferred_ = inferred;
    return *this;
  }

  bool is_reduced() const;

  // Same letters re-expressed over a different alphabet that contains every
  // generator this word uses (looked up by name).
  Word over(const Alphabet& target) const;

  std::string to_string() const;

  bool operator==(const Word& other) const {
    return alphabet_ == other.alphabet_ && letters_ == other.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
  bool inferred_ = false;
};

// Concatenation; both words must share the alphabet.
Word operator*(const Word& a, const Word& b);

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

// Grammar:
//   WORD   := TERM+            (juxtaposition or '*' between terms)
//   TERM   := FACTOR ('^' SIGNED_INT)?
//   FACTOR := SYMBOL | '1' | '(' WORD ')' | '[' WORD ',' WORD ']' | '{' WORD ',' WORD '}'
// [a,b] expands to a b a^-1 b^-1 and {a,b} to a b a b^-1.  '1' is the empty
// word.  The result is not freely reduced.  Without an alphabet, the
// generators are the distinct symbols in order of first appearance and the
// word is marked alphabet_inferred().
Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);

Word free_reduce(const Word& w);
Word invert(const Word& w);
Word cyclic_shift(const Word& w, std::int64_t k);

// Values for every generator of the alphabet, in alphabet order.
using Assignment = std::vector<Element>;

Element evaluate(const Word& w, const Assignment& assignment, const FiniteGroup& group);

}  // namespace wordmap
