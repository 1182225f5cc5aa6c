#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// Exponents of |G|, chi(1) (denominator) and FS_chi in a coefficient claim.
struct Prefactor {
  int group_exponent = 0;
  int degree_exponent = 0;
  int fs_exponent = 0;

  Prefactor& operator+=(const Prefactor& o) {
    group_exponent += o.group_exponent;
    degree_exponent += o.degree_exponent;
    fs_exponent += o.fs_exponent;
    return *this;
  }
  bool operator==(const Prefactor&) const = default;
};

// Renders e.g. "|G|^2/chi(1)^3" or "|G|/chi(1)*FS".
std::string to_string(const Prefactor& p);

// Result of splitting a word along dismissible letters.
//
// With the word cyclically shifted so that it ends in a dismissible letter,
//   w ~ w_0 z_0 w_1 z_1 ... w_{2n-1} z_{2n-1},
// tau pairs each slot with the slot of its inverse letter and
// sigma(k) = tau(k) + 1 (mod 2n).  Each cycle of sigma yields one split word.
struct SplitDecomposition {
  std::size_t n = 0;
  Alphabet residual_alphabet;       // generators that were not split off
  Word head;                        // segment before the first slot, unshifted
  Word tail;                        // segment after the last slot, unshifted
  Word shifted;                     // tail * w * tail^-1, ends in a slot
  std::vector<Word> segments;       // w_0 .. w_{2n-1}; w_0 = tail * head
  std::vector<Letter> slots;        // z_0 .. z_{2n-1}, in the input alphabet
  std::vector<std::size_t> tau;
  std::vector<std::size_t> sigma;
  std::vector<std::vector<std::size_t>> cycles;  // ordered by smallest index
  // Freely reduced product of the segments of each cycle.  Every cycle starts
  // at its smallest index; the one through segment 0 is read from the start
  // of the unshifted word (head ... tail), a conjugate of tail*head*...
  std::vector<Word> split_words;

  std::size_t r() const noexcept { return cycles.size(); }
};

// Throws WordShapeError if `dismissibles` is empty or one of them does not
// occur exactly once as x and once as x^-1 in w.
SplitDecomposition split_dismissible(const Word& w, std::span<const std::size_t> dismissibles);

// The reading procedure in its original form: segments indexed
// w_0 .. w_{2n} of the unshifted word, start at w_0 and stop at the end of the
// word, then restart at the first unread segment and stop on returning to it.
// Returns the segment indices read for each split word.
std::vector<std::vector<std::size_t>> reading_procedure(const Word& w,
                                                        std::span<const std::size_t> dismissibles);

struct TambourSplit {
  SplitDecomposition split;
  std::size_t r = 0;
  Prefactor prefactor;  // |G|^{n-1} / chi(1)^{n-r}
};

// Split of y1 y2 ... yn y1^-1 y2^-1 ... yn^-1 (n >= 1).
TambourSplit split_tambour(std::size_t n);

struct SquareStep {
  Word residual;          // w1 w2^-1 w3 over the alphabet without g, not reduced
  Prefactor delta{1, 1, 1};
  bool inverted = false;  // g occurred as g^-1 twice and was replaced by g first
};

// w (freely reduced first) = w1 g w2 g w3  ->  w1 w2^-1 w3.
SquareStep square_reduce(const Word& w, std::size_t generator);

enum class Rule { reduce, absent, single, square, split };
std::string_view to_string(Rule r);

struct TraceStep {
  Rule rule = Rule::reduce;
  std::vector<std::string> generators;
  Prefactor delta;
  bool inverted = false;
  std::vector<Word> result;
};

// Claims  N_w^chi = |G|^a / chi(1)^b * FS_chi^s * sum_{x in G^d} prod_i conj(chi(W_i(x)))
// with d the rank of residual_alphabet, or, when trivial_only,
//   N_w^chi = |G|^a * [chi trivial].
// a starts at -1 (the plain inversion formula) and each rule adds its delta.
struct ReducedForm {
  Alphabet ambient;
  Prefactor prefactor{-1, 0, 0};
  bool trivial_only = false;
  Alphabet residual_alphabet;
  std::vector<Word> residual_words;
  std::optional<SplitDecomposition> split;
  std::vector<TraceStep> trace;

  std::size_t summation_rank() const noexcept { return trivial_only ? 0 : residual_alphabet.rank(); }
};

// Requires g to be single in w.  N_w is constant |G|^{d-1}.
ReducedForm eliminate_single(const Word& w, std::size_t generator);

enum class ReductionOrder {
  squares_first,      // default: exhaust squares, then one simultaneous split
  dismissibles_first  // split right away, leaving squares in the residual sum
};

// Free reduction, dropping unused generators (one |G| each), single-letter
// elimination, square reductions until none is left, then one split along
// all dismissible letters.  Residual words are not reduced further.
ReducedForm normalize(const Word& w, ReductionOrder order = ReductionOrder::squares_first);

struct GenusResult {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t genus = 0;
};

// For words whose normal form is a single split with every W_i trivial:
// genus = (n - r + 1) / 2.  Throws WordShapeError otherwise.
GenusResult genus(const Word& w);

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const SplitDecomposition& s);
nlohmann::json to_json(const ReducedForm& rf);

}  // namespace wordmap
