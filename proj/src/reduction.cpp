#include "wordmap/reduction.hpp"

#include <algorithm>

#include "wordmap/errors.hpp"
#include "wordmap/letters.hpp"

namespace wordmap {

std::string to_string(const Prefactor& p) {
  auto power = [](const char* base, int e) -> std::string {
    if (e == 1) return base;
    return std::string(base) + "^" + std::to_string(e);
  };
  std::string num, den;
  if (p.group_exponent > 0) num = power("|G|", p.group_exponent);
  if (p.group_exponent < 0) den = power("|G|", -p.group_exponent);
  if (p.degree_exponent > 0) den += (den.empty() ? "" : "*") + power("chi(1)", p.degree_exponent);
  if (p.degree_exponent < 0) num += (num.empty() ? "" : "*") + power("chi(1)", -p.degree_exponent);
  if (num.empty()) num = "1";
  std::string out = den.empty() ? num : num + "/" + (den.find('*') != std::string::npos ? "(" + den + ")" : den);
  if (p.fs_exponent > 0) out += "*" + power("FS", p.fs_exponent);
  return out;
}

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::reduce: return "reduce";
    case Rule::absent: return "absent";
    case Rule::single: return "single";
    case Rule::square: return "square";
    case Rule::split: return "split";
  }
  return "?";
}

namespace {

Alphabet remove_generators(const Alphabet& alphabet, std::vector<std::size_t> generators) {
  std::sort(generators.rbegin(), generators.rend());
  Alphabet out = alphabet;
  for (std::size_t g : generators) out = out.without(g);
  return out;
}

struct SlotLayout {
  std::vector<std::size_t> positions;  // indices of the slot letters in w
  std::vector<Word> raw_segments;      // 2n + 1 segments of the unshifted word
  Alphabet residual;
};

SlotLayout layout_slots(const Word& w, std::span<const std::size_t> dismissibles) {
  if (dismissibles.empty()) throw WordShapeError("no dismissible letter to split along");
  const auto& letters = w.letters();
  std::vector<bool> is_slot_gen(w.alphabet().rank(), false);
  for (std::size_t g : dismissibles) {
    if (g >= w.alphabet().rank()) throw AlphabetError("generator outside the alphabet");
    if (is_slot_gen[g]) throw WordShapeError("generator listed twice");
    std::size_t pos = 0, neg = 0;
    for (const auto& l : letters)
      if (l.generator == g) (l.sign > 0 ? pos : neg) += 1;
    if (pos != 1 || neg != 1)
      throw WordShapeError("'" + w.alphabet().name(g) + "' is not dismissible in " + w.to_string());
    is_slot_gen[g] = true;
  }

  SlotLayout out;
  out.residual = remove_generators(w.alphabet(), {dismissibles.begin(), dismissibles.end()});
  std::vector<Letter> current;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (is_slot_gen[letters[i].generator]) {
      out.positions.push_back(i);
      out.raw_segments.push_back(Word(w.alphabet(), current).over(out.residual));
      current.clear();
    } else {
      current.push_back(letters[i]);
    }
  }
  out.raw_segments.push_back(Word(w.alphabet(), current).over(out.residual));
  return out;
}

// Pairs each slot with the slot holding the inverse letter.
std::vector<std::size_t> pair_slots(const std::vector<Letter>& slots) {
  std::vector<std::size_t> tau(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j)
      if (j != i && slots[j] == slots[i].inverse()) tau[i] = j;
  return tau;
}

}  // namespace

SplitDecomposition split_dismissible(const Word& w, std::span<const std::size_t> dismissibles) {
  const SlotLayout layout = layout_slots(w, dismissibles);
  SplitDecomposition s;
  const std::size_t m = layout.positions.size();
  s.n = m / 2;
  s.residual_alphabet = layout.residual;
  s.head = layout.raw_segments.front();
  s.tail = layout.raw_segments.back();
  s.shifted = cyclic_shift(w, -static_cast<std::int64_t>(s.tail.length()));

  s.segments.assign(layout.raw_segments.begin(), layout.raw_segments.end() - 1);
  s.segments[0] = s.tail * s.head;
  for (std::size_t p : layout.positions) s.slots.push_back(w.letters()[p]);

  s.tau = pair_slots(s.slots);
  s.sigma.resize(m);
  for (std::size_t k = 0; k < m; ++k) s.sigma[k] = (s.tau[k] + 1) % m;

  std::vector<bool> seen(m, false);
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t k = start; !seen[k]; k = s.sigma[k]) {
      seen[k] = true;
      cycle.push_back(k);
    }
    s.cycles.push_back(std::move(cycle));
  }

  for (const auto& cycle : s.cycles) {
    Word product(s.residual_alphabet);
    if (cycle.front() == 0) {
      product = s.head;
      for (std::size_t t = 1; t < cycle.size(); ++t) product = product * s.segments[cycle[t]];
      product = product * s.tail;
    } else {
      for (std::size_t k : cycle) product = product * s.segments[k];
    }
    s.split_words.push_back(free_reduce(product));
  }
  return s;
}

std::vector<std::vector<std::size_t>> reading_procedure(const Word& w,
                                                        std::span<const std::size_t> dismissibles) {
  const SlotLayout layout = layout_slots(w, dismissibles);
  const std::size_t m = layout.positions.size();
  std::vector<Letter> slots;
  for (std::size_t p : layout.positions) slots.push_back(w.letters()[p]);
  const auto partner = pair_slots(slots);

  // Segment j (0..m) is followed by slot j, except the last one.
  std::vector<bool> read(m + 1, false);
  std::vector<std::vector<std::size_t>> out;

  std::vector<std::size_t> first;
  for (std::size_t j = 0;;) {
    read[j] = true;
    first.push_back(j);
    if (j == m) break;
    j = partner[j] + 1;
  }
  out.push_back(std::move(first));

  for (std::size_t start = 0; start <= m; ++start) {
    if (read[start]) continue;
    std::vector<std::size_t> word;
    std::size_t j = start;
    do {
      read[j] = true;
      word.push_back(j);
      j = partner[j] + 1;
    } while (j != start);
    out.push_back(std::move(word));
  }
  return out;
}

TambourSplit split_tambour(std::size_t n) {
  if (n == 0) throw WordShapeError("Tambour family needs n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  Alphabet alphabet(names);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < n; ++i) letters.push_back({i, 1});
  for (std::size_t i = 0; i < n; ++i) letters.push_back({i, -1});
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;

  TambourSplit out;
  out.split = split_dismissible(Word(alphabet, letters), all);
  out.r = out.split.r();
  out.prefactor = {static_cast<int>(n) - 1, static_cast<int>(n) - static_cast<int>(out.r), 0};
  return out;
}

SquareStep square_reduce(const Word& w, std::size_t generator) {
  const auto profile = classify(w);
  if (generator >= profile.generators.size() || profile[generator].kind != LetterClass::square)
    throw WordShapeError("'" + (generator < w.alphabet().rank() ? w.alphabet().name(generator) : std::string("?")) +
                         "' is not a square in " + w.to_string());

  SquareStep step;
  std::vector<Letter> letters = profile.word.letters();
  if (profile[generator].negative == 2) {
    // the automorphism g -> g^-1 preserves the distribution
    step.inverted = true;
    for (auto& l : letters)
      if (l.generator == generator) l.sign = 1;
  }
  const std::size_t p1 = profile[generator].positions[0];
  const std::size_t p2 = profile[generator].positions[1];
  const Alphabet& alpha = w.alphabet();
  const Word w1(alpha, {letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(p1)});
  const Word w2(alpha, {letters.begin() + static_cast<std::ptrdiff_t>(p1 + 1), letters.begin() + static_cast<std::ptrdiff_t>(p2)});
  const Word w3(alpha, {letters.begin() + static_cast<std::ptrdiff_t>(p2 + 1), letters.end()});
  step.residual = (w1 * invert(w2) * w3).over(alpha.without(generator));
  return step;
}

ReducedForm eliminate_single(const Word& w, std::size_t generator) {
  const auto profile = classify(w);
  if (generator >= profile.generators.size() || profile[generator].kind != LetterClass::single)
    throw WordShapeError("'" + (generator < w.alphabet().rank() ? w.alphabet().name(generator) : std::string("?")) +
                         "' is not single in " + w.to_string());
  ReducedForm rf;
  rf.ambient = w.alphabet();
  const int d = static_cast<int>(w.alphabet().rank());
  rf.prefactor.group_exponent += d;
  rf.trivial_only = true;
  rf.trace.push_back({Rule::single, {w.alphabet().name(generator)}, {d, 0, 0}, false, {}});
  return rf;
}

ReducedForm normalize(const Word& w, ReductionOrder order) {
  ReducedForm rf;
  rf.ambient = w.alphabet();
  Word current = free_reduce(w);
  if (current.length() != w.length())
    rf.trace.push_back({Rule::reduce, {}, {}, false, {current}});

  for (;;) {
    auto profile = classify(current);
    const auto absent = profile.with(LetterClass::absent);
    if (!absent.empty()) {
      std::vector<std::string> names;
      for (std::size_t g : absent) names.push_back(current.alphabet().name(g));
      current = current.over(remove_generators(current.alphabet(), absent));
      const Prefactor delta{static_cast<int>(absent.size()), 0, 0};
      rf.prefactor += delta;
      rf.trace.push_back({Rule::absent, names, delta, false, {current}});
      profile = classify(current);
    }

    const auto singles = profile.with(LetterClass::single);
    if (!singles.empty()) {
      ReducedForm single = eliminate_single(current, singles.front());
      rf.prefactor += single.trace.front().delta;
      rf.trivial_only = true;
      rf.residual_alphabet = Alphabet();
      rf.residual_words.clear();
      rf.trace.push_back(single.trace.front());
      return rf;
    }

    const auto squares = profile.with(LetterClass::square);
    if (order == ReductionOrder::squares_first && !squares.empty()) {
      const std::size_t g = squares.front();
      const std::string name = current.alphabet().name(g);
      SquareStep step = square_reduce(current, g);
      current = free_reduce(step.residual);
      rf.prefactor += step.delta;
      rf.trace.push_back({Rule::square, {name}, step.delta, step.inverted, {current}});
      continue;
    }

    const auto dismissibles = profile.with(LetterClass::dismissible);
    if (dismissibles.empty()) {
      rf.residual_alphabet = current.alphabet();
      rf.residual_words = {current};
      return rf;
    }
    std::vector<std::string> names;
    for (std::size_t g : dismissibles) names.push_back(current.alphabet().name(g));
    SplitDecomposition s = split_dismissible(current, dismissibles);
    const int n = static_cast<int>(s.n);
    const Prefactor delta{n, n, 0};
    rf.prefactor += delta;
    rf.residual_alphabet = s.residual_alphabet;
    rf.residual_words = s.split_words;
    rf.trace.push_back({Rule::split, names, delta, false, s.split_words});
    rf.split = std::move(s);
    return rf;
  }
}

GenusResult genus(const Word& w) {
  const ReducedForm rf = normalize(w);
  if (rf.trivial_only || !rf.split)
    throw WordShapeError(w.to_string() + " is not admissible: no dismissible split");
  if (rf.prefactor.fs_exponent != 0)
    throw WordShapeError(w.to_string() + " is not admissible: square letters were reduced");
  for (const auto& W : rf.residual_words)
    if (!W.empty()) throw WordShapeError(w.to_string() + " is not admissible: split word " + W.to_string() + " is not trivial");
  GenusResult g;
  g.n = rf.split->n;
  g.r = rf.split->r();
  g.genus = (g.n - g.r + 1) / 2;
  return g;
}

nlohmann::json to_json(const Word& w) { return w.to_string(); }

nlohmann::json to_json(const SplitDecomposition& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["r"] = s.r();
  j["residual_alphabet"] = s.residual_alphabet.names();
  j["segments"] = nlohmann::json::array();
  for (const auto& seg : s.segments) j["segments"].push_back(seg.to_string());
  j["slots"] = nlohmann::json::array();
  for (const auto& z : s.slots) j["slots"].push_back(Word(s.shifted.alphabet(), {z}).to_string());
  j["tau"] = s.tau;
  j["sigma"] = s.sigma;
  j["cycles"] = s.cycles;
  j["split_words"] = nlohmann::json::array();
  for (const auto& W : s.split_words) j["split_words"].push_back(W.to_string());
  return j;
}

nlohmann::json to_json(const ReducedForm& rf) {
  nlohmann::json j;
  j["ambient_alphabet"] = rf.ambient.names();
  j["group_exponent"] = rf.prefactor.group_exponent;
  j["degree_exponent"] = rf.prefactor.degree_exponent;
  j["fs_exponent"] = rf.prefactor.fs_exponent;
  j["prefactor"] = to_string(rf.prefactor);
  j["trivial_only"] = rf.trivial_only;
  j["residual_alphabet"] = rf.residual_alphabet.names();
  j["residual_words"] = nlohmann::json::array();
  for (const auto& W : rf.residual_words) j["residual_words"].push_back(W.to_string());
  if (rf.split) j["split"] = to_json(*rf.split);
  j["trace"] = nlohmann::json::array();
  for (const auto& step : rf.trace) {
    nlohmann::json t;
    t["rule"] = std::string(to_string(step.rule));
    t["generators"] = step.generators;
    t["delta"] = {step.delta.group_exponent, step.delta.degree_exponent, step.delta.fs_exponent};
    if (step.inverted) t["inverted"] = true;
    t["result"] = nlohmann::json::array();
    for (const auto& W : step.result) t["result"].push_back(W.to_string());
    j["trace"].push_back(std::move(t));
  }
  return j;
}

}  // namespace wordmap
