#include "wordmap/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "wordmap/errors.hpp"

namespace wordmap {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw AlphabetError("empty generator name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw AlphabetError("duplicate generator '" + names_[i] + "'");
  }
}

Alphabet Alphabet::parse_list(std::string_view text) {
  std::vector<std::string> names;
  std::string current;
  bool any = false;
  auto flush = [&] {
    if (current.empty()) throw AlphabetError("empty generator name in alphabet list");
    names.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
      any = true;
    }
  }
  if (any || !names.empty()) flush();
  return Alphabet(std::move(names));
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Alphabet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw AlphabetError("unknown generator '" + std::string(name) + "'");
}

Alphabet Alphabet::without(std::size_t generator) const {
  std::vector<std::string> rest = names_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(generator));
  return Alphabet(std::move(rest));
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.generator >= alphabet_.rank()) throw AlphabetError("letter outside the alphabet");
    if (l.sign != 1 && l.sign != -1) throw AlphabetError("letter sign must be +1 or -1");
  }
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].cancels(letters_[i - 1])) return false;
  return true;
}

Word Word::over(const Alphabet& target) const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back({target.index_of(alphabet_.name(l.generator)), l.sign});
  return Word(target, std::move(out));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long long power = static_cast<long long>(j - i) * letters_[i].sign;
    if (!out.empty()) out += '*';
    out += alphabet_.name(letters_[i].generator);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetError("concatenating words over different alphabets");
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(a.alphabet(), std::move(letters));
}

namespace {

// Recursive-descent parser.  Symbols are resolved to names first and mapped
// onto the alphabet at the end so inference sees first-appearance order.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<std::pair<std::string, int>> parse() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty word (write 1 for the identity)", pos_);
    auto w = word();
    skip();
    if (pos_ < text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return w;
  }

  const std::vector<std::pair<std::string, std::size_t>>& symbols() const { return symbols_; }

 private:
  using Seq = std::vector<std::pair<std::string, int>>;

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '1' || c == '(' || c == '[' || c == '{';
  }

  Seq word() {
    Seq out = term();
    for (;;) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        if (!starts_factor()) throw ParseError("expected a factor after '*'", pos_);
      } else if (!starts_factor()) {
        break;
      }
      Seq t = term();
      out.insert(out.end(), t.begin(), t.end());
    }
    return out;
  }

  Seq term() {
    Seq base = factor();
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '^') return base;
    ++pos_;
    skip();
    const std::size_t at = pos_;
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent", pos_);
    long long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > 1000000) throw ParseError("exponent too large", at);
    }
    if (e == 0) throw ParseError("zero exponent", at);
    Seq unit = sign > 0 ? base : inverse(base);
    Seq out;
    out.reserve(unit.size() * static_cast<std::size_t>(e));
    for (long long k = 0; k < e; ++k) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  static Seq inverse(const Seq& s) {
    Seq out(s.rbegin(), s.rend());
    for (auto& [name, sign] : out) sign = -sign;
    return out;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Seq factor() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      symbols_.emplace_back(name, start);
      return {{name, 1}};
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        throw ParseError("symbols must start with a letter", pos_ - 1);
      return {};
    }
    if (c == '(') {
      ++pos_;
      Seq w = word();
      expect(')');
      return w;
    }
    if (c == '[' || c == '{') {
      ++pos_;
      Seq a = word();
      expect(',');
      Seq b = word();
      expect(c == '[' ? ']' : '}');
      Seq out = a;
      out.insert(out.end(), b.begin(), b.end());
      const Seq tail = c == '[' ? inverse(a) : a;
      out.insert(out.end(), tail.begin(), tail.end());
      const Seq ib = inverse(b);
      out.insert(out.end(), ib.begin(), ib.end());
      return out;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, std::size_t>> symbols_;
};

}  // namespace

Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet) {
  Parser parser(text);
  const auto seq = parser.parse();

  Alphabet alpha;
  if (alphabet) {
    alpha = *alphabet;
    for (const auto& [name, at] : parser.symbols())
      if (!alpha.find(name)) throw AlphabetError("unknown symbol '" + name + "' at position " + std::to_string(at));
  } else {
    std::vector<std::string> names;
    for (const auto& [name, at] : parser.symbols())
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    alpha = Alphabet(std::move(names));
  }

  std::vector<Letter> letters;
  letters.reserve(seq.size());
  for (const auto& [name, sign] : seq) letters.push_back({alpha.index_of(name), sign});
  Word w(std::move(alpha), std::move(letters));
  w.mark_inferred(!alphabet.has_value());
  return w;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().cancels(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(w.alphabet(), std::move(stack)).mark_inferred(w.alphabet_inferred());
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(w.alphabet(), std::move(out)).mark_inferred(w.alphabet_inferred());
}

Word cyclic_shift(const Word& w, std::int64_t k) {
  if (w.empty()) return w;
  const auto n = static_cast<std::int64_t>(w.length());
  const auto r = static_cast<std::ptrdiff_t>(((k % n) + n) % n);
  std::vector<Letter> out = w.letters();
  std::rotate(out.begin(), out.begin() + r, out.end());
  return Word(w.alphabet(), std::move(out)).mark_inferred(w.alphabet_inferred());
}

Element evaluate(const Word& w, const Assignment& assignment, const FiniteGroup& group) {
  if (assignment.size() != w.alphabet().rank())
    throw AlphabetError("assignment does not cover the alphabet");
  Element acc = group.identity();
  for (const auto& l : w.letters()) {
    const Element g = assignment[l.generator];
    if (g >= group.order()) throw AlphabetError("assigned element outside the group");
    acc = group.mul(acc, l.sign > 0 ? g : group.inverse(g));
  }
  return acc;
}

}  // namespace wordmap
