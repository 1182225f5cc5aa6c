#include "wordmap/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "wordmap/errors.hpp"

namespace wordmap {

namespace {

constexpr std::size_t kExhaustiveAssociativityOrder = 24;
constexpr std::size_t kSampledTriples = 20000;

std::string cycle_string(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<Element>> mul_table,
                         std::vector<std::string> element_names)
    : name_(std::move(name)), table_(std::move(mul_table)), names_(std::move(element_names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw ValidationError("group " + name_ + ": empty multiplication table");
  for (const auto& row : table_) {
    if (row.size() != n) throw ValidationError("group " + name_ + ": table is not square");
    for (Element x : row)
      if (x >= n) throw ValidationError("group " + name_ + ": entry out of range");
  }

  // rows and columns must be permutations
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      Element r = table_[a][b], c = table_[b][a];
      if (row_seen[r] || col_seen[c])
        throw ValidationError("group " + name_ + ": table is not a Latin square");
      row_seen[r] = col_seen[c] = true;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (std::size_t g = 0; g < n && is_identity; ++g)
      is_identity = table_[e][g] == g && table_[g][e] == g;
    if (is_identity) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw ValidationError("group " + name_ + ": no identity element");

  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = std::find(table_[a].begin(), table_[a].end(), identity_);
    Element inv = static_cast<Element>(it - table_[a].begin());
    if (table_[inv][a] != identity_) throw ValidationError("group " + name_ + ": one-sided inverse");
    inverse_[a] = inv;
  }

  auto check = [&](Element a, Element b, Element c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      throw ValidationError("group " + name_ + ": multiplication is not associative");
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t t = 0; t < kSampledTriples; ++t) check(pick(rng), pick(rng), pick(rng));
  }

  if (names_.empty()) {
    names_.resize(n);
    for (std::size_t g = 0; g < n; ++g) names_[g] = g == identity_ ? "e" : "g" + std::to_string(g);
  } else if (names_.size() != n) {
    throw ValidationError("group " + name_ + ": wrong number of element names");
  }
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<std::uint32_t> cycle;
    skip();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point in cycle notation", i);
      std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v < 1 || v > degree) throw ParseError("point outside 1.." + std::to_string(degree), start);
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end())
        throw ParseError("point repeated in cycle", start);
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
      skip();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", i);
    ++i;
    // apply the cycle after what has been read so far
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0u);
    for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = cycle[(k + 1) % cycle.size()];
    for (auto& x : p) x = c[x];
    skip();
  }
  return p;
}

GroupPtr group_from_generators(std::string name, std::span<const Permutation> generators,
                               std::size_t max_order) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] >= g.size() || hit[g[i]]) throw ValidationError("generator is not a permutation");
      hit[g[i]] = true;
      p[i] = g[i];
    }
    gens.push_back(std::move(p));
  }

  auto compose = [](const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : gens) {
      Permutation h = compose(elems[head], s);
      if (index.count(h)) continue;
      if (elems.size() >= max_order)
        throw ValidationError("closure exceeds bound " + std::to_string(max_order));
      index.emplace(h, static_cast<Element>(elems.size()));
      elems.push_back(std::move(h));
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elems) names.push_back(cycle_string(p));
  return std::make_shared<const FiniteGroup>(std::move(name), std::move(table), std::move(names));
}

ClassesPtr conjugacy_classes(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  auto out = std::make_shared<ConjugacyClasses>();
  out->group = group;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  out->class_of.assign(n, unset);
  // The identity class comes first even when the identity is not element 0.
  std::vector<Element> order(n);
  order[0] = g.identity();
  for (Element x = 0, k = 1; x < n; ++x)
    if (x != g.identity()) order[k++] = x;
  for (Element x : order) {
    if (out->class_of[x] != unset) continue;
    const std::size_t c = out->representatives.size();
    out->representatives.push_back(x);
    std::size_t size = 0;
    for (Element by = 0; by < n; ++by) {
      Element y = g.conjugate(x, by);
      if (out->class_of[y] == unset) {
        out->class_of[y] = c;
        ++size;
      }
    }
    out->sizes.push_back(size);
  }
  for (std::size_t c = 0; c < out->count(); ++c) {
    out->centralizer_sizes.push_back(n / out->sizes[c]);
    Element r = out->representatives[c];
    out->power_class.push_back(out->class_of[g.mul(r, r)]);
    out->inverse_class.push_back(out->class_of[g.inverse(r)]);
  }
  return out;
}

GroupPtr read_group(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("group file: missing header");
  std::istringstream header(line);
  std::string kw_group, name, kw_order;
  std::size_t order = 0;
  if (!(header >> kw_group >> name >> kw_order >> order) || kw_group != "group" || kw_order != "order")
    throw ValidationError("group file: header must be 'group <name> order <N>'");
  if (order == 0) throw ValidationError("group file: order must be positive");
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a) {
    if (!std::getline(in, line)) throw ValidationError("group file: missing row " + std::to_string(a));
    std::istringstream row(line);
    for (std::size_t b = 0; b < order; ++b) {
      long long v = -1;
      if (!(row >> v) || v < 0)
        throw ValidationError("group file: bad entry in row " + std::to_string(a));
      table[a][b] = static_cast<Element>(v);
    }
    std::string extra;
    if (row >> extra) throw ValidationError("group file: too many entries in row " + std::to_string(a));
  }
  return std::make_shared<const FiniteGroup>(std::move(name), std::move(table));
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open group file " + path);
  return read_group(in);
}

void write_group(std::ostream& out, const FiniteGroup& group) {
  out << "group " << group.name() << " order " << group.order() << '\n';
  for (const auto& row : group.table()) {
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
    out << '\n';
  }
}

}  // namespace wordmap
