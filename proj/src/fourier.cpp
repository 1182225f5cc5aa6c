#include "wordmap/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "wordmap/errors.hpp"

namespace wordmap {

std::uint64_t substitution_count(std::size_t order, std::size_t rank, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (total > budget / order)
      throw BudgetError("enumerating " + std::to_string(order) + "^" + std::to_string(rank) +
                        " substitutions exceeds the budget of " + std::to_string(budget));
    total *= order;
  }
  if (total > budget)
    throw BudgetError("enumerating " + std::to_string(total) + " substitutions exceeds the budget of " +
                      std::to_string(budget));
  return total;
}

namespace {

// Flat multiplication table and words compiled to (generator, inverse?) pairs.
class Evaluator {
 public:
  explicit Evaluator(const FiniteGroup& g)
      : n_(g.order()), identity_(g.identity()), mul_(n_ * n_), inv_(g.inverse_table()) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) mul_[a * n_ + b] = g.mul(static_cast<Element>(a), static_cast<Element>(b));
  }

  struct Compiled {
    std::vector<std::uint32_t> gen;
    std::vector<bool> inverse;
  };

  static Compiled compile(const Word& w) {
    Compiled c;
    for (const auto& l : w.letters()) {
      c.gen.push_back(static_cast<std::uint32_t>(l.generator));
      c.inverse.push_back(l.sign < 0);
    }
    return c;
  }

  Element operator()(const Compiled& w, const Element* x) const {
    Element acc = identity_;
    for (std::size_t i = 0; i < w.gen.size(); ++i) {
      const Element g = x[w.gen[i]];
      acc = mul_[acc * n_ + (w.inverse[i] ? inv_[g] : g)];
    }
    return acc;
  }

 private:
  std::size_t n_;
  Element identity_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

unsigned worker_count(unsigned requested, std::size_t order, std::size_t rank, std::uint64_t total) {
  if (rank == 0 || total < 4096) return 1;
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, order));
}

// Runs body(partial, x) over every x in G^rank.  The first coordinate is
// partitioned across workers; partials come back in partition order.
template <class Partial, class Body>
std::vector<Partial> for_each_substitution(std::size_t order, std::size_t rank, unsigned workers,
                                           const Partial& init, const Body& body) {
  std::vector<Partial> partials(workers, init);
  auto run = [&](unsigned w) {
    std::vector<Element> x(rank, 0);
    if (rank == 0) {
      body(partials[w], x.data());
      return;
    }
    const std::size_t lo = order * w / workers, hi = order * (w + 1) / workers;
    if (lo >= hi) return;
    x[0] = static_cast<Element>(lo);
    for (;;) {
      body(partials[w], x.data());
      std::size_t i = rank;
      while (i-- > 0) {
        if (++x[i] < (i == 0 ? hi : order)) break;
        if (i == 0) return;
        x[i] = 0;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return partials;
}

double real_power(double base, int e) { return std::pow(base, static_cast<double>(e)); }

}  // namespace

ClassFunction distribution(const Word& w, const ClassesPtr& classes, const EnumerationOptions& options) {
  const FiniteGroup& g = *classes->group;
  const std::size_t n = g.order(), d = w.alphabet().rank();
  const std::uint64_t total = substitution_count(n, d, options.budget);
  const Evaluator eval(g);
  const auto compiled = Evaluator::compile(w);

  const auto partials = for_each_substitution(
      n, d, worker_count(options.threads, n, d, total), std::vector<std::uint64_t>(n, 0),
      [&](std::vector<std::uint64_t>& counts, const Element* x) { ++counts[eval(compiled, x)]; });

  std::vector<std::uint64_t> per_element(n, 0);
  for (const auto& p : partials)
    for (std::size_t e = 0; e < n; ++e) per_element[e] += p[e];

  ClassFunction f;
  f.classes = classes;
  std::vector<std::uint64_t> per_class(classes->count(), 0);
  for (std::size_t c = 0; c < classes->count(); ++c) per_class[c] = per_element[classes->representatives[c]];
  for (std::size_t e = 0; e < n; ++e)
    if (per_element[e] != per_class[classes->class_of[e]])
      throw Error("word map count is not a class function; the group table is inconsistent");
  for (auto c : per_class) f.values.emplace_back(static_cast<double>(c), 0.0);
  f.counts = std::move(per_class);
  return f;
}

ClassFunction distribution(const Word& w, const GroupPtr& group, const EnumerationOptions& options) {
  return distribution(w, conjugacy_classes(group), options);
}

FourierExpansion project(const ClassFunction& f, const TablePtr& table) {
  if (!f.classes->group->same_structure(table->group()))
    throw ValidationError("class function and character table belong to different groups");
  const auto& cls = table->classes();
  const double order = static_cast<double>(table->group().order());
  FourierExpansion e;
  e.table = table;
  for (std::size_t chi = 0; chi < table->size(); ++chi) {
    Complex s = 0;
    for (std::size_t c = 0; c < cls.count(); ++c)
      s += static_cast<double>(cls.sizes[c]) * f.at(cls.representatives[c]) * std::conj(table->value(chi, c));
    e.coefficients.push_back(s / order);
  }
  return e;
}

ClassFunction reconstruct(const FourierExpansion& e) {
  ClassFunction f;
  f.classes = e.table->classes_ptr();
  f.values.assign(f.classes->count(), Complex(0.0, 0.0));
  for (std::size_t chi = 0; chi < e.table->size(); ++chi)
    for (std::size_t c = 0; c < f.classes->count(); ++c) f.values[c] += e.coefficients[chi] * e.table->value(chi, c);
  return f;
}

ClassFunction character_function(const CharacterTable& table, std::size_t chi) {
  return ClassFunction{table.classes_ptr(), table.row(chi), std::nullopt};
}

Complex inner_product(const ClassFunction& a, const ClassFunction& b) {
  const auto& cls = *a.classes;
  Complex s = 0;
  for (std::size_t c = 0; c < cls.count(); ++c) {
    const Element r = cls.representatives[c];
    s += static_cast<double>(cls.sizes[c]) * a.at(r) * std::conj(b.at(r));
  }
  return s / static_cast<double>(cls.group->order());
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction f{a.classes, {}, std::nullopt};
  for (std::size_t c = 0; c < a.classes->count(); ++c) f.values.push_back(a.values[c] * b.at(a.classes->representatives[c]));
  return f;
}

ClassFunction convolve(const ClassFunction& a, const ClassFunction& b) {
  const auto& cls = *a.classes;
  const FiniteGroup& g = *cls.group;
  ClassFunction f{a.classes, {}, std::nullopt};
  for (std::size_t c = 0; c < cls.count(); ++c) {
    const Element x = cls.representatives[c];
    Complex s = 0;
    for (Element h = 0; h < g.order(); ++h) s += a.at(h) * b.at(g.mul(g.inverse(h), x));
    f.values.push_back(s / static_cast<double>(g.order()));
  }
  return f;
}

std::uint64_t formula_evaluations(const ReducedForm& rf, std::size_t order) {
  const std::size_t d = rf.summation_rank();
  if (d == 0) return 0;
  return substitution_count(order, d, static_cast<std::uint64_t>(-1));
}

std::vector<Complex> coefficient_formula_all(const ReducedForm& rf, const CharacterTable& table,
                                             const EnumerationOptions& options) {
  const FiniteGroup& g = table.group();
  const std::size_t n = g.order(), k = table.size();
  const double order = static_cast<double>(n);
  std::vector<Complex> out(k, Complex(0.0, 0.0));

  if (rf.trivial_only) {
    out[trivial_character(table)] = real_power(order, rf.prefactor.group_exponent);
    return out;
  }

  const std::size_t d = rf.residual_alphabet.rank();
  const std::uint64_t total = substitution_count(n, d, options.budget);
  std::vector<Evaluator::Compiled> words;
  for (const auto& W : rf.residual_words) {
    if (!(W.alphabet() == rf.residual_alphabet)) throw AlphabetError("residual word over a different alphabet");
    words.push_back(Evaluator::compile(W));
  }
  const Evaluator eval(g);
  const auto& class_of = table.classes().class_of;

  // conj(chi) per class, laid out [class][chi] for the inner loop
  std::vector<Complex> conj_rows(table.classes().count() * k);
  for (std::size_t c = 0; c < table.classes().count(); ++c)
    for (std::size_t chi = 0; chi < k; ++chi) conj_rows[c * k + chi] = std::conj(table.value(chi, c));

  const auto partials = for_each_substitution(
      n, d, worker_count(options.threads, n, d, total), std::vector<Complex>(k, Complex(0.0, 0.0)),
      [&](std::vector<Complex>& acc, const Element* x) {
        thread_local std::vector<Complex> prod;
        prod.assign(k, Complex(1.0, 0.0));
        for (const auto& W : words) {
          const Complex* row = &conj_rows[class_of[eval(W, x)] * k];
          for (std::size_t chi = 0; chi < k; ++chi) prod[chi] *= row[chi];
        }
        for (std::size_t chi = 0; chi < k; ++chi) acc[chi] += prod[chi];
      });

  for (std::size_t chi = 0; chi < k; ++chi) {
    Complex sum = 0;
    for (const auto& p : partials) sum += p[chi];
    double scale = real_power(order, rf.prefactor.group_exponent) /
                   real_power(static_cast<double>(table.degree(chi)), rf.prefactor.degree_exponent);
    if (rf.prefactor.fs_exponent > 0) scale *= real_power(fs_indicator(table, chi), rf.prefactor.fs_exponent);
    out[chi] = scale * sum;
  }
  return out;
}

Complex coefficient_formula(const ReducedForm& rf, const CharacterTable& table, std::size_t chi,
                            const EnumerationOptions& options) {
  if (chi >= table.size()) throw ValidationError("character index out of range");
  return coefficient_formula_all(rf, table, options)[chi];
}

Complex disjoint_product_coeff(Complex c1, Complex c2, const CharacterTable& table, std::size_t chi) {
  return static_cast<double>(table.group().order()) / table.degree(chi) * c1 * c2;
}

namespace {

// <psi chi, chi>
Complex triple_inner(const CharacterTable& table, std::size_t psi, std::size_t chi) {
  const auto& cls = table.classes();
  Complex s = 0;
  for (std::size_t c = 0; c < cls.count(); ++c)
    s += static_cast<double>(cls.sizes[c]) * table.value(psi, c) * std::norm(table.value(chi, c));
  return s / static_cast<double>(table.group().order());
}

}  // namespace

Complex commutator_with_fresh(const FourierExpansion& fw, std::size_t chi) {
  const CharacterTable& t = *fw.table;
  Complex s = 0;
  for (std::size_t psi = 0; psi < t.size(); ++psi) s += triple_inner(t, psi, chi) * fw.coefficients[psi];
  return static_cast<double>(t.group().order()) / t.degree(chi) * s;
}

Complex nested_commutator_coeff(const CharacterTable& table, std::size_t chi) {
  Complex s = 0;
  for (std::size_t psi = 0; psi < table.size(); ++psi) s += triple_inner(table, psi, chi) / static_cast<double>(table.degree(psi));
  const double order = static_cast<double>(table.group().order());
  return order * order / table.degree(chi) * s;
}

Complex quartic_pair_coeff(const CharacterTable& table, std::size_t chi, QuarticVariant variant) {
  const auto& cls = table.classes();
  Complex s = 0;
  for (std::size_t c = 0; c < cls.count(); ++c) {
    const Complex v = table.value(chi, c);
    const Complex term = variant == QuarticVariant::absolute ? Complex(std::norm(v) * std::norm(v), 0.0) : v * v * v * v;
    s += static_cast<double>(cls.sizes[c]) * term;
  }
  const double order = static_cast<double>(table.group().order());
  const double deg = table.degree(chi);
  return order * order / (deg * deg * deg) * s;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> rational_annotation(Complex c, long long denominator_multiple, double tolerance) {
  if (std::abs(c.imag()) > tolerance || denominator_multiple <= 0) return std::nullopt;
  for (long long q = 1; q <= denominator_multiple; ++q) {
    if (denominator_multiple % q != 0) continue;
    const double scaled = c.real() * static_cast<double>(q);
    if (std::abs(scaled) > 9e15) return std::nullopt;
    const long long p = std::llround(scaled);
    if (std::abs(c.real() - static_cast<double>(p) / static_cast<double>(q)) <= tolerance) return Rational{p, q};
  }
  return std::nullopt;
}

long long annotation_denominator(const ReducedForm& rf, const CharacterTable& table, std::size_t chi) {
  long long m = static_cast<long long>(table.group().order());
  const int b = std::max(rf.prefactor.degree_exponent, 1);
  for (int i = 0; i < b && m < (1LL << 40); ++i) m *= table.degree(chi);
  return m;
}

}  // namespace wordmap
