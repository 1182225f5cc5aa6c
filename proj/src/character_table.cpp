#include "wordmap/character_table.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "wordmap/errors.hpp"

namespace wordmap {

namespace {

// Names of every violated table invariant, checked with the given class sizes.
std::vector<std::string> table_violations(const std::vector<std::vector<Complex>>& rows,
                                          const std::vector<std::size_t>& sizes, std::size_t order,
                                          double tol) {
  std::vector<std::string> out;
  const std::size_t k = sizes.size();
  if (rows.size() != k) out.push_back("number of characters differs from number of classes");
  std::size_t sum_sizes = 0;
  for (auto s : sizes) {
    sum_sizes += s;
    if (s == 0 || order % s != 0) {
      out.push_back("class size does not divide the group order");
      break;
    }
  }
  if (sum_sizes != order) out.push_back("class sizes do not sum to the group order");

  long long sum_sq = 0;
  bool degrees_ok = true;
  for (const auto& r : rows) {
    if (r.size() != k) {
      out.push_back("row length differs from number of classes");
      return out;
    }
    const double d = r[0].real();
    const long long rd = std::llround(d);
    if (rd <= 0 || std::abs(d - static_cast<double>(rd)) > tol || std::abs(r[0].imag()) > tol)
      degrees_ok = false;
    sum_sq += rd * rd;
  }
  if (!degrees_ok) out.push_back("degree is not a positive integer");
  if (sum_sq != static_cast<long long>(order)) out.push_back("sum of squared degrees differs from |G|");

  bool rows_ok = true;
  for (std::size_t a = 0; a < rows.size() && rows_ok; ++a)
    for (std::size_t b = a; b < rows.size() && rows_ok; ++b) {
      Complex s = 0;
      for (std::size_t c = 0; c < k; ++c) s += static_cast<double>(sizes[c]) * rows[a][c] * std::conj(rows[b][c]);
      s /= static_cast<double>(order);
      rows_ok = std::abs(s - Complex(a == b ? 1.0 : 0.0)) <= tol;
    }
  if (!rows_ok) out.push_back("row orthogonality");

  bool cols_ok = true;
  for (std::size_t c = 0; c < k && cols_ok; ++c)
    for (std::size_t d = c; d < k && cols_ok; ++d) {
      Complex s = 0;
      for (const auto& r : rows) s += r[c] * std::conj(r[d]);
      const double want = c == d ? static_cast<double>(order) / static_cast<double>(sizes[c]) : 0.0;
      cols_ok = std::abs(s - want) <= tol * std::max(1.0, want);
    }
  if (!cols_ok) out.push_back("column orthogonality");
  return out;
}

[[noreturn]] void reject(const std::string& group, const std::vector<std::string>& violations) {
  std::string msg = "character table for " + group + " rejected:";
  for (std::size_t i = 0; i < violations.size(); ++i) msg += (i ? "; " : " ") + violations[i];
  throw ValidationError(msg);
}

Complex parse_complex(const std::string& tok) {
  const char* s = tok.c_str();
  char* end = nullptr;
  const double re = std::strtod(s, &end);
  if (end == s) throw ValidationError("bad complex value '" + tok + "'");
  if (*end == '\0') return {re, 0.0};
  if (*end == 'i' && end[1] == '\0') return {0.0, re};
  if (*end != '+' && *end != '-') throw ValidationError("bad complex value '" + tok + "'");
  const char* im_start = end;
  const double im = std::strtod(im_start, &end);
  if (end == im_start || *end != 'i' || end[1] != '\0') throw ValidationError("bad complex value '" + tok + "'");
  return {re, im};
}

std::string format_complex(Complex z) {
  double re = std::abs(z.real()) < 5e-16 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-16 ? 0.0 : z.imag();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15f%c%.15fi", re, im < 0 ? '-' : '+', std::abs(im));
  return buf;
}

long long quantize(double x) { return std::llround(x * 1e6); }

}  // namespace

void sort_rows(std::vector<std::vector<Complex>>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const long long da = std::llround(a[0].real()), db = std::llround(b[0].real());
    if (da != db) return da < db;
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (quantize(a[c].real()) != quantize(b[c].real())) return quantize(a[c].real()) > quantize(b[c].real());
      if (quantize(a[c].imag()) != quantize(b[c].imag())) return quantize(a[c].imag()) > quantize(b[c].imag());
    }
    return false;
  });
}

CharacterTable::CharacterTable(ClassesPtr classes, std::vector<std::vector<Complex>> rows,
                               std::optional<std::uint64_t> seed, double tolerance)
    : classes_(std::move(classes)), rows_(std::move(rows)), seed_(seed) {
  const auto violations = table_violations(rows_, classes_->sizes, classes_->group->order(), tolerance);
  if (!violations.empty()) reject(classes_->group->name(), violations);
  for (const auto& r : rows_) degrees_.push_back(static_cast<int>(std::llround(r[0].real())));
}

TablePtr read_character_table(std::istream& in, const GroupPtr& group) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("table file: missing header");
  std::istringstream header(line);
  std::string kw, name, kw_classes;
  std::size_t k = 0;
  if (!(header >> kw >> name >> kw_classes >> k) || kw != "chartable" || kw_classes != "classes" || k == 0)
    throw ValidationError("table file: header must be 'chartable <group> classes <k>'");

  auto read_ints = [&](const char* what) {
    if (!std::getline(in, line)) throw ValidationError(std::string("table file: missing ") + what);
    std::istringstream ls(line);
    std::vector<std::size_t> v;
    long long x;
    while (ls >> x) {
      if (x < 0) throw ValidationError(std::string("table file: negative entry in ") + what);
      v.push_back(static_cast<std::size_t>(x));
    }
    if (!ls.eof() || v.size() != k) throw ValidationError(std::string("table file: expected ") + std::to_string(k) + " " + what);
    return v;
  };
  const auto reps = read_ints("class representatives");
  const auto sizes = read_ints("class sizes");

  std::vector<std::vector<Complex>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Complex> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_complex(tok));
    if (row.empty()) continue;
    if (row.size() != k) throw ValidationError("table file: character row with wrong number of values");
    rows.push_back(std::move(row));
  }

  const auto violations = table_violations(rows, sizes, group->order(), kTableTolerance);
  if (!violations.empty()) reject(name, violations);

  const auto classes = conjugacy_classes(group);
  if (classes->count() != k) throw ValidationError("table file: group has " + std::to_string(classes->count()) + " classes, file has " + std::to_string(k));
  std::vector<std::size_t> column_of(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    if (reps[c] >= group->order()) throw ValidationError("table file: representative out of range");
    const std::size_t actual = classes->class_of[reps[c]];
    if (column_of[actual] != k) throw ValidationError("table file: two representatives of one class");
    if (classes->sizes[actual] != sizes[c])
      throw ValidationError("table file: class of element " + std::to_string(reps[c]) + " has size " +
                            std::to_string(classes->sizes[actual]) + ", file says " + std::to_string(sizes[c]));
    column_of[actual] = c;
  }
  std::vector<std::vector<Complex>> ordered(rows.size(), std::vector<Complex>(k));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) ordered[r][c] = rows[r][column_of[c]];
  return std::make_shared<const CharacterTable>(classes, std::move(ordered));
}

TablePtr load_character_table(const GroupPtr& group, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open table file " + path);
  return read_character_table(in, group);
}

void write_character_table(std::ostream& out, const CharacterTable& table) {
  const auto& cls = table.classes();
  out << "chartable " << table.group().name() << " classes " << cls.count() << '\n';
  for (std::size_t c = 0; c < cls.count(); ++c) out << (c ? " " : "") << cls.representatives[c];
  out << '\n';
  for (std::size_t c = 0; c < cls.count(); ++c) out << (c ? " " : "") << cls.sizes[c];
  out << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << format_complex(row[c]);
    out << '\n';
  }
}

TablePtr compute_character_table(const GroupPtr& group, const ComputeOptions& options) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  if (n > options.max_order)
    throw ValidationError("group order " + std::to_string(n) + " exceeds table computation bound " +
                          std::to_string(options.max_order));
  const auto classes = conjugacy_classes(group);
  const std::size_t k = classes->count();

  // class_mult[i](j, l) = #{x in C_i : x^-1 z_l in C_j}, z_l the representative
  // of C_l, so that C_i C_j = sum_l class_mult[i](j, l) C_l.
  std::vector<Eigen::MatrixXd> class_mult(k, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
  for (Element x = 0; x < n; ++x) {
    const std::size_t i = classes->class_of[x];
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t j = classes->class_of[g.mul(g.inverse(x), classes->representatives[l])];
      class_mult[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) += 1.0;
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coeff(0.5, 1.5);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) mix += coeff(rng) * class_mult[i];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(mix);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXcd lambda = solver.eigenvalues();
    const Eigen::MatrixXcd vecs = solver.eigenvectors();

    double scale = 1.0;
    for (Eigen::Index a = 0; a < lambda.size(); ++a) scale = std::max(scale, std::abs(lambda(a)));
    bool separated = true;
    for (Eigen::Index a = 0; a < lambda.size() && separated; ++a)
      for (Eigen::Index b = a + 1; b < lambda.size() && separated; ++b)
        separated = std::abs(lambda(a) - lambda(b)) > 1e-6 * scale;
    if (!separated) continue;

    std::vector<std::vector<Complex>> rows;
    bool ok = true;
    for (Eigen::Index a = 0; a < lambda.size() && ok; ++a) {
      const Complex lead = vecs(0, a);
      if (std::abs(lead) < 1e-12) {
        ok = false;
        break;
      }
      // central character: omega(C_l) = |C_l| chi(z_l) / chi(1), omega(C_0) = 1
      std::vector<Complex> omega(k);
      for (std::size_t l = 0; l < k; ++l) omega[l] = vecs(static_cast<Eigen::Index>(l), a) / lead;
      double norm = 0.0;
      for (std::size_t l = 0; l < k; ++l) norm += std::norm(omega[l]) / static_cast<double>(classes->sizes[l]);
      const double degree = std::round(std::sqrt(static_cast<double>(n) / norm));
      if (degree < 1.0) {
        ok = false;
        break;
      }
      std::vector<Complex> row(k);
      for (std::size_t l = 0; l < k; ++l) row[l] = degree * omega[l] / static_cast<double>(classes->sizes[l]);
      row[0] = degree;
      rows.push_back(std::move(row));
    }
    if (!ok) continue;
    sort_rows(rows);
    try {
      return std::make_shared<const CharacterTable>(classes, std::move(rows), options.seed);
    } catch (const ValidationError&) {
      continue;
    }
  }
  throw ValidationError("could not separate the characters of " + g.name() + " after " +
                        std::to_string(options.max_attempts) + " attempts");
}

int fs_indicator(const CharacterTable& table, std::size_t chi, double tolerance) {
  const auto& cls = table.classes();
  Complex s = 0;
  for (std::size_t c = 0; c < cls.count(); ++c)
    s += static_cast<double>(cls.sizes[c]) * table.value(chi, cls.power_class[c]);
  s /= static_cast<double>(table.group().order());
  const double r = std::round(s.real());
  if (std::abs(s - Complex(r, 0.0)) > tolerance || r < -1.0 || r > 1.0)
    throw ValidationError("Frobenius-Schur indicator of character " + std::to_string(chi) + " is not in {-1,0,1}");
  return static_cast<int>(r);
}

bool is_real_character(const CharacterTable& table, std::size_t chi) {
  for (const auto& z : table.row(chi))
    if (std::abs(z.imag()) > kTableTolerance) return false;
  return true;
}

std::size_t trivial_character(const CharacterTable& table) {
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    bool all_one = true;
    for (const auto& z : table.row(chi)) all_one = all_one && std::abs(z - Complex(1.0, 0.0)) <= kTableTolerance;
    if (all_one) return chi;
  }
  throw ValidationError("table has no trivial character");
}

}  // namespace wordmap
