#include "wordmap/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordmap/builtin.hpp"
#include "wordmap/character_table.hpp"
#include "wordmap/errors.hpp"
#include "wordmap/fourier.hpp"
#include "wordmap/letters.hpp"
#include "wordmap/reduction.hpp"
#include "wordmap/word.hpp"

namespace wordmap {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> words;
  std::string alphabet;
  bool alphabet_given = false;
  std::string group;
  std::string group_file;
  std::string table_file;
  std::string format = "human";
  std::string order = "squares";
  bool verify = false;
  std::uint64_t budget = kDefaultBudget;
  double tol = kCoefficientTolerance;
  std::uint64_t seed = kDefaultTableSeed;
  unsigned threads = 0;
};

// ---- number formatting -----------------------------------------------------

// Values go through a fixed number of decimals so that structured output
// does not depend on summation order.
double stable(double x, int digits = 9) {
  const double scale = std::pow(10.0, digits);
  double r = std::round(x * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

std::string fmt_real(double x, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << stable(x, digits);
  std::string t = s.str();
  if (t.find('.') != std::string::npos) {
    while (t.back() == '0') t.pop_back();
    if (t.back() == '.') t.pop_back();
  }
  return t == "-0" ? "0" : t;
}

std::string fmt_complex(Complex c, double tol) {
  if (std::abs(c.imag()) <= tol) return fmt_real(c.real());
  std::string im = fmt_real(std::abs(c.imag()));
  std::string re = std::abs(c.real()) <= tol ? "" : fmt_real(c.real());
  const char* sign = c.imag() < 0 ? "-" : (re.empty() ? "" : "+");
  return re + sign + (im == "1" ? "" : im) + "i";
}

json json_complex(Complex c) { return json{{"re", stable(c.real())}, {"im", stable(c.imag())}}; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = " ") {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

// Left-aligned text table.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

// ---- inputs ----------------------------------------------------------------

Word read_word(const RunConfig& cfg, const std::string& text) {
  if (cfg.alphabet_given) return parse_word(text, Alphabet::parse_list(cfg.alphabet));
  return parse_word(text);
}

ReductionOrder read_order(const RunConfig& cfg) {
  return cfg.order == "dismissibles" ? ReductionOrder::dismissibles_first : ReductionOrder::squares_first;
}

struct GroupContext {
  GroupPtr group;
  TablePtr table;
  std::string table_source;  // builtin | file | computed
};

GroupContext load_context(const RunConfig& cfg) {
  GroupContext ctx;
  if (!cfg.group.empty() && !cfg.group_file.empty())
    throw UsageError("--group and --group-file are mutually exclusive");
  if (!cfg.group_file.empty()) {
    ctx.group = load_group_file(cfg.group_file);
  } else if (!cfg.group.empty()) {
    ctx.group = builtin_group(cfg.group);
  } else {
    throw UsageError("this command needs --group NAME or --group-file PATH");
  }
  if (!cfg.table_file.empty()) {
    ctx.table = load_character_table(ctx.group, cfg.table_file);
    ctx.table_source = "file";
  } else if (cfg.group_file.empty()) {
    ctx.table = builtin_table(cfg.group);
    ctx.table_source = "builtin";
  } else {
    ComputeOptions opts;
    opts.seed = cfg.seed;
    ctx.table = compute_character_table(ctx.group, opts);
    ctx.table_source = "computed";
  }
  return ctx;
}

EnumerationOptions enumeration(const RunConfig& cfg) { return EnumerationOptions{cfg.budget, cfg.threads}; }

// Closed form of a reduction whose residual sum has no variables: each
// (necessarily empty) residual word contributes a factor chi(1).
std::optional<Prefactor> closed_form(const ReducedForm& rf) {
  if (rf.trivial_only || rf.residual_alphabet.rank() != 0) return std::nullopt;
  Prefactor p = rf.prefactor;
  p.degree_exponent -= static_cast<int>(rf.residual_words.size());
  return p;
}

// ---- classify --------------------------------------------------------------

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  json docs = json::array();
  for (const auto& text : cfg.words) {
    const Word w = read_word(cfg, text);
    const OccurrenceProfile prof = classify(w);
    if (cfg.format == "json") {
      json j;
      j["input"] = text;
      j["word"] = prof.word.to_string();
      j["reduced_input"] = prof.reduced_input;
      j["alphabet"] = w.alphabet().names();
      j["generators"] = json::array();
      for (std::size_t g = 0; g < w.alphabet().rank(); ++g) {
        const auto& p = prof[g];
        j["generators"].push_back(json{{"name", w.alphabet().name(g)},
                                       {"positive", p.positive},
                                       {"negative", p.negative},
                                       {"positions", p.positions},
                                       {"class", std::string(to_string(p.kind))}});
      }
      docs.push_back(std::move(j));
      continue;
    }
    out << "word: " << prof.word.to_string() << (prof.reduced_input ? "" : "  (freely reduced)") << '\n';
    out << "alphabet: " << join(w.alphabet().names(), ",") << '\n';
    std::vector<std::vector<std::string>> rows{{"generator", "+", "-", "positions", "class"}};
    for (std::size_t g = 0; g < w.alphabet().rank(); ++g) {
      const auto& p = prof[g];
      rows.push_back({w.alphabet().name(g), std::to_string(p.positive), std::to_string(p.negative),
                      p.positions.empty() ? "-" : join_numbers(p.positions, ","), std::string(to_string(p.kind))});
    }
    print_table(out, rows);
  }
  if (cfg.format == "json") out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kExitOk;
}

// ---- reduce ----------------------------------------------------------------

void print_reduced(std::ostream& out, const Word& w, const ReducedForm& rf) {
  out << "word: " << w.to_string() << '\n';
  out << "alphabet: " << join(rf.ambient.names(), ",") << '\n';
  out << "prefactor: " << to_string(rf.prefactor) << '\n';
  if (rf.trivial_only) {
    out << "trivial only: N_w^chi = " << to_string(Prefactor{rf.prefactor.group_exponent, 0, 0})
        << " for the trivial character, 0 otherwise\n";
  } else {
    out << "summation rank: " << rf.residual_alphabet.rank();
    if (rf.residual_alphabet.rank()) out << " (" << join(rf.residual_alphabet.names(), ",") << ")";
    out << '\n';
    for (std::size_t i = 0; i < rf.residual_words.size(); ++i)
      out << "W" << i + 1 << " = " << rf.residual_words[i].to_string() << '\n';
    if (auto cf = closed_form(rf)) out << "closed form: " << to_string(*cf) << '\n';
  }
  if (rf.split) {
    const auto& s = *rf.split;
    out << "split: n=" << s.n << " r=" << s.r() << '\n';
    std::vector<std::string> segs, slots, cycles;
    for (std::size_t k = 0; k < s.segments.size(); ++k)
      segs.push_back("w" + std::to_string(k) + "=" + s.segments[k].to_string());
    for (const auto& z : s.slots) slots.push_back(Word(s.shifted.alphabet(), {z}).to_string());
    for (const auto& c : s.cycles) cycles.push_back("(" + join_numbers(c) + ")");
    out << "  shifted: " << s.shifted.to_string() << '\n';
    out << "  segments: " << join(segs, " ") << '\n';
    out << "  slots: " << join(slots, " ") << '\n';
    out << "  tau: " << join_numbers(s.tau) << '\n';
    out << "  sigma: " << join_numbers(s.sigma) << '\n';
    out << "  cycles: " << join(cycles, "") << '\n';
  }
  out << "trace:\n";
  for (const auto& step : rf.trace) {
    std::vector<std::string> res;
    for (const auto& W : step.result) res.push_back(W.to_string());
    out << "  " << to_string(step.rule);
    if (!step.generators.empty()) out << ' ' << join(step.generators, ",");
    if (step.inverted) out << " (inverted)";
    out << "  delta=(" << step.delta.group_exponent << "," << step.delta.degree_exponent << ","
        << step.delta.fs_exponent << ")  -> " << join(res, " ; ") << '\n';
  }
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  json docs = json::array();
  bool first = true;
  for (const auto& text : cfg.words) {
    const Word w = read_word(cfg, text);
    const ReducedForm rf = normalize(w, read_order(cfg));
    if (cfg.format == "json") {
      json j = to_json(rf);
      j["input"] = text;
      j["word"] = w.to_string();
      if (auto cf = closed_form(rf)) j["closed_form"] = to_string(*cf);
      docs.push_back(std::move(j));
    } else {
      if (!first) out << '\n';
      print_reduced(out, w, rf);
    }
    first = false;
  }
  if (cfg.format == "json") out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kExitOk;
}

// ---- expand ----------------------------------------------------------------

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const GroupContext ctx = load_context(cfg);
  const CharacterTable& table = *ctx.table;
  const std::size_t order = table.group().order();
  json docs = json::array();
  bool all_ok = true, first = true;

  for (const auto& text : cfg.words) {
    const Word w = read_word(cfg, text);
    const ReducedForm rf = normalize(w, read_order(cfg));
    const auto coeffs = coefficient_formula_all(rf, table, enumeration(cfg));
    std::optional<FourierExpansion> oracle;
    if (cfg.verify) oracle = project(distribution(w, ctx.table->classes_ptr(), enumeration(cfg)), ctx.table);

    double max_delta = 0;
    json rows = json::array();
    std::vector<std::vector<std::string>> human{{"chi", "chi(1)", "FS", "real", "N_w^chi", "exact"}};
    if (oracle) {
      human[0].push_back("oracle");
      human[0].push_back("delta");
    }
    for (std::size_t chi = 0; chi < table.size(); ++chi) {
      const int fs = fs_indicator(table, chi);
      const auto exact = rational_annotation(coeffs[chi], annotation_denominator(rf, table, chi), cfg.tol);
      json row{{"index", chi},
               {"degree", table.degree(chi)},
               {"fs", fs},
               {"real", is_real_character(table, chi)},
               {"coefficient", json_complex(coeffs[chi])}};
      if (exact) row["exact"] = exact->to_string();
      std::vector<std::string> line{std::to_string(chi), std::to_string(table.degree(chi)), std::to_string(fs),
                                    is_real_character(table, chi) ? "yes" : "no", fmt_complex(coeffs[chi], cfg.tol),
                                    exact ? exact->to_string() : "-"};
      if (oracle) {
        const Complex o = oracle->coefficients[chi];
        const double delta = std::abs(o - coeffs[chi]);
        max_delta = std::max(max_delta, delta);
        row["oracle"] = json_complex(o);
        row["delta"] = stable(delta);
        line.push_back(fmt_complex(o, cfg.tol));
        line.push_back(delta <= cfg.tol ? "ok" : fmt_real(delta, 9));
      }
      rows.push_back(std::move(row));
      human.push_back(std::move(line));
    }
    const bool ok = !oracle || max_delta <= cfg.tol;
    all_ok = all_ok && ok;

    if (cfg.format == "json") {
      json j{{"input", text},
             {"word", w.to_string()},
             {"alphabet", w.alphabet().names()},
             {"group", table.group().name()},
             {"order", order},
             {"table", ctx.table_source},
             {"prefactor", to_string(rf.prefactor)},
             {"trivial_only", rf.trivial_only},
             {"summation_rank", rf.summation_rank()},
             {"closed_form", closed_form(rf) ? json(to_string(*closed_form(rf))) : json(nullptr)},
             {"formula_evaluations", formula_evaluations(rf, order)},
             {"characters", std::move(rows)}};
      if (oracle) {
        j["oracle_evaluations"] = substitution_count(order, w.alphabet().rank(), cfg.budget);
        j["max_delta"] = stable(max_delta);
        j["verified"] = ok;
      }
      docs.push_back(std::move(j));
    } else {
      if (!first) out << '\n';
      out << "word: " << w.to_string() << "  over "
          << (w.alphabet().rank() ? join(w.alphabet().names(), ",") : "the empty alphabet") << '\n';
      out << "group: " << table.group().name() << " (order " << order << ", " << ctx.table_source << " table)\n";
      out << "prefactor: " << to_string(rf.prefactor) << ", summation rank " << rf.summation_rank();
      if (auto cf = closed_form(rf)) out << ", closed form " << to_string(*cf);
      out << '\n';
      print_table(out, human);
      if (oracle) out << (ok ? "verified" : "MISMATCH") << ": max delta " << fmt_real(max_delta, 9) << '\n';
    }
    first = false;
  }
  if (cfg.format == "json") out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return all_ok ? kExitOk : kExitValidation;
}

// ---- bench -----------------------------------------------------------------

struct BenchRow {
  std::string word, group, method, status = "ok";
  std::uint64_t evaluations = 0;
  double seconds = 0;
  std::optional<double> max_delta;
};

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  const GroupContext ctx = load_context(cfg);
  const CharacterTable& table = *ctx.table;
  const std::size_t order = table.group().order();
  std::vector<BenchRow> rows;

  for (const auto& text : cfg.words) {
    const Word w = read_word(cfg, text);
    const std::string name = w.to_string();

    BenchRow o;
    o.word = name;
    o.group = table.group().name();
    o.method = "oracle";
    std::optional<FourierExpansion> oracle;
    try {
      o.evaluations = substitution_count(order, w.alphabet().rank(), cfg.budget);
      o.seconds = timed([&] { oracle = project(distribution(w, table.classes_ptr(), enumeration(cfg)), ctx.table); });
    } catch (const BudgetError&) {
      o.status = "over-budget";
    }
    rows.push_back(o);

    for (auto [method, ord] : {std::pair{"squares_first", ReductionOrder::squares_first},
                               std::pair{"dismissibles_first", ReductionOrder::dismissibles_first}}) {
      BenchRow b;
      b.word = name;
      b.group = table.group().name();
      b.method = method;
      try {
        std::vector<Complex> coeffs;
        b.seconds = timed([&] {
          const ReducedForm rf = normalize(w, ord);
          b.evaluations = rf.summation_rank() == 0 ? 0 : substitution_count(order, rf.summation_rank(), cfg.budget);
          coeffs = coefficient_formula_all(rf, table, enumeration(cfg));
        });
        if (oracle) {
          double d = 0;
          for (std::size_t chi = 0; chi < coeffs.size(); ++chi) d = std::max(d, std::abs(coeffs[chi] - oracle->coefficients[chi]));
          b.max_delta = d;
        }
      } catch (const BudgetError&) {
        b.status = "over-budget";
      }
      rows.push_back(b);
    }
  }

  if (cfg.format == "json") {
    // Wall times are left out so that the document is reproducible.
    json docs = json::array();
    for (const auto& r : rows) {
      json j{{"word", r.word}, {"group", r.group}, {"method", r.method}, {"status", r.status}, {"evaluations", r.evaluations}};
      if (r.max_delta) j["max_delta"] = stable(*r.max_delta);
      docs.push_back(std::move(j));
    }
    out << docs.dump(2) << '\n';
  } else {
    out << "word,group,method,status,evaluations,seconds,max_delta\n";
    for (const auto& r : rows) {
      std::ostringstream secs;
      secs << std::scientific << std::setprecision(3) << r.seconds;
      out << '"' << r.word << "\"," << r.group << ',' << r.method << ',' << r.status << ',' << r.evaluations << ','
          << secs.str() << ',' << (r.max_delta ? fmt_real(*r.max_delta, 9) : "") << '\n';
    }
  }
  return kExitOk;
}

// ---- genus -----------------------------------------------------------------

int cmd_genus(const RunConfig& cfg, std::ostream& out) {
  json docs = json::array();
  for (const auto& text : cfg.words) {
    const Word w = read_word(cfg, text);
    json j{{"input", text}, {"word", w.to_string()}};
    try {
      const GenusResult g = genus(w);
      j["admissible"] = true;
      j["n"] = g.n;
      j["r"] = g.r;
      j["genus"] = g.genus;
    } catch (const WordShapeError& e) {
      j["admissible"] = false;
      j["reason"] = e.what();
    }
    if (cfg.format == "json") {
      docs.push_back(std::move(j));
    } else if (j["admissible"].get<bool>()) {
      out << j["word"].get<std::string>() << ": n=" << j["n"] << " r=" << j["r"] << " genus=" << j["genus"] << '\n';
    } else {
      out << j["word"].get<std::string>() << ": not admissible (" << j["reason"].get<std::string>() << ")\n";
    }
  }
  if (cfg.format == "json") out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kExitOk;
}

// ---- option wiring ---------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_group) {
  // Words are collected from the leftover arguments: CLI11 would otherwise
  // read "[x,y]" as a bracketed list of two values.
  sub->allow_extras();
  sub->positionals_at_end(false);
  sub->footer("Arguments: one or more words, e.g. \"[x,y]\", \"{x,y}\" or \"x^2*y^-1\".");
  sub->add_option("--alphabet", cfg.alphabet, "Ambient generators, comma separated (default: letters of the word)")
      ->each([&cfg](const std::string&) { cfg.alphabet_given = true; });
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  if (!needs_group) return;
  sub->add_option("--group", cfg.group, "Built-in group: Z1..Z12, S3, S4, D4, D5, Q8, A4");
  sub->add_option("--group-file", cfg.group_file, "Group multiplication-table file");
  sub->add_option("--table-file", cfg.table_file, "Character-table file");
  sub->add_option("--budget", cfg.budget, "Maximum substitutions per enumeration")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Seed for computing a character table");
  sub->add_option("--threads", cfg.threads, "Enumeration threads (0: all cores)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fourier expansions of word maps on finite groups", "wordmap"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "Letter classes of each generator");
  add_common(classify_cmd, cfg, false);

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduction trace, split data and prefactor");
  add_common(reduce_cmd, cfg, false);
  reduce_cmd->add_option("--order", cfg.order, "Reduction order")->check(CLI::IsMember({"squares", "dismissibles"}));

  auto* expand_cmd = app.add_subcommand("expand", "Fourier coefficients of N_w");
  add_common(expand_cmd, cfg, true);
  expand_cmd->add_flag("--verify", cfg.verify, "Compare with brute-force enumeration");
  expand_cmd->add_option("--tol", cfg.tol, "Tolerance for --verify and exact annotations")->check(CLI::PositiveNumber);
  expand_cmd->add_option("--order", cfg.order, "Reduction order")->check(CLI::IsMember({"squares", "dismissibles"}));

  auto* bench_cmd = app.add_subcommand("bench", "Evaluation counts and timings, oracle vs formulas (CSV)");
  add_common(bench_cmd, cfg, true);

  auto* genus_cmd = app.add_subcommand("genus", "n, r and genus of an admissible word");
  add_common(genus_cmd, cfg, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    for (auto& arg : sub->remaining()) {
      if (arg.size() > 1 && arg[0] == '-') {
        err << "error: unknown option " << arg << "\nRun with --help for more information.\n";
        return kExitUsage;
      }
      cfg.words.push_back(arg);
    }
  }
  if (cfg.words.empty()) {
    err << "error: a word is required\nRun with --help for more information.\n";
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*reduce_cmd) return cmd_reduce(cfg, out);
    if (*expand_cmd) return cmd_expand(cfg, out);
    if (*bench_cmd) return cmd_bench(cfg, out);
    if (*genus_cmd) return cmd_genus(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AlphabetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const WordShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wordmap
