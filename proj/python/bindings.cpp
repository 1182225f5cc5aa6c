#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "wordmap/builtin.hpp"
#include "wordmap/character_table.hpp"
#include "wordmap/cli.hpp"
#include "wordmap/errors.hpp"
#include "wordmap/fourier.hpp"
#include "wordmap/group.hpp"
#include "wordmap/letters.hpp"
#include "wordmap/reduction.hpp"
#include "wordmap/word.hpp"

namespace py = pybind11;
using namespace wordmap;

namespace {

std::optional<Alphabet> to_alphabet(const py::object& alphabet) {
  if (alphabet.is_none()) return std::nullopt;
  if (py::isinstance<py::str>(alphabet)) return Alphabet::parse_list(alphabet.cast<std::string>());
  return Alphabet(alphabet.cast<std::vector<std::string>>());
}

ReductionOrder to_order(const std::string& order) {
  if (order == "squares") return ReductionOrder::squares_first;
  if (order == "dismissibles") return ReductionOrder::dismissibles_first;
  throw std::invalid_argument("order must be 'squares' or 'dismissibles', got '" + order + "'");
}

// pybind11 holders must be non-const; only const members are ever bound.
using GroupHolder = std::shared_ptr<FiniteGroup>;
using TableHolder = std::shared_ptr<CharacterTable>;
GroupHolder hold(const GroupPtr& g) { return std::const_pointer_cast<FiniteGroup>(g); }
TableHolder hold(const TablePtr& t) { return std::const_pointer_cast<CharacterTable>(t); }

EnumerationOptions enumeration(std::uint64_t budget, unsigned threads) { return {budget, threads}; }

std::vector<std::string> word_strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

py::dict profile_dict(const OccurrenceProfile& p) {
  py::list gens;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    py::dict d;
    d["name"] = p.word.alphabet().name(g);
    d["class"] = std::string(to_string(p[g].kind));
    d["positive"] = p[g].positive;
    d["negative"] = p[g].negative;
    d["positions"] = p[g].positions;
    gens.append(d);
  }
  py::dict out;
  out["word"] = p.word.to_string();
  out["reduced_input"] = p.reduced_input;
  out["generators"] = gens;
  return out;
}

}  // namespace

PYBIND11_MODULE(_wordmap, m) {
  m.doc() = "Word maps on finite groups and their character expansions";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<AlphabetError> alphabet_error(m, "AlphabetError", error.ptr());
  static py::exception<WordShapeError> shape_error(m, "WordShapeError", error.ptr());
  static py::exception<ValidationError> validation_error(m, "ValidationError", error.ptr());
  static py::exception<BudgetError> budget_error(m, "BudgetError", error.ptr());
  // One translator so each C++ class maps to its own Python subclass.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const AlphabetError& e) {
      py::set_error(alphabet_error, e.what());
    } catch (const WordShapeError& e) {
      py::set_error(shape_error, e.what());
    } catch (const ValidationError& e) {
      py::set_error(validation_error, e.what());
    } catch (const BudgetError& e) {
      py::set_error(budget_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("DEFAULT_BUDGET") = kDefaultBudget;
  m.attr("DEFAULT_TABLE_SEED") = kDefaultTableSeed;

  py::class_<Word>(m, "Word")
      .def(py::init([](const std::string& text, const py::object& alphabet) { return parse_word(text, to_alphabet(alphabet)); }),
           py::arg("text"), py::arg("alphabet") = py::none())
      .def_property_readonly("generators", [](const Word& w) { return w.alphabet().names(); })
      .def("__len__", &Word::length)
      .def("__str__", &Word::to_string)
      .def("__repr__", [](const Word& w) { return "Word('" + w.to_string() + "')"; })
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__mul__", [](const Word& a, const Word& b) { return a * b; })
      .def("free_reduce", [](const Word& w) { return free_reduce(w); })
      .def("inverse", [](const Word& w) { return invert(w); })
      .def("cyclic_shift", [](const Word& w, std::int64_t k) { return cyclic_shift(w, k); }, py::arg("k"))
      .def("over", [](const Word& w, const py::object& alphabet) { return w.over(*to_alphabet(alphabet)); });

  py::class_<FiniteGroup, GroupHolder>(m, "Group")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("element_names", &FiniteGroup::element_names)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("__repr__", [](const FiniteGroup& g) { return "Group('" + g.name() + "', order=" + std::to_string(g.order()) + ")"; })
      .def("evaluate", [](const GroupHolder& g, const Word& w, const std::vector<Element>& assignment) {
        return evaluate(w, assignment, *g);
      }, py::arg("word"), py::arg("assignment"))
      .def("class_sizes", [](const GroupHolder& g) { return conjugacy_classes(g)->sizes; });

  py::class_<CharacterTable, TableHolder>(m, "CharacterTable")
      .def_property_readonly("group", [](const CharacterTable& t) { return hold(t.group_ptr()); })
      .def_property_readonly("degrees", &CharacterTable::degrees)
      .def_property_readonly("rows", &CharacterTable::rows)
      .def_property_readonly("class_sizes", [](const CharacterTable& t) { return t.classes().sizes; })
      .def_property_readonly("seed", &CharacterTable::seed)
      .def("__len__", &CharacterTable::size)
      .def("fs_indicator", [](const CharacterTable& t, std::size_t chi) { return fs_indicator(t, chi); })
      .def("is_real", [](const CharacterTable& t, std::size_t chi) { return is_real_character(t, chi); })
      .def("dumps", [](const CharacterTable& t) {
        std::ostringstream s;
        write_character_table(s, t);
        return s.str();
      });

  m.def("builtin_group_names", &builtin_group_names);
  m.def("builtin_group", [](const std::string& name) { return hold(builtin_group(name)); }, py::arg("name"));
  m.def("builtin_table", [](const std::string& name) { return hold(builtin_table(name)); }, py::arg("name"));
  m.def("load_group", [](const std::string& path) { return hold(load_group_file(path)); }, py::arg("path"));
  m.def("load_table", [](const GroupHolder& g, const std::string& path) { return hold(load_character_table(g, path)); },
        py::arg("group"), py::arg("path"));
  m.def("group_from_generators", [](const std::string& name, const std::vector<std::string>& cycles, std::size_t degree) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
    return hold(group_from_generators(name, gens));
  }, py::arg("name"), py::arg("cycles"), py::arg("degree"));
  m.def("compute_table", [](const GroupHolder& g, std::uint64_t seed) {
    ComputeOptions o;
    o.seed = seed;
    return hold(compute_character_table(g, o));
  }, py::arg("group"), py::arg("seed") = kDefaultTableSeed);

  m.def("classify", [](const Word& w) { return profile_dict(classify(w)); }, py::arg("word"));
  m.def("genus", [](const Word& w) {
    const GenusResult g = genus(w);
    py::dict d;
    d["n"] = g.n;
    d["r"] = g.r;
    d["genus"] = g.genus;
    return d;
  }, py::arg("word"));

  py::class_<ReducedForm>(m, "ReducedForm")
      .def_property_readonly("prefactor", [](const ReducedForm& rf) {
        return py::make_tuple(rf.prefactor.group_exponent, rf.prefactor.degree_exponent, rf.prefactor.fs_exponent);
      })
      .def_property_readonly("prefactor_text", [](const ReducedForm& rf) { return to_string(rf.prefactor); })
      .def_readonly("trivial_only", &ReducedForm::trivial_only)
      .def_property_readonly("residual_generators", [](const ReducedForm& rf) { return rf.residual_alphabet.names(); })
      .def_property_readonly("residual_words", [](const ReducedForm& rf) { return word_strings(rf.residual_words); })
      .def_property_readonly("summation_rank", &ReducedForm::summation_rank)
      .def("to_json", [](const ReducedForm& rf) { return to_json(rf).dump(); });

  m.def("normalize", [](const Word& w, const std::string& order) { return normalize(w, to_order(order)); },
        py::arg("word"), py::arg("order") = "squares");

  m.def("distribution", [](const Word& w, const GroupHolder& g, std::uint64_t budget, unsigned threads) {
    const ClassFunction f = distribution(w, g, enumeration(budget, threads));
    return *f.counts;
  }, py::arg("word"), py::arg("group"), py::arg("budget") = kDefaultBudget, py::arg("threads") = 0,
        "Number of substitutions landing on each element of a class, per conjugacy class.");

  m.def("oracle_coefficients", [](const Word& w, const TableHolder& t, std::uint64_t budget, unsigned threads) {
    return project(distribution(w, t->classes_ptr(), enumeration(budget, threads)), t).coefficients;
  }, py::arg("word"), py::arg("table"), py::arg("budget") = kDefaultBudget, py::arg("threads") = 0);

  m.def("expand", [](const Word& w, const TableHolder& t, const std::string& order, std::uint64_t budget, unsigned threads) {
    return coefficient_formula_all(normalize(w, to_order(order)), *t, enumeration(budget, threads));
  }, py::arg("word"), py::arg("table"), py::arg("order") = "squares", py::arg("budget") = kDefaultBudget,
        py::arg("threads") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
