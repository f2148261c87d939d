#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "koszul/cohomology.hpp"
#include "koszul/errors.hpp"
#include "koszul/kappa.hpp"
#include "koszul/morphism.hpp"
#include "koszul/parse.hpp"
#include "koszul/verify.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

std::vector<Degree> to_degrees(const std::vector<std::int64_t>& values) {
  return {values.begin(), values.end()};
}

std::vector<std::int64_t> from_degrees(const std::vector<Degree>& degrees) {
  std::vector<std::int64_t> out;
  for (auto d : degrees) {
    out.push_back(d.value);
  }
  return out;
}

ModuleStructure module_by_name(const std::string& name) {
  if (name == "one") {
    return ModuleStructure::trivial();
  }
  if (name == "sgn") {
    return ModuleStructure::signature();
  }
  throw DomainError("module structure must be 'one' or 'sgn', got '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Koszul sign map: C++ core";

  auto value_error = py::handle(PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", value_error);
  py::register_exception<DimensionError>(m, "DimensionError", value_error);
  py::register_exception<DomainError>(m, "DomainError", value_error);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::vector<std::size_t>& one_line) {
             return Permutation::from_one_based(one_line);
           }),
           py::arg("one_line"), "From 1-based images sigma(1), ..., sigma(n).")
      .def_static("identity", [](std::size_t n) { return Permutation(n); })
      .def_static("adjacent", &Permutation::adjacent, py::arg("n"), py::arg("i"))
      .def_static("from_lex_rank", &Permutation::from_lex_rank)
      .def_property_readonly("n", &Permutation::size)
      .def("one_line", &Permutation::one_based)
      .def("inverse", &Permutation::inverse)
      .def("inversion_count", &Permutation::inversion_count)
      .def("signature", [](const Permutation& p) { return p.signature().value(); })
      .def("lex_rank", &Permutation::lex_rank)
      .def("cycles", [](const Permutation& p) { return format_cycles(p); })
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const Permutation& p) { return p.lex_rank() * 31 + p.size(); })
      .def("__repr__", [](const Permutation& p) { return "Permutation(" + format_one_line(p) + ")"; })
      .def("__str__", [](const Permutation& p) { return format_one_line(p); });

  py::class_<GradedSequence>(m, "GradedSequence")
      .def(py::init([](const std::vector<std::int64_t>& degrees,
                       std::optional<std::vector<std::string>> labels) {
             return labels ? GradedSequence(*labels, to_degrees(degrees))
                           : GradedSequence(to_degrees(degrees));
           }),
           py::arg("degrees"), py::arg("labels") = py::none())
      .def_property_readonly("degrees", [](const GradedSequence& g) { return from_degrees(g.degrees()); })
      .def_property_readonly("labels", &GradedSequence::labels)
      .def("__len__", &GradedSequence::size)
      .def(py::self == py::self)
      .def("__repr__", [](const GradedSequence& g) {
        std::string out = "GradedSequence(";
        for (std::size_t i = 0; i < g.size(); ++i) {
          out += (i ? ", " : "") + g[i].label + ":" + std::to_string(g[i].degree.value);
        }
        return out + ")";
      });

  py::class_<Word>(m, "Word")
      .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, int>>& letters) {
             std::vector<Generator> gens;
             for (auto [i, e] : letters) {
               gens.push_back({i, e});
             }
             return Word(n, std::move(gens));
           }),
           py::arg("n"), py::arg("letters"), "Letters are (index, exponent) pairs, index 1-based.")
      .def_property_readonly("n", &Word::ambient_n)
      .def_property_readonly("letters", [](const Word& w) {
        std::vector<std::pair<std::size_t, int>> out;
        for (const auto& t : w.letters()) {
          out.emplace_back(t.index, t.exponent);
        }
        return out;
      })
      .def("__len__", &Word::length)
      .def("is_reduced", &Word::is_reduced)
      .def("inverse", &Word::inverse)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", [](const Word& w) { return format_word(w); })
      .def("__repr__", [](const Word& w) { return "Word('" + format_word(w) + "')"; });

  m.def("act", [](const Permutation& s, const GradedSequence& g) { return act(s, g); });
  m.def("act", [](const Permutation& s, const std::vector<std::int64_t>& d) {
    return from_degrees(act(s, to_degrees(d)));
  });

  m.def("kappa", [](const Permutation& s, const GradedSequence& g) { return kappa(s, g).value(); });
  m.def("kappa", [](const Permutation& s, const std::vector<std::int64_t>& d) {
    return kappa(s, to_degrees(d)).value();
  }, py::arg("sigma"), py::arg("degrees"));
  m.def("kappa_exponent", [](const Permutation& s, const std::vector<std::int64_t>& d) {
    return kappa_exponent(s, to_degrees(d));
  });
  m.def("kappa_monomials", [](const Permutation& s) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [a, b] : kappa_monomials(s)) {
      out.emplace_back(a + 1, b + 1);
    }
    return out;
  }, "Monomials z_a z_b of the exponent, 1-based.");
  m.def("decompose_adjacent", &decompose_adjacent);
  m.def("kappa_bruteforce_minword", [](const Permutation& s, const std::vector<std::int64_t>& d) {
    return kappa_bruteforce_minword(s, GradedSequence(to_degrees(d))).value();
  });

  m.def("reduce", &reduce);
  m.def("project", &project);
  m.def("relators", &relators);
  m.def("kappa_word", [](const Word& w, const std::vector<std::int64_t>& d) {
    const auto degrees = to_degrees(d);
    return kappa_word(w, std::span<const Degree>(degrees)).value();
  });

  m.def("is_morphism", [](const std::vector<std::int64_t>& d) { return is_morphism(to_degrees(d)); });
  m.def("is_constant_one", [](const std::vector<std::int64_t>& d) { return is_constant_one(to_degrees(d)); });
  m.def("morphism_bruteforce", [](const std::vector<std::int64_t>& d, std::size_t bound) {
    return morphism_bruteforce(to_degrees(d), bound);
  }, py::arg("degrees"), py::arg("bound") = kExhaustiveBound);

  py::class_<TwoCochain>(m, "TwoCochain")
      .def_property_readonly("n", &TwoCochain::n)
      .def("at", [](const TwoCochain& c, SymmetricGroup::Rank s, SymmetricGroup::Rank r) {
        return c.at(s, r).value();
      }, "Value at (sigma_rank, rho_rank), lexicographic ranks.")
      .def("__call__", [](const TwoCochain& c, const Permutation& s, const Permutation& r) {
        return c(s, r).value();
      })
      .def(py::self == py::self);

  m.def("build_cf", [](const std::vector<std::int64_t>& d, bool lazy) {
    return build_cf(GradedSequence(to_degrees(d)), lazy ? CochainMode::lazy : CochainMode::dense);
  }, py::arg("degrees"), py::arg("lazy") = false);
  m.def("coboundary2", [](const TwoCochain& c, const std::string& u) {
    const ThreeCochain delta = coboundary2(c, module_by_name(u));
    return py::cpp_function([delta](const Permutation& s, const Permutation& t, const Permutation& r) {
      return delta(s, t, r).value();
    });
  }, py::arg("c"), py::arg("u"), "delta(c) as a callable (sigma, tau, rho) -> +1/-1.");
  m.def("coboundary1_equals_cf", [](const std::vector<std::int64_t>& d, const std::string& u) {
    const TwoCochain c = build_cf(GradedSequence(to_degrees(d)));
    return coboundary1(restrict_to_identity(c), module_by_name(u)) == c;
  }, "Whether delta(c_f(-, e)) == c_f for the structure u.");
  m.def("module_from_degrees", [](const std::vector<std::int64_t>& d) -> std::optional<std::string> {
    const auto u = module_from_degrees(to_degrees(d));
    if (!u) {
      return std::nullopt;
    }
    return u->name();
  });
  m.def("is_cocycle", [](const std::vector<std::int64_t>& d, std::optional<std::string> u) {
    const GradedSequence f(to_degrees(d));
    if (u) {
      return is_cocycle(f, module_by_name(*u));
    }
    return is_cocycle(f).cocycle;
  }, py::arg("degrees"), py::arg("u") = py::none(),
     "u is 'one', 'sgn' or None (derive from degrees; False when none exists).");

  py::class_<SuiteReport>(m, "SuiteReport")
      .def_property_readonly("ok", &SuiteReport::ok)
      .def_readonly("seed", &SuiteReport::seed)
      .def_property_readonly("checks", [](const SuiteReport& r) {
        py::list out;
        for (const auto& c : r.checks) {
          py::dict item;
          item["name"] = c.name;
          item["population"] = c.population;
          item["passed"] = c.passed;
          item["failed"] = c.failed;
          item["first_counterexample"] = c.first_counterexample;
          out.append(item);
        }
        return out;
      })
      .def("to_text", &SuiteReport::to_text)
      .def("to_json", &SuiteReport::to_json);
  m.def("run_suite", &run_suite, py::arg("n_max"), py::arg("degree_samples") = 100,
        py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("parse_degrees", [](const std::string& text) { return from_degrees(parse_degrees(text)); });
  m.def("parse_perm", &parse_perm, py::arg("text"), py::arg("n") = 0);
  m.def("parse_word", &parse_word, py::arg("text"), py::arg("n"));
  m.def("format_degrees", [](const std::vector<std::int64_t>& d) { return format_degrees(to_degrees(d)); });
  m.def("format_one_line", &format_one_line);
  m.def("format_cycles", &format_cycles);
  m.def("format_word", &format_word);
}
