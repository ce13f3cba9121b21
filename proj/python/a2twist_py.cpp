#include "a2twist/driver.hpp"
#include "a2twist/envelope.hpp"
#include "a2twist/principal.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace a2twist;

namespace {

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.get_str());
}

py::tuple gaussian(const GaussianRational& g) { return py::make_tuple(fraction(g.re()), fraction(g.im())); }

ModeGen parse_gen(const std::pair<std::string, long>& g) {
  if (g.first == "u") return ModeGen::U(QuarterInt(g.second));
  if (g.first == "z") return ModeGen::Z(QuarterInt(g.second));
  throw py::value_error("generator label must be 'u' or 'z'");
}

std::vector<ModeGen> parse_word(const std::vector<std::pair<std::string, long>>& w) {
  std::vector<ModeGen> out;
  for (const auto& g : w) out.push_back(parse_gen(g));
  return out;
}

// {monomial: (re, im)} with monomials as (z quarters, u quarters).
py::dict export_element(const EnvElement& e) {
  py::dict d;
  for (const auto& [m, c] : e.terms()) {
    std::vector<long> z, u;
    for (auto q : m.zpart) z.push_back(q.q);
    for (auto q : m.upart) u.push_back(q.q);
    d[py::make_tuple(py::tuple(py::cast(z)), py::tuple(py::cast(u)))] = gaussian(c);
  }
  return d;
}

LatticeVector lv(const std::pair<long, long>& p) { return {p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_a2twist, m) {
  m.doc() = "Exact computations for the principal subspace of the twisted A2 level-one module";
  m.attr("__version__") = kToolVersion;

  m.def("partition_oracle", &partition_oracle, py::arg("m"), py::arg("n"),
        "Partitions of n into m distinct odd parts.");

  m.def(
      "graded_dimension",
      [](long cutoff, unsigned parallelism) {
        if (cutoff < 0) throw py::value_error("cutoff must be nonnegative");
        py::gil_scoped_release release;
        const FockSpace fs(cutoff);
        return graded_dimension(build_W(fs, cutoff, parallelism), cutoff).entries;
      },
      py::arg("cutoff"), py::arg("parallelism") = 1, "{(charge, qweight): dim} up to the cutoff.");

  m.def(
      "dims_json",
      [](long cutoff, unsigned parallelism) {
        py::gil_scoped_release release;
        return run_dims(cutoff, parallelism).dump();
      },
      py::arg("cutoff"), py::arg("parallelism") = 1);

  m.def(
      "verify_json",
      [](std::vector<std::string> suites, long cutoff, long presentation_cutoff, long exactness_cutoff,
         long relations_cutoff, long mode_bound, long t_max_quarters, long shift_cutoff, unsigned parallelism) {
        RunConfig cfg;
        cfg.suites = std::move(suites);
        cfg.cutoff = cutoff;
        cfg.presentation_cutoff = presentation_cutoff;
        cfg.exactness_cutoff = exactness_cutoff;
        cfg.relations_cutoff = relations_cutoff;
        cfg.mode_bound = mode_bound;
        cfg.t_max_quarters = t_max_quarters;
        cfg.shift_cutoff = shift_cutoff;
        cfg.parallelism = parallelism;
        py::gil_scoped_release release;
        return run_verify(cfg).dump();
      },
      py::arg("suites"), py::arg("cutoff"), py::arg("presentation_cutoff"), py::arg("exactness_cutoff"),
      py::arg("relations_cutoff"), py::arg("mode_bound"), py::arg("t_max_quarters"), py::arg("shift_cutoff"),
      py::arg("parallelism"));

  m.def("commutator_C", [](std::pair<long, long> a, std::pair<long, long> b) {
    return gaussian(TwistData::a2().commutator_C(lv(a), lv(b)));
  });
  m.def("cocycle_epsC", [](std::pair<long, long> a, std::pair<long, long> b) {
    return gaussian(TwistData::a2().cocycle_epsC(lv(a), lv(b)));
  });
  m.def("sigma", [](std::pair<long, long> a) { return gaussian(TwistData::a2().sigma(lv(a))); });

  m.def(
      "u_bracket",
      [](long a, long b) { return gaussian(u_bracket_coeff(QuarterInt(a), QuarterInt(b))); },
      py::arg("a_quarters"), py::arg("b_quarters"), "c with [u(a), u(b)] = c z(a+b).");
  m.def("normal_order", [](const std::vector<std::pair<std::string, long>>& w) {
    return export_element(normal_order(parse_word(w)));
  });
  m.def("tau_shift", [](const std::vector<std::pair<std::string, long>>& w) {
    return export_element(tau_shift(normal_order(parse_word(w))));
  });
  m.def("psi", [](const std::vector<std::pair<std::string, long>>& w) {
    return export_element(psi_map(normal_order(parse_word(w))));
  });
  m.def(
      "relation_generator",
      [](const std::string& kind, long t_quarters) {
        RKind k;
        if (kind == "R1") k = RKind::R1;
        else if (kind == "R12") k = RKind::R12;
        else if (kind == "R121") k = RKind::R121;
        else throw py::value_error("kind must be R1, R12 or R121");
        return export_element(make_R0(k, QuarterInt(t_quarters)));
      },
      py::arg("kind"), py::arg("t_quarters"));
  m.def("ideal_rank", [](long charge, long qweight) { return ideal_rank(charge, qweight); });
  m.def("pbw_count", [](long charge, long qweight) { return pbw_monomials(charge, qweight).size(); });

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<CutoffOverflow>(m, "CutoffOverflow", PyExc_OverflowError);
}
