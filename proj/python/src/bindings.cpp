// python bindings for the library's main operations.  Rationals cross the
// boundary as "u/v" strings, residues as arbitrary-size python ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padichg/congruence_lab.hpp"
#include "padichg/curve_series.hpp"
#include "padichg/padic_core.hpp"
#include "padichg/table.hpp"

namespace py = pybind11;
using namespace padichg;

namespace {

py::int_ pyint(const mpz_class& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

std::vector<Rational> rats(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

HGParams params_of(const std::vector<std::string>& a, const std::vector<std::string>& b, long p,
                   const std::string& c) {
  return make_hg_params(rats(a), rats(b), p, parse_rational(c));
}

SeriesKind kind_of(const std::string& k) {
  if (k == "F") return SeriesKind::F;
  if (k == "G") return SeriesKind::G;
  throw std::invalid_argument("kind must be 'F' or 'G'");
}

py::list strs(const QSeries& s) {
  py::list out;
  for (std::size_t k = 0; k < s.terms(); ++k) out.append(rational_str(s[k]));
  return out;
}

py::dict psi_pair(const PsiSeries& s) {
  py::dict out;
  out["const"] = strs(s.a);
  out["psi"] = strs(s.b);
  return out;
}

py::dict report_dict(const CongruenceReport& rep) {
  py::dict out;
  out["suite"] = rep.suite;
  out["family"] = rep.family;
  out["p"] = rep.p;
  out["n"] = rep.n;
  out["passed"] = rep.passed;
  out["failed"] = rep.failed;
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict e;
    e["item"] = c.item;
    e["pass"] = c.pass;
    if (c.observed_val >= kValInfinity)
      e["observed_val"] = py::none();
    else
      e["observed_val"] = c.observed_val;
    e["required_val"] = c.required_val;
    checks.append(e);
  }
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "generalized p-adic hypergeometric functions of logarithmic type";

  py::register_exception<value_undefined_error>(m, "ValueUndefined");
  py::register_exception<precision_error>(m, "PrecisionError");
  py::register_exception<budget_error>(m, "BudgetError");

  py::class_<PAdic>(m, "PAdic")
      .def_static("zero", &PAdic::zero)
      .def_static(
          "from_rational",
          [](const std::string& q, long p, int prec) {
            return PAdic::from_rational(parse_rational(q), p, prec);
          },
          py::arg("q"), py::arg("p"), py::arg("prec"))
      .def_property_readonly("p", &PAdic::prime)
      .def_property_readonly("valuation", &PAdic::valuation)
      .def_property_readonly("prec", &PAdic::prec)
      .def_property_readonly("is_zero", &PAdic::is_zero)
      .def("unit", [](const PAdic& x) { return pyint(x.unit()); })
      .def("residue", [](const PAdic& x, int mprec) { return pyint(x.residue(mprec)); },
           py::arg("prec"))
      .def("__repr__", &PAdic::str);

  // digits and the Dwork prime map
  m.def(
      "padic_digit",
      [](const std::string& a, long p, int n) { return padic_digit(parse_rational(a), p, n); },
      py::arg("a"), py::arg("p"), py::arg("n"));
  m.def(
      "dwork_prime",
      [](const std::string& a, long p) { return rational_str(dwork_prime(parse_rational(a), p)); },
      py::arg("a"), py::arg("p"));
  m.def(
      "dwork_orbit",
      [](const std::string& a, long p) {
        DworkOrbit orbit = dwork_orbit(parse_rational(a), p);
        py::list vals;
        for (const auto& v : orbit.values) vals.append(rational_str(v));
        return py::make_tuple(vals, orbit.preperiod, orbit.period);
      },
      py::arg("a"), py::arg("p"));

  // digamma and the Iwasawa logarithm
  m.def(
      "psi_tilde",
      [](const std::string& z, long p, int prec) {
        return pyint(psi_tilde(parse_rational(z), p, prec));
      },
      py::arg("z"), py::arg("p"), py::arg("prec"));
  m.def(
      "iwasawa_log_oneunit",
      [](const std::string& c, long p, int prec) {
        return pyint(iwasawa_log_oneunit(parse_rational(c), p, prec));
      },
      py::arg("c"), py::arg("p"), py::arg("prec"));

  // parameter families and coefficient streams
  m.def(
      "check_dwork_conditions",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b, long p,
         const std::string& c, int depth) {
        DworkConditionReport rep = check_dwork_conditions(params_of(a, b, p, c), depth);
        py::dict out;
        out["ok"] = rep.ok;
        out["depth"] = rep.depth;
        py::list fails;
        for (const auto& f : rep.failures)
          fails.append(py::make_tuple(f.condition, f.digit_index, f.witness));
        out["failures"] = fails;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("c") = "1", py::arg("depth") = -1);

  py::class_<CoefficientTable>(m, "CoefficientTable")
      .def(py::init([](const std::vector<std::string>& a, const std::vector<std::string>& b,
                       long p, const std::string& c, int level, int working_prec) {
             return CoefficientTable(params_of(a, b, p, c), level, working_prec);
           }),
           py::arg("a"), py::arg("b"), py::arg("p"), py::arg("c") = "1", py::arg("level") = 0,
           py::arg("working_prec") = 8)
      .def("c", &CoefficientTable::c, py::arg("n"))
      .def("d", &CoefficientTable::d, py::arg("n"))
      .def("c_exact", [](CoefficientTable& t, std::size_t n) { return rational_str(t.c_exact(n)); },
           py::arg("n"))
      .def("d_exact", [](CoefficientTable& t, std::size_t n) { return rational_str(t.d_exact(n)); },
           py::arg("n"));

  m.def(
      "constant_d0",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b, long p,
         const std::string& c, int prec) { return constant_D0(params_of(a, b, p, c), prec); },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("c") = "1", py::arg("prec") = 4);
  m.def(
      "truncated_eval",
      [](const std::string& kind, const std::vector<std::string>& a,
         const std::vector<std::string>& b, long p, const std::string& c, int level, int n,
         const std::string& alpha, int prec) {
        return truncated_eval(kind_of(kind), params_of(a, b, p, c), level, n,
                              parse_rational(alpha), prec);
      },
      py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("c") = "1",
      py::arg("level") = 0, py::arg("n") = 1, py::arg("alpha") = "1", py::arg("prec") = 4);
  m.def(
      "dwork_ratio",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b, long p,
         const std::string& c, int n, const std::string& alpha, int prec) {
        return dwork_ratio(params_of(a, b, p, c), n, parse_rational(alpha), prec);
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("c") = "1", py::arg("n") = 1,
      py::arg("alpha") = "1", py::arg("prec") = 4);

  // special values
  m.def(
      "special_value",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b, long p,
         const std::string& alpha, int m_) {
        SpecialValueResult r = special_value(params_of(a, b, p, "1"), parse_rational(alpha), m_);
        py::dict out;
        out["p"] = r.p;
        out["prec"] = r.prec;
        out["modulus"] = pyint(r.modulus);
        out["value"] = pyint(r.residue);
        out["stable"] = r.stable;
        py::list ev;
        for (const auto& e : r.h_unit_evidence) ev.append(pyint(e));
        out["h_unit_evidence"] = ev;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("alpha") = "1", py::arg("m") = 4);
  m.def(
      "gauss_unit_check",
      [](long p, long N, long i, long j, long k) { return pyint(gauss_unit_check(p, N, i, j, k)); },
      py::arg("p"), py::arg("N"), py::arg("i"), py::arg("j"), py::arg("k"));

  // the value table
  m.def("published_rows", [] {
    py::list out;
    for (const auto& r : published_rows()) out.append(py::make_tuple(r.p, r.N, r.i, r.j, r.k));
    return out;
  });
  m.def(
      "enumerate_rows",
      [](long p, long N) {
        py::list out;
        for (const auto& r : enumerate_rows(p, N)) out.append(py::make_tuple(r.p, r.N, r.i, r.j, r.k));
        return out;
      },
      py::arg("p"), py::arg("N"));
  m.def(
      "compute_row",
      [](long p, long N, long i, long j, long k, int m_) {
        TableEntry e = compute_row({p, N, i, j, k}, m_);
        py::dict out;
        out["p"] = e.row.p;
        out["N"] = e.row.N;
        out["i"] = e.row.i;
        out["j"] = e.row.j;
        out["k"] = e.row.k;
        out["modulus"] = pyint(e.modulus);
        out["value"] = pyint(e.value);
        return out;
      },
      py::arg("p"), py::arg("N"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("m") = 4);

  // congruence suites
  m.def("suite_names", [] { return suite_names(); });
  m.def(
      "default_corpus",
      [](long p) {
        py::list out;
        for (const auto& fam : default_corpus(p)) {
          py::list av, bv;
          for (const auto& x : fam.a) av.append(rational_str(x));
          for (const auto& x : fam.b) bv.append(rational_str(x));
          out.append(py::make_tuple(av, bv));
        }
        return out;
      },
      py::arg("p"));
  m.def(
      "run_suite",
      [](const std::string& name, const std::vector<std::string>& a,
         const std::vector<std::string>& b, long p, int n, long max_m, long max_deg, int l) {
        SuiteOptions so;
        so.n = n;
        so.max_m = max_m;
        so.max_deg = max_deg;
        so.l = l;
        return report_dict(run_suite(name, params_of(a, b, p, "1"), so));
      },
      py::arg("name"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("n") = 1,
      py::arg("max_m") = -1, py::arg("max_deg") = -1, py::arg("l") = -1);

  // curve series
  m.def(
      "solve_curve",
      [](long N, long i, long p, std::size_t terms) {
        CurveSolution s = solve_curve(make_curve_data(N, i, p), terms);
        py::dict out;
        out["N"] = s.data.N;
        out["i"] = s.data.i;
        out["p"] = s.data.p;
        out["j"] = s.data.j;
        out["sign"] = s.data.sign;
        out["terms"] = s.terms;
        out["F"] = strs(s.F);
        out["Fj"] = strs(s.Fj);
        out["E1"] = strs(s.E1);
        out["G"] = psi_pair(s.G);
        out["E2"] = psi_pair(s.E2);
        out["eps1"] = psi_pair(s.eps1);
        out["eps2"] = psi_pair(s.eps2);
        return out;
      },
      py::arg("N"), py::arg("i"), py::arg("p"), py::arg("terms") = 12);
  m.def(
      "curve_psi_residue",
      [](long N, long i, long p, int prec) {
        return pyint(curve_psi_residue(make_curve_data(N, i, p), prec));
      },
      py::arg("N"), py::arg("i"), py::arg("p"), py::arg("prec") = 4);
  m.def(
      "endpoint_vanishing_crosscheck",
      [](long N, long i, long p, int m_) {
        return pyint(endpoint_vanishing_crosscheck(make_curve_data(N, i, p), m_));
      },
      py::arg("N"), py::arg("i"), py::arg("p"), py::arg("m") = 4);
}
