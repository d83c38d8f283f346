// Python bindings.  Structured results cross the boundary as JSON text and are
// decoded in the package's __init__; scalars are passed directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "coxrep/cache.hpp"
#include "coxrep/predict.hpp"
#include "coxrep/torus.hpp"
#include "coxrep/verify.hpp"
#include "coxrep/weyl.hpp"

namespace py = pybind11;
using namespace coxrep;

namespace {

GroupSpec make_spec(int p, int k, int r, const std::string& mode, const std::string& flavor) {
  return {p, k, r, parse_ring_mode(mode), parse_flavor(flavor)};
}

py::int_ to_py(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

mpz_class from_py(const py::int_& z) { return mpz_class(py::str(z).cast<std::string>()); }

std::vector<std::string> classify_lines(int p, int k, int r, const std::string& mode, std::int64_t psi) {
  const auto T = CoxeterTorus::build(make_spec(p, k, r, mode, "gl"));
  std::vector<std::string> out;
  out.reserve(T->dual_size());
  for (std::uint64_t n = 0; n < T->dual_size(); ++n)
    out.push_back(to_json_line(*T, classify(*T, T->character(n), {static_cast<Code>(psi)})));
  return out;
}

std::vector<std::string> predict_lines(int p, int k, int r, const std::string& mode, const std::string& flavor) {
  const auto spec = make_spec(p, k, r, mode, flavor);
  const auto T = CoxeterTorus::build(spec);
  const auto q = static_cast<std::int64_t>(T->q());
  std::vector<std::string> out;
  out.reserve(T->dual_size());
  for (std::uint64_t n = 0; n < T->dual_size(); ++n) {
    const auto tc = classify(*T, T->character(n));
    out.push_back(to_json_line(spec.flavor == Flavor::GL ? predict_gl2(tc, q, r) : predict_sl2(tc, q, r)));
  }
  return out;
}

std::string verify_json(const std::vector<std::tuple<int, int, int, std::string, std::string>>& cases,
                        std::uint64_t table_bound, bool adjunction, bool classical_sweep, const std::string& cache_dir) {
  VerifyOptions o;
  o.table_bound = table_bound;
  o.adjunction = adjunction;
  o.classical_sweep = classical_sweep;
  o.cache = cache_dir.empty() ? Cache::from_environment() : Cache(cache_dir);
  std::vector<GroupSpec> specs;
  for (const auto& [p, k, r, mode, flavor] : cases) specs.push_back(make_spec(p, k, r, mode, flavor));
  SuiteReport report;
  {
    py::gil_scoped_release release;
    report = run_suite(specs, o);
  }
  return report_json(report, false);
}

std::string table_json(int p, int k, int r, const std::string& mode, const std::string& flavor, std::uint64_t bound) {
  const auto spec = make_spec(p, k, r, mode, flavor);
  const Cache cache = Cache::from_environment();
  const auto G = cache.group(spec, bound);
  return table_to_json(cache.table(spec, G, bound));
}

std::string sweep(const std::vector<std::string>& types, int n_min, int n_max, const std::vector<std::int64_t>& qs,
                  bool coxeter_only) {
  SweepOptions o;
  o.types.clear();
  for (const auto& t : types) o.types.push_back(parse_cartan_type(t));
  o.n_min = n_min;
  o.n_max = n_max;
  o.qs = qs;
  o.coxeter_only = coxeter_only;
  return sweep_json(sweep_conjecture(o));
}

py::dict conjecture(int rk_t, int rk_g, std::int64_t q, std::int64_t p, const py::int_& dim, std::int64_t npos) {
  const auto c = conjecture_sign(rk_t, rk_g, q, p, from_py(dim), npos);
  py::dict d;
  d["applicable"] = c.applicable;
  d["sign"] = c.sign;
  d["exponent"] = c.exponent.get_str();
  d["p_part"] = to_py(c.p_part);
  d["reason"] = c.reason;
  return d;
}

py::dict coxeter_data(const std::string& type, int n, std::int64_t q) {
  const RootSystem rs(parse_cartan_type(type), n);
  const auto w = rs.coxeter_element();
  const auto ranks = fq_ranks(rs, w);
  py::dict d;
  d["name"] = rs.name();
  d["weyl_order"] = rs.weyl_group().size();
  d["positive_roots"] = rs.positive_roots().size();
  d["coxeter_number"] = rs.order(w);
  d["coxeter_element"] = w.to_string();
  d["rank_torus"] = ranks.torus;
  d["rank_group"] = ranks.group;
  d["classical_dim"] = to_py(classical_r1_dim(rs, w, q));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coxeter-torus Deligne-Lusztig characters of GL2/SL2 over finite local rings";

  py::register_exception<SizeBoundExceeded>(m, "SizeBoundExceeded", PyExc_RuntimeError);

  m.def("group_order", [](int p, int k, int r, const std::string& flavor) {
    return make_spec(p, k, r, "mixed", flavor).expected_order();
  }, py::arg("p"), py::arg("k"), py::arg("r"), py::arg("flavor") = "gl");
  m.def("group_key", [](int p, int k, int r, const std::string& mode, const std::string& flavor) {
    return make_spec(p, k, r, mode, flavor).key();
  }, py::arg("p"), py::arg("k"), py::arg("r"), py::arg("mode") = "mixed", py::arg("flavor") = "gl");

  m.def("classify_torus_json", &classify_lines, py::arg("p"), py::arg("k"), py::arg("r"), py::arg("mode") = "mixed",
        py::arg("psi") = 1);
  m.def("predict_json", &predict_lines, py::arg("p"), py::arg("k"), py::arg("r"), py::arg("mode") = "mixed",
        py::arg("flavor") = "gl");
  m.def("verify_json", &verify_json, py::arg("cases"), py::arg("table_bound") = kDefaultTableBound,
        py::arg("adjunction") = true, py::arg("classical_sweep") = false, py::arg("cache_dir") = "");
  m.def("table_json", &table_json, py::arg("p"), py::arg("k"), py::arg("r"), py::arg("mode") = "mixed",
        py::arg("flavor") = "gl", py::arg("bound") = kDefaultTableBound);
  m.def("sweep_json", &sweep, py::arg("types") = std::vector<std::string>{"A"}, py::arg("n_min") = 2,
        py::arg("n_max") = 5, py::arg("qs") = std::vector<std::int64_t>{2, 3, 4, 5, 7, 8, 9},
        py::arg("coxeter_only") = false);
  m.def("conjecture_sign", &conjecture, py::arg("rank_torus"), py::arg("rank_group"), py::arg("q"), py::arg("p"),
        py::arg("dim"), py::arg("positive_roots"));
  m.def("coxeter_data", &coxeter_data, py::arg("type"), py::arg("n"), py::arg("q") = 2);
}
