#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "affsphere/circle.hpp"
#include "affsphere/classify.hpp"
#include "affsphere/cli.hpp"
#include "affsphere/error.hpp"
#include "affsphere/io.hpp"
#include "affsphere/sphere_n.hpp"
#include "affsphere/sweep.hpp"

namespace py = pybind11;
using namespace affsphere;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
std::string dumps(const json& j) { return j.dump(); }

json records(const std::vector<FixedPointRecord>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(record_to_json(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_affsphere, m) {
  m.doc() = "Sphere maps x -> (a + T x) / ||a + T x||";

  py::register_exception<Error>(m, "AffsphereError", PyExc_RuntimeError);

  m.def("apply", [](const Matrix& T, const Vector& a, const Vector& x) { return apply(AffineSphereSystem(T, a), x); },
        py::arg("T"), py::arg("a"), py::arg("x"));
  m.def(
      "apply_inverse",
      [](const Matrix& T, const Vector& a, const Vector& y) { return apply_inverse(AffineSphereSystem(T, a), y); },
      py::arg("T"), py::arg("a"), py::arg("y"));
  m.def(
      "orbit",
      [](const Matrix& T, const Vector& a, const Vector& x, int n_min, int n_max) {
        const OrbitSegment seg = orbit(AffineSphereSystem(T, a), x, n_min, n_max);
        Matrix rows(static_cast<Eigen::Index>(seg.points.size()), x.size());
        for (std::size_t k = 0; k < seg.points.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = seg.points[k];
        return rows;
      },
      py::arg("T"), py::arg("a"), py::arg("x"), py::arg("n_min"), py::arg("n_max"));
  m.def(
      "inverse_offset_norm", [](const Matrix& T, const Vector& a) { return AffineSphereSystem(T, a).inverse_offset_norm(); },
      py::arg("T"), py::arg("a"));
  m.def(
      "rotation_fixed_points",
      [](double theta, const Vector& a) { return dumps(records(rotation_fixed_points(theta, a))); }, py::arg("theta"),
      py::arg("a"));
  m.def(
      "fixed_points",
      [](const Matrix& T, const Vector& a, int period, int n_scan) {
        ScanOptions opts;
        opts.n_scan = n_scan;
        return dumps(records(fixed_points_numeric(AffineSphereSystem(T, a), period, opts)));
      },
      py::arg("T"), py::arg("a"), py::arg("period") = 1, py::arg("n_scan") = 4096);
  m.def(
      "involution_check",
      [](const Matrix& T, const Vector& a, int samples) {
        return dumps(involution_to_json(involution_check(AffineSphereSystem(T, a), samples)));
      },
      py::arg("T"), py::arg("a"), py::arg("samples") = 1000);
  m.def(
      "classify",
      [](const std::string& system, double delta, int horizon, std::uint64_t seed) {
        return dumps(report_to_json(classify(system_from_json(json::parse(system)), {delta, horizon, seed})));
      },
      py::arg("system"), py::arg("delta") = 0.01, py::arg("horizon") = 500, py::arg("seed") = kDefaultSeed);
  m.def(
      "classify_product",
      [](const std::string& product, double delta, int horizon, std::uint64_t seed) {
        return dumps(report_to_json(classify_product(product_from_json(json::parse(product)), {delta, horizon, seed})));
      },
      py::arg("product"), py::arg("delta") = 0.01, py::arg("horizon") = 500, py::arg("seed") = kDefaultSeed);
  m.def(
      "verify", [](const std::string& witness) { return dumps(report_to_json(verify(witness_from_json(json::parse(witness))))); },
      py::arg("witness"));
  m.def(
      "conjugate_or_power_search",
      [](const Matrix& T, bool conjugate, std::uint64_t seed) {
        return dumps(search_to_json(
            conjugate_or_power_search(T, conjugate ? SearchMode::Conjugate : SearchMode::Power, seed)));
      },
      py::arg("T"), py::arg("conjugate") = false, py::arg("seed") = kDefaultSeed);
  m.def(
      "nonexpansive_witness",
      [](const Matrix& T, const Vector& a, double delta, int horizon, std::uint64_t seed) {
        return dumps(witness_to_json(nonexpansive_witness(AffineSphereSystem(T, a), delta, horizon, seed)));
      },
      py::arg("T"), py::arg("a"), py::arg("delta") = 0.01, py::arg("horizon") = 500, py::arg("seed") = kDefaultSeed);
  m.def(
      "sm_ledger",
      [](const Matrix& T, const Vector& a, const Vector& x, int steps) {
        return dumps(ledger_to_json(sm_ledger(AffineSphereSystem(T, a), x, steps)));
      },
      py::arg("T"), py::arg("a"), py::arg("x"), py::arg("m"));
  m.def(
      "sweep_csv",
      [](const std::vector<double>& thetas, const std::vector<double>& alphas, bool period2, unsigned threads) {
        SweepOptions opts;
        opts.period2 = period2;
        opts.threads = threads;
        SweepGrid grid;
        {
          py::gil_scoped_release release;
          grid = run_sweep(thetas, alphas, opts);
        }
        std::ostringstream out;
        write_csv(grid, out);
        return out.str();
      },
      py::arg("thetas"), py::arg("alphas"), py::arg("period2") = true, py::arg("threads") = 0);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"affsphere"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
