#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "walks/analytic.hpp"
#include "walks/bijection.hpp"
#include "walks/cli.hpp"
#include "walks/enumerate.hpp"
#include "walks/identities.hpp"
#include "walks/kernel.hpp"
#include "walks/recurrence.hpp"

namespace py = pybind11;
using namespace walks;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.get_str())); }

py::object to_py(const Rational& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const BigInt& x : v) out.append(to_py(x));
  return out;
}

Region parse_region(const std::string& r) {
  if (r == "quadrant") return Region::Quadrant;
  if (r == "half-plane") return Region::RightHalfPlane;
  throw std::invalid_argument("region must be quadrant or half-plane");
}

CountGrid grid_for(const std::string& steps, std::pair<int, int> start, int n_max, const std::string& region) {
  const StepSet s = StepSet::parse(steps);
  const Point p{start.first, start.second};
  return parse_region(region) == Region::Quadrant ? count_quadrant(s, p, n_max) : count_half_plane(s, p, n_max);
}

std::vector<Step> to_steps(const std::vector<std::pair<int, int>>& w) {
  std::vector<Step> out;
  for (auto [dx, dy] : w) out.push_back({dx, dy});
  return out;
}

py::tuple flip_result(const FlipResult& r) {
  std::vector<std::pair<int, int>> steps;
  for (const Step& s : r.walk.steps()) steps.emplace_back(s.dx, s.dy);
  return py::make_tuple(steps, r.flipped);
}

series::USeries named_series(const std::string& which, int order) {
  if (which == "xi") return series::xi_series(order);
  if (which == "psi") return series::psi_series(order);
  if (which == "G") return series::knight_g_series(order);
  if (which == "F") return series::f_series(order);
  throw std::invalid_argument("series must be xi, psi, G or F");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration of quadrant lattice walks and the series built from them.";
  m.attr("__version__") = cli::kVersion;

  m.def(
      "count",
      [](const std::string& steps, std::pair<int, int> start, int n_max, const std::string& region) {
        const CountGrid g = grid_for(steps, start, n_max, region);
        py::dict out;
        for (int n = 0; n <= n_max; ++n)
          for (const auto& [p, c] : g.layer(n)) out[py::make_tuple(p.i, p.j, n)] = to_py(c);
        return out;
      },
      py::arg("steps") = "(2,-1);(-1,2)", py::arg("start") = std::pair{1, 1}, py::arg("n_max") = 10,
      py::arg("region") = "quadrant", "Walk counts keyed by (i, j, n).");
  m.def(
      "count_aggregate",
      [](const std::string& steps, std::pair<int, int> start, int n_max, const std::string& region) {
        py::dict out;
        for (const auto& [p, c] : grid_for(steps, start, n_max, region).aggregate())
          out[py::make_tuple(p.i, p.j)] = to_py(c);
        return out;
      },
      py::arg("steps") = "(2,-1);(-1,2)", py::arg("start") = std::pair{1, 1}, py::arg("n_max") = 10,
      py::arg("region") = "quadrant", "Counts summed over lengths 0..n_max, keyed by (i, j).");
  m.def(
      "length_sequence",
      [](const std::string& steps, std::pair<int, int> start, int n_max) {
        return to_py(length_sequence(grid_for(steps, start, n_max, "quadrant")));
      },
      py::arg("steps"), py::arg("start") = std::pair{0, 0}, py::arg("n_max") = 10);
  m.def(
      "axis_sequence",
      [](const std::string& steps, std::pair<int, int> start, int n_max) {
        return to_py(axis_sequence(grid_for(steps, start, n_max, "quadrant")));
      },
      py::arg("steps") = "(2,-1);(-1,2)", py::arg("start") = std::pair{1, 1}, py::arg("n_max") = 10);

  m.def(
      "holonomy_criterion", [](const std::string& steps) { return to_string(holonomy_criterion(StepSet::parse(steps))); },
      py::arg("steps"));

  m.def(
      "flip_down",
      [](const std::string& steps, std::pair<int, int> start, const std::vector<std::pair<int, int>>& walk) {
        return flip_result(flip_down_indexed(Walk({start.first, start.second}, to_steps(walk), Region::Quadrant),
                                             StepSet::parse(steps)));
      },
      py::arg("steps"), py::arg("start"), py::arg("walk"), "Returns (image steps, flipped indices).");
  m.def(
      "flip_up",
      [](const std::string& steps, std::pair<int, int> start, const std::vector<std::pair<int, int>>& walk) {
        return flip_result(flip_up_indexed(Walk({start.first, start.second}, to_steps(walk), Region::RightHalfPlane),
                                           StepSet::parse(steps)));
      },
      py::arg("steps"), py::arg("start"), py::arg("walk"));

  m.def(
      "series",
      [](const std::string& which, int order) {
        const series::USeries s = named_series(which, order);
        py::list out;
        for (int k = 0; k <= s.order(); ++k) out.append(to_py(s[k]));
        return out;
      },
      py::arg("which"), py::arg("order"), "Coefficients 0..order as fractions.Fraction.");

  m.def(
      "verify_identity",
      [](const std::string& name, int order, int branch) {
        if (branch < 0 || branch > 2) throw std::invalid_argument("branch must be 0, 1 or 2");
        const auto r = series::verify_identity(series::parse_identity(name), order, static_cast<series::Branch>(branch));
        py::dict out;
        out["holds"] = r.holds;
        out["terms_checked"] = r.terms_checked;
        if (r.first_failure) {
          out["term"] = r.first_failure->term.to_string();
          out["lhs"] = to_py(r.first_failure->lhs);
          out["rhs"] = to_py(r.first_failure->rhs);
        }
        return out;
      },
      py::arg("identity"), py::arg("order"), py::arg("branch") = 0);

  m.def("constants", [] {
    const auto& c = analytic::constants();
    py::dict out;
    out["x_c"] = c.x_c;
    out["y_c"] = c.y_c;
    out["j"] = c.j;
    return out;
  });
  m.def(
      "eval_branches",
      [](std::complex<double> x) {
        const auto v = analytic::eval_branches(x);
        return py::make_tuple(v.values[0], v.values[1], v.values[2]);
      },
      py::arg("x"), "Values of xi_0, xi_1, xi_2 at x. Raises ValueError on a cut.");
  m.def("singularity_survey", [] {
    py::list out;
    for (const auto& e : analytic::singularity_survey()) {
      py::dict d;
      d["branch"] = static_cast<int>(e.branch);
      d["candidate"] = e.candidate;
      d["verdict"] = analytic::to_string(e.verdict);
      d["exponent"] = e.fit.exponent;
      d["slope"] = e.fit.slope;
      out.append(d);
    }
    return out;
  });
  m.def("singularity_chain", [] {
    const auto ch = analytic::singularity_chain_rec2();
    return std::vector<std::complex<double>>(ch.points.begin(), ch.points.end());
  });

  m.def(
      "validate_recurrence",
      [](const std::string& spec_json) {
        const auto spec = recur::RecurrenceSpec::from_json(nlohmann::json::parse(spec_json));
        const auto v = recur::validate(spec);
        py::dict out;
        out["valid"] = v.valid();
        py::list cert;
        if (v.weight)
          for (const Rational& w : v.weight->w) cert.append(to_py(w));
        if (v.witness)
          for (const Rational& l : v.witness->lambda) cert.append(to_py(l));
        out[v.valid() ? "weight" : "witness"] = cert;
        return out;
      },
      py::arg("spec_json"));
  m.def(
      "evaluate_recurrence",
      [](const std::string& spec_json, const std::string& box) {
        const auto spec = recur::RecurrenceSpec::from_json(nlohmann::json::parse(spec_json));
        py::dict out;
        for (const auto& [n, v] : recur::evaluate(spec, recur::Box::parse(box))) out[py::tuple(py::cast(n))] = to_py(v);
        return out;
      },
      py::arg("spec_json"), py::arg("box"));
  m.def("knight_recurrence_json", [] { return recur::knight_recurrence().to_json().dump(); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the walks command line in-process; returns (exit code, stdout, stderr).");
}
