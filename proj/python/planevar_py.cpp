#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planevar/functions.hpp"
#include "planevar/io.hpp"
#include "planevar/mapping.hpp"
#include "planevar/report.hpp"
#include "planevar/scenarios.hpp"

namespace py = pybind11;
using namespace planevar;

namespace {

// Coordinates arrive as int, str ("p/q", decimals) or fractions.Fraction;
// str() of each is parsed exactly.  Floats are refused so nothing is rounded
// behind the caller's back.
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) {
    throw DomainError("coordinates must be int, str or Fraction, not float");
  }
  return parse_rational(py::str(h).cast<std::string>());
}

std::vector<Point> to_points(const py::sequence& seq) {
  std::vector<Point> pts;
  pts.reserve(py::len(seq));
  for (const auto& item : seq) {
    auto pair = item.cast<py::sequence>();
    if (py::len(pair) != 2) throw DomainError("each point needs exactly two coordinates");
    pts.emplace_back(to_rational(pair[0]), to_rational(pair[1]));
  }
  return pts;
}

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(r));
}

py::list from_points(std::span<const Point> pts) {
  py::list out;
  for (const Point& p : pts) out.append(py::make_tuple(fraction(p.x), fraction(p.y)));
  return out;
}

FnTable table(const py::sequence& points, const std::vector<Complex>& values) {
  return FnTable(to_points(points), values);
}

py::dict estimate_dict(const VariationEstimate& e) {
  py::dict d;
  d["value"] = e.lower_bound;
  d["witness"] = e.witness;
  d["witness_cvar"] = e.witness_cvar;
  d["witness_vf"] = e.witness_vf;
  d["certified"] = e.certified;
  d["length_bound"] = e.length_bound;
  d["lists_examined"] = e.lists_examined;
  return d;
}

VarMode mode_from(bool exact, std::size_t lmax, std::uint64_t budget, std::uint64_t seed) {
  return exact ? VarMode::exhaustive(lmax) : VarMode::searched(budget, seed);
}

py::dict report_dict(const Report& r) {
  py::list checks;
  for (const Check& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["value"] = c.value;
    d["expected"] = c.expected ? py::cast(*c.expected) : py::none();
    d["mode"] = to_string(c.mode);
    d["pass"] = c.pass;
    d["witness"] = c.witness;
    d["certified"] = c.certified;
    checks.append(d);
  }
  py::dict out;
  out["scenario"] = r.scenario;
  out["checks"] = checks;
  out["pass"] = r.pass();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-dimensional variation on finite planar sets";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "vf",
      [](const py::sequence& list) {
        VfResult r = vf(PointList(to_points(list)));
        return r.value;
      },
      py::arg("points"), "Variation factor of an ordered point list.");

  m.def(
      "cvar",
      [](const py::sequence& points, const std::vector<Complex>& values,
         const py::sequence& list) {
        return cvar(table(points, values), PointList(to_points(list)));
      },
      py::arg("points"), py::arg("values"), py::arg("list"),
      "Curve variation of f (given on `points`) along `list`.");

  m.def(
      "var_exact",
      [](const py::sequence& points, const std::vector<Complex>& values, std::size_t lmax,
         std::uint64_t max_lists) {
        return estimate_dict(var_exact(table(points, values), {lmax, max_lists}));
      },
      py::arg("points"), py::arg("values"), py::arg("lmax") = 6,
      py::arg("max_lists") = 50'000'000,
      "Exact variation over every list of at most `lmax` points.");

  m.def(
      "var_search",
      [](const py::sequence& points, const std::vector<Complex>& values, std::uint64_t budget,
         std::uint64_t seed, std::size_t max_length) {
        return estimate_dict(var_search(table(points, values), {budget, max_length, seed}));
      },
      py::arg("points"), py::arg("values"), py::arg("budget") = 2000, py::arg("seed") = 1,
      py::arg("max_length") = 0, "Seeded lower bound for the variation.");

  m.def(
      "bv_norm",
      [](const py::sequence& points, const std::vector<Complex>& values, bool exact,
         std::size_t lmax, std::uint64_t budget, std::uint64_t seed) {
        NormValue n = bv_norm(table(points, values), mode_from(exact, lmax, budget, seed));
        py::dict d = estimate_dict(n.variation);
        d["value"] = n.value;
        d["sup_norm"] = n.sup_norm;
        d["variation"] = n.variation.lower_bound;
        return d;
      },
      py::arg("points"), py::arg("values"), py::arg("exact") = true, py::arg("lmax") = 6,
      py::arg("budget") = 2000, py::arg("seed") = 1, "Sup norm plus variation.");

  m.def(
      "var_1d",
      [](const py::sequence& points, const std::vector<Complex>& values) {
        return var_1d(table(points, values));
      },
      py::arg("points"), py::arg("values"), "Classical variation of collinear data.");

  m.def(
      "lg_norm",
      [](const py::sequence& points, const std::vector<Complex>& values,
         const std::vector<std::vector<std::size_t>>& pieces) {
        return lg_norm(table(points, values), pieces);
      },
      py::arg("points"), py::arg("values"), py::arg("pieces"),
      "Sup norm plus the classical variation on each collinear piece.");

  m.def(
      "pushforward",
      [](const py::sequence& sources, const py::sequence& targets,
         const std::vector<Complex>& values) {
        Bijection h(to_points(sources), to_points(targets));
        FnTable g = pushforward(FnTable({h.sources().begin(), h.sources().end()}, values), h);
        return std::vector<Complex>(g.values().begin(), g.values().end());
      },
      py::arg("sources"), py::arg("targets"), py::arg("values"),
      "Values of f o h^-1 on `targets`, where h maps sources[i] to targets[i].");

  m.def(
      "vf_ratio",
      [](const py::sequence& sources, const py::sequence& targets, std::size_t lmax,
         std::uint64_t budget, std::uint64_t seed) {
        RatioEstimate r = vf_ratio_search(Bijection(to_points(sources), to_points(targets)),
                                          {lmax, budget, seed});
        py::dict d;
        d["value"] = r.value();
        d["source_vf"] = r.source_vf;
        d["image_vf"] = r.image_vf;
        d["witness"] = r.witness;
        d["exhaustive"] = r.exhaustive;
        return d;
      },
      py::arg("sources"), py::arg("targets"), py::arg("lmax") = 8, py::arg("budget") = 20000,
      py::arg("seed") = 1, "Lower bound for the variation factor of the map.");

  m.def(
      "is_affine",
      [](const py::sequence& sources, const py::sequence& targets) {
        AffineCertificate c = is_affine(Bijection(to_points(sources), to_points(targets)));
        py::dict d;
        d["complex"] = py::none();
        d["real"] = py::none();
        if (c.complex) {
          d["complex"] = py::make_tuple(
              py::make_tuple(fraction(c.complex->alpha_re), fraction(c.complex->alpha_im)),
              py::make_tuple(fraction(c.complex->beta_re), fraction(c.complex->beta_im)));
        }
        if (c.real) {
          const RealAffine& a = *c.real;
          d["real"] = py::make_tuple(
              py::make_tuple(py::make_tuple(fraction(a.m00), fraction(a.m01)),
                             py::make_tuple(fraction(a.m10), fraction(a.m11))),
              py::make_tuple(fraction(a.t0), fraction(a.t1)));
        }
        return d;
      },
      py::arg("sources"), py::arg("targets"),
      "Exact affine certificate: complex ((alpha), (beta)) and real (M, t), or None.");

  m.def(
      "cantor_homeomorphism",
      [](const py::handle& x, int depth) { return fraction(cantor_homeomorphism_exact(to_rational(x), depth)); },
      py::arg("x"), py::arg("depth") = 20, "(x + C(x)) / 2 as an exact Fraction.");

  m.def(
      "folding_map", [](const py::handle& x) { return fraction(folding_map(to_rational(x))); },
      py::arg("x"));

  m.def("scenario_ids", &scenario_ids);
  m.def(
      "reproduce",
      [](const std::string& id, std::size_t samples, std::uint64_t seed) {
        ScenarioParams p;
        p.samples = samples;
        p.seed = seed;
        return report_dict(reproduce(id, p));
      },
      py::arg("id"), py::arg("samples") = 0, py::arg("seed") = 1,
      "Run a worked example and return its report.");

  m.def(
      "parse_points", [](const std::string& text) { return from_points(parse_points(text)); },
      py::arg("text"), "Parse a point file's JSON text into Fraction pairs.");
}
