// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Every random draw is seeded, so reruns are identical.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "planevar/functions.hpp"
#include "planevar/mapping.hpp"
#include "planevar/scenarios.hpp"

using namespace planevar;
namespace t = planevar::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<Point> distinct_points(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> pts;
  while (pts.size() < n) {
    Point p = t::random_small_point(rng);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

std::vector<int> as_ints(const Classification& c) {
  std::vector<int> v;
  for (Side s : c) v.push_back(static_cast<int>(s));
  return v;
}

Outcome scenario_outcome(const Report& r) {
  std::ostringstream os;
  int failed = 0;
  for (const Check& c : r.checks) {
    if (!c.pass) {
      ++failed;
      os << " failed: " << c.name << " = " << c.value << ";";
    }
  }
  if (failed == 0) os << r.checks.size() << " checks passed";
  return {r.pass(), os.str()};
}

// 1. vf from candidate enumeration against a random-line oracle.
Outcome vf_exactness(std::vector<std::vector<Point>>& lists) {
  std::mt19937_64 rng(1);
  int mismatches = 0, exceedances = 0, sampled_hits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto pts = t::random_list(rng, 6);
    lists.push_back(pts);
    int exact = vf(PointList(pts)).value;
    auto sampled = t::sample_lines(pts, 10'000, rng);
    int family_best = 0;
    for (const auto& c : enumerate_candidates(pts)) {
      family_best = std::max(family_best, t::count_crossings(as_ints(c.sides)));
    }
    int oracle = std::max({1, sampled.best, family_best});
    if (sampled.best > exact) ++exceedances;
    if (oracle != exact) ++mismatches;
    if (std::max(1, sampled.best) == exact) ++sampled_hits;
  }
  std::ostringstream os;
  os << "1000 lists, 10000 lines each: mismatches " << mismatches << ", oracle exceedances "
     << exceedances << ", sampling alone reached vf on " << sampled_hits;
  return {mismatches == 0 && exceedances == 0, os.str()};
}

// 2. 1 <= vf(S) <= n.
Outcome vf_range(const std::vector<std::vector<Point>>& lists) {
  std::mt19937_64 rng(2);
  std::vector<std::vector<Point>> all = lists;
  for (int i = 0; i < 1000; ++i) all.push_back(t::random_list(rng, 10));
  int bad = 0;
  for (const auto& pts : all) {
    int v = vf(PointList(pts)).value;
    if (v < 1 || v > static_cast<int>(pts.size())) ++bad;
  }
  return {bad == 0, std::to_string(all.size()) + " lists, out of range " + std::to_string(bad)};
}

// 3. Exact variation of collinear data equals the classical variation.
Outcome one_dimensional() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(1, 6), val(-5, 5), step(-3, 3);
  int bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Point base = t::random_small_point(rng);
    Point dir = t::random_small_point(rng);
    if (dir.x == 0 && dir.y == 0) dir = Point(1, 0);
    std::vector<Point> pts;
    std::set<int> used;
    std::size_t n = size(rng);
    while (pts.size() < n) {
      int k = step(rng) * 2 + val(rng) % 2;
      if (!used.insert(k).second) continue;
      pts.emplace_back(base.x + k * dir.x, base.y + k * dir.y);
    }
    std::vector<Complex> vals;
    for (std::size_t i = 0; i < n; ++i) vals.emplace_back(val(rng));
    FnTable f(pts, vals);
    double ex = var_exact(f, {6, 50'000'000}).lower_bound;
    if (ex != var_1d(f)) ++bad;
  }
  return {bad == 0, "500 collinear instances, Lmax 6, unequal " + std::to_string(bad)};
}

// 4. Complex-affine maps preserve the BV norm.
Outcome affine_isometry() {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> size(2, 6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    auto pts = distinct_points(rng, size(rng));
    Point alpha = t::random_small_point(rng);
    if (alpha.x == 0 && alpha.y == 0) alpha = Point(1, 1);
    Point beta = t::random_small_point(rng);
    auto h = Bijection::from_map(pts, [&](const Point& z) {
      return Point(alpha.x * z.x - alpha.y * z.y + beta.x, alpha.x * z.y + alpha.y * z.x + beta.y);
    });
    std::vector<Complex> vals;
    for (std::size_t i = 0; i < pts.size(); ++i) vals.emplace_back(u(rng), u(rng));
    FnTable f(pts, vals);
    auto a = bv_norm(f, VarMode::exhaustive(5));
    auto b = bv_norm(pushforward(f, h), VarMode::exhaustive(5));
    if (a.value != b.value) ++bad;
    worst = std::max(worst, std::abs(a.value - b.value));
  }
  std::ostringstream os;
  os << "100 maps, Lmax 5, unequal " << bad << ", max difference " << worst;
  return {bad == 0, os.str()};
}

// 5. Half-plane indicators have variation at most 1.
Outcome halfplane_bound() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(2, 8);
  std::uniform_int_distribution<int> coef(-12, 12);
  int bad = 0, exact_runs = 0;
  double worst_var = 0.0, worst_norm = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    auto pts = distinct_points(rng, size(rng));
    int a = coef(rng), b = coef(rng);
    if (a == 0 && b == 0) a = 1;
    HalfPlane hp{Line::from_coefficients(a, b, Rational(coef(rng), 4)),
                 trial % 2 ? Side::Left : Side::Right};
    FnTable chi = indicator_halfplane(hp, pts);
    HostFamily fam(pts);
    std::vector<NormValue> norms = {bv_norm(chi, fam, VarMode::searched(400, trial))};
    std::size_t lmax = pts.size() <= 6 ? 6 : 5;
    if (count_lists(pts.size(), lmax) <= 2'000'000) {
      norms.push_back(bv_norm(chi, fam, VarMode::exhaustive(lmax)));
      ++exact_runs;
    }
    for (const auto& n : norms) {
      worst_var = std::max(worst_var, n.variation.lower_bound);
      worst_norm = std::max(worst_norm, n.value);
      if (n.variation.lower_bound > 1.0 || n.value > 2.0) ++bad;
    }
  }
  std::ostringstream os;
  os << "200 instances (" << exact_runs << " also exact): max var " << worst_var
     << ", max norm " << worst_norm;
  return {bad == 0, os.str()};
}

// 7. Sequence bijection: diverging variation and large vf(h).
Outcome sequence_bijection_check() {
  std::ostringstream os;
  bool ok = true;
  for (std::size_t n : {5, 10, 20}) {
    auto h = sequence_bijection(n);
    FnTable f = positive_indicator(h.sources());
    double v1 = var_1d(f), v2 = var_1d(pushforward(f, h));
    bool pass = v1 == 1.0 && v2 == static_cast<double>(2 * n - 1);
    ok = ok && pass;
    os << "n=" << n << ": " << v1 << " -> " << v2 << "; ";
  }
  auto r = vf_ratio_search(sequence_bijection(12), {12, 20'000, 1});
  ok = ok && r.value() >= 6.0;
  os << "vf ratio at n=12, Lmax 12: " << r.source_vf << "/" << r.image_vf;
  return {ok, os.str()};
}

// 11. The pushforward is an algebra map and keeps singletons singletons.
Outcome algebra_map() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto src = distinct_points(rng, size(rng));
    auto tgt = distinct_points(rng, src.size());
    Bijection h(src, tgt);
    std::vector<Complex> a, b;
    for (std::size_t i = 0; i < src.size(); ++i) {
      a.emplace_back(u(rng), u(rng));
      b.emplace_back(u(rng), u(rng));
    }
    FnTable f(src, a), g(src, b);
    auto lhs = pushforward(multiply(f, g), h);
    auto pf = pushforward(f, h), pg = pushforward(g, h);
    for (const Point& q : tgt) {
      if (lhs.at(q) != pf.at(q) * pg.at(q)) ++bad;
    }
    for (const Point& z : src) {
      auto e = pushforward(indicator_singleton(z, src), h);
      auto expect = indicator_singleton(h.image(z), tgt);
      for (const Point& q : tgt) {
        if (e.at(q) != expect.at(q)) ++bad;
      }
    }
  }
  return {bad == 0, "100 instances, pointwise mismatches " + std::to_string(bad)};
}

// 12. Search never beats the exhaustive optimum; witnesses re-evaluate.
Outcome search_soundness() {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 2);
  int above = 0, bad_witness = 0;
  auto check_witness = [&](const FnTable& f, const VariationEstimate& e) {
    std::vector<Point> w;
    for (auto i : e.witness) w.push_back(f.domain()[i]);
    PointList list(w);
    double c = cvar(f, list);
    int v = vf(list).value;
    if (c != e.witness_cvar || v != e.witness_vf || c / v != e.lower_bound) ++bad_witness;
  };
  for (int trial = 0; trial < 500; ++trial) {
    auto pts = distinct_points(rng, size(rng));
    std::vector<Complex> vals;
    int k = kind(rng);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (k == 0) vals.emplace_back(u(rng), u(rng));
      else if (k == 1) vals.emplace_back(std::floor(3 * u(rng)));
      else vals.emplace_back(static_cast<double>(i % 2));
    }
    FnTable f(pts, vals);
    HostFamily fam(pts);
    const std::size_t lmax = 5;
    auto ex = var_exact(f, fam, {lmax, 50'000'000});
    auto se = var_search(f, fam, {300, lmax, static_cast<std::uint64_t>(trial)});
    if (se.lower_bound > ex.lower_bound) ++above;
    check_witness(f, ex);
    check_witness(f, se);
  }
  std::ostringstream os;
  os << "500 instances, Lmax 5: search above exact " << above << ", witness mismatches "
     << bad_witness;
  return {above == 0 && bad_witness == 0, os.str()};
}

}  // namespace

int main() {
  std::vector<std::vector<Point>> lists;
  ScenarioParams folding;
  folding.grid = 100;
  folding.samples = 200;
  ScenarioParams lg;
  lg.per_segment = 10;
  lg.samples = 100;
  ScenarioParams cantor;
  cantor.depth = 20;
  cantor.cantor_grid = 1000;

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"vf exactness", [&] { return vf_exactness(lists); }},
      {"vf range", [&] { return vf_range(lists); }},
      {"1D reduction", one_dimensional},
      {"affine isometry", affine_isometry},
      {"half-plane bound", halfplane_bound},
      {"folding-interval", [&] { return scenario_outcome(reproduce("folding-interval", folding)); }},
      {"seq-bijection", sequence_bijection_check},
      {"linear-graph-pair", [&] { return scenario_outcome(reproduce("linear-graph-pair", lg)); }},
      {"halfplane-ramp", [] { return scenario_outcome(reproduce("halfplane-ramp")); }},
      {"cantor-homeomorphism",
       [&] { return scenario_outcome(reproduce("cantor-homeomorphism", cantor)); }},
      {"algebra map", algebra_map},
      {"search soundness", search_soundness},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60.0) {
      o.pass = false;
      o.detail += " (over the 60 s limit)";
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %-22s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
