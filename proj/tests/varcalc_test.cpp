#include "planevar/varcalc.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"

namespace planevar {
namespace {

Point P(long x, long y) { return {x, y}; }

FnTable table(std::vector<Point> pts, std::vector<double> vals) {
  std::vector<Complex> v(vals.begin(), vals.end());
  return FnTable(std::move(pts), std::move(v));
}

TEST(PointListTest, RejectsEmptyAndConsecutiveRepeats) {
  EXPECT_THROW(PointList({}), DomainError);
  EXPECT_THROW(PointList({P(0, 0), P(0, 0)}), DomainError);
  EXPECT_NO_THROW(PointList({P(0, 0), P(1, 0), P(0, 0)}));
}

TEST(FnTableTest, Validation) {
  EXPECT_THROW(table({}, {}), DomainError);
  EXPECT_THROW(table({P(0, 0)}, {1, 2}), DomainError);
  EXPECT_THROW(table({P(0, 0), P(0, 0)}, {1, 2}), DomainError);
  EXPECT_THROW(table({P(0, 0)}, {std::nan("")}), DomainError);
  auto f = table({P(0, 0), P(1, 0)}, {1, -3});
  EXPECT_EQ(f.at(P(1, 0)), Complex(-3));
  EXPECT_THROW(f.at(P(2, 0)), DomainError);
  EXPECT_DOUBLE_EQ(f.sup_norm(), 3.0);
}

TEST(CvarTest, Examples) {
  auto f = table({P(0, 0), P(1, 0), P(2, 0)}, {0, 1, 0});
  EXPECT_DOUBLE_EQ(cvar(f, PointList({P(0, 0), P(1, 0), P(2, 0)})), 2.0);
  EXPECT_DOUBLE_EQ(cvar(f, PointList({P(1, 0)})), 0.0);
  EXPECT_THROW(cvar(f, PointList({P(0, 0), P(5, 5)})), DomainError);
  std::vector<Complex> v = {Complex(0, 0), Complex(3, 4)};
  FnTable g({P(0, 0), P(1, 1)}, v);
  EXPECT_DOUBLE_EQ(cvar(g, PointList({P(0, 0), P(1, 1), P(0, 0)})), 10.0);
}

TEST(VfTest, SmallExamples) {
  EXPECT_EQ(vf(PointList({P(0, 0)})).value, 1);
  EXPECT_EQ(vf(PointList({P(0, 0), P(1, 0)})).value, 1);
  EXPECT_EQ(vf(PointList({P(0, 0), P(1, 0), P(2, 0)})).value, 1);
  // Back and forth along a line: one crossing per return.
  EXPECT_EQ(vf(PointList({P(0, 0), P(1, 0), P(0, 0), P(1, 0)})).value, 3);
  // Convex quadrilateral in cyclic order.
  EXPECT_EQ(vf(PointList({P(0, 0), P(1, 0), P(1, 1), P(0, 1)})).value, 2);
  // Crossing diagonals.
  EXPECT_EQ(vf(PointList({P(0, 0), P(1, 1), P(1, 0), P(0, 1)})).value, 3);
}

TEST(VfTest, WitnessReproducesValue) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    PointList list(testing::random_list(rng, 6));
    VfResult r = vf(list);
    Classification s = classify(list.points(), r.witness);
    EXPECT_EQ(vf_line(list, s), r.value);
  }
}

TEST(VfTest, AgreesWithSamplingOracleAndRange) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 150; ++t) {
    auto pts = testing::random_list(rng, 6);
    PointList list(pts);
    int exact = vf(list).value;
    auto sampled = testing::sample_lines(pts, 3000, rng);
    EXPECT_GE(exact, 1);
    EXPECT_LE(exact, static_cast<int>(list.size()));
    EXPECT_GE(exact, sampled.best);
    EXPECT_EQ(exact, std::max(1, sampled.best)) << "trial " << t;
  }
}

TEST(VfTest, ReversalInvariant) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    PointList list(testing::random_list(rng, 7));
    EXPECT_EQ(vf(list).value, vf(list.reversed()).value);
  }
}

TEST(HostFamilyTest, MatchesStandaloneVf) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point> host;
    while (host.size() < 5) {
      Point p = testing::random_small_point(rng);
      if (std::find(host.begin(), host.end(), p) == host.end()) host.push_back(p);
    }
    HostFamily fam(host);
    std::uniform_int_distribution<std::size_t> pick(0, host.size() - 1);
    for (int k = 0; k < 20; ++k) {
      std::vector<std::size_t> idx;
      std::vector<Point> pts;
      std::size_t len = 1 + pick(rng);
      while (idx.size() < len) {
        std::size_t i = pick(rng);
        if (!idx.empty() && idx.back() == i) continue;
        idx.push_back(i);
        pts.push_back(host[i]);
      }
      EXPECT_EQ(fam.vf(idx), vf(PointList(pts)).value);
    }
  }
}

TEST(CountListsTest, Values) {
  EXPECT_EQ(count_lists(3, 1), 3u);
  EXPECT_EQ(count_lists(3, 2), 3u + 6u);
  EXPECT_EQ(count_lists(3, 3), 3u + 6u + 12u);
  EXPECT_EQ(count_lists(1, 5), 1u);
  EXPECT_EQ(count_lists(1000, 20), UINT64_MAX);
}

TEST(VarExactTest, ThreePointBump) {
  auto f = table({P(0, 0), P(1, 0), P(2, 0)}, {0, 1, 0});
  auto r = var_exact(f, {4, 1'000'000});
  EXPECT_DOUBLE_EQ(r.lower_bound, 2.0);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.witness_vf, 1);
  EXPECT_DOUBLE_EQ(r.witness_cvar, 2.0);
  EXPECT_EQ(r.length_bound, 4u);
}

TEST(VarExactTest, CollinearZigzagMatchesClassicalVariation) {
  auto f = table({P(0, 0), P(1, 0), P(2, 0), P(3, 0)}, {0, 1, 0, 1});
  EXPECT_DOUBLE_EQ(var_1d(f), 3.0);
  EXPECT_DOUBLE_EQ(var_exact(f, {6, 10'000'000}).lower_bound, 3.0);
}

TEST(VarExactTest, RefusesOverBudget) {
  std::vector<Point> pts;
  std::vector<double> vals;
  for (long i = 0; i < 12; ++i) {
    pts.push_back(P(i, i * i));
    vals.push_back(static_cast<double>(i % 2));
  }
  auto f = table(pts, vals);
  EXPECT_THROW(var_exact(f, {8, 1'000}), BudgetExceeded);
}

TEST(VarExactTest, SingletonIndicatorOfConvexPosition) {
  // chi of one vertex of a square: the list (v, w, v) has cvar 2 and vf 2.
  auto f = table({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}, {1, 0, 0, 0});
  auto r = var_exact(f, {5, 10'000'000});
  EXPECT_DOUBLE_EQ(r.lower_bound, 1.0);
}

TEST(VarExactTest, SeminormProperties) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts = {P(0, 0), P(2, 0), P(1, 1), P(0, 2)};
  HostFamily fam(pts);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> a(4), b(4);
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
    auto f = table(pts, a), g = table(pts, b);
    std::vector<double> s(4), c(4);
    for (int i = 0; i < 4; ++i) {
      s[i] = a[i] + b[i];
      c[i] = a[i] + 7.0;
    }
    ExactOptions o{4, 1'000'000};
    double vf_ = var_exact(f, fam, o).lower_bound;
    double vg = var_exact(g, fam, o).lower_bound;
    EXPECT_LE(var_exact(table(pts, s), fam, o).lower_bound, vf_ + vg + 1e-12);
    EXPECT_NEAR(var_exact(table(pts, c), fam, o).lower_bound, vf_, 1e-12);
    std::vector<double> m(4);
    for (int i = 0; i < 4; ++i) m[i] = -3.0 * a[i];
    EXPECT_NEAR(var_exact(table(pts, m), fam, o).lower_bound, 3.0 * vf_, 1e-12);
  }
}

TEST(VarSearchTest, NeverExceedsExactAndWitnessReproduces) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    std::vector<Point> host;
    while (host.size() < 5) {
      Point p = testing::random_small_point(rng);
      if (std::find(host.begin(), host.end(), p) == host.end()) host.push_back(p);
    }
    std::vector<double> vals(host.size());
    for (auto& v : vals) v = u(rng);
    auto f = table(host, vals);
    HostFamily fam(host);
    auto ex = var_exact(f, fam, {5, 10'000'000});
    auto se = var_search(f, fam, {500, 5, static_cast<std::uint64_t>(t)});
    EXPECT_LE(se.lower_bound, ex.lower_bound + 1e-12);
    EXPECT_FALSE(se.certified);
    std::vector<Point> w;
    for (auto i : se.witness) w.push_back(host[i]);
    PointList wl(w);
    EXPECT_EQ(vf(wl).value, se.witness_vf);
    EXPECT_DOUBLE_EQ(cvar(f, wl), se.witness_cvar);
    EXPECT_DOUBLE_EQ(se.witness_cvar / se.witness_vf, se.lower_bound);
  }
}

TEST(VarSearchTest, DeterministicForSeed) {
  std::vector<Point> pts;
  std::vector<double> vals;
  for (long i = 0; i < 9; ++i) {
    pts.push_back(P(i % 3, i / 3));
    vals.push_back(std::sin(static_cast<double>(i)));
  }
  auto f = table(pts, vals);
  auto a = var_search(f, {300, 0, 4});
  auto b = var_search(f, {300, 0, 4});
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.lower_bound, b.lower_bound);
}

TEST(VarSearchTest, CollinearSweepIsOptimal) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts;
  std::vector<double> vals;
  for (long i = 0; i < 15; ++i) {
    pts.push_back(P((i * 7) % 15, 0));
    vals.push_back(u(rng));
  }
  auto f = table(pts, vals);
  EXPECT_NEAR(var_search(f, {200, 0, 1}).lower_bound, var_1d(f), 1e-12);
  EXPECT_NEAR(var_1d(f), testing::variation_along_x(f), 1e-12);
}

TEST(Var1dTest, RejectsNonCollinear) {
  auto f = table({P(0, 0), P(1, 0), P(0, 1)}, {0, 1, 0});
  EXPECT_THROW(var_1d(f), DomainError);
  EXPECT_DOUBLE_EQ(var_1d(table({P(4, 4)}, {9})), 0.0);
}

TEST(LgNormTest, SumsPiecesAndRequiresCover) {
  auto f = table({P(0, 0), P(1, 0), P(1, 1)}, {0, 2, 1});
  std::vector<std::vector<std::size_t>> pieces = {{0, 1}, {1, 2}};
  EXPECT_DOUBLE_EQ(lg_norm(f, pieces), 2.0 + 2.0 + 1.0);
  std::vector<std::vector<std::size_t>> partial = {{0, 1}};
  EXPECT_THROW(lg_norm(f, partial), DomainError);
  std::vector<std::vector<std::size_t>> bent = {{0, 1, 2}};
  EXPECT_THROW(lg_norm(f, bent), DomainError);
}

TEST(BvNormTest, SupPlusVariation) {
  auto f = table({P(0, 0), P(1, 0), P(2, 0)}, {0, -2, 0});
  auto n = bv_norm(f, VarMode::exhaustive(4));
  EXPECT_DOUBLE_EQ(n.sup_norm, 2.0);
  EXPECT_DOUBLE_EQ(n.variation.lower_bound, 4.0);
  EXPECT_DOUBLE_EQ(n.value, 6.0);
  EXPECT_TRUE(n.variation.certified);
}

TEST(VarExactTest, InvariantUnderAffineMaps) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    std::vector<Point> pts;
    while (pts.size() < 4) {
      Point p = testing::random_small_point(rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<double> vals(4);
    for (auto& v : vals) v = u(rng);
    // (x, y) -> (2x + y + 1, -x + 3y)
    std::vector<Point> img;
    for (const auto& p : pts) img.emplace_back(2 * p.x + p.y + 1, -p.x + 3 * p.y);
    double a = var_exact(table(pts, vals), {5, 10'000'000}).lower_bound;
    double b = var_exact(table(img, vals), {5, 10'000'000}).lower_bound;
    EXPECT_NEAR(a, b, 1e-12);
  }
}

TEST(RestrictTest, KeepsOrder) {
  auto f = table({P(0, 0), P(1, 0), P(2, 0)}, {5, 6, 7});
  std::vector<std::size_t> idx = {2, 0};
  auto g = restrict_to(f, idx);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.domain()[0], P(2, 0));
  EXPECT_EQ(g[1], Complex(5));
}

TEST(CvarTest, MoreExamples) {
  std::vector<Point> pts = {P(0, 0), P(1, 0), P(2, 5)};
  auto c = table(pts, {4, 4, 4});
  EXPECT_DOUBLE_EQ(cvar(c, PointList({P(0, 0), P(2, 5), P(1, 0), P(0, 0)})), 0.0);
  auto x = table(pts, {0, 1, 2});  // f(x, y) = x
  EXPECT_DOUBLE_EQ(cvar(x, PointList({P(0, 0), P(1, 0), P(0, 0)})), 2.0);
}

TEST(VfLineTest, Examples) {
  Line x0 = Line::from_coefficients(1, 0, 0);
  PointList a({P(-1, 0), P(1, 0)});
  EXPECT_EQ(vf_line(a, classify(a.points(), {x0, Perturbation::Exact, 0, std::nullopt})), 1);
  Line half = Line::from_coefficients(1, 0, Rational(1, 2));
  PointList b({P(0, 0), P(1, 0), P(0, 0)});
  EXPECT_EQ(vf_line(b, classify(b.points(), {half, Perturbation::Exact, 0, std::nullopt})), 2);
  PointList c({P(0, 0)});
  Classification on = {Side::On}, off = {Side::Left};
  EXPECT_EQ(vf_line(c, on), 1);
  EXPECT_EQ(vf_line(c, off), 0);
  EXPECT_THROW(vf_line(b, on), DomainError);
}

TEST(VfTest, InvariantUnderAffineMaps) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    auto pts = testing::random_list(rng, 6);
    std::vector<Point> img;
    for (const auto& p : pts) img.emplace_back(-p.x + 2 * p.y - 3, 5 * p.x + p.y);
    EXPECT_EQ(vf(PointList(pts)).value, vf(PointList(img)).value);
  }
}

TEST(VarExactTest, MoreExamples) {
  std::vector<Point> half = {P(0, 0), {Rational(1, 2), 0}, P(1, 0)};
  auto bump = table(half, {0, 1, 0});
  auto r = var_exact(bump, {4, 1'000'000});
  EXPECT_DOUBLE_EQ(r.lower_bound, 2.0);
  EXPECT_TRUE(r.certified);
  EXPECT_DOUBLE_EQ(var_exact(table(half, {3, 3, 3}), {4, 1'000'000}).lower_bound, 0.0);
  std::vector<Complex> v = {Complex(1, 1), Complex(-2, 5)};
  FnTable two({P(0, 0), P(3, 1)}, v);
  EXPECT_DOUBLE_EQ(var_exact(two, {6, 1'000'000}).lower_bound, 5.0);
}

TEST(VarExactTest, ZeroOnlyForConstants) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> val(0, 1);
  std::vector<Point> pts = {P(0, 0), P(1, 2), P(3, 1), P(2, -1)};
  for (int t = 0; t < 16; ++t) {
    std::vector<double> vals(4);
    for (auto& x : vals) x = val(rng);
    bool constant = std::all_of(vals.begin(), vals.end(), [&](double x) { return x == vals[0]; });
    double v = var_exact(table(pts, vals), {4, 1'000'000}).lower_bound;
    EXPECT_EQ(v == 0.0, constant);
  }
}

TEST(VarExactTest, MonotoneRelabelingOfCollinearSets) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    // Order-preserving map of {0, 1, 3, 4, 7} on the x-axis onto points of a
    // slanted line at uneven spacing.
    std::vector<Point> a = {P(0, 0), P(1, 0), P(3, 0), P(4, 0), P(7, 0)};
    std::vector<Point> b = {P(0, 0), P(1, 1), P(5, 5), P(6, 6), P(20, 20)};
    std::vector<double> vals(5);
    for (auto& x : vals) x = u(rng);
    double va = var_exact(table(a, vals), {5, 10'000'000}).lower_bound;
    double vb = var_exact(table(b, vals), {5, 10'000'000}).lower_bound;
    EXPECT_EQ(va, vb);
  }
}

TEST(VarSearchTest, AtLeastBestPairAndHalfPlaneAtMostOne) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<Point> pts;
    while (pts.size() < 12) {
      Point p = testing::random_small_point(rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<double> vals(12);
    for (auto& x : vals) x = u(rng);
    double pair = 0.0;
    for (double x : vals)
      for (double y : vals) pair = std::max(pair, std::abs(x - y));
    EXPECT_GE(var_search(table(pts, vals), {300, 0, 1}).lower_bound, pair);

    // Indicator of the closed half-plane x + 2y <= 1.
    std::vector<double> chi(12);
    for (int i = 0; i < 12; ++i) chi[i] = pts[i].x + 2 * pts[i].y <= 1 ? 1.0 : 0.0;
    EXPECT_LE(var_search(table(pts, chi), {500, 0, static_cast<std::uint64_t>(t)}).lower_bound,
              1.0);
  }
}

TEST(BvNormTest, MoreExamples) {
  std::vector<Point> pts = {P(0, 0), P(1, 1), P(3, 0)};
  EXPECT_DOUBLE_EQ(bv_norm(table(pts, {1, 1, 1}), VarMode::exhaustive(4)).value, 1.0);
  std::vector<Point> line = {P(0, 0), P(1, 0), P(2, 0)};
  EXPECT_DOUBLE_EQ(bv_norm(table(line, {0, 1, 0}), VarMode::exhaustive(5)).value, 3.0);

  // f(x, y) = x on the 50-point uniform grid of [0, 1] x {0}.
  std::vector<Point> grid;
  std::vector<double> x;
  for (long k = 0; k < 50; ++k) {
    Rational r(k, 49);
    r.canonicalize();
    grid.emplace_back(r, 0);
    x.push_back(to_double(r));
  }
  auto f = table(grid, x);
  auto n = bv_norm(f, VarMode::searched(200));
  EXPECT_DOUBLE_EQ(var_1d(f), 1.0);
  EXPECT_DOUBLE_EQ(n.variation.lower_bound, 1.0);
  EXPECT_DOUBLE_EQ(n.value, 2.0);
}

TEST(Var1dTest, MonotoneValues) {
  auto f = table({P(2, 1), P(0, 1), P(5, 1), P(1, 1)}, {2, 0, 9, 1});
  EXPECT_DOUBLE_EQ(var_1d(f), 9.0);
}

TEST(LgNormTest, ConstantIsSupNorm) {
  auto f = table({P(0, 0), P(1, 0), P(1, 1)}, {-3, -3, -3});
  std::vector<std::vector<std::size_t>> pieces = {{0, 1}, {1, 2}};
  EXPECT_DOUBLE_EQ(lg_norm(f, pieces), 3.0);
}

}  // namespace
}  // namespace planevar
