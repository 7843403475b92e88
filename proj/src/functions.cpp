#include "planevar/functions.hpp"

#include <algorithm>
#include <cmath>

namespace planevar {
namespace {

Rational power(const Rational& base, int exponent) {
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::vector<Point> copy_points(std::span<const Point> sigma) {
  if (sigma.empty()) throw DomainError("empty point set");
  return {sigma.begin(), sigma.end()};
}

template <class Fn>
FnTable tabulate(std::span<const Point> sigma, Fn&& fn) {
  std::vector<Point> pts = copy_points(sigma);
  std::vector<Complex> vals;
  vals.reserve(pts.size());
  for (const Point& p : pts) vals.push_back(fn(p));
  return FnTable(std::move(pts), std::move(vals));
}

void check_unit_interval(const Rational& x, const char* what) {
  if (x < 0 || x > 1) {
    throw DomainError(std::string(what) + ": " + to_string(x) + " is outside [0, 1]");
  }
}

void check_same_domain(const FnTable& f, const FnTable& g) {
  if (f.size() != g.size() ||
      !std::equal(f.domain().begin(), f.domain().end(), g.domain().begin())) {
    throw DomainError("tables are on different domains");
  }
}

}  // namespace

Poly2& Poly2::add_term(int x_degree, int y_degree, const Rational& re,
                       const Rational& im) {
  if (x_degree < 0 || y_degree < 0) throw DomainError("negative degree");
  auto& c = terms_[{x_degree, y_degree}];
  c.first += re;
  c.second += im;
  return *this;
}

std::pair<Rational, Rational> Poly2::evaluate_exact(const Point& p) const {
  Rational re = 0, im = 0;
  for (const auto& [deg, coef] : terms_) {
    Rational mono = power(p.x, deg.first) * power(p.y, deg.second);
    re += coef.first * mono;
    im += coef.second * mono;
  }
  return {re, im};
}

Complex Poly2::evaluate(const Point& p) const {
  auto [re, im] = evaluate_exact(p);
  return {to_double(re), to_double(im)};
}

FnTable indicator_halfplane(const HalfPlane& h, std::span<const Point> sigma) {
  return tabulate(sigma, [&](const Point& p) { return Complex(h.contains(p) ? 1.0 : 0.0); });
}

FnTable indicator_singleton(const Point& z, std::span<const Point> sigma) {
  if (std::find(sigma.begin(), sigma.end(), z) == sigma.end()) {
    throw DomainError("singleton point " + to_string(z) + " is not in the set");
  }
  return tabulate(sigma, [&](const Point& p) { return Complex(p == z ? 1.0 : 0.0); });
}

FnTable poly2_eval(const Poly2& poly, std::span<const Point> sigma) {
  return tabulate(sigma, [&](const Point& p) { return poly.evaluate(p); });
}

FnTable ramp_halfplane(const HalfPlane& h, const Rational& delta,
                       std::span<const Point> sigma) {
  if (delta <= 0) throw DomainError("ramp width must be positive");
  const Line& l = h.boundary;
  const Rational norm_sq = l.a() * l.a() + l.b() * l.b();
  const Rational width_sq = delta * delta * norm_sq;
  const double scale = to_double(delta) * std::sqrt(to_double(norm_sq));
  return tabulate(sigma, [&](const Point& p) {
    if (h.contains(p)) return Complex(1.0);
    Rational e = l.evaluate(p);
    Rational e_sq = e * e;
    if (e_sq >= width_sq) return Complex(0.0);
    // Strictly inside the strip: 1 - dist/delta.
    double t = std::abs(to_double(e)) / scale;
    return Complex(std::clamp(1.0 - t, 0.0, 1.0));
  });
}

Rational cantor_function(const Rational& x, int depth) {
  check_unit_interval(x, "cantor_function");
  if (depth < 0) throw DomainError("cantor_function: negative depth");
  // Iterative form of C(x) = C(3x)/2 on [0,1/3], 1/2 on [1/3,2/3],
  // 1/2 + C(3x-2)/2 on [2/3,1].
  const Rational third(1, 3), two_thirds(2, 3), half(1, 2);
  Rational value = 0;
  Rational weight = 1;
  Rational y = x;
  for (int level = 0; level < depth; ++level) {
    if (y < third) {
      y *= 3;
      weight *= half;
    } else if (y <= two_thirds) {
      return value + weight * half;
    } else {
      value += weight * half;
      weight *= half;
      y = 3 * y - 2;
    }
  }
  return value + weight * y;
}

Rational cantor_homeomorphism_exact(const Rational& x, int depth) {
  return (x + cantor_function(x, depth)) / 2;
}

double cantor_homeomorphism(const Rational& x, int depth) {
  return to_double(cantor_homeomorphism_exact(x, depth));
}

Rational folding_map(const Rational& x) {
  check_unit_interval(x, "folding_map");
  if (x <= Rational(1, 2)) return Rational(1, 2) - x;
  return x;
}

std::pair<FnTable, FnTable> re_im(const FnTable& f) {
  std::vector<Point> pts(f.domain().begin(), f.domain().end());
  std::vector<Complex> re, im;
  for (const Complex& v : f.values()) {
    re.emplace_back(v.real());
    im.emplace_back(v.imag());
  }
  return {FnTable(pts, std::move(re)), FnTable(pts, std::move(im))};
}

FnTable multiply(const FnTable& f, const FnTable& g) {
  check_same_domain(f, g);
  std::vector<Complex> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] * g[i];
  return FnTable({f.domain().begin(), f.domain().end()}, std::move(v));
}

FnTable add(const FnTable& f, const FnTable& g) {
  check_same_domain(f, g);
  std::vector<Complex> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] + g[i];
  return FnTable({f.domain().begin(), f.domain().end()}, std::move(v));
}

FnTable scale(const FnTable& f, Complex lambda) {
  std::vector<Complex> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = lambda * f[i];
  return FnTable({f.domain().begin(), f.domain().end()}, std::move(v));
}

}  // namespace planevar
