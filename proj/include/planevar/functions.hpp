#pragma once

// Function families on finite sets: indicators, polynomials in (x, y), the
// half-plane ramp, the Cantor homeomorphism of [0, 1] and the folding map.

#include <map>
#include <utility>

#include "planevar/varcalc.hpp"

namespace planevar {

/// Sum of c_nm x^n y^m with complex rational coefficients (re, im).
class Poly2 {
 public:
  Poly2& add_term(int x_degree, int y_degree, const Rational& re,
                  const Rational& im = 0);

  std::pair<Rational, Rational> evaluate_exact(const Point& p) const;
  Complex evaluate(const Point& p) const;

  const std::map<std::pair<int, int>, std::pair<Rational, Rational>>& terms() const {
    return terms_;
  }

 private:
  std::map<std::pair<int, int>, std::pair<Rational, Rational>> terms_;
};

/// Closed half-plane: the points classified `side` or On against `boundary`.
struct HalfPlane {
  Line boundary;
  Side side = Side::Left;

  bool contains(const Point& p) const {
    Side s = classify(p, boundary);
    return s == Side::On || s == side;
  }
  HalfPlane complement_closure() const { return {boundary, mirror(side)}; }
};

FnTable indicator_halfplane(const HalfPlane& h, std::span<const Point> sigma);

/// Throws DomainError when z is not in sigma.
FnTable indicator_singleton(const Point& z, std::span<const Point> sigma);

FnTable poly2_eval(const Poly2& p, std::span<const Point> sigma);

/// Piecewise-planar approximation of the half-plane indicator: 1 on the closed
/// half-plane, 0 from distance delta outside it onwards, and linear in the
/// distance across the strip in between.  Points outside the strip get exact
/// 0 or 1 (decided by exact squared-distance comparison).
FnTable ramp_halfplane(const HalfPlane& h, const Rational& delta,
                       std::span<const Point> sigma);

/// Cantor function by ternary recursion to `depth` levels, starting from the
/// identity at depth 0.  Exact.  Throws DomainError outside [0, 1] or for a
/// negative depth.
Rational cantor_function(const Rational& x, int depth);

/// (x + C(x)) / 2 with the depth-limited Cantor function; increasing, fixes 0
/// and 1.
Rational cantor_homeomorphism_exact(const Rational& x, int depth);
double cantor_homeomorphism(const Rational& x, int depth);

/// 1/2 - x on [0, 1/2], identity on (1/2, 1].  Throws DomainError outside [0, 1].
Rational folding_map(const Rational& x);

/// Pointwise real and imaginary parts.
std::pair<FnTable, FnTable> re_im(const FnTable& f);

/// Pointwise product and sum of two tables on the same domain (same order).
FnTable multiply(const FnTable& f, const FnTable& g);
FnTable add(const FnTable& f, const FnTable& g);
FnTable scale(const FnTable& f, Complex lambda);

}  // namespace planevar
