#pragma once

// Exact planar primitives: points, canonical lines, side classification and
// the crossing-segment predicate.  Every predicate here is evaluated in exact
// rational arithmetic; there are no tolerances anywhere in this header.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planevar/rational.hpp"

namespace planevar {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic on (x, y); used for ordered containers only.
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

std::string to_string(const Point& p);

enum class Side : std::int8_t { Left = -1, On = 0, Right = 1 };

inline Side mirror(Side s) { return static_cast<Side>(-static_cast<int>(s)); }

/// One side per point of the list (or host set) being classified.
using Classification = std::vector<Side>;

/// The locus a*x + b*y = c, stored with coprime integer coefficients and the
/// first nonzero of (a, b) positive, so equal lines compare equal.
class Line {
 public:
  static Line through(const Point& p, const Point& q);
  static Line from_coefficients(const Rational& a, const Rational& b,
                                const Rational& c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  // a*x + b*y - c; its sign is the side of p.
  Rational evaluate(const Point& p) const { return a_ * p.x + b_ * p.y - c_; }

  friend bool operator==(const Line& l, const Line& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend bool operator<(const Line& l, const Line& r);

 private:
  Line(Rational a, Rational b, Rational c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Rational a_, b_, c_;
};

std::string to_string(const Line& l);

Side classify(const Point& p, const Line& line);

enum class Perturbation : std::uint8_t {
  Exact,
  OffsetLeft,
  OffsetRight,
  RotatePlus,   // counter-clockwise infinitesimal turn about the pivot
  RotateMinus,  // clockwise infinitesimal turn about the pivot
};

std::string to_string(Perturbation p);

/// A base line plus a symbolic perturbation.  Rotations name the pivot by
/// its index in the point sequence the candidate was built for; a rotation
/// may additionally push the pivot itself off the line (`pivot_offset`),
/// which is the classification of a line crossing the base line strictly
/// between points.
struct CandidateLine {
  Line base;
  Perturbation perturbation = Perturbation::Exact;
  std::size_t pivot = 0;
  std::optional<Side> pivot_offset;
};

std::string to_string(const CandidateLine& c, std::span<const Point> points);

/// Classification of `points` against a (perturbed) candidate line.
Classification classify(std::span<const Point> points,
                        const CandidateLine& candidate);

struct Candidate {
  CandidateLine line;
  Classification sides;
};

/// Every classification of `points` that some line in the plane realises,
/// each exactly once and with a witness.  Output order is deterministic.
/// Throws DomainError on an empty input.
std::vector<Candidate> enumerate_candidates(std::span<const Point> points);

/// True when segment [x_i, x_{i+1}] crosses the line that produced `sides`:
/// endpoints strictly on opposite sides, or the list starts on the line, or
/// the segment starts on the line after arriving from off it.
/// Throws DomainError when i is not a segment index.
bool is_crossing_segment(std::span<const Side> sides, std::size_t i);

/// Crossing rule on raw side codes (-1, 0, 1); `prev` is ignored when
/// `first` is true.  Shared by the inner loops of the variation searches.
inline bool crosses(std::int8_t prev, std::int8_t here, std::int8_t next,
                    bool first) {
  if (here * next < 0) return true;
  if (here != 0) return false;
  return first || prev != 0;
}

/// True when every point lies on a single line (vacuously for <= 2 distinct
/// values).
bool collinear(std::span<const Point> points);

}  // namespace planevar
