#include "planevar/geometry.hpp"

#include <map>
#include <set>

namespace planevar {
namespace {

int sign_of(const Rational& v) { return sgn(v); }

Side to_side(int s) {
  return s < 0 ? Side::Left : (s > 0 ? Side::Right : Side::On);
}

// Side of an on-line point q after an infinitesimal counter-clockwise turn of
// `line` about `pivot`: the turned normal picks up (-b, a) * eps.
int along_line_sign(const Line& line, const Point& pivot, const Point& q) {
  return sign_of(line.a() * (q.y - pivot.y) - line.b() * (q.x - pivot.x));
}

Classification perturbed(std::span<const Point> points, std::span<const int> base,
                         const CandidateLine& cand) {
  Classification out(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    int s = base[k];
    if (s == 0) {
      switch (cand.perturbation) {
        case Perturbation::Exact:
          break;
        case Perturbation::OffsetLeft:
          s = -1;
          break;
        case Perturbation::OffsetRight:
          s = 1;
          break;
        case Perturbation::RotatePlus:
        case Perturbation::RotateMinus: {
          const Point& pivot = points[cand.pivot];
          if (points[k] == pivot) {
            if (cand.pivot_offset) s = static_cast<int>(*cand.pivot_offset);
          } else {
            s = along_line_sign(cand.base, pivot, points[k]);
            if (cand.perturbation == Perturbation::RotateMinus) s = -s;
          }
          break;
        }
      }
    }
    out[k] = to_side(s);
  }
  return out;
}

std::vector<int> base_signs(std::span<const Point> points, const Line& line) {
  std::vector<int> s(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    s[k] = sign_of(line.evaluate(points[k]));
  }
  return s;
}

}  // namespace

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

Line Line::from_coefficients(const Rational& a, const Rational& b,
                             const Rational& c) {
  if (a == 0 && b == 0) {
    throw DomainError("line needs (a, b) != (0, 0)");
  }
  mpz_class den = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
  mpz_class ia = a.get_num() * (den / a.get_den());
  mpz_class ib = b.get_num() * (den / b.get_den());
  mpz_class ic = c.get_num() * (den / c.get_den());
  mpz_class g = gcd(gcd(ia, ib), ic);
  ia /= g;
  ib /= g;
  ic /= g;
  if (ia < 0 || (ia == 0 && ib < 0)) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  return Line(Rational(ia), Rational(ib), Rational(ic));
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) {
    throw DomainError("line through coincident points " + to_string(p));
  }
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  Rational c = a * p.x + b * p.y;
  return from_coefficients(a, b, c);
}

bool operator<(const Line& l, const Line& r) {
  if (l.a_ != r.a_) return l.a_ < r.a_;
  if (l.b_ != r.b_) return l.b_ < r.b_;
  return l.c_ < r.c_;
}

std::string to_string(const Line& l) {
  return to_string(l.a()) + "*x + " + to_string(l.b()) + "*y = " +
         to_string(l.c());
}

Side classify(const Point& p, const Line& line) {
  return to_side(sign_of(line.evaluate(p)));
}

std::string to_string(Perturbation p) {
  switch (p) {
    case Perturbation::Exact: return "exact";
    case Perturbation::OffsetLeft: return "offset-left";
    case Perturbation::OffsetRight: return "offset-right";
    case Perturbation::RotatePlus: return "rotate-plus";
    case Perturbation::RotateMinus: return "rotate-minus";
  }
  return "?";
}

std::string to_string(const CandidateLine& c, std::span<const Point> points) {
  std::string s = to_string(c.base) + " [" + to_string(c.perturbation);
  if (c.perturbation == Perturbation::RotatePlus ||
      c.perturbation == Perturbation::RotateMinus) {
    s += " about #" + std::to_string(c.pivot);
    if (c.pivot < points.size()) s += " " + to_string(points[c.pivot]);
    if (c.pivot_offset) {
      s += *c.pivot_offset == Side::Left ? ", pivot left" : ", pivot right";
    }
  }
  return s + "]";
}

Classification classify(std::span<const Point> points,
                        const CandidateLine& candidate) {
  if ((candidate.perturbation == Perturbation::RotatePlus ||
       candidate.perturbation == Perturbation::RotateMinus) &&
      (candidate.pivot >= points.size() ||
       classify(points[candidate.pivot], candidate.base) != Side::On)) {
    throw DomainError("rotation pivot must be a point on the base line");
  }
  std::vector<int> base = base_signs(points, candidate.base);
  return perturbed(points, base, candidate);
}

std::vector<Candidate> enumerate_candidates(std::span<const Point> points) {
  if (points.empty()) {
    throw DomainError("enumerate_candidates: empty point list");
  }
  // First index of every distinct point value.
  std::vector<std::size_t> reps;
  {
    std::map<Point, std::size_t> first;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (first.emplace(points[k], k).second) reps.push_back(k);
    }
  }

  std::vector<Candidate> out;
  std::set<Classification> seen;
  auto emit = [&](const CandidateLine& cand, std::span<const int> base) {
    Classification sides = perturbed(points, base, cand);
    if (seen.insert(sides).second) out.push_back({cand, std::move(sides)});
  };
  auto emit_line_family = [&](const Line& line, bool with_rotations) {
    std::vector<int> base = base_signs(points, line);
    emit({line, Perturbation::Exact, 0, std::nullopt}, base);
    emit({line, Perturbation::OffsetLeft, 0, std::nullopt}, base);
    emit({line, Perturbation::OffsetRight, 0, std::nullopt}, base);
    if (!with_rotations) return;
    for (std::size_t r : reps) {
      if (base[r] != 0) continue;
      for (Perturbation turn : {Perturbation::RotatePlus, Perturbation::RotateMinus}) {
        emit({line, turn, r, std::nullopt}, base);
        emit({line, turn, r, Side::Left}, base);
        emit({line, turn, r, Side::Right}, base);
      }
    }
  };

  if (reps.size() < 2) {
    const Point& p = points[reps.front()];
    emit_line_family(Line::from_coefficients(1, 0, p.x), false);
    emit_line_family(Line::from_coefficients(0, 1, p.y), false);
    return out;
  }

  std::set<Line> lines;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      Line line = Line::through(points[reps[i]], points[reps[j]]);
      if (lines.insert(line).second) emit_line_family(line, true);
    }
  }
  return out;
}

bool is_crossing_segment(std::span<const Side> sides, std::size_t i) {
  if (sides.size() < 2 || i + 1 >= sides.size()) {
    throw DomainError("segment index " + std::to_string(i) +
                      " out of range for a list of " +
                      std::to_string(sides.size()) + " points");
  }
  auto code = [&](std::size_t k) { return static_cast<std::int8_t>(sides[k]); };
  return crosses(i > 0 ? code(i - 1) : 0, code(i), code(i + 1), i == 0);
}

bool collinear(std::span<const Point> points) {
  std::optional<Point> first;
  std::optional<Line> line;
  for (const Point& p : points) {
    if (!first) {
      first = p;
    } else if (!line) {
      if (p != *first) line = Line::through(*first, p);
    } else if (classify(p, *line) != Side::On) {
      return false;
    }
  }
  return true;
}

}  // namespace planevar
