#pragma once

// Curve variation, variation factors and the two-dimensional variation of a
// function on a finite planar set.
//
// The variation is a supremum over every finite ordered list of points, so it
// is only ever computed in two honest forms: `var_exact` (the optimum over all
// lists up to a stated length, certified) and `var_search` (a seeded local
// search, a lower bound only).

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "planevar/geometry.hpp"

namespace planevar {

using Complex = std::complex<double>;

/// An ordered list of points with no two consecutive points equal.
/// Repeats at non-consecutive positions are allowed.
class PointList {
 public:
  explicit PointList(std::vector<Point> points);

  std::span<const Point> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t segments() const { return points_.size() - 1; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  PointList reversed() const;

 private:
  std::vector<Point> points_;
};

/// A function on a finite set: one complex value per (distinct) domain point.
class FnTable {
 public:
  FnTable(std::vector<Point> domain, std::vector<Complex> values);

  std::span<const Point> domain() const { return domain_; }
  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return domain_.size(); }

  const Complex& at(const Point& p) const;
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::optional<std::size_t> index_of(const Point& p) const;

  double sup_norm() const;

 private:
  std::vector<Point> domain_;
  std::vector<Complex> values_;
  std::map<Point, std::size_t> index_;
};

/// Sum of |f(x_i) - f(x_{i-1})| along the list; 0 for a single point.
double cvar(const FnTable& f, const PointList& list);

/// Number of crossing segments of the list for one classification.  A single
/// point list counts 1 when it lies on the line.
int vf_line(const PointList& list, std::span<const Side> sides);

struct VfResult {
  int value = 1;
  CandidateLine witness;
};

/// Exact variation factor: the maximum of vf_line over every classification
/// some line realises.  A one-point list has vf 1.
VfResult vf(const PointList& list);

/// Candidate classifications of a whole host set, precomputed once so that the
/// variation factor of any list drawn from the host costs a table scan.  A
/// line classifies every host point, so restricting these vectors to a list
/// gives exactly the list's realisable classifications.
class HostFamily {
 public:
  explicit HostFamily(std::vector<Point> host);

  std::span<const Point> host() const { return host_; }
  std::size_t host_size() const { return host_.size(); }
  std::size_t size() const { return candidates_.size(); }
  const CandidateLine& witness(std::size_t k) const { return candidates_[k]; }

  // Side codes of host point `idx` across every candidate.
  std::span<const std::int8_t> column(std::size_t idx) const {
    return {columns_.data() + idx * size(), size()};
  }

  /// vf of the list of host indices (consecutive repeats are rejected).
  int vf(std::span<const std::size_t> list) const;
  VfResult vf_with_witness(std::span<const std::size_t> list) const;

 private:
  std::vector<Point> host_;
  std::vector<CandidateLine> candidates_;
  std::vector<std::int8_t> columns_;  // host-major: columns_[idx * K + k]
};

struct ExactOptions {
  std::size_t max_length = 6;            // list length in points
  std::uint64_t max_lists = 50'000'000;  // refuse above this many lists
};

struct SearchOptions {
  std::uint64_t budget = 2'000;  // list evaluations for the local search
  std::size_t max_length = 0;    // 0: four times the host size
  std::uint64_t seed = 1;
};

struct VariationEstimate {
  double lower_bound = 0.0;
  std::vector<std::size_t> witness;  // indices into the function's domain
  double witness_cvar = 0.0;
  int witness_vf = 1;
  bool certified = false;
  std::size_t length_bound = 0;  // lists up to this length were considered
  std::uint64_t lists_examined = 0;
  std::size_t longest_list = 0;
};

/// Number of lists of length 1..max_length over `host_size` points without
/// consecutive repeats (saturating).
std::uint64_t count_lists(std::size_t host_size, std::size_t max_length);

/// max cvar/vf over all lists of length <= max_length.  Ties keep the
/// lexicographically smallest index sequence.  Throws BudgetExceeded rather
/// than truncating.
VariationEstimate var_exact(const FnTable& f, const HostFamily& family,
                            const ExactOptions& options = {});
VariationEstimate var_exact(const FnTable& f, const ExactOptions& options = {});

/// Deterministic lower bound by greedy extension and hill climbing, seeded
/// with every two-point list and with sorted sweeps of the domain.
VariationEstimate var_search(const FnTable& f, const HostFamily& family,
                             const SearchOptions& options = {});
VariationEstimate var_search(const FnTable& f, const SearchOptions& options = {});

struct VarMode {
  enum class Kind { Exact, Search };
  Kind kind = Kind::Exact;
  ExactOptions exact;
  SearchOptions search;

  static VarMode exhaustive(std::size_t max_length) {
    VarMode m;
    m.exact.max_length = max_length;
    return m;
  }
  static VarMode searched(std::uint64_t budget, std::uint64_t seed = 1,
                          std::size_t max_length = 0) {
    VarMode m;
    m.kind = Kind::Search;
    m.search = {budget, max_length, seed};
    return m;
  }
};

VariationEstimate variation(const FnTable& f, const HostFamily& family,
                            const VarMode& mode);

struct NormValue {
  double value = 0.0;
  double sup_norm = 0.0;
  VariationEstimate variation;
};

/// ||f||_inf + var(f); certification is carried by `variation.certified`.
NormValue bv_norm(const FnTable& f, const HostFamily& family, const VarMode& mode);
NormValue bv_norm(const FnTable& f, const VarMode& mode);

/// Classical variation along a line: the domain sorted along its supporting
/// line and the jumps summed.  Throws DomainError on non-collinear input.
double var_1d(const FnTable& f);

/// Sup norm plus the classical variation on each piece of a decomposition;
/// pieces are lists of domain indices of collinear points.  Throws
/// DomainError when a domain point belongs to no piece.
double lg_norm(const FnTable& f,
               std::span<const std::vector<std::size_t>> pieces);

/// Sub-table on the given domain indices (order preserved).
FnTable restrict_to(const FnTable& f, std::span<const std::size_t> indices);

}  // namespace planevar
