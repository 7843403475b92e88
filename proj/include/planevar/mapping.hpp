#pragma once

// Bijections between finite point sets and the pushforward f -> f o h^{-1}
// they induce on functions.  Everything that estimates a supremum here
// (vf(h), the operator norm of the pushforward) reports a lower bound
// together with the witness that reproduces it.

#include <optional>
#include <string>

#include "planevar/varcalc.hpp"

namespace planevar {

/// h: sources[i] -> targets[i].  Both sides must be free of duplicates.
class Bijection {
 public:
  Bijection(std::vector<Point> sources, std::vector<Point> targets);

  template <class Map>
  static Bijection from_map(std::vector<Point> sources, Map&& h) {
    std::vector<Point> targets;
    targets.reserve(sources.size());
    for (const Point& p : sources) targets.push_back(h(p));
    return Bijection(std::move(sources), std::move(targets));
  }

  std::span<const Point> sources() const { return sources_; }
  std::span<const Point> targets() const { return targets_; }
  std::size_t size() const { return sources_.size(); }

  const Point& image(const Point& p) const;
  const Point& preimage(const Point& q) const;
  Bijection inverse() const { return Bijection(targets_, sources_); }

 private:
  std::vector<Point> sources_;
  std::vector<Point> targets_;
  std::map<Point, std::size_t> source_index_;
  std::map<Point, std::size_t> target_index_;
};

/// (pushforward f)(h(z)) = f(z); the result's domain is h's targets in
/// bijection order.  Throws DomainError unless dom(f) equals h's sources.
FnTable pushforward(const FnTable& f, const Bijection& h);

/// The table f listed in the order of `order` (same point set).
FnTable reorder(const FnTable& f, std::span<const Point> order);

struct RatioOptions {
  std::size_t max_length = 8;
  std::uint64_t budget = 20'000;  // list evaluations
  std::uint64_t seed = 1;
};

struct RatioEstimate {
  int source_vf = 1;  // vf(S)
  int image_vf = 1;   // vf(h(S))
  std::vector<std::size_t> witness;  // indices into h.sources()
  bool exhaustive = false;           // every list up to max_length was tried
  std::uint64_t lists_examined = 0;

  double value() const { return static_cast<double>(source_vf) / image_vf; }
};

/// Lower bound for vf(h) = sup_S vf(S) / vf(h(S)).  Exhaustive when the list
/// count fits the budget, otherwise seeded with sweeps in source and image
/// order and their zigzag interleavings, then refined by local search.
RatioEstimate vf_ratio_search(const Bijection& h, const RatioOptions& options = {});

struct NormRatioEstimate {
  double lower_bound = 0.0;
  std::size_t witness = 0;  // index into the test family
  double source_norm = 0.0;
  double image_norm = 0.0;
  bool certified = false;  // both norms used exhaustive variation
};

/// max over the family of bv_norm(pushforward f) / bv_norm(f).  Functions
/// with zero norm are skipped.  Throws DomainError on an empty family.
NormRatioEstimate norm_ratio_search(const Bijection& h,
                                    std::span<const FnTable> family,
                                    const VarMode& mode);

/// Indicators of both closed half-planes of every candidate line of the set,
/// followed by every singleton indicator; duplicates removed.
std::vector<FnTable> default_test_family(std::span<const Point> sigma);

struct ComplexAffine {  // z -> alpha z + beta
  Rational alpha_re, alpha_im, beta_re, beta_im;
};

struct RealAffine {  // p -> M p + t, det M != 0
  Rational m00, m01, m10, m11, t0, t1;
};

struct AffineCertificate {
  std::optional<ComplexAffine> complex;
  std::optional<RealAffine> real;
};

/// Exact affine certificate for h, if one exists.  A complex-affine map also
/// gets its real 2x2 form.  Throws DomainError for fewer than two points.
AffineCertificate is_affine(const Bijection& h);

struct MapOptions {
  RatioOptions ratio;
  VarMode norm_mode = VarMode::searched(500);
};

struct MapReport {
  RatioEstimate vf_h;
  RatioEstimate vf_hinv;
  NormRatioEstimate norm_ratio;
  AffineCertificate affine;
};

MapReport analyze(const Bijection& h, const MapOptions& options = {});

}  // namespace planevar
