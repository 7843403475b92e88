#pragma once

// Discretised versions of the worked examples and one-command reproduction
// of their checks.

#include <string>
#include <vector>

#include "planevar/functions.hpp"
#include "planevar/mapping.hpp"
#include "planevar/report.hpp"

namespace planevar {

struct ScenarioParams {
  std::size_t grid = 100;        // folding-interval: points on [0, 1]
  std::size_t truncation = 20;   // seq-bijection: n, giving 2n points
  std::size_t per_segment = 10;  // linear-graph-pair: points per segment
  std::size_t samples = 0;       // random functions; 0 picks the scenario default
  Rational delta{1, 1000};       // halfplane-ramp strip width
  int depth = 20;                // cantor-homeomorphism
  std::size_t cantor_grid = 1000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 64;     // var_search evaluations per function
};

const std::vector<std::string>& scenario_ids();

/// Runs every check of one scenario.  Throws DomainError for an unknown id.
Report reproduce(const std::string& id, const ScenarioParams& params = {});

/// The n cell centres (2k+1)/(2n) of [0, 1] on the x-axis; n must be even so
/// that the folding map permutes them.
std::vector<Point> centered_grid(std::size_t n);

Bijection folding_bijection(std::size_t n);

/// {+-1/k : k = 1..n} -> {1/j : j = 1..2n} with -1/k -> 1/(2k-1) and
/// 1/k -> 1/(2k).
Bijection sequence_bijection(std::size_t n);

/// The characteristic function of the positive points of a set.
FnTable positive_indicator(std::span<const Point> sigma);

/// A Y-shaped linear graph sigma (legs c-a, c-b, c-d of unit length) and the
/// segment tau, with h sending the path a-c-b onto [alpha, beta] and (c, d]
/// onto (beta, delta].
struct LinearGraphPair {
  Bijection h;
  std::vector<std::vector<std::size_t>> sigma_pieces;  // indices into h.sources()
  std::vector<std::vector<std::size_t>> tau_pieces;    // indices into h.targets()
  std::size_t centre = 0;                              // index of c
};

LinearGraphPair linear_graph_pair(std::size_t per_segment);

/// A list crossing the line 7x + 10y = 0 repeatedly, about half its points on
/// the line, and the closed half-plane below-left of it.
struct RampSetup {
  PointList list;
  HalfPlane half_plane;
};

RampSetup ramp_setup();

}  // namespace planevar
