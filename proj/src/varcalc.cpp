#include "planevar/varcalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace planevar {
namespace {

double cvar_indices(std::span<const Complex> values,
                    std::span<const std::size_t> list) {
  double sum = 0.0;
  for (std::size_t i = 1; i < list.size(); ++i) {
    sum += std::abs(values[list[i]] - values[list[i - 1]]);
  }
  return sum;
}

void check_same_host(const FnTable& f, const HostFamily& family) {
  if (f.size() != family.host_size() ||
      !std::equal(f.domain().begin(), f.domain().end(), family.host().begin())) {
    throw DomainError("function domain and host family disagree");
  }
}

// Counts crossings per candidate into `counts` (size K) for a host-index list.
void count_crossings(const HostFamily& family, std::span<const std::size_t> list,
                     std::vector<int>& counts) {
  const std::size_t K = family.size();
  counts.assign(K, 0);
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    auto here = family.column(list[i]);
    auto next = family.column(list[i + 1]);
    if (i == 0) {
      for (std::size_t k = 0; k < K; ++k) counts[k] += crosses(0, here[k], next[k], true);
    } else {
      auto prev = family.column(list[i - 1]);
      for (std::size_t k = 0; k < K; ++k) {
        counts[k] += crosses(prev[k], here[k], next[k], false);
      }
    }
  }
}

bool valid_list(std::span<const std::size_t> list) {
  if (list.empty()) return false;
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (list[i] == list[i - 1]) return false;
  }
  return true;
}

}  // namespace

PointList::PointList(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("a point list needs at least one point");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i] == points_[i - 1]) {
      throw DomainError("consecutive equal points at positions " +
                        std::to_string(i - 1) + " and " + std::to_string(i));
    }
  }
}

PointList PointList::reversed() const {
  return PointList(std::vector<Point>(points_.rbegin(), points_.rend()));
}

FnTable::FnTable(std::vector<Point> domain, std::vector<Complex> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (domain_.empty()) throw DomainError("function table needs a nonempty domain");
  if (domain_.size() != values_.size()) {
    throw DomainError("function table has " + std::to_string(domain_.size()) +
                      " points but " + std::to_string(values_.size()) + " values");
  }
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
      throw DomainError("non-finite function value at index " + std::to_string(i));
    }
    if (!index_.emplace(domain_[i], i).second) {
      throw DomainError("duplicate domain point " + to_string(domain_[i]));
    }
  }
}

const Complex& FnTable::at(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw DomainError("point " + to_string(p) + " is not in the domain");
  }
  return values_[it->second];
}

std::optional<std::size_t> FnTable::index_of(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double FnTable::sup_norm() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double cvar(const FnTable& f, const PointList& list) {
  double sum = 0.0;
  for (std::size_t i = 1; i < list.size(); ++i) {
    sum += std::abs(f.at(list[i]) - f.at(list[i - 1]));
  }
  return sum;
}

int vf_line(const PointList& list, std::span<const Side> sides) {
  if (sides.size() != list.size()) {
    throw DomainError("classification has " + std::to_string(sides.size()) +
                      " entries for a list of " + std::to_string(list.size()));
  }
  if (list.size() == 1) return sides[0] == Side::On ? 1 : 0;
  int count = 0;
  for (std::size_t i = 0; i < list.segments(); ++i) {
    count += is_crossing_segment(sides, i) ? 1 : 0;
  }
  return count;
}

VfResult vf(const PointList& list) {
  if (list.size() == 1) {
    const Point& p = list[0];
    return {1, {Line::from_coefficients(1, 0, p.x), Perturbation::Exact, 0, std::nullopt}};
  }
  std::vector<Candidate> family = enumerate_candidates(list.points());
  VfResult best{0, family.front().line};
  for (const Candidate& c : family) {
    int n = vf_line(list, c.sides);
    if (n > best.value) best = {n, c.line};
  }
  return best;
}

HostFamily::HostFamily(std::vector<Point> host) : host_(std::move(host)) {
  std::vector<Candidate> family = enumerate_candidates(host_);
  const std::size_t K = family.size();
  candidates_.reserve(K);
  columns_.resize(K * host_.size());
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t idx = 0; idx < host_.size(); ++idx) {
      columns_[idx * K + k] = static_cast<std::int8_t>(family[k].sides[idx]);
    }
    candidates_.push_back(std::move(family[k].line));
  }
}

VfResult HostFamily::vf_with_witness(std::span<const std::size_t> list) const {
  if (list.empty()) throw DomainError("vf of an empty list");
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] >= host_.size()) {
      throw DomainError("host index " + std::to_string(list[i]) + " out of range");
    }
    if (i > 0 && list[i] == list[i - 1]) {
      throw DomainError("consecutive repeat at position " + std::to_string(i));
    }
  }
  if (list.size() == 1) {
    auto col = column(list[0]);
    std::size_t k = static_cast<std::size_t>(
        std::find(col.begin(), col.end(), std::int8_t{0}) - col.begin());
    return {1, candidates_[std::min(k, size() - 1)]};
  }
  std::vector<int> counts;
  count_crossings(*this, list, counts);
  auto it = std::max_element(counts.begin(), counts.end());
  return {*it, candidates_[static_cast<std::size_t>(it - counts.begin())]};
}

int HostFamily::vf(std::span<const std::size_t> list) const {
  return vf_with_witness(list).value;
}

std::uint64_t count_lists(std::size_t host_size, std::size_t max_length) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t level = host_size;
  for (std::size_t len = 1; len <= max_length; ++len) {
    if (total > kMax - level) return kMax;
    total += level;
    if (host_size > 1 && level > kMax / (host_size - 1)) {
      level = kMax;
    } else {
      level *= host_size > 0 ? host_size - 1 : 0;
    }
    if (level == 0) break;
  }
  return total;
}

VariationEstimate var_exact(const FnTable& f, const HostFamily& family,
                            const ExactOptions& options) {
  check_same_host(f, family);
  const std::size_t m = f.size();
  const std::size_t L = std::max<std::size_t>(options.max_length, 1);
  const std::uint64_t total = count_lists(m, L);
  if (total > options.max_lists) {
    throw BudgetExceeded("var_exact: " + std::to_string(total) +
                         " lists of length <= " + std::to_string(L) + " over " +
                         std::to_string(m) + " points exceed the budget of " +
                         std::to_string(options.max_lists));
  }
  const std::size_t K = family.size();
  std::span<const Complex> values = f.values();

  VariationEstimate best;
  best.certified = true;
  best.length_bound = L;
  best.witness = {0};
  best.lower_bound = 0.0;

  std::vector<std::size_t> list;
  list.reserve(L);
  std::vector<int> counts(L * K, 0);
  std::vector<double> partial(L, 0.0);
  std::uint64_t examined = 0;
  std::size_t longest = 0;

  // Depth-first in lexicographic order; a strictly better ratio replaces the
  // incumbent, so ties keep the lexicographically smallest list.
  auto visit = [&](auto&& self, std::size_t depth) -> void {
    ++examined;
    longest = std::max(longest, depth + 1);
    if (depth > 0) {
      const int* row = counts.data() + depth * K;
      int v = *std::max_element(row, row + K);
      double ratio = partial[depth] / v;
      if (ratio > best.lower_bound) {
        best.lower_bound = ratio;
        best.witness = list;
        best.witness_cvar = partial[depth];
        best.witness_vf = v;
      }
    }
    if (depth + 1 == L) return;
    const std::size_t last = list[depth];
    auto here = family.column(last);
    const int* src = counts.data() + depth * K;
    int* dst = counts.data() + (depth + 1) * K;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == last) continue;
      auto next = family.column(j);
      if (depth == 0) {
        for (std::size_t k = 0; k < K; ++k) dst[k] = src[k] + crosses(0, here[k], next[k], true);
      } else {
        auto prev = family.column(list[depth - 1]);
        for (std::size_t k = 0; k < K; ++k) {
          dst[k] = src[k] + crosses(prev[k], here[k], next[k], false);
        }
      }
      partial[depth + 1] = partial[depth] + std::abs(values[j] - values[last]);
      list.push_back(j);
      self(self, depth + 1);
      list.pop_back();
    }
  };

  for (std::size_t start = 0; start < m; ++start) {
    list.assign(1, start);
    partial[0] = 0.0;
    std::fill(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(K), 0);
    visit(visit, 0);
  }
  best.lists_examined = examined;
  best.longest_list = longest;
  return best;
}

VariationEstimate var_exact(const FnTable& f, const ExactOptions& options) {
  HostFamily family(std::vector<Point>(f.domain().begin(), f.domain().end()));
  return var_exact(f, family, options);
}

namespace {

class ListSearch {
 public:
  ListSearch(const FnTable& f, const HostFamily& family, std::size_t max_length)
      : values_(f.values()), family_(family), max_length_(max_length) {}

  double evaluate(const std::vector<std::size_t>& list) {
    ++examined_;
    longest_ = std::max(longest_, list.size());
    double c = cvar_indices(values_, list);
    if (list.size() < 2 || c == 0.0) return 0.0;
    int v = family_.vf(list);
    return c / v;
  }

  void offer(const std::vector<std::size_t>& list, double score) {
    if (score > best_score_ || best_.empty()) {
      best_score_ = score;
      best_ = list;
    }
  }

  std::uint64_t examined_ = 0;
  std::size_t longest_ = 0;
  std::vector<std::size_t> best_;
  double best_score_ = 0.0;
  std::span<const Complex> values_;
  const HostFamily& family_;
  std::size_t max_length_;
};

std::vector<std::vector<std::size_t>> sweep_orders(std::span<const Point> pts) {
  const int dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  for (const auto& d : dirs) {
    std::vector<Rational> key(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) key[i] = d[0] * pts[i].x + d[1] * pts[i].y;
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (key[a] != key[b]) return key[a] < key[b];
      return pts[a] < pts[b];
    });
    if (seen.insert(order).second) out.push_back(std::move(order));
  }
  return out;
}

}  // namespace

VariationEstimate var_search(const FnTable& f, const HostFamily& family,
                             const SearchOptions& options) {
  check_same_host(f, family);
  const std::size_t m = f.size();
  const std::size_t max_len =
      options.max_length ? options.max_length : std::max<std::size_t>(4 * m, 2);
  ListSearch search(f, family, max_len);
  std::span<const Complex> values = f.values();

  search.offer({0}, 0.0);
  // Every two-point list has vf 1, so the best pair needs no vf evaluation.
  if (max_len >= 2) {
    double top = 0.0;
    std::vector<std::size_t> pair;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        double d = std::abs(values[i] - values[j]);
        if (d > top) {
          top = d;
          pair = {i, j};
        }
      }
    }
    search.examined_ += m * (m - 1) / 2;
    if (!pair.empty()) search.offer(pair, search.evaluate(pair));
  }

  // Sorted sweeps; along a line a sweep is a list with vf 1.
  if (max_len >= 2 && m >= 2) {
    for (const auto& order : sweep_orders(f.domain())) {
      if (order.size() <= max_len) {
        search.offer(order, search.evaluate(order));
      } else {
        std::size_t stride = std::max<std::size_t>(1, (order.size() - max_len) / 8);
        for (std::size_t s = 0; s + max_len <= order.size(); s += stride) {
          std::vector<std::size_t> window(order.begin() + static_cast<std::ptrdiff_t>(s),
                                          order.begin() + static_cast<std::ptrdiff_t>(s + max_len));
          search.offer(window, search.evaluate(window));
        }
      }
    }
  }

  std::uint64_t spent = 0;
  const std::uint64_t budget = options.budget;

  // Greedy growth from the incumbent, at most half the budget.
  if (m >= 2) {
    std::vector<std::size_t> current = search.best_;
    double score = search.best_score_;
    while (spent < budget / 2 && current.size() < max_len) {
      std::vector<std::size_t> step_best;
      double step_score = score;
      for (std::size_t j = 0; j < m && spent < budget / 2; ++j) {
        if (j != current.back()) {
          auto cand = current;
          cand.push_back(j);
          double s = search.evaluate(cand);
          ++spent;
          if (s > step_score) {
            step_score = s;
            step_best = std::move(cand);
          }
        }
        if (j != current.front()) {
          std::vector<std::size_t> cand{j};
          cand.insert(cand.end(), current.begin(), current.end());
          double s = search.evaluate(cand);
          ++spent;
          if (s > step_score) {
            step_score = s;
            step_best = std::move(cand);
          }
        }
      }
      if (step_best.empty()) break;
      current = std::move(step_best);
      score = step_score;
      search.offer(current, score);
    }
  }

  // Hill climbing with plateau moves and restarts from the incumbent.
  if (m >= 2) {
    std::mt19937_64 rng(options.seed);
    auto pick = [&](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    std::vector<std::size_t> current = search.best_;
    double score = search.best_score_;
    int stall = 0;
    while (spent < budget) {
      ++spent;
      std::vector<std::size_t> cand = current;
      switch (pick(5)) {
        case 0:
          cand.push_back(pick(m));
          break;
        case 1:
          cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(pick(cand.size() + 1)), pick(m));
          break;
        case 2:
          if (cand.size() > 1) cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(pick(cand.size())));
          break;
        case 3:
          if (cand.size() > 1) std::swap(cand[pick(cand.size())], cand[pick(cand.size())]);
          break;
        default:
          cand[pick(cand.size())] = pick(m);
          break;
      }
      if (cand == current || cand.size() > max_len || !valid_list(cand)) continue;
      double s = search.evaluate(cand);
      if (s >= score) {
        current = std::move(cand);
        score = s;
        if (s > search.best_score_) {
          search.offer(current, s);
          stall = 0;
          continue;
        }
      }
      if (++stall > 64) {
        current = search.best_;
        score = search.best_score_;
        stall = 0;
      }
    }
  }

  VariationEstimate out;
  out.witness = search.best_;
  out.witness_cvar = cvar_indices(values, out.witness);
  out.witness_vf = family.vf(out.witness);
  out.lower_bound = out.witness_cvar / out.witness_vf;
  out.certified = false;
  out.length_bound = max_len;
  out.lists_examined = search.examined_;
  out.longest_list = search.longest_;
  return out;
}

VariationEstimate var_search(const FnTable& f, const SearchOptions& options) {
  HostFamily family(std::vector<Point>(f.domain().begin(), f.domain().end()));
  return var_search(f, family, options);
}

VariationEstimate variation(const FnTable& f, const HostFamily& family,
                            const VarMode& mode) {
  return mode.kind == VarMode::Kind::Exact ? var_exact(f, family, mode.exact)
                                           : var_search(f, family, mode.search);
}

NormValue bv_norm(const FnTable& f, const HostFamily& family, const VarMode& mode) {
  NormValue out;
  out.sup_norm = f.sup_norm();
  out.variation = variation(f, family, mode);
  out.value = out.sup_norm + out.variation.lower_bound;
  return out;
}

NormValue bv_norm(const FnTable& f, const VarMode& mode) {
  HostFamily family(std::vector<Point>(f.domain().begin(), f.domain().end()));
  return bv_norm(f, family, mode);
}

double var_1d(const FnTable& f) {
  std::span<const Point> pts = f.domain();
  if (!collinear(pts)) throw DomainError("var_1d: domain is not collinear");
  if (pts.size() < 2) return 0.0;
  const Point& origin = pts[0];
  const Point& other = pts[1];
  Rational dx = other.x - origin.x;
  Rational dy = other.y - origin.y;
  std::vector<Rational> t(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    t[i] = dx * (pts[i].x - origin.x) + dy * (pts[i].y - origin.y);
  }
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  return cvar_indices(f.values(), order);
}

FnTable restrict_to(const FnTable& f, std::span<const std::size_t> indices) {
  std::vector<Point> pts;
  std::vector<Complex> vals;
  for (std::size_t i : indices) {
    if (i >= f.size()) throw DomainError("index " + std::to_string(i) + " out of range");
    pts.push_back(f.domain()[i]);
    vals.push_back(f[i]);
  }
  return FnTable(std::move(pts), std::move(vals));
}

double lg_norm(const FnTable& f, std::span<const std::vector<std::size_t>> pieces) {
  std::vector<bool> covered(f.size(), false);
  double total = f.sup_norm();
  for (const auto& piece : pieces) {
    for (std::size_t i : piece) {
      if (i < covered.size()) covered[i] = true;
    }
    total += var_1d(restrict_to(f, piece));
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) {
      throw DomainError("point #" + std::to_string(i) + " " + to_string(f.domain()[i]) +
                        " is in no piece of the decomposition");
    }
  }
  return total;
}

}  // namespace planevar
