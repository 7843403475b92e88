#include "planevar/mapping.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "planevar/functions.hpp"

namespace planevar {
namespace {

std::map<Point, std::size_t> index_points(std::span<const Point> pts, const char* side) {
  std::map<Point, std::size_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!idx.emplace(pts[i], i).second) {
      throw DomainError(std::string("bijection: duplicate ") + side + " point " +
                        to_string(pts[i]));
    }
  }
  return idx;
}

// a/b > c/d for positive denominators.
bool ratio_greater(int a, int b, int c, int d) {
  return static_cast<long long>(a) * d > static_cast<long long>(c) * b;
}

std::vector<std::size_t> sweep(std::span<const Point> pts, int dx, int dy) {
  std::vector<Rational> key(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) key[i] = dx * pts[i].x + dy * pts[i].y;
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] < key[b];
    return pts[a] < pts[b];
  });
  return order;
}

// Seeds for the ratio search: sweeps of the sources in their own order and in
// the order of their images, plus two zigzag interleavings of each.
std::vector<std::vector<std::size_t>> ratio_seed_orders(const Bijection& h) {
  const int dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  auto add = [&](std::vector<std::size_t> o) {
    if (seen.insert(o).second) out.push_back(std::move(o));
  };
  for (std::span<const Point> side : {h.targets(), h.sources()}) {
    for (const auto& d : dirs) {
      std::vector<std::size_t> o = sweep(side, d[0], d[1]);
      const std::size_t n = o.size();
      std::vector<std::size_t> ends, halves;
      for (std::size_t i = 0, j = n; i < j;) {
        ends.push_back(o[i++]);
        if (i < j) ends.push_back(o[--j]);
      }
      for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        halves.push_back(o[i]);
        if (i + (n + 1) / 2 < n) halves.push_back(o[i + (n + 1) / 2]);
      }
      add(std::move(o));
      add(std::move(ends));
      add(std::move(halves));
    }
  }
  return out;
}

struct RatioState {
  const HostFamily& source;
  const HostFamily& image;
  RatioEstimate best;

  void offer(const std::vector<std::size_t>& list) {
    ++best.lists_examined;
    int a = source.vf(list);
    int b = image.vf(list);
    if (ratio_greater(a, b, best.source_vf, best.image_vf)) {
      best.source_vf = a;
      best.image_vf = b;
      best.witness = list;
    }
  }
};

void exhaustive_ratio(const HostFamily& source, const HostFamily& image,
                      std::size_t L, RatioEstimate& best) {
  const std::size_t m = source.host_size();
  const std::size_t K1 = source.size(), K2 = image.size();
  std::vector<int> c1(L * K1, 0), c2(L * K2, 0);
  std::vector<std::size_t> list;

  auto step = [](const HostFamily& fam, const std::vector<std::size_t>& lst,
                 std::size_t depth, std::size_t j, const int* src, int* dst) {
    const std::size_t K = fam.size();
    auto here = fam.column(lst[depth]);
    auto next = fam.column(j);
    if (depth == 0) {
      for (std::size_t k = 0; k < K; ++k) dst[k] = src[k] + crosses(0, here[k], next[k], true);
    } else {
      auto prev = fam.column(lst[depth - 1]);
      for (std::size_t k = 0; k < K; ++k) dst[k] = src[k] + crosses(prev[k], here[k], next[k], false);
    }
  };

  auto visit = [&](auto&& self, std::size_t depth) -> void {
    ++best.lists_examined;
    if (depth > 0) {
      const int* r1 = c1.data() + depth * K1;
      const int* r2 = c2.data() + depth * K2;
      int a = *std::max_element(r1, r1 + K1);
      int b = *std::max_element(r2, r2 + K2);
      if (ratio_greater(a, b, best.source_vf, best.image_vf)) {
        best.source_vf = a;
        best.image_vf = b;
        best.witness = list;
      }
    }
    if (depth + 1 == L) return;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == list[depth]) continue;
      step(source, list, depth, j, c1.data() + depth * K1, c1.data() + (depth + 1) * K1);
      step(image, list, depth, j, c2.data() + depth * K2, c2.data() + (depth + 1) * K2);
      list.push_back(j);
      self(self, depth + 1);
      list.pop_back();
    }
  };
  for (std::size_t s = 0; s < m; ++s) {
    list.assign(1, s);
    visit(visit, 0);
  }
}

}  // namespace

Bijection::Bijection(std::vector<Point> sources, std::vector<Point> targets)
    : sources_(std::move(sources)), targets_(std::move(targets)) {
  if (sources_.size() != targets_.size()) {
    throw DomainError("bijection: " + std::to_string(sources_.size()) + " sources but " +
                      std::to_string(targets_.size()) + " targets");
  }
  if (sources_.empty()) throw DomainError("bijection: empty point sets");
  source_index_ = index_points(sources_, "source");
  target_index_ = index_points(targets_, "target");
}

const Point& Bijection::image(const Point& p) const {
  auto it = source_index_.find(p);
  if (it == source_index_.end()) {
    throw DomainError("point " + to_string(p) + " is not a source of the bijection");
  }
  return targets_[it->second];
}

const Point& Bijection::preimage(const Point& q) const {
  auto it = target_index_.find(q);
  if (it == target_index_.end()) {
    throw DomainError("point " + to_string(q) + " is not a target of the bijection");
  }
  return sources_[it->second];
}

FnTable pushforward(const FnTable& f, const Bijection& h) {
  if (f.size() != h.size()) {
    throw DomainError("pushforward: function has " + std::to_string(f.size()) +
                      " points, bijection has " + std::to_string(h.size()));
  }
  std::vector<Complex> values;
  values.reserve(h.size());
  for (const Point& s : h.sources()) values.push_back(f.at(s));
  return FnTable({h.targets().begin(), h.targets().end()}, std::move(values));
}

FnTable reorder(const FnTable& f, std::span<const Point> order) {
  if (order.size() != f.size()) throw DomainError("reorder: point sets differ in size");
  std::vector<Complex> values;
  values.reserve(order.size());
  for (const Point& p : order) values.push_back(f.at(p));
  return FnTable({order.begin(), order.end()}, std::move(values));
}

RatioEstimate vf_ratio_search(const Bijection& h, const RatioOptions& options) {
  const std::size_t L = std::max<std::size_t>(options.max_length, 1);
  const std::size_t m = h.size();
  HostFamily source({h.sources().begin(), h.sources().end()});
  HostFamily image({h.targets().begin(), h.targets().end()});

  RatioState state{source, image, {}};
  state.best.witness = {0};

  if (count_lists(m, L) <= options.budget) {
    exhaustive_ratio(source, image, L, state.best);
    state.best.exhaustive = true;
    return state.best;
  }

  for (const auto& order : ratio_seed_orders(h)) {
    if (order.size() <= L) {
      state.offer(order);
      continue;
    }
    for (std::size_t s = 0; s + L <= order.size(); ++s) {
      state.offer({order.begin() + static_cast<std::ptrdiff_t>(s),
                   order.begin() + static_cast<std::ptrdiff_t>(s + L)});
    }
  }

  std::mt19937_64 rng(options.seed);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  std::vector<std::size_t> current = state.best.witness;
  int cur_a = state.best.source_vf, cur_b = state.best.image_vf;
  int stall = 0;
  while (state.best.lists_examined < options.budget && m >= 2) {
    std::vector<std::size_t> cand = current;
    switch (pick(4)) {
      case 0:
        cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(pick(cand.size() + 1)), pick(m));
        break;
      case 1:
        if (cand.size() > 1) cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(pick(cand.size())));
        break;
      case 2:
        if (cand.size() > 1) std::swap(cand[pick(cand.size())], cand[pick(cand.size())]);
        break;
      default:
        cand[pick(cand.size())] = pick(m);
        break;
    }
    bool ok = cand.size() <= L && cand != current;
    for (std::size_t i = 1; ok && i < cand.size(); ++i) ok = cand[i] != cand[i - 1];
    if (!ok) {
      ++state.best.lists_examined;
      continue;
    }
    ++state.best.lists_examined;
    int a = source.vf(cand), b = image.vf(cand);
    if (!ratio_greater(cur_a, cur_b, a, b)) {
      current = cand;
      cur_a = a;
      cur_b = b;
      if (ratio_greater(a, b, state.best.source_vf, state.best.image_vf)) {
        state.best.source_vf = a;
        state.best.image_vf = b;
        state.best.witness = cand;
        stall = 0;
        continue;
      }
    }
    if (++stall > 64) {
      current = state.best.witness;
      cur_a = state.best.source_vf;
      cur_b = state.best.image_vf;
      stall = 0;
    }
  }
  return state.best;
}

NormRatioEstimate norm_ratio_search(const Bijection& h, std::span<const FnTable> family,
                                    const VarMode& mode) {
  if (family.empty()) throw DomainError("norm_ratio_search: empty test family");
  HostFamily source({h.sources().begin(), h.sources().end()});
  HostFamily image({h.targets().begin(), h.targets().end()});
  NormRatioEstimate best;
  bool found = false;
  bool certified = mode.kind == VarMode::Kind::Exact;
  for (std::size_t i = 0; i < family.size(); ++i) {
    FnTable f = reorder(family[i], h.sources());
    NormValue nf = bv_norm(f, source, mode);
    if (nf.value == 0.0) continue;
    NormValue ng = bv_norm(pushforward(f, h), image, mode);
    double ratio = ng.value / nf.value;
    if (!found || ratio > best.lower_bound) {
      best = {ratio, i, nf.value, ng.value, certified};
      found = true;
    }
  }
  return best;
}

std::vector<FnTable> default_test_family(std::span<const Point> sigma) {
  std::vector<Point> pts(sigma.begin(), sigma.end());
  std::vector<Candidate> cands = enumerate_candidates(pts);
  std::set<std::vector<double>> seen;
  std::vector<FnTable> out;
  auto add = [&](std::vector<double> v) {
    if (!seen.insert(v).second) return;
    std::vector<Complex> values(v.begin(), v.end());
    out.emplace_back(pts, std::move(values));
  };
  for (const Candidate& c : cands) {
    for (Side keep : {Side::Left, Side::Right}) {
      std::vector<double> v(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        v[i] = (c.sides[i] == Side::On || c.sides[i] == keep) ? 1.0 : 0.0;
      }
      add(std::move(v));
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<double> v(pts.size(), 0.0);
    v[i] = 1.0;
    add(std::move(v));
  }
  return out;
}

AffineCertificate is_affine(const Bijection& h) {
  if (h.size() < 2) throw DomainError("is_affine needs at least two points");
  auto src = h.sources();
  auto dst = h.targets();
  AffineCertificate cert;

  // Complex-affine: alpha = (w1 - w0) / (z1 - z0), beta = w0 - alpha z0.
  {
    Rational c = src[1].x - src[0].x, d = src[1].y - src[0].y;
    Rational a = dst[1].x - dst[0].x, b = dst[1].y - dst[0].y;
    Rational den = c * c + d * d;
    Rational are = (a * c + b * d) / den;
    Rational aim = (b * c - a * d) / den;
    Rational bre = dst[0].x - (are * src[0].x - aim * src[0].y);
    Rational bim = dst[0].y - (are * src[0].y + aim * src[0].x);
    bool ok = !(are == 0 && aim == 0);
    for (std::size_t i = 0; ok && i < h.size(); ++i) {
      ok = dst[i].x == are * src[i].x - aim * src[i].y + bre &&
           dst[i].y == are * src[i].y + aim * src[i].x + bim;
    }
    if (ok) {
      cert.complex = ComplexAffine{are, aim, bre, bim};
      cert.real = RealAffine{are, -aim, aim, are, bre, bim};
      return cert;
    }
  }

  // Real-affine needs three non-collinear sources to be determined.
  std::optional<std::size_t> third;
  Line base = Line::through(src[0], src[1]);
  for (std::size_t i = 2; i < h.size(); ++i) {
    if (classify(src[i], base) != Side::On) {
      third = i;
      break;
    }
  }
  if (!third) return cert;  // collinear: affine on a line is complex-affine
  const Point& z0 = src[0];
  const Point& z1 = src[1];
  const Point& z2 = src[*third];
  const Point& w0 = dst[0];
  const Point& w1 = dst[1];
  const Point& w2 = dst[*third];
  // M [d1 d2] = [e1 e2].
  Rational d1x = z1.x - z0.x, d1y = z1.y - z0.y, d2x = z2.x - z0.x, d2y = z2.y - z0.y;
  Rational e1x = w1.x - w0.x, e1y = w1.y - w0.y, e2x = w2.x - w0.x, e2y = w2.y - w0.y;
  Rational det = d1x * d2y - d2x * d1y;
  Rational m00 = (e1x * d2y - e2x * d1y) / det;
  Rational m01 = (e2x * d1x - e1x * d2x) / det;
  Rational m10 = (e1y * d2y - e2y * d1y) / det;
  Rational m11 = (e2y * d1x - e1y * d2x) / det;
  if (m00 * m11 - m01 * m10 == 0) return cert;
  Rational t0 = w0.x - (m00 * z0.x + m01 * z0.y);
  Rational t1 = w0.y - (m10 * z0.x + m11 * z0.y);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (dst[i].x != m00 * src[i].x + m01 * src[i].y + t0 ||
        dst[i].y != m10 * src[i].x + m11 * src[i].y + t1) {
      return cert;
    }
  }
  cert.real = RealAffine{m00, m01, m10, m11, t0, t1};
  return cert;
}

MapReport analyze(const Bijection& h, const MapOptions& options) {
  MapReport report;
  report.vf_h = vf_ratio_search(h, options.ratio);
  report.vf_hinv = vf_ratio_search(h.inverse(), options.ratio);
  std::vector<FnTable> family = default_test_family(h.sources());
  report.norm_ratio = norm_ratio_search(h, family, options.norm_mode);
  if (h.size() >= 2) report.affine = is_affine(h);
  return report;
}

}  // namespace planevar
