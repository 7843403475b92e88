#include "planevar/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "planevar/io.hpp"
#include "planevar/scenarios.hpp"

namespace planevar {
namespace {

struct Options {
  std::string points, fn, list, target, bijection, segments, out;
  std::string format = "json";
  bool format_given = false;
  std::size_t lmax = 6;
  std::uint64_t budget = 0;  // 0: command default
  std::uint64_t seed = 1;
  bool exact = false, search = false;
  std::optional<double> expect;
  std::string compare = "exact";
  double tol = 0.0;
  std::string map_mode = "all";
  std::string scenario;
  ScenarioParams params;
  std::string delta = "1/1000";
};

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string list_string(std::span<const std::size_t> idx, std::span<const Point> pts) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += to_string(pts[idx[i]]);
  }
  return s + "]";
}

std::vector<Point> need_points(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string("missing ") + flag + " FILE");
  return parse_points(read_file(path), path);
}

FnTable load_table(const Options& o) {
  std::vector<Point> pts = need_points(o.points, "--points");
  if (o.fn.empty()) throw InputError("missing --fn FILE");
  std::vector<Complex> vals = parse_values(read_file(o.fn), pts.size(), o.fn);
  try {
    return FnTable(std::move(pts), std::move(vals));
  } catch (const DomainError& e) {
    throw InputError(o.points + ": " + e.what());
  }
}

Check primary(const Options& o, std::string name, double value) {
  Compare mode = o.expect ? parse_compare(o.compare) : Compare::None;
  return make_check(std::move(name), value, o.expect, mode, o.tol);
}

VarMode var_mode(const Options& o) {
  if (o.exact && o.search) throw InputError("choose one of --exact and --search");
  if (o.search) return VarMode::searched(o.budget ? o.budget : 2000, o.seed);
  VarMode m = VarMode::exhaustive(o.lmax);
  if (o.budget) m.exact.max_lists = o.budget;
  return m;
}

Report cmd_cvar(const Options& o) {
  FnTable f = load_table(o);
  std::vector<std::size_t> idx;
  if (o.list.empty()) {
    for (std::size_t i = 0; i < f.size(); ++i) idx.push_back(i);
  } else {
    idx = parse_index_list(read_file(o.list), f.size(), o.list);
  }
  std::vector<Point> pts;
  for (std::size_t i : idx) pts.push_back(f.domain()[i]);
  PointList S{std::move(pts)};
  Check c = primary(o, "cvar", cvar(f, S));
  c.witness = list_string(idx, f.domain());
  c.certified = true;
  return {"cvar", {c}};
}

Report cmd_vf(const Options& o) {
  PointList S(need_points(o.points, "--points"));
  VfResult r = vf(S);
  Check c = primary(o, "vf", r.value);
  c.witness = to_string(r.witness, S.points());
  c.certified = true;
  return {"vf", {c}};
}

Report cmd_var(const Options& o, bool norm) {
  FnTable f = load_table(o);
  HostFamily family({f.domain().begin(), f.domain().end()});
  NormValue n = bv_norm(f, family, var_mode(o));
  const VariationEstimate& v = n.variation;
  Check c = primary(o, norm ? "bv_norm" : "var", norm ? n.value : v.lower_bound);
  c.witness = list_string(v.witness, f.domain()) + " cvar " + number(v.witness_cvar) + " vf " +
              std::to_string(v.witness_vf);
  c.certified = v.certified;
  Report r{norm ? "norm" : "var", {c}};
  r.checks.push_back(make_check("lists examined", static_cast<double>(v.lists_examined),
                                std::nullopt, Compare::None));
  r.checks.push_back(make_check("length bound", static_cast<double>(v.length_bound),
                                std::nullopt, Compare::None));
  if (norm) r.checks.push_back(make_check("sup norm", n.sup_norm, std::nullopt, Compare::None));
  return r;
}

Report cmd_lgnorm(const Options& o) {
  FnTable f = load_table(o);
  if (o.segments.empty()) throw InputError("missing --segments FILE");
  auto pieces = parse_segments(read_file(o.segments), f.size(), o.segments);
  Check c = primary(o, "lg_norm", lg_norm(f, pieces));
  c.certified = true;
  return {"lgnorm", {c}};
}

Report cmd_map(const Options& o) {
  std::vector<Point> src = need_points(o.points, "--points");
  std::vector<Point> tgt = need_points(o.target, "--target");
  if (o.bijection.empty()) throw InputError("missing --bijection FILE");
  std::vector<std::size_t> to =
      parse_bijection(read_file(o.bijection), src.size(), tgt.size(), o.bijection);
  std::vector<Point> mapped;
  for (std::size_t t : to) mapped.push_back(tgt[t]);
  Bijection h = [&] {
    try {
      return Bijection(src, mapped);
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
  }();

  const std::string& mode = o.map_mode;
  if (mode != "all" && mode != "vf-ratio" && mode != "norm-ratio" && mode != "affine") {
    throw InputError("unknown --mode '" + mode + "'");
  }
  Report r{"map", {}};
  if (mode == "all" || mode == "vf-ratio") {
    RatioOptions ro;
    ro.max_length = o.lmax;
    ro.seed = o.seed;
    if (o.budget) ro.budget = o.budget;
    for (int inv = 0; inv < 2; ++inv) {
      const Bijection& hh = inv ? h.inverse() : h;
      RatioEstimate e = vf_ratio_search(hh, ro);
      Check c = make_check(inv ? "vf(h^-1) lower bound" : "vf(h) lower bound", e.value(),
                           std::nullopt, Compare::None);
      c.witness = list_string(e.witness, hh.sources()) + " vf " + std::to_string(e.source_vf) +
                  " / " + std::to_string(e.image_vf);
      c.certified = e.exhaustive;
      r.checks.push_back(c);
    }
  }
  if (mode == "all" || mode == "norm-ratio") {
    VarMode vm = o.exact ? VarMode::exhaustive(o.lmax)
                         : VarMode::searched(o.budget ? o.budget : 500, o.seed);
    std::vector<FnTable> family = default_test_family(h.sources());
    NormRatioEstimate e = norm_ratio_search(h, family, vm);
    Check c = make_check("||pushforward|| lower bound", e.lower_bound, std::nullopt, Compare::None);
    const FnTable& w = family[e.witness];
    std::string support;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != Complex(0.0)) support += (support.empty() ? "" : ", ") + to_string(w.domain()[i]);
    }
    c.witness = "indicator of {" + support + "}";
    c.certified = e.certified;
    r.checks.push_back(c);
  }
  if (mode == "all" || mode == "affine") {
    AffineCertificate a = h.size() >= 2 ? is_affine(h) : AffineCertificate{};
    Check c = make_check("complex-affine", a.complex ? 1.0 : 0.0, std::nullopt, Compare::None);
    if (a.complex) {
      c.witness = "alpha = " + to_string(a.complex->alpha_re) + " + " +
                  to_string(a.complex->alpha_im) + "i, beta = " + to_string(a.complex->beta_re) +
                  " + " + to_string(a.complex->beta_im) + "i";
    }
    c.certified = true;
    r.checks.push_back(c);
    Check c2 = make_check("real-affine", a.real ? 1.0 : 0.0, std::nullopt, Compare::None);
    if (a.real) {
      const RealAffine& m = *a.real;
      c2.witness = "M = [[" + to_string(m.m00) + ", " + to_string(m.m01) + "], [" +
                   to_string(m.m10) + ", " + to_string(m.m11) + "]], t = (" + to_string(m.t0) +
                   ", " + to_string(m.t1) + ")";
    }
    c2.certified = true;
    r.checks.push_back(c2);
  }
  // A supplied expectation applies to the first check.
  if (o.expect && !r.checks.empty()) {
    Check& first = r.checks.front();
    Check replaced = primary(o, first.name, first.value);
    replaced.witness = first.witness;
    replaced.certified = first.certified;
    first = replaced;
  }
  return r;
}

Report cmd_reproduce(Options o) {
  o.params.seed = o.seed;
  if (o.budget) o.params.budget = o.budget;
  o.params.delta = parse_rational(o.delta);
  if (o.params.delta <= 0) throw InputError("--delta must be positive");
  return reproduce(o.scenario, o.params);
}

void print(const Report& r, std::ostream& out) {
  if (r.scenario == "cvar" || r.scenario == "vf" || r.scenario == "lgnorm") {
    out << number(r.checks.front().value) << "\n";
  } else if (r.scenario == "var" || r.scenario == "norm") {
    const Check& c = r.checks.front();
    out << number(c.value) << "\n"
        << (c.certified ? "certified" : "lower bound (uncertified)") << ", witness "
        << c.witness << "\n";
  } else {
    for (const Check& c : r.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << " = " << number(c.value);
      if (c.expected) out << " (" << to_string(c.mode) << " " << number(*c.expected) << ")";
      if (!c.witness.empty()) out << "  [" << c.witness << "]";
      out << "\n";
    }
  }
  if (!r.pass()) {
    for (const Check& c : r.checks) {
      if (!c.pass) out << "check failed: " << c.name << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Two-dimensional variation on finite planar sets", "planevar"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->each([&](const std::string&) { o.format_given = true; });
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--budget", o.budget,
                    "Search evaluations, or the list cap of an exhaustive run");
    sub->add_option("--expect", o.expect, "Expected value of the primary result");
    sub->add_option("--compare", o.compare, "exact | le | ge | within");
    sub->add_option("--tol", o.tol, "Tolerance for le/ge/within");
  };
  auto fn_input = [&](CLI::App* sub) {
    sub->add_option("--points", o.points, "Point file (the domain)")->required();
    sub->add_option("--fn", o.fn, "Function table file")->required();
  };
  auto var_flags = [&](CLI::App* sub) {
    sub->add_flag("--exact", o.exact, "Exhaustive over lists up to --lmax (default)");
    sub->add_flag("--search", o.search, "Seeded local search lower bound");
    sub->add_option("--lmax", o.lmax, "Maximum list length")->check(CLI::PositiveNumber);
  };

  auto* c_cvar = app.add_subcommand("cvar", "Curve variation of f along a list");
  fn_input(c_cvar);
  c_cvar->add_option("--list", o.list, "Index list into the point file (default: file order)");
  common(c_cvar);

  auto* c_vf = app.add_subcommand("vf", "Variation factor of a point list");
  c_vf->add_option("--points", o.points, "Point list file")->required();
  common(c_vf);

  auto* c_var = app.add_subcommand("var", "Two-dimensional variation");
  fn_input(c_var);
  var_flags(c_var);
  common(c_var);

  auto* c_norm = app.add_subcommand("norm", "BV norm: sup norm plus variation");
  fn_input(c_norm);
  var_flags(c_norm);
  common(c_norm);

  auto* c_lg = app.add_subcommand("lgnorm", "Linear-graph norm over a decomposition");
  fn_input(c_lg);
  c_lg->add_option("--segments", o.segments, "Decomposition file")->required();
  common(c_lg);

  auto* c_map = app.add_subcommand("map", "Analyse a bijection between two point sets");
  c_map->add_option("--points", o.points, "Source point file")->required();
  c_map->add_option("--target", o.target, "Target point file")->required();
  c_map->add_option("--bijection", o.bijection, "Source index -> target index")->required();
  c_map->add_option("--mode", o.map_mode, "all | vf-ratio | norm-ratio | affine");
  c_map->add_option("--lmax", o.lmax, "Maximum list length for vf(h)")
      ->check(CLI::PositiveNumber);
  c_map->add_flag("--exact", o.exact, "Exhaustive variation for norm ratios");
  common(c_map);

  auto* c_rep = app.add_subcommand("reproduce", "Reproduce a worked example");
  c_rep->add_option("id", o.scenario, "Scenario id")->required();
  c_rep->add_option("--grid", o.params.grid, "folding-interval grid size (even)");
  c_rep->add_option("--truncation", o.params.truncation, "seq-bijection truncation n");
  c_rep->add_option("--per-segment", o.params.per_segment, "linear-graph-pair points per segment");
  c_rep->add_option("--samples", o.params.samples, "Random functions per scenario");
  c_rep->add_option("--delta", o.delta, "halfplane-ramp strip width (rational)");
  c_rep->add_option("--depth", o.params.depth, "cantor-homeomorphism depth");
  common(c_rep);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kAllPassed : kInputError;
  }

  Report report;
  try {
    if (c_cvar->parsed()) report = cmd_cvar(o);
    else if (c_vf->parsed()) report = cmd_vf(o);
    else if (c_var->parsed()) report = cmd_var(o, false);
    else if (c_norm->parsed()) report = cmd_var(o, true);
    else if (c_lg->parsed()) report = cmd_lgnorm(o);
    else if (c_map->parsed()) report = cmd_map(o);
    else report = cmd_reproduce(o);
  } catch (const BudgetExceeded& e) {
    err << "budget refused: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const std::string rendered = o.format == "csv" ? to_csv(report) : to_json(report);
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kInputError;
    }
    f << rendered;
    print(report, out);
  } else if (o.format_given) {
    out << rendered << (o.format == "json" ? "\n" : "");
  } else {
    print(report, out);
  }
  return report.pass() ? kAllPassed : kCheckFailed;
}

}  // namespace planevar
