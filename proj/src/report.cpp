#include "planevar/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "planevar/rational.hpp"

namespace planevar {

std::string to_string(Compare c) {
  switch (c) {
    case Compare::None: return "none";
    case Compare::Exact: return "exact";
    case Compare::AtMost: return "<=";
    case Compare::AtLeast: return ">=";
    case Compare::Within: return "within";
  }
  return "none";
}

Compare parse_compare(const std::string& name) {
  if (name == "none") return Compare::None;
  if (name == "exact" || name == "eq" || name == "==") return Compare::Exact;
  if (name == "le" || name == "<=") return Compare::AtMost;
  if (name == "ge" || name == ">=") return Compare::AtLeast;
  if (name == "within" || name == "tol") return Compare::Within;
  throw DomainError("unknown comparison mode '" + name + "'");
}

Check make_check(std::string name, double value, std::optional<double> expected,
                 Compare mode, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.expected = expected;
  c.mode = expected ? mode : Compare::None;
  c.tolerance = tolerance;
  if (!expected || mode == Compare::None) {
    c.pass = true;
    return c;
  }
  const double e = *expected;
  switch (mode) {
    case Compare::Exact: c.pass = value == e; break;
    case Compare::AtMost: c.pass = value <= e + tolerance; break;
    case Compare::AtLeast: c.pass = value >= e - tolerance; break;
    case Compare::Within: c.pass = std::abs(value - e) <= tolerance; break;
    case Compare::None: c.pass = true; break;
  }
  return c;
}

bool Report::pass() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string to_json(const Report& report) {
  using nlohmann::json;
  json checks = json::array();
  for (const Check& c : report.checks) {
    json j = {{"name", c.name},           {"value", c.value},
              {"expected", nullptr},      {"mode", to_string(c.mode)},
              {"pass", c.pass},           {"witness", c.witness},
              {"certified", c.certified}, {"millis", c.millis}};
    if (c.expected) j["expected"] = *c.expected;
    if (c.mode == Compare::Within || c.tolerance != 0.0) j["tolerance"] = c.tolerance;
    checks.push_back(std::move(j));
  }
  json out = {{"scenario", report.scenario}, {"checks", checks}, {"pass", report.pass()}};
  return out.dump(2);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string number(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

std::string to_csv(const Report& report) {
  std::string out = "scenario,name,value,expected,mode,pass,certified,millis,witness\n";
  for (const Check& c : report.checks) {
    out += csv_field(report.scenario) + "," + csv_field(c.name) + "," + number(c.value) + "," +
           (c.expected ? number(*c.expected) : std::string()) + "," + csv_field(to_string(c.mode)) +
           "," + (c.pass ? "true" : "false") + "," + (c.certified ? "true" : "false") + "," +
           number(c.millis) + "," + csv_field(c.witness) + "\n";
  }
  return out;
}

}  // namespace planevar
