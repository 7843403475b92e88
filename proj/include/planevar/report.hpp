#pragma once

#include <optional>
#include <string>
#include <vector>

namespace planevar {

enum class Compare { None, Exact, AtMost, AtLeast, Within };

std::string to_string(Compare c);
Compare parse_compare(const std::string& name);

struct Check {
  std::string name;
  double value = 0.0;
  std::optional<double> expected;
  Compare mode = Compare::None;
  double tolerance = 0.0;
  bool pass = true;
  std::string witness;
  bool certified = false;
  double millis = 0.0;
};

/// Builds a check and decides `pass` from value, expected, mode and tolerance.
Check make_check(std::string name, double value, std::optional<double> expected,
                 Compare mode, double tolerance = 0.0);

struct Report {
  std::string scenario;
  std::vector<Check> checks;

  bool pass() const;
};

std::string to_json(const Report& report);
std::string to_csv(const Report& report);

}  // namespace planevar
