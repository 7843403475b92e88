#include "planevar/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace planevar {
namespace {

using nlohmann::json;

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(source + ": byte " + std::to_string(e.byte) + ": invalid JSON");
  }
}

[[noreturn]] void fail(const std::string& source, const std::string& where,
                       const std::string& msg) {
  throw InputError(source + ": " + where + ": " + msg);
}

Rational rational_at(const json& v, const std::string& source, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
    if (v.is_number_unsigned()) return Rational(std::to_string(v.get<unsigned long long>()));
  } catch (const DomainError& e) {
    fail(source, where, e.what());
  }
  fail(source, where, "expected a rational string such as \"3/4\" or an integer");
}

std::size_t index_at(const json& v, std::size_t bound, const std::string& source,
                     const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    fail(source, where, "expected a nonnegative integer index");
  }
  auto i = v.get<std::size_t>();
  if (i >= bound) {
    fail(source, where, "index " + std::to_string(i) + " out of range (size " +
                            std::to_string(bound) + ")");
  }
  return i;
}

std::size_t key_index(const std::string& key, std::size_t bound, const std::string& source) {
  std::size_t pos = 0;
  unsigned long long i = 0;
  try {
    i = std::stoull(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (key.empty() || pos != key.size()) fail(source, "key \"" + key + "\"", "not an index");
  if (i >= bound) {
    fail(source, "key \"" + key + "\"", "index out of range (size " + std::to_string(bound) + ")");
  }
  return static_cast<std::size_t>(i);
}

Complex value_at(const json& v, const std::string& source, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(source, where, "expected [re, im] or a number");
}

}  // namespace

std::vector<Point> parse_points(std::string_view text, const std::string& source) {
  json j = parse_json(text, source);
  if (!j.is_array()) fail(source, "top level", "expected a list of points");
  std::vector<Point> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "[" + std::to_string(i) + "]";
    const json& p = j[i];
    if (!p.is_array() || p.size() != 2) fail(source, where, "expected a pair [x, y]");
    out.emplace_back(rational_at(p[0], source, where + "[0]"),
                     rational_at(p[1], source, where + "[1]"));
  }
  if (out.empty()) fail(source, "top level", "no points");
  return out;
}

std::vector<Complex> parse_values(std::string_view text, std::size_t n,
                                  const std::string& source) {
  json j = parse_json(text, source);
  std::vector<Complex> out(n);
  std::vector<bool> seen(n, false);
  if (j.is_array()) {
    if (j.size() != n) {
      fail(source, "top level", "expected " + std::to_string(n) + " values, got " +
                                    std::to_string(j.size()));
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = value_at(j[i], source, "[" + std::to_string(i) + "]");
    return out;
  }
  if (!j.is_object()) fail(source, "top level", "expected an object or a list of values");
  for (const auto& [key, v] : j.items()) {
    std::size_t i = key_index(key, n, source);
    out[i] = value_at(v, source, "\"" + key + "\"");
    seen[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) fail(source, "top level", "no value for point index " + std::to_string(i));
  }
  return out;
}

std::vector<std::size_t> parse_bijection(std::string_view text, std::size_t n_src,
                                         std::size_t n_tgt, const std::string& source) {
  if (n_src != n_tgt) {
    fail(source, "top level", "point files have " + std::to_string(n_src) + " and " +
                                  std::to_string(n_tgt) + " points");
  }
  json j = parse_json(text, source);
  std::vector<std::size_t> out(n_src);
  std::vector<bool> seen(n_src, false), hit(n_tgt, false);
  auto put = [&](std::size_t s, const json& v, const std::string& where) {
    std::size_t t = index_at(v, n_tgt, source, where);
    if (hit[t]) fail(source, where, "target index " + std::to_string(t) + " used twice");
    hit[t] = true;
    seen[s] = true;
    out[s] = t;
  };
  if (j.is_array()) {
    if (j.size() != n_src) fail(source, "top level", "expected one target per source point");
    for (std::size_t s = 0; s < n_src; ++s) put(s, j[s], "[" + std::to_string(s) + "]");
  } else if (j.is_object()) {
    for (const auto& [key, v] : j.items()) put(key_index(key, n_src, source), v, "\"" + key + "\"");
  } else {
    fail(source, "top level", "expected an object or a list of target indices");
  }
  for (std::size_t s = 0; s < n_src; ++s) {
    if (!seen[s]) fail(source, "top level", "source index " + std::to_string(s) + " unmapped");
  }
  return out;
}

std::vector<std::vector<std::size_t>> parse_segments(std::string_view text, std::size_t n,
                                                     const std::string& source) {
  json j = parse_json(text, source);
  if (!j.is_array()) fail(source, "top level", "expected a list of index lists");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < j.size(); ++s) {
    const std::string where = "[" + std::to_string(s) + "]";
    if (!j[s].is_array() || j[s].empty()) fail(source, where, "expected a nonempty index list");
    std::vector<std::size_t> piece;
    for (std::size_t k = 0; k < j[s].size(); ++k) {
      piece.push_back(index_at(j[s][k], n, source, where + "[" + std::to_string(k) + "]"));
    }
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<std::size_t> parse_index_list(std::string_view text, std::size_t n,
                                          const std::string& source) {
  json j = parse_json(text, source);
  if (!j.is_array() || j.empty()) fail(source, "top level", "expected a nonempty index list");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(index_at(j[k], n, source, "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string points_to_json(std::span<const Point> points) {
  json j = json::array();
  for (const Point& p : points) j.push_back({to_string(p.x), to_string(p.y)});
  return j.dump();
}

}  // namespace planevar
