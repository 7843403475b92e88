#pragma once

// File formats.
//
//   points     [["p/q", "r/s"], ...]        exact rationals (ints allowed)
//   function   {"<index>": [re, im], ...}   or [[re, im], ...]; a bare
//                                           number is a real value
//   bijection  {"<source index>": <target index>, ...}  or [t0, t1, ...]
//   segments   [[i, j, ...], ...]           domain indices per piece
//   list       [i, j, ...]                  domain indices

#include <string>
#include <string_view>

#include "planevar/varcalc.hpp"

namespace planevar {

/// Malformed input; `what()` names the file and the offending location.
class InputError : public Error {
 public:
  using Error::Error;
};

std::vector<Point> parse_points(std::string_view json_text, const std::string& source = "<points>");
std::vector<Complex> parse_values(std::string_view json_text, std::size_t domain_size,
                                  const std::string& source = "<function>");
std::vector<std::size_t> parse_bijection(std::string_view json_text, std::size_t source_size,
                                         std::size_t target_size,
                                         const std::string& source = "<bijection>");
std::vector<std::vector<std::size_t>> parse_segments(std::string_view json_text,
                                                     std::size_t domain_size,
                                                     const std::string& source = "<segments>");
std::vector<std::size_t> parse_index_list(std::string_view json_text, std::size_t domain_size,
                                          const std::string& source = "<list>");

std::string read_file(const std::string& path);

std::string points_to_json(std::span<const Point> points);

}  // namespace planevar
