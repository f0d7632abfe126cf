#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "circlepack/audit.hpp"
#include "circlepack/containers.hpp"

namespace circlepack {

/// Malformed input text; `line` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One decimal radius per line (blank lines and '#' comments skipped), or a
/// single JSON array of numbers.
std::vector<double> read_radii(std::istream& in);

nlohmann::json to_json(const PackResult& result, double eps);
/// Inverse of to_json; throws ParseError on missing or ill-typed fields.
PackResult result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AuditReport& report);

/// Deterministic SVG: container, lane outlines, then circles in packing order.
std::string render_svg(const PackResult& result, double scale);

}  // namespace circlepack
