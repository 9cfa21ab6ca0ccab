#pragma once

#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace baker::cli {

using json = nlohmann::ordered_json;

/// %.17g; integers print without exponent.
std::string fmt17(double x);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

/// Writes text to `path`, or to stdout when path is "-" or empty.
void write_text(const std::string& path, const std::string& text);

/// Two-space indented JSON with a trailing newline.
std::string dump(const json& j);

/// Common header for every JSON document.
json document(const std::string& command);

struct Circle {
  std::string label;
  double radius;
};

/// Self-contained SVG 1.1 scatter of points in the unit disk with the unit
/// circle and labelled reference circles.
std::string scatter_svg(const std::vector<std::complex<double>>& points, const std::vector<Circle>& circles,
                        const std::string& title);

}  // namespace baker::cli
