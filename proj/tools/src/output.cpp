#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "baker/errors.hpp"

namespace baker::cli {

std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(Errc::InvalidArgument, "cannot open output file " + path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json document(const std::string& command) {
  json j;
  j["schema"] = "baker/" + command;
  j["schema_version"] = 1;
  return j;
}

std::string scatter_svg(const std::vector<std::complex<double>>& points, const std::vector<Circle>& circles,
                        const std::string& title) {
  constexpr double kSize = 600.0;
  constexpr double kScale = 270.0;  // unit circle radius in pixels
  const double c = kSize / 2.0;
  std::ostringstream os;
  auto px = [&](double v) { return fmt17(std::round(v * 1000.0) / 1000.0); };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
     << "<title>" << title << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << kScale
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  const char* colours[] = {"#d62728", "#2ca02c", "#1f77b4", "#9467bd"};
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const double r = circles[i].radius * kScale;
    const char* colour = colours[i % 4];
    os << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << px(r) << "\" fill=\"none\" stroke=\"" << colour
       << "\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n"
       << "<text x=\"" << px(c + r * std::cos(0.25 + 0.35 * static_cast<double>(i)) + 3.0) << "\" y=\""
       << px(c - r * std::sin(0.25 + 0.35 * static_cast<double>(i)) - 3.0) << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
       << colour << "\">" << circles[i].label << "</text>\n";
  }
  os << "<g fill=\"black\">\n";
  for (const auto& z : points) {
    os << "<circle cx=\"" << px(c + z.real() * kScale) << "\" cy=\"" << px(c - z.imag() * kScale)
       << "\" r=\"1.5\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace baker::cli
