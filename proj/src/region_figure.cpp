#include "swdon/region_figure.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace swdon {

namespace {

constexpr double kCell = 12.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

long parse_long(std::string_view text, std::string_view spec) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::Usage, "window \"" + std::string(spec) + "\" must look like XMIN:XMAX,DMIN:DMAX");
  return v;
}

}  // namespace

Window parse_window(std::string_view spec) {
  const auto comma = spec.find(',');
  if (comma == std::string_view::npos)
    throw Error(ErrorCode::Usage, "window \"" + std::string(spec) + "\" must look like XMIN:XMAX,DMIN:DMAX");
  auto range = [&](std::string_view part) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::Usage, "window \"" + std::string(spec) + "\" must look like XMIN:XMAX,DMIN:DMAX");
    return std::pair{parse_long(part.substr(0, colon), spec), parse_long(part.substr(colon + 1), spec)};
  };
  const auto [x0, x1] = range(spec.substr(0, comma));
  const auto [d0, d1] = range(spec.substr(comma + 1));
  if (x0 > x1 || d0 > d1) throw Error(ErrorCode::Usage, "window bounds are inverted");
  return {x0, x1, d0, d1};
}

std::string render_svg(const RegionDescription& region) {
  const Window& w = region.window;
  const double width = (w.x_max - w.x_min) * kCell + 2 * kMargin;
  const double height = (w.delta_max - w.delta_min) * kCell + 2 * kMargin;
  auto px = [&](double x) { return kMargin + (x - w.x_min) * kCell; };
  auto py = [&](double d) { return height - kMargin - (d - w.delta_min) * kCell; };

  const double r0 = to_double(region.r_intercept);
  const double i0 = to_double(region.i_intercept);
  const double ax = to_double(region.intersection_x);
  const double ad = to_double(region.intersection_delta);

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
    << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  s << "<defs><clipPath id=\"plot\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
    << num(width - 2 * kMargin) << "\" height=\"" << num(height - 2 * kMargin) << "\"/></clipPath></defs>\n";
  s << "<rect class=\"frame\" x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
    << num(width - 2 * kMargin) << "\" height=\"" << num(height - 2 * kMargin)
    << "\" fill=\"none\" stroke=\"#999\"/>\n";

  s << "<g clip-path=\"url(#plot)\">\n";
  // Triangle: the apex and the two points where the lines meet delta = 0.
  s << "<polygon class=\"triangle\" points=\"" << num(px(ax)) << ',' << num(py(ad)) << ' ' << num(px(r0)) << ','
    << num(py(0)) << ' ' << num(px(-i0)) << ',' << num(py(0)) << "\" fill=\"#eef\" stroke=\"#557\"/>\n";
  const double xa = w.x_min - 1.0, xb = w.x_max + 1.0;
  s << "<line class=\"r-line\" x1=\"" << num(px(xa)) << "\" y1=\"" << num(py(-xa + r0)) << "\" x2=\"" << num(px(xb))
    << "\" y2=\"" << num(py(-xb + r0)) << "\" stroke=\"#c33\"/>\n";
  s << "<line class=\"i-line\" x1=\"" << num(px(xa)) << "\" y1=\"" << num(py(xa + i0)) << "\" x2=\"" << num(px(xb))
    << "\" y2=\"" << num(py(xb + i0)) << "\" stroke=\"#33c\"/>\n";
  s << "</g>\n";

  for (const auto& p : region.marked) {
    s << "<circle class=\"marked " << (p.hollow ? "hollow" : "filled") << "\" data-lambda-sq=\"" << p.x
      << "\" data-delta=\"" << p.delta << "\" cx=\"" << num(px(p.x)) << "\" cy=\"" << num(py(p.delta))
      << "\" r=\"3\" fill=\"" << (p.hollow ? "white" : "black") << "\" stroke=\"black\"/>\n";
  }

  s << "<text x=\"" << num(width / 2) << "\" y=\"" << num(height - 10) << "\" text-anchor=\"middle\">lambda^2 ["
    << w.x_min << ", " << w.x_max << "]</text>\n";
  s << "<text x=\"12\" y=\"" << num(height / 2) << "\" transform=\"rotate(-90 12 " << num(height / 2)
    << ")\" text-anchor=\"middle\">delta [" << w.delta_min << ", " << w.delta_max << "]</text>\n";
  s << "</svg>\n";
  return s.str();
}

std::string render_ascii(const RegionDescription& region) {
  const Window& w = region.window;
  const auto cols = static_cast<std::size_t>(w.x_max - w.x_min + 1);
  std::vector<std::string> rows(static_cast<std::size_t>(w.delta_max - w.delta_min + 1), std::string(cols, ' '));
  auto cell = [&](long x, long d) -> char& {
    return rows[static_cast<std::size_t>(w.delta_max - d)][static_cast<std::size_t>(x - w.x_min)];
  };
  for (long d = w.delta_min; d <= w.delta_max; ++d)
    for (long x = w.x_min; x <= w.x_max; ++x)
      if (region.inside(x, d)) cell(x, d) = '.';
  for (const auto& p : region.marked) cell(p.x, p.delta) = p.hollow ? 'o' : '*';

  std::ostringstream s;
  s << "lambda^2 from " << w.x_min << " to " << w.x_max << "; delta from " << w.delta_max << " down to "
    << w.delta_min << '\n';
  s << "lines meet at (" << to_string(region.intersection_x) << ", " << to_string(region.intersection_delta) << ")\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    char label[16];
    std::snprintf(label, sizeof label, "%5ld |", w.delta_max - static_cast<long>(i));
    std::string row = rows[i];
    row.erase(row.find_last_not_of(' ') + 1);
    s << label << row << '\n';
  }
  return s.str();
}

}  // namespace swdon
