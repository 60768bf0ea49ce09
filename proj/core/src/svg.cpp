#include "troplab/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace troplab {

std::string render_svg(const CurveModel& curve, const std::vector<std::vector<PlanarPoint>>& overlays) {
  const double width = 640;
  const double height = 480;
  const double margin = 60;
  const double xmax = std::max(curve.lambda().back().to_double(), 1.0);
  const double ymax = std::max(curve.total().to_double(), 1.0);
  const double sx = (width - 2 * margin) / xmax;
  const double sy = (height - 2 * margin) / ymax;
  const auto px = [&](const Rational& x) { return margin + x.to_double() * sx; };
  const auto py = [&](const Rational& y) { return height - margin - y.to_double() * sy; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<title>Gamma_C for C = " << curve.C().str() << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  os << "<g stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& e : curve.edges()) {
    const auto& a = curve.vertices()[e.tail];
    const auto& b = curve.vertices()[e.head];
    os << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x) << "\" y2=\"" << py(b.y)
       << "\"/>\n";
  }
  os << "</g>\n<g fill=\"#1f4e9c\">\n";
  for (const auto& e : curve.edges()) {
    const auto& a = curve.vertices()[e.tail];
    const auto& b = curve.vertices()[e.head];
    const double mx = (px(a.x) + px(b.x)) / 2;
    const double my = (py(a.y) + py(b.y)) / 2;
    const bool vertical = e.kind == EdgeKind::Vertical;
    os << "<text x=\"" << (vertical ? mx + 6 : mx) << "\" y=\"" << (vertical ? my : my - 6) << "\">"
       << e.weight.str() << "</text>\n";
  }
  os << "</g>\n<g fill=\"black\">\n";
  for (std::size_t v = 0; v < curve.vertices().size(); ++v) {
    const auto& p = curve.vertices()[v];
    os << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\"/>\n";
    os << "<text x=\"" << px(p.x) + 5 << "\" y=\"" << py(p.y) + 14 << "\" font-size=\"10\">(" << p.x.str() << ','
       << p.y.str() << ")</text>\n";
  }
  os << "</g>\n";

  static const char* palette[] = {"#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};
  for (std::size_t k = 0; k < overlays.size(); ++k) {
    os << "<g fill=\"" << palette[k % 6] << "\" fill-opacity=\"0.8\">\n";
    for (const auto& p : overlays[k]) os << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"5\"/>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace troplab
