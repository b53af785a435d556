#include "arrango/plot.hpp"

#include <cmath>
#include <cstdio>

namespace arrango {

namespace {

constexpr double kRadius = 4.0;  // chart disk
constexpr double kScale = 50.0;  // pixels per unit
constexpr double kCenter = 250.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

double px(double x) { return kCenter + kScale * x; }
double py(double y) { return kCenter - kScale * y; }

}  // namespace

std::string plot_svg(const Arrangement &a) {
  if (!a.is_real()) throw PlotError("plots need a real arrangement");
  if (a.dim() != 3 || a.rank() != 3) throw PlotError("plots need an essential arrangement of rank 3");
  std::string body, ideal;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Covector &n = a.normal(i);
    double u = n[0].to_double(), v = n[1].to_double(), w = n[2].to_double();
    if (n[0].is_zero() && n[1].is_zero()) {
      ideal = "  <circle class=\"ideal\" data-index=\"" + std::to_string(i + 1) + "\" cx=\"" + num(kCenter) +
              "\" cy=\"" + num(kCenter) + "\" r=\"" + num(kScale * kRadius) +
              "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"6 4\"/>\n"
              "  <text class=\"ideal-label\" x=\"" + num(px(kRadius * 0.75)) + "\" y=\"" + num(py(kRadius * 0.75)) +
              "\" font-size=\"18\">&#8734;</text>\n";
      continue;
    }
    // u x + v y + w = 0 in the chart x3 = 1
    double norm = std::hypot(u, v);
    double d = std::fabs(w) / norm;
    if (d >= kRadius) {
      body += "  <!-- line " + std::to_string(i + 1) + " misses the chart disk -->\n";
      continue;
    }
    double fx = -w * u / (norm * norm), fy = -w * v / (norm * norm);
    double dx = -v / norm, dy = u / norm;
    double h = std::sqrt(kRadius * kRadius - d * d);
    double x1 = fx + h * dx, y1 = fy + h * dy, x2 = fx - h * dx, y2 = fy - h * dy;
    body += "  <line class=\"hyperplane\" data-index=\"" + std::to_string(i + 1) + "\" x1=\"" + num(px(x1)) +
            "\" y1=\"" + num(py(y1)) + "\" x2=\"" + num(px(x2)) + "\" y2=\"" + num(py(y2)) +
            "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    body += "  <text class=\"label\" x=\"" + num(px(x1 * 1.06)) + "\" y=\"" + num(py(y1 * 1.06)) +
            "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(i + 1) + "</text>\n";
  }
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n"
         "  <rect width=\"500\" height=\"500\" fill=\"white\"/>\n" +
         ideal + body + "</svg>\n";
}

}  // namespace arrango
