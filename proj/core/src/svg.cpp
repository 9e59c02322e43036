#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "powerbetti/spectra.hpp"

namespace powerbetti {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Fixed palette so output does not depend on anything but the locus.
const char* color(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return palette[i % 10];
}

}  // namespace

void write_locus_svg(std::ostream& out, const RootLocus& locus, const SvgOptions& options) {
  const double W = options.width, H = options.height, margin = 40.0;
  auto visible = [&](Complex z) { return std::abs(z) <= options.clip; };

  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  bool first = true;
  for (const auto& row : locus.roots) {
    for (const auto& z : row) {
      if (!visible(z)) continue;
      if (first) {
        xmin = xmax = z.real();
        ymin = ymax = z.imag();
        first = false;
      }
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
  }
  // Keep both axes in view and avoid a degenerate range.
  xmin = std::min(xmin, 0.0);
  xmax = std::max(xmax, 0.0);
  ymin = std::min(ymin, 0.0);
  ymax = std::max(ymax, 0.0);
  const double padx = std::max(0.05 * (xmax - xmin), 0.1), pady = std::max(0.05 * (ymax - ymin), 0.1);
  xmin -= padx;
  xmax += padx;
  ymin -= pady;
  ymax += pady;

  auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (W - 2 * margin); };
  auto py = [&](double y) { return H - margin - (y - ymin) / (ymax - ymin) * (H - 2 * margin); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    out << "<text x=\"" << fmt(W / 2) << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"14\">" << escape_xml(options.title) << "</text>\n";
  }
  out << "<line x1=\"" << fmt(px(xmin)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(xmax)) << "\" y2=\""
      << fmt(py(0)) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(ymin)) << "\" x2=\"" << fmt(px(0)) << "\" y2=\""
      << fmt(py(ymax)) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << fmt(W - margin) << "\" y=\"" << fmt(py(0) - 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">Re</text>\n";
  out << "<text x=\"" << fmt(px(0) + 4) << "\" y=\"" << fmt(margin)
      << "\" font-family=\"sans-serif\" font-size=\"11\">Im</text>\n";
  out << "<text x=\"" << fmt(margin) << "\" y=\"" << fmt(H - 10) << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << "Re [" << fmt(xmin) << ", " << fmt(xmax) << "], Im [" << fmt(ymin) << ", " << fmt(ymax) << "], k = "
      << locus.kmin << ".." << locus.kmax << "</text>\n";

  for (std::size_t t = 0; t < locus.trajectory_count(); ++t) {
    // Break the polyline wherever the trajectory leaves the clip disc.
    std::vector<std::string> segments;
    std::string current;
    std::size_t points = 0;
    auto flush = [&] {
      if (points >= 2) segments.push_back(current);
      current.clear();
      points = 0;
    };
    for (const auto& row : locus.roots) {
      const Complex z = row[t];
      if (!visible(z)) {
        flush();
        continue;
      }
      if (points > 0) current += ' ';
      current += fmt(px(z.real())) + ',' + fmt(py(z.imag()));
      ++points;
    }
    flush();
    for (const auto& s : segments) {
      out << "<polyline fill=\"none\" stroke=\"" << color(t) << "\" stroke-width=\"1.5\" points=\"" << s
          << "\"/>\n";
    }
    for (const auto& row : locus.roots) {
      const Complex z = row[t];
      if (!visible(z)) continue;
      out << "<circle cx=\"" << fmt(px(z.real())) << "\" cy=\"" << fmt(py(z.imag())) << "\" r=\"1.8\" fill=\""
          << color(t) << "\"/>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace powerbetti
