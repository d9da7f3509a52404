#include "rhomnk/svg_plot.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rhomnk/common.hpp"

namespace rhomnk {

namespace {

constexpr double kPlotSize = 640.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 64.0;

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_objective_scatter_svg(const ObjectiveTable& table, const EfficientSet& eff,
                                 const SupportedSet& sup, std::span<const Solution> sample,
                                 const std::string& caption, const std::string& digest,
                                 std::ostream& out) {
  if (table.m != 2) {
    throw std::invalid_argument("write_objective_scatter_svg: requires m == 2");
  }
  const double width = kMarginLeft + kPlotSize + kMarginRight;
  const double height = kMarginTop + kPlotSize + kMarginBottom;
  auto px = [&](double f1) { return kMarginLeft + f1 * kPlotSize; };
  auto py = [&](double f2) { return kMarginTop + (1.0 - f2) * kPlotSize; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- " << kToolName << ' ' << kToolVersion << " -->\n";
  out << "<!-- config " << digest << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << coord(width)
      << "\" height=\"" << coord(height) << "\" viewBox=\"0 0 " << coord(width) << ' '
      << coord(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // frame and ticks
  out << "<rect x=\"" << coord(kMarginLeft) << "\" y=\"" << coord(kMarginTop)
      << "\" width=\"" << coord(kPlotSize) << "\" height=\"" << coord(kPlotSize)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double f = t / 4.0;
    out << "<line x1=\"" << coord(px(f)) << "\" y1=\"" << coord(py(0) + 6) << "\" x2=\""
        << coord(px(f)) << "\" y2=\"" << coord(py(0)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << coord(px(f)) << "\" y=\"" << coord(py(0) + 22)
        << "\" font-size=\"13\" text-anchor=\"middle\">" << coord(f) << "</text>\n";
    out << "<line x1=\"" << coord(kMarginLeft - 6) << "\" y1=\"" << coord(py(f))
        << "\" x2=\"" << coord(kMarginLeft) << "\" y2=\"" << coord(py(f))
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << coord(kMarginLeft - 10) << "\" y=\"" << coord(py(f) + 4)
        << "\" font-size=\"13\" text-anchor=\"end\">" << coord(f) << "</text>\n";
  }
  out << "<text x=\"" << coord(kMarginLeft + kPlotSize / 2) << "\" y=\""
      << coord(height - 22) << "\" font-size=\"15\" text-anchor=\"middle\">objective 1"
      << "</text>\n";
  out << "<text x=\"18\" y=\"" << coord(kMarginTop + kPlotSize / 2)
      << "\" font-size=\"15\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << coord(kMarginTop + kPlotSize / 2) << ")\">objective 2</text>\n";

  out << "<g fill=\"#2ca25f\" fill-opacity=\"0.55\">\n";
  for (Solution s : sample) {
    const auto f = table.row(s);
    out << "<circle cx=\"" << coord(px(f[0])) << "\" cy=\"" << coord(py(f[1]))
        << "\" r=\"1.4\"/>\n";
  }
  out << "</g>\n";

  out << "<g fill=\"#d7191c\">\n";
  for (size_t i = 0; i < eff.size(); ++i) {
    const auto f = eff.objective(i);
    out << "<circle cx=\"" << coord(px(f[0])) << "\" cy=\"" << coord(py(f[1]))
        << "\" r=\"2.4\"/>\n";
  }
  out << "</g>\n";

  out << "<g fill=\"#2b83ba\">\n";
  for (size_t i = 0; i < sup.size(); ++i) {
    const auto f = eff.objective(sup.eff_positions[i]);
    out << "<circle cx=\"" << coord(px(f[0])) << "\" cy=\"" << coord(py(f[1]))
        << "\" r=\"2.4\"/>\n";
  }
  out << "</g>\n";

  // legend
  const double lx = kMarginLeft + kPlotSize - 190;
  double ly = kMarginTop + 16;
  out << "<rect x=\"" << coord(lx - 12) << "\" y=\"" << coord(ly - 14) << "\" width=\"196\""
      << " height=\"62\" fill=\"white\" fill-opacity=\"0.85\" stroke=\"black\""
      << " stroke-width=\"0.5\"/>\n";
  const char* labels[3] = {"random sample", "efficient", "supported"};
  const char* colors[3] = {"#2ca25f", "#d7191c", "#2b83ba"};
  for (int i = 0; i < 3; ++i) {
    out << "<circle cx=\"" << coord(lx) << "\" cy=\"" << coord(ly) << "\" r=\"4\" fill=\""
        << colors[i] << "\"/>\n";
    out << "<text x=\"" << coord(lx + 12) << "\" y=\"" << coord(ly + 4)
        << "\" font-size=\"13\">" << labels[i] << "</text>\n";
    ly += 18;
  }

  out << "<text x=\"" << coord(kMarginLeft) << "\" y=\"" << coord(kMarginTop - 16)
      << "\" font-size=\"14\">" << caption << "</text>\n";
  out << "</svg>\n";
}

}  // namespace rhomnk
