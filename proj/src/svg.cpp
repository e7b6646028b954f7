#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gridbench/errors.hpp"
#include "gridbench/report.hpp"

namespace gridbench {

namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 190;
constexpr double kTop = 50;
constexpr double kBottom = 60;

// Indexed by AlgorithmId so an algorithm keeps its colour across figures.
constexpr std::array<const char*, 7> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#7f7f7f",
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v, double step) {
  char buf[32];
  const int decimals = step >= 1.0 ? 0 : std::min(6, static_cast<int>(std::ceil(-std::log10(step))));
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos) s = "0";
  return s;
}

std::string escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
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

double nice_step(double range, int target_ticks) {
  if (!(range > 0)) return 1.0;
  const double raw = range / target_ticks;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / magnitude;
  const double nice = r <= 1.0 ? 1.0 : r <= 2.0 ? 2.0 : r <= 5.0 ? 5.0 : 10.0;
  return nice * magnitude;
}

struct Axis {
  double lo;
  double hi;
  double step;
};

Axis make_axis(double lo, double hi, bool anchor_zero) {
  if (anchor_zero && lo > 0) lo = 0;
  if (hi - lo < 1e-12) {
    hi = lo + (lo == 0 ? 1.0 : std::abs(lo) * 0.1);
  }
  const double step = nice_step(hi - lo, 5);
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

}  // namespace

std::string render_plot(const ExperimentReport& report, Metric metric) {
  if (report.rows.empty()) throw InvalidConfigError("cannot plot an empty report");
  const auto& cfg = report.config;

  double x_lo = report.rows.front().value, x_hi = x_lo;
  double y_lo = report.rows.front().stats[metric].mean, y_hi = y_lo;
  for (const auto& r : report.rows) {
    const auto& s = r.stats[metric];
    x_lo = std::min(x_lo, r.value);
    x_hi = std::max(x_hi, r.value);
    y_lo = std::min(y_lo, s.mean - s.stddev);
    y_hi = std::max(y_hi, s.mean + s.stddev);
  }
  if (x_hi - x_lo < 1e-12) {
    x_lo -= 1;
    x_hi += 1;
  }
  const Axis ya = make_axis(y_lo, y_hi, y_lo >= 0);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - ya.lo) / (ya.hi - ya.lo) * plot_h; };

  const std::string title = std::string(axis_label(metric)) + " vs. " + std::string(axis_label(cfg.kind));
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<title>" << escape(title) << "</title>\n"
      << "<desc>" << escape(kCodeVersion) << "; sweep " << to_string(cfg.kind) << "; seed " << cfg.seed
      << "; mean +/- sample stddev over " << cfg.instances_per_point << " instance(s), " << cfg.reps
      << " repetition(s)</desc>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
      << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" "
      << "text-anchor=\"middle\">" << escape(title) << "</text>\n";

  // Grid lines and y ticks.
  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double y = ya.lo; y <= ya.hi + ya.step * 1e-6; y += ya.step) {
    svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(kLeft + plot_w)
        << "\" y2=\"" << num(py(y)) << "\" stroke=\"#e0e0e0\"/>\n"
        << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
        << tick_label(y, ya.step) << "</text>\n";
  }
  for (const double x : cfg.values) {
    svg << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(px(x))
        << "\" y2=\"" << num(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
        << tick_label(x, nice_step(x_hi - x_lo, 10)) << "</text>\n";
  }
  svg << "</g>\n"
      << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w) << "\" height=\""
      << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" << escape(axis_label(cfg.kind))
      << "</text>\n"
      << "<text x=\"20\" y=\"" << num(kTop + plot_h / 2) << "\" font-family=\"sans-serif\" font-size=\"13\" "
      << "text-anchor=\"middle\" transform=\"rotate(-90 20 " << num(kTop + plot_h / 2) << ")\">"
      << escape(axis_label(metric)) << "</text>\n";

  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    const AlgorithmId algo = cfg.algorithms[a];
    const char* colour = kPalette[static_cast<std::size_t>(algo) % kPalette.size()];
    std::vector<const ReportRow*> series;
    for (const auto& r : report.rows)
      if (r.algorithm == algo) series.push_back(&r);

    std::string upper, lower, line;
    for (const ReportRow* r : series) {
      const auto& s = r->stats[metric];
      upper += num(px(r->value)) + "," + num(py(s.mean + s.stddev)) + " ";
      line += num(px(r->value)) + "," + num(py(s.mean)) + " ";
    }
    for (auto it = series.rbegin(); it != series.rend(); ++it) {
      const auto& s = (*it)->stats[metric];
      lower += num(px((*it)->value)) + "," + num(py(s.mean - s.stddev)) + " ";
    }
    svg << "<g id=\"series-" << to_string(algo) << "\">\n"
        << "<polygon points=\"" << upper << lower << "\" fill=\"" << colour
        << "\" fill-opacity=\"0.18\" stroke=\"none\"/>\n"
        << "<polyline points=\"" << line << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    for (const ReportRow* r : series)
      svg << "<circle cx=\"" << num(px(r->value)) << "\" cy=\"" << num(py(r->stats[metric].mean))
          << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
    svg << "</g>\n";

    const double ly = kTop + 10 + 22.0 * static_cast<double>(a);
    const double lx = kLeft + plot_w + 20;
    svg << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly) << "\" width=\"14\" height=\"14\" fill=\"" << colour
        << "\"/>\n"
        << "<text x=\"" << num(lx + 20) << "\" y=\"" << num(ly + 11)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(display_name(algo)) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> render_plots(const ExperimentReport& report,
                                                const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> paths;
  for (const Metric m : kAllMetrics) {
    const auto path = out_dir / (std::string(file_stem(report.config.kind)) + "_" + std::string(to_string(m)) + ".svg");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << render_plot(report, m);
    out.flush();
    if (!out) throw Error("write failed for " + path.string());
    paths.push_back(path);
  }
  return paths;
}

}  // namespace gridbench
