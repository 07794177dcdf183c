#include "asymp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace asymp {

namespace {

const char* kPalette[] = {"#1f6feb", "#d73a49", "#2da44e", "#bf8700",
                          "#8250df", "#0b7285"};
constexpr int kPaletteSize = 6;

std::string esc(const std::string& s) {
  std::string out;
  out.reserve(s.size());
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

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void append(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  out += buf;
}

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;
  double pos(double v) const {  // 0..1 within the range
    double t = log ? std::log10(v) : v;
    return (t - lo) / (hi - lo);
  }
  double tick_value(int i, int n) const {
    double t = lo + (hi - lo) * i / (n - 1);
    return log ? std::pow(10.0, t) : t;
  }
};

AxisRange scan_range(std::span<const PlotSeries> series, bool take_x, bool log) {
  AxisRange r;
  r.log = log;
  bool any = false;
  double lo = 0.0, hi = 0.0;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      double v = take_x ? x : y;
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (log && !(v > 0.0))
        throw std::domain_error("log axis needs strictly positive data");
      double t = log ? std::log10(v) : v;
      if (!any) {
        lo = hi = t;
        any = true;
      } else {
        lo = std::min(lo, t);
        hi = std::max(hi, t);
      }
    }
  }
  if (!any) throw std::domain_error("nothing to plot: no finite points");
  if (hi - lo < 1e-12) {  // flat data: pad so the line sits mid-panel
    lo -= 1.0;
    hi += 1.0;
  }
  r.lo = lo;
  r.hi = hi;
  return r;
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           std::span<const PlotSeries> series, bool log_x,
                           bool log_y) {
  if (series.empty()) throw std::invalid_argument("svg_line_chart needs a series");
  const double W = 720, H = 400, L = 70, R = 24, T = 44, B = 52;

  AxisRange xr = scan_range(series, true, log_x);
  AxisRange yr = scan_range(series, false, log_y);
  auto sx = [&](double v) { return L + xr.pos(v) * (W - L - R); };
  auto sy = [&](double v) { return H - B - yr.pos(v) * (H - T - B); };

  std::string out;
  append(out,
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"400\" "
         "viewBox=\"0 0 720 400\">\n");
  append(out, "<rect width=\"720\" height=\"400\" fill=\"white\"/>\n");
  append(out,
         "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\" font-weight=\"bold\">%s</text>\n",
         esc(title).c_str());

  // grid and tick labels
  const int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    double xv = xr.tick_value(i, kTicks);
    double yv = yr.tick_value(i, kTicks);
    std::string gx = coord(sx(xv)), gy = coord(sy(yv));
    append(out,
           "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"#dddddd\"/>\n",
           gx.c_str(), coord(T).c_str(), gx.c_str(), coord(H - B).c_str());
    append(out,
           "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"#dddddd\"/>\n",
           coord(L).c_str(), gy.c_str(), coord(W - R).c_str(), gy.c_str());
    append(out,
           "<text x=\"%s\" y=\"%s\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"11\">%s</text>\n",
           gx.c_str(), coord(H - B + 16).c_str(), tick_label(xv).c_str());
    append(out,
           "<text x=\"%s\" y=\"%s\" text-anchor=\"end\" font-family=\"monospace\" "
           "font-size=\"11\">%s</text>\n",
           coord(L - 6).c_str(), coord(sy(yv) + 4).c_str(), tick_label(yv).c_str());
  }
  append(out,
         "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" fill=\"none\" "
         "stroke=\"#333333\"/>\n",
         coord(L).c_str(), coord(T).c_str(), coord(W - L - R).c_str(),
         coord(H - T - B).c_str());
  append(out,
         "<text x=\"%s\" y=\"%s\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"12\">%s</text>\n",
         coord((L + W - R) / 2).c_str(), coord(H - 12).c_str(), esc(x_label).c_str());
  append(out,
         "<text x=\"16\" y=\"%s\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"12\" transform=\"rotate(-90 16 %s)\">%s</text>\n",
         coord((T + H - B) / 2).c_str(), coord((T + H - B) / 2).c_str(),
         esc(y_label).c_str());

  // data: one polyline per finite run so infinities leave visible gaps
  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kPalette[si % kPaletteSize];
    std::string run;
    std::size_t run_len = 0;
    auto flush = [&]() {
      if (run_len >= 2)
        append(out,
               "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\" "
               "points=\"%s\"/>\n",
               color, run.c_str());
      run.clear();
      run_len = 0;
    };
    for (const auto& [x, y] : series[si].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        flush();
        continue;
      }
      if (!run.empty()) run += ' ';
      run += coord(sx(x)) + "," + coord(sy(y));
      ++run_len;
      if (series[si].points.size() <= 64)
        append(out, "<circle cx=\"%s\" cy=\"%s\" r=\"2.5\" fill=\"%s\"/>\n",
               coord(sx(x)).c_str(), coord(sy(y)).c_str(), color);
    }
    flush();
  }

  // legend, top-right corner of the plot area
  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kPalette[si % kPaletteSize];
    double ly = T + 16.0 + 16.0 * static_cast<double>(si);
    append(out,
           "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"%s\" "
           "stroke-width=\"2\"/>\n",
           coord(W - R - 160).c_str(), coord(ly - 4).c_str(),
           coord(W - R - 142).c_str(), coord(ly - 4).c_str(), color);
    append(out,
           "<text x=\"%s\" y=\"%s\" font-family=\"monospace\" font-size=\"11\">"
           "%s</text>\n",
           coord(W - R - 136).c_str(), coord(ly).c_str(),
           esc(series[si].label).c_str());
  }

  out += "</svg>\n";
  return out;
}

std::string svg_polar_profile(const std::string& title,
                              std::span<const std::pair<double, double>> theta_r) {
  if (theta_r.empty()) throw std::invalid_argument("svg_polar_profile needs samples");
  double max_r = 0.0;
  for (const auto& [th, r] : theta_r) {
    if (!std::isfinite(th) || !std::isfinite(r) || r < 0.0)
      throw std::domain_error("polar samples must be finite with r >= 0");
    max_r = std::max(max_r, r);
  }
  if (!(max_r > 0.0)) throw std::domain_error("polar profile is identically zero");

  const double cx = 260.0, cy = 280.0, scale = 190.0 / max_r;
  std::string out;
  append(out,
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
         "viewBox=\"0 0 520 520\">\n");
  append(out, "<rect width=\"520\" height=\"520\" fill=\"white\"/>\n");
  append(out,
         "<text x=\"260\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\" font-weight=\"bold\">%s</text>\n",
         esc(title).c_str());

  for (int k = 1; k <= 3; ++k) {
    double rr = max_r * k / 3.0;
    append(out,
           "<circle cx=\"260\" cy=\"280\" r=\"%s\" fill=\"none\" "
           "stroke=\"#dddddd\"/>\n",
           coord(rr * scale).c_str());
    append(out,
           "<text x=\"%s\" y=\"%s\" font-family=\"monospace\" font-size=\"10\" "
           "fill=\"#666666\">%s</text>\n",
           coord(cx + 4).c_str(), coord(cy - rr * scale - 4).c_str(),
           tick_label(rr).c_str());
  }

  // boundary rays at the first and last sampled directions
  for (double th : {theta_r.front().first, theta_r.back().first}) {
    append(out,
           "<line x1=\"260\" y1=\"280\" x2=\"%s\" y2=\"%s\" stroke=\"#bbbbbb\" "
           "stroke-dasharray=\"4 3\"/>\n",
           coord(cx + 200.0 * std::cos(th)).c_str(),
           coord(cy - 200.0 * std::sin(th)).c_str());
  }

  std::string path;
  for (std::size_t i = 0; i < theta_r.size(); ++i) {
    const auto& [th, r] = theta_r[i];
    path += (i == 0 ? "M" : " L");
    path += coord(cx + scale * r * std::cos(th)) + "," +
            coord(cy - scale * r * std::sin(th));
  }
  append(out,
         "<path d=\"%s\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n",
         path.c_str());

  out += "</svg>\n";
  return out;
}

std::string svg_stack(std::span<const std::string> panels) {
  if (panels.empty()) throw std::invalid_argument("svg_stack needs panels");
  auto attr = [](const std::string& panel, const char* name) -> int {
    std::string key = std::string(name) + "=\"";
    auto pos = panel.find(key);
    if (pos == std::string::npos)
      throw std::invalid_argument("svg_stack: panel lacks a size attribute");
    return std::atoi(panel.c_str() + pos + key.size());
  };
  int width = 0, height = 0;
  for (const auto& p : panels) {
    width = std::max(width, attr(p, "width"));
    height += attr(p, "height");
  }
  std::string out;
  append(out,
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\">\n",
         width, height);
  int y = 0;
  for (const auto& p : panels) {
    // nested <svg> elements position each panel; inject the vertical offset
    std::string shifted = p;
    auto pos = shifted.find("<svg ");
    char buf[40];
    std::snprintf(buf, sizeof buf, "<svg y=\"%d\" ", y);
    shifted.replace(pos, 5, buf);
    out += shifted;
    y += attr(p, "height");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace asymp
