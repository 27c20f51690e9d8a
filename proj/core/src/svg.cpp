// Copyright 2026 The terratail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "terratail/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "terratail/format.hpp"

namespace terratail {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 52.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round pixel coordinates to 0.01 so output stays short and stable.
std::string px(double v) {
  return format_double(std::round(v * 100.0) / 100.0);
}

}  // namespace

SvgChart::SvgChart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgChart::set_x_range(double lo, double hi) {
  x_lo_ = lo;
  x_hi_ = hi;
  x_range_set_ = true;
}

void SvgChart::set_y_range(double lo, double hi) {
  y_lo_ = lo;
  y_hi_ = hi;
  y_range_set_ = true;
}

void SvgChart::add_series(std::string name,
                          std::vector<std::pair<double, double>> pts,
                          std::string color, bool markers) {
  series_.push_back({std::move(name), std::move(pts), std::move(color),
                     markers});
}

void SvgChart::add_hline(double y, std::string color) {
  hlines_.push_back(y);
  hline_colors_.push_back(std::move(color));
}

void SvgChart::add_band(double x0, double x1, std::string fill,
                        std::string label) {
  bands_.push_back({x0, x1, std::move(fill), std::move(label)});
}

std::string SvgChart::render() const {
  double x_lo = x_lo_, x_hi = x_hi_, y_lo = y_lo_, y_hi = y_hi_;
  if (!x_range_set_ || !y_range_set_) {
    bool first = true;
    for (const auto& s : series_) {
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        if (first || !x_range_set_) {
          if (first) { x_lo = x_hi = x; }
          x_lo = std::min(x_lo, x);
          x_hi = std::max(x_hi, x);
        }
        if (first || !y_range_set_) {
          if (first) { y_lo = y_hi = y; }
          y_lo = std::min(y_lo, y);
          y_hi = std::max(y_hi, y);
        }
        first = false;
      }
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    if (!y_range_set_) {
      const double pad = 0.05 * (y_hi - y_lo);
      y_lo -= pad;
      y_hi += pad;
    }
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double x) {
    return kMarginLeft + (x - x_lo) / (x_hi - x_lo) * plot_w;
  };
  const auto sy = [&](double y) {
    return kMarginTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  for (const auto& b : bands_) {
    const double bx0 = sx(std::clamp(b.x0, x_lo, x_hi));
    const double bx1 = sx(std::clamp(b.x1, x_lo, x_hi));
    if (bx1 <= bx0) continue;
    svg << "<rect x=\"" << px(bx0) << "\" y=\"" << px(kMarginTop)
        << "\" width=\"" << px(bx1 - bx0) << "\" height=\"" << px(plot_h)
        << "\" fill=\"" << b.fill << "\" fill-opacity=\"0.25\"/>\n";
    if (!b.label.empty())
      svg << "<text x=\"" << px(0.5 * (bx0 + bx1)) << "\" y=\""
          << px(kMarginTop + 16.0)
          << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#555\">"
          << escape(b.label) << "</text>\n";
  }

  // Frame and axis ticks.
  svg << "<rect x=\"" << px(kMarginLeft) << "\" y=\"" << px(kMarginTop)
      << "\" width=\"" << px(plot_w) << "\" height=\"" << px(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
    const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
    const double tx = sx(xv);
    const double ty = sy(yv);
    svg << "<line x1=\"" << px(tx) << "\" y1=\"" << px(kMarginTop + plot_h)
        << "\" x2=\"" << px(tx) << "\" y2=\"" << px(kMarginTop + plot_h + 5)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << px(tx) << "\" y=\"" << px(kMarginTop + plot_h + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">"
        << format_double(std::round(xv * 1000.0) / 1000.0) << "</text>\n";
    svg << "<line x1=\"" << px(kMarginLeft - 5) << "\" y1=\"" << px(ty)
        << "\" x2=\"" << px(kMarginLeft) << "\" y2=\"" << px(ty)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << px(kMarginLeft - 8) << "\" y=\"" << px(ty + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">"
        << format_double(std::round(yv * 1000.0) / 1000.0) << "</text>\n";
  }

  for (std::size_t i = 0; i < hlines_.size(); ++i) {
    if (hlines_[i] < y_lo || hlines_[i] > y_hi) continue;
    const double y = sy(hlines_[i]);
    svg << "<line x1=\"" << px(kMarginLeft) << "\" y1=\"" << px(y)
        << "\" x2=\"" << px(kMarginLeft + plot_w) << "\" y2=\"" << px(y)
        << "\" stroke=\"" << hline_colors_[i]
        << "\" stroke-dasharray=\"6,4\"/>\n";
  }

  for (const auto& s : series_) {
    std::ostringstream path;
    bool pen_down = false;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        pen_down = false;
        continue;
      }
      path << (pen_down ? " L " : " M ") << px(sx(x)) << " " << px(sy(y));
      pen_down = true;
    }
    svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\""
        << s.color << "\" stroke-width=\"1.8\"/>\n";
    if (s.markers) {
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        svg << "<circle cx=\"" << px(sx(x)) << "\" cy=\"" << px(sy(y))
            << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
      }
    }
  }

  // Legend.
  double ly = kMarginTop + 8.0;
  for (const auto& s : series_) {
    const double lx = kMarginLeft + plot_w - 150.0;
    svg << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly) << "\" x2=\""
        << px(lx + 24.0) << "\" y2=\"" << px(ly) << "\" stroke=\"" << s.color
        << "\" stroke-width=\"1.8\"/>\n";
    svg << "<text x=\"" << px(lx + 30.0) << "\" y=\"" << px(ly + 4.0)
        << "\" font-size=\"12\">" << escape(s.name) << "</text>\n";
    ly += 18.0;
  }

  svg << "<text x=\"" << px(kWidth / 2.0) << "\" y=\"" << px(22.0)
      << "\" font-size=\"15\" text-anchor=\"middle\">" << escape(title_)
      << "</text>\n";
  svg << "<text x=\"" << px(kMarginLeft + plot_w / 2.0) << "\" y=\""
      << px(kHeight - 12.0) << "\" font-size=\"13\" text-anchor=\"middle\">"
      << escape(x_label_) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << px(kMarginTop + plot_h / 2.0)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << px(kMarginTop + plot_h / 2.0) << ")\">" << escape(y_label_)
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace terratail
