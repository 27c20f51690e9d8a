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

#ifndef TERRATAIL_SVG_HPP_
#define TERRATAIL_SVG_HPP_

#include <string>
#include <utility>
#include <vector>

namespace terratail {

// Minimal self-contained SVG line chart: hand-written paths, no plotting
// dependency. Output is byte-stable (all numbers through format_double).
class SvgChart {
 public:
  SvgChart(std::string title, std::string x_label, std::string y_label);

  void set_x_range(double lo, double hi);
  void set_y_range(double lo, double hi);

  void add_series(std::string name, std::vector<std::pair<double, double>> pts,
                  std::string color, bool markers = false);

  // Horizontal dashed reference line at y.
  void add_hline(double y, std::string color);

  // Vertical shaded band between x0 and x1.
  void add_band(double x0, double x1, std::string fill, std::string label);

  std::string render() const;

 private:
  struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
    std::string color;
    bool markers;
  };
  struct Band {
    double x0, x1;
    std::string fill;
    std::string label;
  };

  std::string title_, x_label_, y_label_;
  double x_lo_ = 0.0, x_hi_ = 1.0, y_lo_ = 0.0, y_hi_ = 1.0;
  bool x_range_set_ = false, y_range_set_ = false;
  std::vector<Series> series_;
  std::vector<double> hlines_;
  std::vector<std::string> hline_colors_;
  std::vector<Band> bands_;
};

}  // namespace terratail

#endif  // TERRATAIL_SVG_HPP_
