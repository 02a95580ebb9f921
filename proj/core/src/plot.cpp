// Copyright 2026 The FairSDP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairsdp/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fairsdp {
namespace {

constexpr double kLeft = 70.0, kRight = 620.0, kTop = 40.0, kBottom = 460.0;
constexpr int kWidth = 820, kHeight = 520;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
constexpr int kPaletteSize = 8;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

struct Series {
  std::string name;
  std::string color;
  bool dashed = false;
  std::vector<std::pair<double, double>> values;  // (lambda, score)
};

const char* metric_name(SweepMetric metric) {
  switch (metric) {
    case SweepMetric::kAmi: return "ami";
    case SweepMetric::kAri: return "ari";
    case SweepMetric::kVMeasure: return "v_measure";
  }
  return "";
}

}  // namespace

std::string render_sweep_svg(const std::vector<SweepPoint>& points,
                             SweepMetric metric) {
  if (points.empty()) throw std::invalid_argument("no sweep points to plot");

  // Average over seeds for each (mu, lambda); map keys keep the grid
  // sorted so output order is stable.
  struct Acc {
    double temporal = 0.0;
    double specificity = 0.0;
    int count = 0;
  };
  std::map<double, std::map<double, Acc>> grid;
  for (const auto& p : points) {
    Acc& acc = grid[p.mu][p.lambda];
    switch (metric) {
      case SweepMetric::kAmi:
        acc.temporal += p.temporal_ami;
        acc.specificity += p.specificity_ami;
        break;
      case SweepMetric::kAri:
        acc.temporal += p.temporal_ari;
        acc.specificity += p.specificity_ari;
        break;
      case SweepMetric::kVMeasure:
        acc.temporal += p.temporal_v;
        acc.specificity += p.specificity_v;
        break;
    }
    acc.count += 1;
  }

  std::vector<Series> series;
  int mu_index = 0;
  for (const auto& [mu, by_lambda] : grid) {
    Series temporal{"mu=" + fmt("%g", mu) + " temporal",
                    kPalette[(2 * mu_index) % kPaletteSize], false, {}};
    Series specificity{"mu=" + fmt("%g", mu) + " specificity",
                       kPalette[(2 * mu_index + 1) % kPaletteSize], true, {}};
    for (const auto& [lambda, acc] : by_lambda) {
      temporal.values.emplace_back(lambda, acc.temporal / acc.count);
      specificity.values.emplace_back(lambda, acc.specificity / acc.count);
    }
    series.push_back(std::move(temporal));
    series.push_back(std::move(specificity));
    ++mu_index;
  }

  double lambda_min = points[0].lambda, lambda_max = points[0].lambda;
  for (const auto& p : points) {
    lambda_min = std::min(lambda_min, p.lambda);
    lambda_max = std::max(lambda_max, p.lambda);
  }
  if (lambda_min == lambda_max) {
    lambda_min -= 0.5;
    lambda_max += 0.5;
  }

  const auto x_of = [&](double lambda) {
    return kLeft + (lambda - lambda_min) / (lambda_max - lambda_min) *
                       (kRight - kLeft);
  };
  const auto y_of = [&](double score) {
    return kBottom - clamp01(score) * (kBottom - kTop);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fmt("%.1f", (kLeft + kRight) / 2) << "\" y=\"22\" "
      << "font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">"
      << metric_name(metric) << " vs lambda</text>\n";

  // Axes.
  svg << "<line x1=\"" << fmt("%.1f", kLeft) << "\" y1=\"" << fmt("%.1f", kBottom)
      << "\" x2=\"" << fmt("%.1f", kRight) << "\" y2=\"" << fmt("%.1f", kBottom)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << fmt("%.1f", kLeft) << "\" y1=\"" << fmt("%.1f", kTop)
      << "\" x2=\"" << fmt("%.1f", kLeft) << "\" y2=\"" << fmt("%.1f", kBottom)
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double lambda = lambda_min + i * (lambda_max - lambda_min) / 4.0;
    const double x = x_of(lambda);
    svg << "<line x1=\"" << fmt("%.1f", x) << "\" y1=\"" << fmt("%.1f", kBottom)
        << "\" x2=\"" << fmt("%.1f", x) << "\" y2=\"" << fmt("%.1f", kBottom + 5)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt("%.1f", x) << "\" y=\"" << fmt("%.1f", kBottom + 20)
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
        << "text-anchor=\"middle\">" << fmt("%.3g", lambda) << "</text>\n";
    const double score = i / 4.0;
    const double y = y_of(score);
    svg << "<line x1=\"" << fmt("%.1f", kLeft - 5) << "\" y1=\"" << fmt("%.1f", y)
        << "\" x2=\"" << fmt("%.1f", kLeft) << "\" y2=\"" << fmt("%.1f", y)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt("%.1f", kLeft - 10) << "\" y=\"" << fmt("%.1f", y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
        << "text-anchor=\"end\">" << fmt("%.2f", score) << "</text>\n";
  }
  svg << "<text x=\"" << fmt("%.1f", (kLeft + kRight) / 2) << "\" y=\""
      << fmt("%.1f", kBottom + 45)
      << "\" font-family=\"sans-serif\" font-size=\"13\" "
      << "text-anchor=\"middle\">lambda</text>\n";

  for (const auto& s : series) {
    if (s.values.size() > 1) {
      svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
      if (s.dashed) svg << " stroke-dasharray=\"6 4\"";
      svg << " points=\"";
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) svg << " ";
        svg << fmt("%.2f", x_of(s.values[i].first)) << ","
            << fmt("%.2f", y_of(s.values[i].second));
      }
      svg << "\"/>\n";
    }
    for (const auto& [lambda, score] : s.values) {
      svg << "<circle cx=\"" << fmt("%.2f", x_of(lambda)) << "\" cy=\""
          << fmt("%.2f", y_of(score)) << "\" r=\"3\" fill=\"" << s.color
          << "\"/>\n";
    }
  }

  // Legend.
  double ly = kTop + 10.0;
  for (const auto& s : series) {
    svg << "<line x1=\"" << fmt("%.1f", kRight + 20) << "\" y1=\"" << fmt("%.1f", ly)
        << "\" x2=\"" << fmt("%.1f", kRight + 50) << "\" y2=\"" << fmt("%.1f", ly)
        << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
    if (s.dashed) svg << " stroke-dasharray=\"6 4\"";
    svg << "/>\n";
    svg << "<text x=\"" << fmt("%.1f", kRight + 56) << "\" y=\"" << fmt("%.1f", ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.name
        << "</text>\n";
    ly += 20.0;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fairsdp
