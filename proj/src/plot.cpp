// Copyright 2026 The mergelab Authors
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


#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mergelab/errors.hpp"
#include "mergelab/plot.hpp"

namespace mergelab {
namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 60;
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Series>& series, const std::string& title,
                       const std::string& xlabel, const std::string& ylabel) {
  if (series.empty()) throw InputError("nothing to plot");
  if (series.size() > 4) throw InputError("at most 4 series per plot");
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series) {
    if (s.points.empty()) throw InputError("series '" + s.name + "' has no points");
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) throw InputError("series '" + s.name + "' has non-finite points");
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  }
  if (x1 - x0 < 1e-12) x0 -= 1, x1 += 1;
  if (y1 - y0 < 1e-12) y0 -= 1, y1 += 1;
  const double padx = 0.05 * (x1 - x0), pady = 0.05 * (y1 - y0);
  x0 -= padx, x1 += padx, y0 -= pady, y1 += pady;
  auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
     << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape(title)
     << "</text>\n";
  os << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin) << "\" x2=\"" << num(kWidth - kMargin)
     << "\" y2=\"" << num(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin) << "\" x2=\"" << num(kMargin) << "\" y2=\""
     << num(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    double xv = x0 + (x1 - x0) * t / 4, yv = y0 + (y1 - y0) * t / 4;
    os << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(kHeight - kMargin + 16)
       << "\" text-anchor=\"middle\" font-size=\"11\">" << num(xv) << "</text>\n";
    os << "<text x=\"" << num(kMargin - 6) << "\" y=\"" << num(sy(yv) + 4)
       << "\" text-anchor=\"end\" font-size=\"11\">" << num(yv) << "</text>\n";
  }
  if (x0 < 0 && x1 > 0)
    os << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(kMargin) << "\" x2=\"" << num(sx(0)) << "\" y2=\""
       << num(kHeight - kMargin) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  if (y0 < 0 && y1 > 0)
    os << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(kWidth - kMargin)
       << "\" y2=\"" << num(sy(0)) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  os << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 14) << "\" text-anchor=\"middle\" font-size=\"13\">"
     << escape(xlabel) << "</text>\n";
  os << "<text x=\"16\" y=\"" << num(kHeight / 2) << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
     << num(kHeight / 2) << ")\">" << escape(ylabel) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kColors[k];
    if (s.connect && s.points.size() > 1) {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i)
        os << (i ? " " : "") << num(sx(s.points[i].first)) << ',' << num(sy(s.points[i].second));
      os << "\"/>\n";
    }
    for (const auto& [x, y] : s.points)
      os << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    os << "<text x=\"" << num(kWidth - kMargin - 4) << "\" y=\"" << num(kMargin + 16 * k) << "\" text-anchor=\"end\" "
       << "font-size=\"12\" fill=\"" << color << "\">" << escape(s.name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void emit_plot(const std::vector<Series>& series, const std::string& path, const std::string& title,
               const std::string& xlabel, const std::string& ylabel) {
  std::string svg = render_svg(series, title, xlabel, ylabel);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << svg;
}

}  // namespace mergelab
