// Copyright 2026 The ppa Authors.
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

#include "ppa/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace ppa::svg {

namespace {

constexpr const char* kPalette[] = {"#1a9850", "#91cf60", "#d9ef8b", "#fee08b", "#fc8d59", "#d73027",
                                    "#4575b4", "#91bfdb", "#762a83", "#999999"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string header(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\" font-family=\"sans-serif\" font-size=\"11\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string text(double x, double y, const std::string& t, const std::string& anchor = "middle") {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\">" + escape(t) + "</text>\n";
}

std::string line(double x1, double y1, double x2, double y2, const std::string& stroke = "black") {
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
         "\" stroke=\"" + stroke + "\"/>\n";
}

}  // namespace

std::string escape(const std::string& t) {
  std::string out;
  for (char c : t) {
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

std::string rank_score_bars(const SdScoreTable& table) {
  const std::size_t d = table.option_count();
  const double bar = 14.0;
  const double group = bar * static_cast<double>(d) + 20.0;
  const double left = 50.0, top = 40.0, plot_h = 220.0;
  const double width = left + group * static_cast<double>(d) + 140.0;
  const double height = top + plot_h + 60.0;
  const double max_count = static_cast<double>(std::max<std::size_t>(table.query_count, 1));

  std::string out = header(width, height);
  out += text(width / 2, 20, "Rank scores: " + table.dimension);
  out += line(left, top, left, top + plot_h);
  out += line(left, top + plot_h, left + group * static_cast<double>(d), top + plot_h);
  out += text(left - 6, top + 4, std::to_string(table.query_count), "end");
  out += text(left - 6, top + plot_h + 4, "0", "end");
  for (std::size_t o = 0; o < d; ++o) {
    const double gx = left + 10.0 + group * static_cast<double>(o);
    for (std::size_t r = 0; r < d; ++r) {
      const double h = plot_h * static_cast<double>(table.occurrences[o][r]) / max_count;
      out += "<rect x=\"" + num(gx + bar * static_cast<double>(r)) + "\" y=\"" + num(top + plot_h - h) +
             "\" width=\"" + num(bar - 2) + "\" height=\"" + num(h) + "\" fill=\"" + kPalette[r % 10] + "\"/>\n";
    }
    out += text(gx + bar * static_cast<double>(d) / 2, top + plot_h + 16, table.options[o]);
    out += text(gx + bar * static_cast<double>(d) / 2, top + plot_h + 32, "R=" + num(table.scores[o]));
  }
  const double lx = left + group * static_cast<double>(d) + 20.0;
  for (std::size_t r = 0; r < d; ++r) {
    const double ly = top + 16.0 * static_cast<double>(r);
    out += "<rect x=\"" + num(lx) + "\" y=\"" + num(ly) + "\" width=\"10\" height=\"10\" fill=\"" +
           kPalette[r % 10] + "\"/>\n";
    out += text(lx + 16, ly + 9, "rank " + std::to_string(r + 1), "start");
  }
  out += "</svg>\n";
  return out;
}

std::string triangle(const std::string& title, const std::vector<std::string>& axis_names, double rs, double rp,
                     double rf) {
  const double cx = 160.0, cy = 170.0, radius = 120.0;
  const double scores[3] = {rs, rp, rf};
  auto point = [&](std::size_t axis, double s) {
    const double angle = -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi / 3.0 * static_cast<double>(axis);
    return std::pair<double, double>{cx + radius * s * std::cos(angle), cy + radius * s * std::sin(angle)};
  };
  std::string out = header(320.0, 320.0);
  out += text(160, 20, title);
  std::string outer, inner;
  for (std::size_t a = 0; a < 3; ++a) {
    auto [ox, oy] = point(a, 1.0);
    auto [ix, iy] = point(a, scores[a]);
    outer += num(ox) + "," + num(oy) + " ";
    inner += num(ix) + "," + num(iy) + " ";
    out += line(cx, cy, ox, oy, "#bbbbbb");
    auto [tx, ty] = point(a, 1.15);
    const std::string name = a < axis_names.size() ? axis_names[a] : "R" + std::to_string(a + 1);
    out += text(tx, ty + 4, name + " " + num(scores[a]));
  }
  out += "<polygon points=\"" + outer + "\" fill=\"none\" stroke=\"#d73027\"/>\n";
  out += "<polygon points=\"" + inner + "\" fill=\"#4575b4\" fill-opacity=\"0.5\" stroke=\"#4575b4\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string scatter(const std::string& title, const std::string& x_name, const std::string& y_name,
                    const std::vector<ScatterPoint>& points) {
  const double left = 60.0, top = 40.0, w = 320.0, h = 260.0;
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (!points.empty()) {
    auto [xlo, xhi] = std::minmax_element(points.begin(), points.end(), [](auto& a, auto& b) { return a.x < b.x; });
    auto [ylo, yhi] = std::minmax_element(points.begin(), points.end(), [](auto& a, auto& b) { return a.y < b.y; });
    xmin = xlo->x;
    xmax = xhi->x;
    ymin = ylo->y;
    ymax = yhi->y;
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  auto px = [&](double x) { return left + w * (x - xmin) / (xmax - xmin); };
  auto py = [&](double y) { return top + h - h * (y - ymin) / (ymax - ymin); };

  std::string out = header(left + w + 40.0, top + h + 60.0);
  out += text(left + w / 2, 20, title);
  out += line(left, top + h, left + w, top + h);
  out += line(left, top, left, top + h);
  out += text(left + w / 2, top + h + 40, x_name);
  out += "<text x=\"16\" y=\"" + num(top + h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(top + h / 2) + ")\">" + escape(y_name) + "</text>\n";
  out += text(left, top + h + 16, num(xmin));
  out += text(left + w, top + h + 16, num(xmax));
  out += text(left - 6, top + h, num(ymin), "end");
  out += text(left - 6, top + 4, num(ymax), "end");
  for (const auto& p : points) {
    out += "<circle cx=\"" + num(px(p.x)) + "\" cy=\"" + num(py(p.y)) + "\" r=\"4\" fill=\"" +
           (p.highlighted ? "#1a9850" : "#999999") + "\"><title>" + escape(p.label) + "</title></circle>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string range_bars(const std::string& title, const std::string& value_name, const std::vector<RangeBar>& bars) {
  const double left = 150.0, top = 40.0, w = 360.0, row = 22.0;
  const double h = row * static_cast<double>(bars.size());
  double lo = 0.0, hi = 1.0;
  for (const auto& b : bars) hi = std::max(hi, b.max);
  auto px = [&](double v) { return left + w * (v - lo) / (hi - lo); };
  std::string out = header(left + w + 40.0, top + h + 50.0);
  out += text(left + w / 2, 20, title);
  out += line(left, top + h, left + w, top + h);
  out += text(left, top + h + 16, num(lo));
  out += text(left + w, top + h + 16, num(hi));
  out += text(left + w / 2, top + h + 34, value_name);
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double y = top + row * static_cast<double>(i) + row / 2;
    out += text(left - 8, y + 4, bars[i].label, "end");
    out += line(px(bars[i].min), y, px(bars[i].max), y, "#4575b4");
    out += "<rect x=\"" + num(px(bars[i].mean) - 3) + "\" y=\"" + num(y - 6) +
           "\" width=\"6\" height=\"12\" fill=\"#d73027\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ppa::svg
