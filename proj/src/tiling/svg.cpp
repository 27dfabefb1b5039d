// Copyright 2026 The penrose-quantale Authors
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
#include <limits>
#include <string>
#include <vector>

#include "penrose/tiling.hpp"

namespace penrose {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const TileTree& tree, const SvgOptions& options) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& p : tree.root().vertices) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double width = (max_x - min_x) * options.scale + 2 * options.margin;
  const double height = (max_y - min_y) * options.scale + 2 * options.margin;
  // SVG y grows downwards.
  auto sx = [&](double x) { return (x - min_x) * options.scale + options.margin; };
  auto sy = [&](double y) { return (max_y - y) * options.scale + options.margin; };
  auto point = [&](const Point& p) { return num(sx(p.x)) + "," + num(sy(p.y)); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<g class=\"tiles\" stroke=\"" + options.stroke + "\" stroke-width=\"" + num(options.stroke_width) +
         "\" stroke-linejoin=\"round\">\n";
  for (auto leaf : tree.leaves()) {
    const auto& node = tree.node(leaf);
    const bool large = node.type == Tile::L;
    out += "  <polygon class=\"" + std::string(large ? "L" : "S") + "\" fill=\"" +
           (large ? options.fill_large : options.fill_small) + "\" points=\"" + point(node.vertices[0]) + " " +
           point(node.vertices[1]) + " " + point(node.vertices[2]) + "\"/>\n";
  }
  out += "</g>\n";

  if (options.outline_level && *options.outline_level <= tree.order()) {
    out += "<g class=\"outlines\" fill=\"none\" stroke=\"" + options.stroke + "\" stroke-width=\"" +
           num(3 * options.stroke_width) + "\">\n";
    for (const auto& node : tree.nodes()) {
      if (node.level != *options.outline_level) continue;
      out += "  <path d=\"M" + point(node.vertices[0]) + " L" + point(node.vertices[1]) + " L" +
             point(node.vertices[2]) + " Z\"/>\n";
    }
    out += "</g>\n";
  }

  if (options.arrows) {
    out += "<g class=\"arrows\" fill=\"" + options.stroke + "\">\n";
    const double head = 0.08 * options.scale / std::max(1.0, std::sqrt(static_cast<double>(tree.order()) + 1));
    for (auto leaf : tree.leaves()) {
      const auto& node = tree.node(leaf);
      if (!node.decoration.arrow) continue;
      const auto [from, to] = *node.decoration.arrow;
      const Point a{sx(node.vertices[from].x), sy(node.vertices[from].y)};
      const Point b{sx(node.vertices[to].x), sy(node.vertices[to].y)};
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const Point dir{(b.x - a.x) / len, (b.y - a.y) / len};
      const Point mid{(a.x + b.x) / 2 + dir.x * head / 2, (a.y + b.y) / 2 + dir.y * head / 2};
      const Point back{mid.x - dir.x * head, mid.y - dir.y * head};
      const Point left{back.x - dir.y * head / 2, back.y + dir.x * head / 2};
      const Point right{back.x + dir.y * head / 2, back.y - dir.x * head / 2};
      out += "  <path d=\"M" + num(mid.x) + "," + num(mid.y) + " L" + num(left.x) + "," + num(left.y) + " L" +
             num(right.x) + "," + num(right.y) + " Z\"/>\n";
    }
    out += "</g>\n";
  }

  if (options.vertex_colors) {
    out += "<g class=\"vertices\" stroke=\"" + options.stroke + "\">\n";
    const double radius = 0.04 * options.scale / std::max(1.0, std::sqrt(static_cast<double>(tree.order()) + 1));
    std::vector<std::pair<Point, VertexColor>> drawn;
    for (auto leaf : tree.leaves()) {
      const auto& node = tree.node(leaf);
      for (std::size_t i = 0; i < 3; ++i) {
        const Point p = node.vertices[i];
        const bool seen = std::any_of(drawn.begin(), drawn.end(), [&](const auto& d) {
          return std::hypot(d.first.x - p.x, d.first.y - p.y) <= kDefaultTolerance;
        });
        if (seen) continue;
        drawn.emplace_back(p, node.decoration.colors[i]);
        out += "  <circle cx=\"" + num(sx(p.x)) + "\" cy=\"" + num(sy(p.y)) + "\" r=\"" + num(radius) +
               "\" fill=\"" + (node.decoration.colors[i] == VertexColor::Black ? "black" : "white") + "\"/>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace penrose
