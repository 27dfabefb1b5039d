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

#include "penrose/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "penrose/error.hpp"

namespace penrose {

std::array<double, 3> side_lengths(Tile type) {
  return type == Tile::L ? std::array{1.0, kTau, kTau} : std::array{kTau, 1.0, 1.0};
}

double signed_area(const std::array<Point, 3>& v) {
  return 0.5 * ((v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[2].x - v[0].x) * (v[1].y - v[0].y));
}

Point centroid(const std::array<Point, 3>& v) {
  return {(v[0].x + v[1].x + v[2].x) / 3.0, (v[0].y + v[1].y + v[2].y) / 3.0};
}

namespace {

// Vertices are tracked by role while subdividing. Role order per shape:
//   acute tile (even-level L, odd-level S): apex, white base vertex, black base vertex;
//     the black base vertex -> apex edge is oriented.
//   obtuse even-level S: apex, black base vertex, white base vertex;
//     the white base vertex -> apex edge is oriented.
//   obtuse odd-level L: apex P, black base vertex Q, white base vertex R;
//     the P -> Q edge is oriented.
// Level-0 tiles get exactly the two basic decorations. Odd levels use the
// decorations of the first merged tiling and even levels repeat level 0.
//
// Where the construction fixes only part of the transport (the split of an
// acute large tile and the relabelling of an even-level small tile), the
// choice below is the unique one among the possible role assignments for
// which every inflation of order <= 8 satisfies the matching rules.
struct Placed {
  Tile type;
  std::size_t level;
  std::array<Point, 3> role;
};

constexpr auto B = VertexColor::Black;
constexpr auto W = VertexColor::White;

bool is_acute(Tile type, std::size_t level) { return (type == Tile::L) == (level % 2 == 0); }

Decoration role_decoration(Tile type, std::size_t level) {
  if (is_acute(type, level)) return {{B, W, B}, std::pair<std::uint8_t, std::uint8_t>{2, 0}};
  if (type == Tile::S) return {{W, B, W}, std::pair<std::uint8_t, std::uint8_t>{2, 0}};
  return {{B, B, W}, std::pair<std::uint8_t, std::uint8_t>{0, 1}};
}

Point towards(Point from, Point to, double t) { return {from.x + (to.x - from.x) * t, from.y + (to.y - from.y) * t}; }

std::vector<Placed> split(const Placed& p) {
  const auto lv = p.level - 1;
  const auto& r = p.role;
  const bool odd = p.level % 2 == 1;
  if (p.type == Tile::S) {
    if (odd) return {{Tile::L, lv, r}};
    return {{Tile::L, lv, {r[0], r[2], r[1]}}};
  }
  if (odd) {
    // P, Q, R: cut from P to D on QR with |QD| = |QR| / tau.
    const Point d = towards(r[1], r[2], 1.0 / kTau);
    return {{Tile::L, lv, {r[1], d, r[0]}}, {Tile::S, lv, {d, r[0], r[2]}}};
  }
  // apex A, white base W, black base K: cut from W to E on AK with |AE| = |AK| / tau.
  const Point e = towards(r[0], r[2], 1.0 / kTau);
  return {{Tile::L, lv, {e, r[1], r[0]}}, {Tile::S, lv, {r[1], r[2], e}}};
}

Placed root_tile(Tile type, std::size_t order) {
  const double acute_height = std::sqrt(kTau * kTau - 0.25);
  const double obtuse_height = std::sqrt(1.0 - kTau * kTau / 4.0);
  std::size_t exponent = order / 2;
  if (type == Tile::L && order % 2 == 1) exponent = (order + 1) / 2;
  const double s = std::pow(kTau, static_cast<double>(exponent));
  if (is_acute(type, order)) {
    return {type, order, {Point{0.5 * s, acute_height * s}, Point{0, 0}, Point{s, 0}}};
  }
  return {type, order, {Point{0.5 * kTau * s, obtuse_height * s}, Point{0, 0}, Point{kTau * s, 0}}};
}

TileNode make_node(const Placed& p) {
  TileNode node;
  node.type = p.type;
  node.level = p.level;
  node.vertices = p.role;
  node.decoration = role_decoration(p.type, p.level);
  if (signed_area(node.vertices) < 0) {
    std::swap(node.vertices[1], node.vertices[2]);
    std::swap(node.decoration.colors[1], node.decoration.colors[2]);
    auto remap = [](std::uint8_t i) -> std::uint8_t { return i == 0 ? 0 : static_cast<std::uint8_t>(3 - i); };
    auto& [from, to] = *node.decoration.arrow;
    from = remap(from);
    to = remap(to);
  }
  return node;
}

}  // namespace

std::size_t TileTree::ancestor(std::size_t index, std::size_t level) const {
  const TileNode* n = &node(index);
  if (level < n->level || level > order_) throw RangeError("ancestor level out of range");
  while (n->level < level) {
    index = *n->parent;
    n = &nodes_[index];
  }
  return index;
}

TileTree TileTree::with_decoration(std::size_t index, Decoration decoration) const {
  TileTree copy = *this;
  copy.nodes_.at(index).decoration = decoration;
  return copy;
}

TileTree inflate(Tile root_type, std::size_t order) {
  TileTree tree;
  tree.order_ = order;
  struct Pending {
    Placed tile;
    std::optional<std::size_t> parent;
  };
  std::vector<Pending> stack{{root_tile(root_type, order), std::nullopt}};
  while (!stack.empty()) {
    Pending item = std::move(stack.back());
    stack.pop_back();
    const std::size_t index = tree.nodes_.size();
    TileNode node = make_node(item.tile);
    node.parent = item.parent;
    tree.nodes_.push_back(std::move(node));
    if (item.parent) tree.nodes_[*item.parent].children.push_back(index);
    if (item.tile.level == 0) {
      tree.leaves_.push_back(index);
      continue;
    }
    auto kids = split(item.tile);
    // Reverse so the L child is visited first.
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, index});
  }
  return tree;
}

namespace {

void require_leaf(const TileTree& tree, std::size_t leaf) {
  if (leaf >= tree.nodes().size() || !tree.is_leaf(leaf)) throw RangeError("node is not a leaf of the tree");
}

}  // namespace

AdmissibleString leaf_address(const TileTree& tree, std::size_t leaf) {
  require_leaf(tree, leaf);
  std::vector<Tile> types;
  std::optional<std::size_t> cur = leaf;
  while (cur) {
    types.push_back(tree.node(*cur).type);
    cur = tree.node(*cur).parent;
  }
  return AdmissibleString(std::move(types));
}

TruncSeq leaf_to_seq(const TileTree& tree, std::size_t leaf) {
  if (tree.root().type != Tile::L) throw RangeError("sequence extraction needs an L-rooted tree");
  const auto address = leaf_address(tree, leaf);
  std::vector<Bit> bits;
  bits.reserve(tree.order());
  for (std::size_t n = 0; n < tree.order(); ++n) bits.push_back(address.types()[n] == Tile::S ? 1 : 0);
  return TruncSeq(std::move(bits));
}

namespace {

/// Smallest signed distance from p to the edge lines of a CCW triangle;
/// positive inside.
double inset(const std::array<Point, 3>& v, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 3; ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % 3];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const double d = ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / len;
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

std::size_t locate_leaf(const TileTree& tree, Point p, double tolerance) {
  if (inset(tree.root().vertices, p) < -tolerance) throw OutOfFragmentError("point lies outside the fragment");
  std::size_t best_leaf = tree.leaves().front();
  double best = -std::numeric_limits<double>::infinity();
  for (auto leaf : tree.leaves()) {
    const double d = inset(tree.node(leaf).vertices, p);
    if (d > best) {
      best = d;
      best_leaf = leaf;
    }
  }
  if (best <= tolerance) throw BoundaryError("point lies on an edge or vertex of a tile");
  return best_leaf;
}

TruncSeq point_to_sequence(const TileTree& tree, Point p, double tolerance) {
  return leaf_to_seq(tree, locate_leaf(tree, p, tolerance));
}

RelRep geometric_rep(const TileTree& tree) {
  const auto& leaves = tree.leaves();
  const std::size_t n = leaves.size();
  if (tree.root().type != Tile::L) throw RangeError("geometric representation needs an L-rooted tree");
  const std::size_t levels = tree.order();

  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto leaf : leaves) labels.push_back(leaf_address(tree, leaf).str());

  // chain[i][k] = level-k ancestor of leaf i.
  std::vector<std::vector<std::size_t>> chain(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= tree.order(); ++k) chain[i].push_back(tree.ancestor(leaves[i], k));
  }
  std::vector<Relation> gens(2 * levels, Relation(n));
  for (std::size_t lv = 0; lv < levels; ++lv) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (chain[x][lv + 1] != chain[y][lv + 1]) continue;
        const Tile t = tree.node(chain[y][lv]).type;
        gens[2 * lv + (t == Tile::S ? 1 : 0)].set(x, y);
      }
    }
  }
  return RelRep(std::move(labels), levels, std::move(gens));
}

MatchResult matching_check(const TileTree& tree, double tolerance) {
  MatchResult result;
  std::vector<Point> clusters;
  std::vector<VertexColor> cluster_color;
  auto cluster_of = [&](Point p) -> std::pair<std::size_t, bool> {
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::hypot(clusters[c].x - p.x, clusters[c].y - p.y) <= tolerance) return {c, false};
    }
    clusters.push_back(p);
    return {clusters.size() - 1, true};
  };
  auto describe = [](Point p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
  };

  // Edge key (low cluster, high cluster) -> orientations: 0 plain, +1 low->high, -1 high->low.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> edges;
  for (auto leaf : tree.leaves()) {
    const auto& node = tree.node(leaf);
    std::array<std::size_t, 3> ids{};
    for (std::size_t i = 0; i < 3; ++i) {
      auto [id, fresh] = cluster_of(node.vertices[i]);
      ids[i] = id;
      const auto color = node.decoration.colors[i];
      if (fresh) {
        cluster_color.push_back(color);
      } else if (cluster_color[id] != color && result.pass) {
        result.pass = false;
        result.violation = "vertex " + describe(clusters[id]) + " has conflicting colours";
      }
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t j = (i + 1) % 3;
      const auto lo = std::min(ids[i], ids[j]);
      const auto hi = std::max(ids[i], ids[j]);
      int orientation = 0;
      if (const auto& arrow = node.decoration.arrow) {
        const auto [from, to] = *arrow;
        if ((from == i && to == j) || (from == j && to == i)) orientation = ids[from] == lo ? 1 : -1;
      }
      edges[{lo, hi}].push_back(orientation);
    }
  }
  for (const auto& [key, orientations] : edges) {
    if (orientations.size() < 2) continue;
    ++result.shared_edges;
    if (!result.pass) continue;
    const bool agree = std::all_of(orientations.begin(), orientations.end(),
                                   [&](int o) { return o == orientations.front(); });
    if (orientations.size() > 2 || !agree) {
      result.pass = false;
      result.violation = "edge " + describe(clusters[key.first]) + " - " + describe(clusters[key.second]) +
                         (orientations.size() > 2 ? " is shared by more than two tiles" : " has conflicting orientations");
    }
  }
  result.vertices = clusters.size();
  return result;
}

}  // namespace penrose
