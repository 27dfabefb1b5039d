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

#ifndef PENROSE_TILING_HPP
#define PENROSE_TILING_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "penrose/representation.hpp"
#include "penrose/seqspace.hpp"
#include "penrose/term.hpp"

namespace penrose {

inline constexpr double kTau = std::numbers::phi;
inline constexpr double kDefaultTolerance = 1e-9;

/// Side lengths of the level-0 tiles: L is (1, tau, tau), S is (tau, 1, 1).
std::array<double, 3> side_lengths(Tile type);

struct Point {
  double x = 0;
  double y = 0;
};

enum class VertexColor : std::uint8_t { White, Black };

/// Vertex colours and the oriented edge of a triangle, indexed like its vertices.
struct Decoration {
  std::array<VertexColor, 3> colors{};
  /// (from, to) vertex indices of the oriented edge.
  std::optional<std::pair<std::uint8_t, std::uint8_t>> arrow;
};

struct TileNode {
  Tile type = Tile::L;
  std::size_t level = 0;
  std::optional<std::size_t> parent;
  /// An L node at level n + 1 has children [L, S] at level n; an S node has [L].
  std::vector<std::size_t> children;
  /// Counterclockwise; mirror images differ only in which vertex carries which role.
  std::array<Point, 3> vertices{};
  Decoration decoration;
};

/// A single tile of level N subdivided down to level 0.
///
/// Large tiles alternate between the acute (1, tau, tau) shape at even levels
/// and the obtuse (tau^2, tau, tau) shape at odd levels, each split producing a
/// large and a small tile of the level below; a small tile of level n + 1 is a
/// large tile of level n.
class TileTree {
 public:
  std::size_t order() const noexcept { return order_; }
  const TileNode& root() const { return nodes_.front(); }
  const TileNode& node(std::size_t index) const { return nodes_.at(index); }
  const std::vector<TileNode>& nodes() const noexcept { return nodes_; }
  /// Node indices of the level-0 tiles in depth-first order (L child first).
  const std::vector<std::size_t>& leaves() const noexcept { return leaves_; }
  bool is_leaf(std::size_t index) const { return node(index).level == 0; }

  /// The level-`level` tile containing `index`. Throws RangeError if level is
  /// below the node's level or above the order.
  std::size_t ancestor(std::size_t index, std::size_t level) const;

  /// Copy with one node's decoration replaced.
  TileTree with_decoration(std::size_t index, Decoration decoration) const;

 private:
  friend TileTree inflate(Tile root_type, std::size_t order);

  std::size_t order_ = 0;
  std::vector<TileNode> nodes_;
  std::vector<std::size_t> leaves_;
};

TileTree inflate(Tile root_type, std::size_t order);

/// Tile types of the leaf's ancestors from level 0 up to the root.
AdmissibleString leaf_address(const TileTree& tree, std::size_t leaf);

/// Bit n is 1 iff the level-n ancestor is small, for n < N. Throws RangeError
/// for S-rooted trees, whose dropped top bit would break the tail-zero convention.
TruncSeq leaf_to_seq(const TileTree& tree, std::size_t leaf);

/// The leaf whose interior contains p. Throws BoundaryError if p is within
/// `tolerance` of a leaf edge and OutOfFragmentError if it lies outside the root.
std::size_t locate_leaf(const TileTree& tree, Point p, double tolerance = kDefaultTolerance);
TruncSeq point_to_sequence(const TileTree& tree, Point p, double tolerance = kDefaultTolerance);

/// States are the leaves (labelled by address). x <n X| y iff x and y share
/// their level-(n+1) tile and y's level-n tile has type X.
RelRep geometric_rep(const TileTree& tree);

struct MatchResult {
  bool pass = true;
  std::string violation;
  std::size_t shared_edges = 0;
  std::size_t vertices = 0;
};

/// Coinciding leaf vertices must share a colour and coinciding leaf edges must
/// carry the same orientation (or none).
MatchResult matching_check(const TileTree& tree, double tolerance = kDefaultTolerance);

double signed_area(const std::array<Point, 3>& v);
Point centroid(const std::array<Point, 3>& v);

struct SvgOptions {
  double scale = 120.0;
  double margin = 12.0;
  bool vertex_colors = true;
  bool arrows = true;
  /// Draw the outlines of the level-k tiles on top of the leaves.
  std::optional<std::size_t> outline_level;
  std::string fill_large = "#f2c14e";
  std::string fill_small = "#5b8e7d";
  std::string stroke = "#2b2b2b";
  double stroke_width = 1.0;
};

/// SVG 1.1 document with one <polygon> per leaf; outlines, arrowheads and
/// vertex markers use <path> and <circle>.
std::string render_svg(const TileTree& tree, const SvgOptions& options = {});

}  // namespace penrose

#endif  // PENROSE_TILING_HPP
