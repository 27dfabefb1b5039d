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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "oracles.hpp"
#include "penrose/error.hpp"
#include "penrose/representation.hpp"
#include "penrose/tiling.hpp"

using penrose::Point;
using penrose::Tile;
using penrose::TileTree;

namespace {

// c_L(0) = c_S(0) = 1, c_L(n+1) = c_L(n) + c_S(n), c_S(n+1) = c_L(n).
std::size_t leaf_count(Tile root, std::size_t order) {
  std::size_t l = 1, s = 1;
  for (std::size_t i = 0; i < order; ++i) {
    const auto nl = l + s;
    s = l;
    l = nl;
  }
  return root == Tile::L ? l : s;
}

// Barycentric coordinates of p in triangle v.
std::array<double, 3> barycentric(const std::array<Point, 3>& v, Point p) {
  const double det = (v[1].y - v[2].y) * (v[0].x - v[2].x) + (v[2].x - v[1].x) * (v[0].y - v[2].y);
  const double a = ((v[1].y - v[2].y) * (p.x - v[2].x) + (v[2].x - v[1].x) * (p.y - v[2].y)) / det;
  const double b = ((v[2].y - v[0].y) * (p.x - v[2].x) + (v[0].x - v[2].x) * (p.y - v[2].y)) / det;
  return {a, b, 1 - a - b};
}

double area(const std::array<Point, 3>& v) {
  return 0.5 * ((v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[2].x - v[0].x) * (v[1].y - v[0].y));
}

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("leaf counts follow the child recurrence") {
  CHECK(penrose::inflate(Tile::L, 0).leaves().size() == 1);
  CHECK(penrose::inflate(Tile::L, 3).leaves().size() == 5);
  CHECK(penrose::inflate(Tile::L, 10).leaves().size() == 144);
  for (std::size_t n = 0; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(penrose::inflate(Tile::L, n).leaves().size() == leaf_count(Tile::L, n));
    CHECK(penrose::inflate(Tile::S, n).leaves().size() == leaf_count(Tile::S, n));
  }
}

TEST_CASE("tree structure") {
  const auto tree = penrose::inflate(Tile::L, 7);
  CHECK(tree.root().level == 7);
  for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
    const auto& node = tree.node(i);
    if (node.level == 0) {
      CHECK(node.children.empty());
      continue;
    }
    if (node.type == Tile::L) {
      REQUIRE(node.children.size() == 2);
      CHECK(tree.node(node.children[0]).type == Tile::L);
      CHECK(tree.node(node.children[1]).type == Tile::S);
    } else {
      REQUIRE(node.children.size() == 1);
      CHECK(tree.node(node.children[0]).type == Tile::L);
    }
    for (auto c : node.children) {
      CHECK(tree.node(c).level + 1 == node.level);
      CHECK(tree.node(c).parent == i);
    }
  }
  const auto leaf = tree.leaves().front();
  CHECK(tree.ancestor(leaf, 7) == 0);
  CHECK(tree.ancestor(leaf, 0) == leaf);
  CHECK_THROWS_AS(tree.ancestor(leaf, 8), penrose::RangeError);
}

TEST_CASE("addresses") {
  const auto t0 = penrose::inflate(Tile::L, 0);
  CHECK(penrose::leaf_address(t0, t0.leaves()[0]).str() == "L");
  CHECK(penrose::leaf_to_seq(t0, t0.leaves()[0]).length() == 0);
  const auto t1 = penrose::inflate(Tile::L, 1);
  std::set<std::string> addrs, seqs;
  for (auto leaf : t1.leaves()) {
    addrs.insert(penrose::leaf_address(t1, leaf).str());
    seqs.insert(penrose::leaf_to_seq(t1, leaf).str());
  }
  CHECK(addrs == std::set<std::string>{"LL", "SL"});
  CHECK(seqs == std::set<std::string>{"0", "1"});
  const auto s = penrose::inflate(Tile::S, 3);
  CHECK_THROWS_AS(penrose::leaf_to_seq(s, s.leaves()[0]), penrose::RangeError);
  for (auto leaf : s.leaves()) CHECK(penrose::leaf_address(s, leaf).str().back() == 'S');
}

TEST_CASE("leaf sequences are a bijection onto K_N") {
  for (std::size_t n = 0; n <= 12; ++n) {
    const auto tree = penrose::inflate(Tile::L, n);
    std::vector<std::string> got;
    for (auto leaf : tree.leaves()) {
      const auto addr = penrose::leaf_address(tree, leaf).str();
      CHECK(addr.find("SS") == std::string::npos);
      CHECK(addr.back() == 'L');
      const auto seq = penrose::leaf_to_seq(tree, leaf).str();
      // Bit k is the type of the level-k ancestor.
      for (std::size_t k = 0; k < n; ++k) CHECK((seq[k] == '1') == (addr[k] == 'S'));
      got.push_back(seq);
    }
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::brute_force_sequences(n));
  }
}

TEST_CASE("children tile their parent") {
  for (auto root : {Tile::L, Tile::S}) {
    const auto tree = penrose::inflate(root, 9);
    for (const auto& node : tree.nodes()) {
      CHECK(area(node.vertices) > 0);  // counterclockwise
      CHECK(penrose::signed_area(node.vertices) == doctest::Approx(area(node.vertices)).epsilon(1e-12));
      if (node.children.empty()) continue;
      double sum = 0;
      for (auto c : node.children) {
        sum += area(tree.node(c).vertices);
        // Every child vertex lies in the closed parent triangle.
        for (const auto& p : tree.node(c).vertices) {
          for (double w : barycentric(node.vertices, p)) CHECK(w > -1e-9);
        }
      }
      CHECK(std::abs(sum - area(node.vertices)) <= 1e-9 * area(node.vertices));
    }
  }
}

TEST_CASE("leaves have the level-0 side lengths") {
  const auto tree = penrose::inflate(Tile::L, 8);
  for (auto leaf : tree.leaves()) {
    const auto& n = tree.node(leaf);
    std::array<double, 3> sides{dist(n.vertices[0], n.vertices[1]), dist(n.vertices[1], n.vertices[2]),
                                dist(n.vertices[2], n.vertices[0])};
    auto want = penrose::side_lengths(n.type);
    std::sort(sides.begin(), sides.end());
    std::sort(want.begin(), want.end());
    for (int k = 0; k < 3; ++k) CHECK(sides[k] == doctest::Approx(want[k]).epsilon(1e-9));
  }
  CHECK(penrose::kTau * penrose::kTau == doctest::Approx(penrose::kTau + 1).epsilon(1e-15));
}

TEST_CASE("point location agrees with a barycentric oracle") {
  const auto tree = penrose::inflate(Tile::L, 8);
  for (auto leaf : tree.leaves()) {
    const auto c = penrose::centroid(tree.node(leaf).vertices);
    CHECK(penrose::locate_leaf(tree, c) == leaf);
    CHECK(penrose::point_to_sequence(tree, c) == penrose::leaf_to_seq(tree, leaf));
  }
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0, 1);
  const auto& root = tree.root().vertices;
  int located = 0;
  while (located < 1000) {
    double a = u(rng), b = u(rng);
    if (a + b > 1) {
      a = 1 - a;
      b = 1 - b;
    }
    const Point p{root[0].x + a * (root[1].x - root[0].x) + b * (root[2].x - root[0].x),
                  root[0].y + a * (root[1].y - root[0].y) + b * (root[2].y - root[0].y)};
    std::vector<std::size_t> inside;
    bool near_edge = false;
    for (auto leaf : tree.leaves()) {
      const auto w = barycentric(tree.node(leaf).vertices, p);
      const double lo = *std::min_element(w.begin(), w.end());
      if (lo > 1e-6) inside.push_back(leaf);
      if (std::abs(lo) <= 1e-6) near_edge = true;
    }
    if (near_edge) continue;
    REQUIRE(inside.size() == 1);
    CHECK(penrose::locate_leaf(tree, p) == inside[0]);
    CHECK(penrose::point_to_sequence(tree, p) == penrose::leaf_to_seq(tree, inside[0]));
    ++located;
  }
}

TEST_CASE("point location errors") {
  const auto tree = penrose::inflate(Tile::L, 5);
  const auto& root = tree.root().vertices;
  CHECK_THROWS_AS(penrose::locate_leaf(tree, root[0]), penrose::BoundaryError);
  const Point mid{(root[0].x + root[1].x) / 2, (root[0].y + root[1].y) / 2};
  CHECK_THROWS_AS(penrose::locate_leaf(tree, mid), penrose::BoundaryError);
  CHECK_THROWS_AS(penrose::locate_leaf(tree, Point{-100, -100}), penrose::OutOfFragmentError);
  // A point on an internal edge between two leaves.
  const auto& leaf = tree.node(tree.leaves()[0]).vertices;
  const Point edge{(leaf[0].x + leaf[1].x) / 2, (leaf[0].y + leaf[1].y) / 2};
  CHECK_THROWS_AS(penrose::locate_leaf(tree, edge), penrose::BoundaryError);
}

TEST_CASE("geometric representation equals the Cantor representation") {
  const auto t1 = penrose::inflate(Tile::L, 1);
  const auto g1 = penrose::geometric_rep(t1);
  auto idx = [&](const std::string& a) { return *g1.find_state(a); };
  CHECK(g1.generator(0, Tile::L) ==
        penrose::Relation::from_pairs(2, std::vector<penrose::StatePair>{{idx("LL"), idx("LL")}, {idx("SL"), idx("LL")}}));
  CHECK(g1.generator(0, Tile::S) ==
        penrose::Relation::from_pairs(2, std::vector<penrose::StatePair>{{idx("LL"), idx("SL")}, {idx("SL"), idx("SL")}}));
  const auto g0 = penrose::geometric_rep(penrose::inflate(Tile::L, 0));
  CHECK(g0.size() == 1);
  CHECK(g0.generators().empty());
  CHECK_THROWS_AS(penrose::geometric_rep(penrose::inflate(Tile::S, 2)), penrose::RangeError);

  for (std::size_t n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto tree = penrose::inflate(Tile::L, n);
    const auto geo = penrose::geometric_rep(tree);
    // Compare against the string formula under leaf -> sequence.
    std::vector<std::string> seq;
    for (auto leaf : tree.leaves()) seq.push_back(penrose::leaf_to_seq(tree, leaf).str());
    for (std::size_t k = 0; k < n; ++k) {
      for (Tile t : {Tile::L, Tile::S}) {
        const auto& rel = geo.generator(k, t);
        for (std::size_t x = 0; x < seq.size(); ++x)
          for (std::size_t y = 0; y < seq.size(); ++y)
            REQUIRE(rel.test(x, y) == oracle::cantor_step(seq[x], seq[y], k, t == Tile::S ? '1' : '0'));
      }
    }
    penrose::SigmaSpec spec;
    spec.trunc_level = n;
    spec.states = geo.states();
    spec.blocks.emplace_back();
    for (std::size_t x = 0; x < seq.size(); ++x) {
      spec.blocks[0].push_back(x);
      spec.sigma.push_back(penrose::TruncSeq::parse(seq[x]));
    }
    CHECK(penrose::induced_from_sigma(spec) == geo);
  }
}

TEST_CASE("matching rules") {
  for (std::size_t n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(penrose::matching_check(penrose::inflate(Tile::L, n)).pass);
    CHECK(penrose::matching_check(penrose::inflate(Tile::S, n)).pass);
  }
  CHECK(penrose::matching_check(penrose::inflate(Tile::L, 1)).shared_edges == 1);
  CHECK(penrose::matching_check(penrose::inflate(Tile::L, 8)).shared_edges > 0);
}

TEST_CASE("injected faults are caught") {
  const auto tree = penrose::inflate(Tile::L, 4);
  const auto leaf = tree.leaves()[0];
  auto colors = tree.node(leaf).decoration;
  for (auto& c : colors.colors) c = c == penrose::VertexColor::Black ? penrose::VertexColor::White : penrose::VertexColor::Black;
  const auto bad_colors = penrose::matching_check(tree.with_decoration(leaf, colors));
  CHECK_FALSE(bad_colors.pass);
  CHECK_FALSE(bad_colors.violation.empty());

  // Reverse every leaf's arrow in turn; any arrow on a shared edge must be caught.
  bool caught = false;
  for (auto l : tree.leaves()) {
    auto d = tree.node(l).decoration;
    if (!d.arrow) continue;
    std::swap(d.arrow->first, d.arrow->second);
    caught |= !penrose::matching_check(tree.with_decoration(l, d)).pass;
  }
  CHECK(caught);
}

TEST_CASE("svg output") {
  for (std::size_t n : {0UL, 5UL, 7UL}) {
    const auto tree = penrose::inflate(Tile::L, n);
    penrose::SvgOptions opts;
    opts.outline_level = n / 2;
    const auto svg = penrose::render_svg(tree, opts);
    std::istringstream in(svg);
    boost::property_tree::ptree pt;
    REQUIRE_NOTHROW(boost::property_tree::read_xml(in, pt));
    CHECK(pt.get<std::string>("svg.<xmlattr>.version") == "1.1");
    std::size_t polygons = 0;
    for (const auto& g : pt.get_child("svg")) {
      if (g.first != "g") continue;
      for (const auto& child : g.second) {
        if (child.first != "polygon") continue;
        ++polygons;
        std::istringstream pts(child.second.get<std::string>("<xmlattr>.points"));
        std::string token;
        int vertices = 0;
        while (pts >> token) ++vertices;
        CHECK(vertices == 3);
      }
    }
    CHECK(polygons == tree.leaves().size());
    CHECK(count_substr(svg, "<polygon") == tree.leaves().size());
  }
  const auto plain = penrose::render_svg(penrose::inflate(Tile::L, 3), {.vertex_colors = false, .arrows = false});
  CHECK(count_substr(plain, "<circle") == 0);
  CHECK(count_substr(plain, "<path") == 0);
  CHECK(penrose::render_svg(penrose::inflate(Tile::L, 6)) == penrose::render_svg(penrose::inflate(Tile::L, 6)));
}
