// Copyright 2026 The Farey Mosaics Authors
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


#include <doctest.h>

#include <algorithm>

#include "farey/errors.hpp"
#include "farey/mosaics.hpp"

using namespace farey;

namespace {

RatPoint P(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {Rational(a, b), Rational(c, d)};
}

Assembly kernel_assembly(const ProgressionClass& cls, std::int64_t kernel,
                         int max_order = 16) {
  EnumerateOptions o;
  o.max_order = max_order;
  o.kernel = kernel;
  return assemble(enumerate_tiles(cls, o), BigInt(kernel));
}

const Mosaic& by_name(const Assembly& a, const std::string& n) {
  auto it = std::find_if(a.mosaics.begin(), a.mosaics.end(),
                         [&](const Mosaic& m) { return m.name == n; });
  REQUIRE(it != a.mosaics.end());
  return *it;
}

}  // namespace

TEST_CASE("kernel 7 splits into two mirror pairs") {
  const auto a = kernel_assembly(ProgressionClass(1, 5), 7);
  REQUIRE(a.mosaics.size() == 4);
  CHECK(a.orphans.empty());
  std::vector<std::size_t> sizes;
  for (const auto& m : a.mosaics) sizes.push_back(m.tiles.size());
  CHECK(sizes == std::vector<std::size_t>{6, 6, 30, 30});
  const auto& q = by_name(a, "NQ_2[2,4]");
  CHECK(q.order_min == 2);
  CHECK(q.order_max == 6);
  CHECK(vertices(q) == std::vector<RatPoint>{P(1, 1, 1, 1), P(6, 11, 1, 1),
                                             P(3, 5, 2, 5), P(1, 1, 3, 8)});
  const auto& partner = symmetry_partner(q, a.mosaics);
  CHECK(partner.name == "NQ_2[4,2]");
  CHECK(partner.outline.loops.size() == 1);
  CHECK(ConvexPolygon(partner.outline.loops[0]).canonical() ==
        reflect_diagonal(ConvexPolygon(q.outline.loops[0])).canonical());
}

TEST_CASE("mosaic invariants") {
  for (const auto& cls : {ProgressionClass(1, 5), ProgressionClass(3, 12)}) {
    for (std::int64_t kernel : {3, 6, 7, 8}) {
      const auto a = kernel_assembly(cls, kernel);
      for (const auto& m : a.mosaics) {
        Rational sum = 0;
        for (const auto& t : m.tiles) {
          CHECK(t.kernel == kernel);
          sum += area(t.poly);
        }
        CHECK(sum == m.area());
        CHECK(m.outline.area() == sum);
        CHECK(m.root_tile().poly.has_vertex(P(1, 1, 1, 1)));
        CHECK(vertices(m).front() == P(1, 1, 1, 1));
        for (std::size_t i = 0; i < m.tiles.size(); ++i) {
          for (std::size_t j = i + 1; j < m.tiles.size(); ++j) {
            CHECK_FALSE(
                interiors_intersect(m.tiles[i].poly, m.tiles[j].poly));
          }
        }
        CHECK(adjacency_tree(m).connected());
        CHECK(symmetry_partner(m, a.mosaics).tiles.size() == m.tiles.size());
      }
    }
  }
}

TEST_CASE("symmetric mosaics are their own partner") {
  const auto a = kernel_assembly(ProgressionClass(1, 5), 8);
  const auto& sq = by_name(a, "SQ_1[8]");
  CHECK(sq.symmetric);
  CHECK(&symmetry_partner(sq, a.mosaics) == &sq);
  CHECK(sq.tiles.size() == 21);
}

TEST_CASE("kernel 1 is a single square mosaic") {
  const auto a = kernel_assembly(ProgressionClass(1, 5), 1);
  REQUIRE(a.mosaics.size() == 1);
  CHECK(a.mosaics[0].name == "SQ_0[·]");
  CHECK(a.mosaics[0].tiles.size() == 21);
}

TEST_CASE("adjacency tree of NP_3[2,2,3]") {
  const auto a = kernel_assembly(ProgressionClass(1, 5), 7);
  const auto t = adjacency_tree(by_name(a, "NP_3[2,2,3]"));
  CHECK(t.nodes.size() == 30);
  CHECK(t.nodes[t.root] == IndexTuple{2, 2, 3});
  CHECK(t.connected());
  CHECK(t.has_edge(IndexTuple{2, 2, 3}, IndexTuple{2, 3, 1, 4}));
  CHECK(t.find(IndexTuple{3, 1, 5, 1, 3, 1, 8, 1, 2, 3, 2, 1}).has_value());
  for (const auto& [i, j] : t.edges) CHECK(i < j);
}

TEST_CASE("table rows") {
  const auto rows = table(ProgressionClass(1, 5), {2, 3}, {});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].empty());
  CHECK(rows[0].kernel == 2);
  CHECK(rows[1].name == "SQ_1[3]");
  CHECK(rows[1].tiles == 7);
  CHECK_FALSE(rows[1].truncated);
  CHECK(rows[1].vertices == std::vector<RatPoint>{P(1, 1, 1, 1), P(2, 7, 1, 1),
                                                  P(3, 8, 3, 8),
                                                  P(1, 1, 2, 7)});
}

TEST_CASE("growth cut by the order bound is flagged") {
  const auto a = kernel_assembly(ProgressionClass(1, 5), 7, 8);
  const auto rows = table_rows(7, a, 8);
  bool any = false;
  for (const auto& r : rows) any = any || r.truncated;
  CHECK(any);
}
