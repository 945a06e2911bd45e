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

#include <map>
#include <numeric>

#include "farey/errors.hpp"
#include "farey/tiles.hpp"

using namespace farey;

namespace {

RatPoint P(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {Rational(a, b), Rational(c, d)};
}

}  // namespace

TEST_CASE("regions of order one") {
  const auto r1 = region(IndexTuple{1});
  CHECK(r1.poly == ConvexPolygon({P(1, 1, 1, 1), P(0, 1, 1, 1),
                                  P(1, 3, 2, 3)}));
  const auto r3 = region(IndexTuple{3});
  CHECK(r3.poly.canonical() ==
        ConvexPolygon({P(1, 1, 1, 2), P(1, 1, 2, 3), P(1, 2, 1, 2),
                       P(3, 5, 2, 5)})
            .canonical());
}

TEST_CASE("regions agree with the real index sequence") {
  // Sample a rational grid of the triangle and check membership both ways.
  const std::int64_t N = 37;
  std::map<IndexTuple, Region> cache;
  for (std::int64_t i = 1; i <= N; ++i) {
    for (std::int64_t j = 1; j <= N; ++j) {
      if (i + j <= N) continue;
      const Rational x(i, N), y(j, N);
      const auto k = index_sequence_real(x, y, 3).first;
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, region(k)).first;
      CHECK(it->second.contains({x, y}));
      CHECK_FALSE(region(k.sub(1, 2).extended(k.k(3) + 1)).contains({x, y}));
    }
  }
}

TEST_CASE("tile of k = (3)") {
  const auto t = tile(IndexTuple{3}, TupleType{2}, ProgressionClass(1, 5));
  REQUIRE(t);
  CHECK(t->kernel == 3);
  CHECK(t->multiplicity() == 1);
  CHECK(t->poly.canonical() ==
        ConvexPolygon({P(1, 1, 1, 2), P(1, 1, 1, 1), P(1, 2, 1, 1),
                       P(3, 5, 3, 5)})
            .canonical());
  CHECK_FALSE(tile(IndexTuple{2}, TupleType{2}, ProgressionClass(1, 5)));
}

TEST_CASE("tile area is kernel times region area") {
  const ProgressionClass cls(1, 5);
  EnumerateOptions o;
  o.max_order = 6;
  o.max_entry = 8;
  for (const auto& t : enumerate_tiles(cls, o)) {
    CHECK(area(t.poly) == Rational(t.kernel) * area(region(t.k).poly));
    CHECK(t.kernel == continuant(t.k, static_cast<int>(t.order())));
    CHECK_FALSE(t.residues.empty());
  }
}

TEST_CASE("tiles hold the images of their region points") {
  const auto k = IndexTuple{2, 2, 3};
  const auto r = region(k);
  const auto t = tile(k, TupleType{4}, ProgressionClass(1, 5));
  REQUIRE(t);
  CHECK(t->kernel == 7);
  for (const auto& v : r.poly.vertices()) {
    const RatPoint img{v.x, eval_linear(k, 3, v.x, v.y)};
    CHECK(t->poly.has_vertex(img));
  }
}

TEST_CASE("enumeration with a kernel filter") {
  EnumerateOptions o;
  o.max_order = 16;
  o.kernel = 1;
  CHECK(enumerate_tiles(ProgressionClass(1, 5), o).size() == 21);
  CHECK(enumerate_tiles(ProgressionClass(3, 12), o).empty());
  o.kernel = 7;
  for (const auto& t : enumerate_tiles(ProgressionClass(1, 5), o)) {
    CHECK(t.kernel == 7);
  }
}

TEST_CASE("enumeration needs an entry bound and respects the budget") {
  EnumerateOptions o;
  o.max_order = 4;
  CHECK_THROWS_AS(enumerate_tiles(ProgressionClass(1, 5), o), DomainError);
  o.max_entry = 50;
  o.budget = 10;
  CHECK_THROWS_AS(enumerate_tiles(ProgressionClass(1, 5), o), BudgetError);
}

TEST_CASE("every consecutive pair lands in an enumerated tile") {
  const std::int64_t Q = 120;
  const ProgressionClass cls(1, 5);
  EnumerateOptions o;
  o.max_order = 8;
  o.max_entry = 40;
  std::map<IndexTuple, Tile> by_k;
  for (auto& t : enumerate_tiles(cls, o)) by_k.emplace(t.k, std::move(t));
  std::int64_t checked = 0;
  for (const auto& p : consecutive_pairs(Q, cls)) {
    const auto n = static_cast<int>(p.gap - 1);
    if (n < 1 || n > 8 || p.next_in_full == 0) continue;
    const auto k = index_sequence_int(p.q0, p.next_in_full, Q, n).first;
    if (k.max_entry() > 40) continue;
    auto it = by_k.find(k);
    REQUIRE(it != by_k.end());
    const RatPoint pt{Rational(p.q0, Q), Rational(p.q1, Q)};
    CHECK(locate(it->second.poly, pt).kind != Incidence::kOutside);
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("strip polygons have area 4/p") {
  for (const auto& k : {IndexTuple{3}, IndexTuple{2, 2, 3}, IndexTuple{1, 5}}) {
    const auto n = static_cast<std::int64_t>(k.order());
    const auto s = strip_polygon(k, TupleType{n + 1},
                                 {Rational(1, 2), Rational(1, 3)});
    CHECK(area(s.poly) == Rational(4, 1) / Rational(continuant(k, static_cast<int>(n))));
  }
}

TEST_CASE("core points invert the choice map") {
  const auto k = IndexTuple{2, 2, 3};
  const RatPoint target{Rational(3, 4), Rational(5, 6)};
  const auto c = core_point(k, target);
  CHECK(c.x == target.x);
  CHECK(eval_linear(k, 3, c.x, c.y) == target.y);
}
