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
#include <numeric>

#include "farey/continuants.hpp"
#include "farey/engine.hpp"
#include "farey/errors.hpp"

using namespace farey;

namespace {

std::vector<FareyFraction> brute(std::int64_t Q) {
  std::vector<FareyFraction> f;
  for (std::int64_t q = 1; q <= Q; ++q) {
    for (std::int64_t a = 0; a <= q; ++a) {
      if (std::gcd(a, q) == 1) f.push_back({a, q});
    }
  }
  std::sort(f.begin(), f.end(), [](auto u, auto v) {
    return u.a * v.q < v.a * u.q;
  });
  return f;
}

}  // namespace

TEST_CASE("Farey stream matches a sorted brute-force list") {
  for (std::int64_t Q = 1; Q <= 25; ++Q) {
    std::vector<FareyFraction> got;
    for (const auto& f : farey_stream(Q)) got.push_back(f);
    CHECK(got == brute(Q));
  }
}

TEST_CASE("neighbours satisfy the unimodular identity") {
  std::int64_t pa = -1, pq = 0;
  for (const auto& f : farey_stream(60)) {
    if (pa >= 0) CHECK(f.a * pq - pa * f.q == 1);
    pa = f.a;
    pq = f.q;
  }
}

TEST_CASE("progression classes") {
  const ProgressionClass cls(3, 12);
  CHECK(cls.g() == 3);
  CHECK(ProgressionClass(0, 5).g() == 5);
  CHECK(cls.contains(15));
  CHECK_FALSE(cls.contains(16));
  CHECK_THROWS_AS(ProgressionClass(5, 5), DomainError);
  CHECK_THROWS_AS(ProgressionClass(0, 1), DomainError);
}

TEST_CASE("filtered stream keeps exactly the class") {
  const ProgressionClass cls(1, 5);
  std::int64_t expected = 0;
  for (const auto& f : brute(80)) expected += cls.contains(f.q);
  std::int64_t got = 0;
  for (const auto& f : farey_filtered(80, cls)) {
    CHECK(cls.contains(f.q));
    ++got;
  }
  CHECK(got == expected);
  CHECK(filtered_count(80, cls) == expected);
}

TEST_CASE("tuple types") {
  const TupleType r{4, 6};
  CHECK(r.s() == 2);
  CHECK(r.total() == 10);
  CHECK(r.positions() == std::vector<std::int64_t>{3, 9});
  CHECK_THROWS_AS(TupleType{0}, DomainError);
}

TEST_CASE("consecutive tuples record their gaps") {
  const std::int64_t Q = 50;
  const ProgressionClass cls(1, 5);
  const auto all = brute(Q);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (cls.contains(all[i].q)) pos.push_back(i);
  }
  std::size_t n = 0;
  for (const auto& t : consecutive_tuples(Q, cls, 2)) {
    REQUIRE(n + 2 < pos.size());
    CHECK(t.denominators ==
          std::vector<std::int64_t>{all[pos[n]].q, all[pos[n + 1]].q,
                                    all[pos[n + 2]].q});
    CHECK(t.type == TupleType{static_cast<std::int64_t>(pos[n + 1] - pos[n]),
                              static_cast<std::int64_t>(pos[n + 2] - pos[n + 1])});
    ++n;
  }
  CHECK(n == pos.size() - 2);
}

TEST_CASE("choice map reproduces consecutive class members") {
  const std::int64_t Q = 60;
  const ProgressionClass cls(3, 12);
  const auto all = brute(Q);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (cls.contains(all[i].q)) pos.push_back(i);
  }
  REQUIRE(pos.size() > 3);
  for (std::size_t n = 0; n + 2 < pos.size(); ++n) {
    const TupleType r{static_cast<std::int64_t>(pos[n + 1] - pos[n]),
                      static_cast<std::int64_t>(pos[n + 2] - pos[n + 1])};
    CHECK(choice_map(all[pos[n]].q, all[pos[n] + 1].q, Q, r) ==
          std::vector<std::int64_t>{all[pos[n]].q, all[pos[n + 1]].q,
                                    all[pos[n + 2]].q});
  }
  CHECK(choice_map(16, 25, 25, TupleType{4, 6}) ==
        std::vector<std::int64_t>{16, 11, 21});
}

TEST_CASE("pairs carry the following full-sequence denominator") {
  const std::int64_t Q = 40;
  const ProgressionClass cls(1, 5);
  const auto all = brute(Q);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (cls.contains(all[i].q)) pos.push_back(i);
  }
  std::size_t n = 0;
  for (const auto& p : consecutive_pairs(Q, cls)) {
    REQUIRE(n + 1 < pos.size());
    CHECK(p.q0 == all[pos[n]].q);
    CHECK(p.q1 == all[pos[n + 1]].q);
    CHECK(p.gap == static_cast<std::int64_t>(pos[n + 1] - pos[n]));
    CHECK(p.next_in_full == all[pos[n] + 1].q);
    if (p.gap >= 2) {
      const auto [k, chain] = index_sequence_int(p.q0, p.next_in_full, Q,
                                                 static_cast<int>(p.gap - 1));
      CHECK(chain.at(static_cast<int>(p.gap - 1)) == p.q1);
    }
    ++n;
  }
  CHECK(n == pos.size() - 1);
}
