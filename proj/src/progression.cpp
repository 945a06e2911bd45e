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

#include "farey/progression.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "farey/errors.hpp"

namespace farey {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t d) {
  const std::int64_t r = v % d;
  return r < 0 ? r + d : r;
}

}  // namespace

std::vector<std::int64_t> residue_trace(const IndexTuple& k, std::int64_t c,
                                        std::int64_t e, std::int64_t d) {
  if (d < 2) throw DomainError("modulus must be >= 2");
  std::vector<std::int64_t> out{mod(c, d), mod(e, d)};
  out.reserve(k.order() + 2);
  for (auto kj : k.entries()) {
    const std::int64_t n = out.size();
    out.push_back(mod(mod(kj, d) * out[n - 1] - out[n - 2], d));
  }
  return out;
}

AdmissibleResidues admissible_residues(const IndexTuple& k,
                                       const TupleType& pattern,
                                       const ProgressionClass& cls) {
  if (pattern.s() == 0 ||
      static_cast<std::int64_t>(k.order()) != pattern.total() - 1) {
    throw DomainError("order(k) must equal |r| - 1");
  }
  AdmissibleResidues out{k, pattern, cls, {}};
  const auto positions = pattern.positions();
  const std::int64_t c = cls.c();
  const std::int64_t d = cls.d();
  for (std::int64_t e = 0; e < d; ++e) {
    if (std::gcd(std::gcd(c, e), d) != 1) continue;
    const auto trace = residue_trace(k, c, e, d);
    bool ok = true;
    // trace[j + 1] holds q_j.
    for (std::int64_t j = 0; j <= pattern.total() - 1 && ok; ++j) {
      const bool selected =
          std::find(positions.begin(), positions.end(), j) != positions.end();
      const bool hit = trace[static_cast<std::size_t>(j + 1)] == c;
      ok = selected == hit;
    }
    if (ok) out.residues.push_back(e);
  }
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw DomainError("euler_phi needs n >= 1");
  std::int64_t out = n;
  for (auto p : prime_divisors(n)) out = out / p * (p - 1);
  return out;
}

Rational squarefree_factor(std::int64_t d) {
  if (d < 1) throw DomainError("squarefree_factor needs d >= 1");
  Rational out(1);
  for (auto p : prime_divisors(d)) out *= Rational(p * p, p * p - 1);
  return out;
}

double CardinalityPrediction::value() const {
  return coefficient.to_double() / (std::numbers::pi * std::numbers::pi);
}

CardinalityPrediction predicted_cardinality(std::int64_t Q,
                                            const ProgressionClass& cls) {
  if (Q < 0) throw DomainError("Q must be >= 0");
  const std::int64_t g = cls.g();
  Rational coef = Rational(3) * Rational(Q) * Rational(Q) *
                  Rational(euler_phi(g), cls.d() * g) *
                  squarefree_factor(cls.d());
  return {Q, cls, coef};
}

namespace {

// Rows of scale * closure are enumerated column by column; `keep` filters
// boundary points on open sides.
template <class Keep>
std::int64_t count_columns(const ConvexPolygon& poly, std::int64_t scale,
                           std::int64_t a, std::int64_t b, std::int64_t d,
                           std::int64_t budget, Keep keep) {
  if (scale < 1) throw DomainError("scale must be >= 1");
  if (d < 1) throw DomainError("modulus must be >= 1");
  if (poly.empty()) return 0;
  const auto box = bounding_box(poly);
  const Rational s(scale);
  const BigInt x0 = (box.xmin * s).ceil();
  const BigInt x1 = (box.xmax * s).floor();
  const BigInt y0 = (box.ymin * s).ceil();
  const BigInt y1 = (box.ymax * s).floor();
  const BigInt cells = (x1 - x0 + 1) * (y1 - y0 + 1);
  if (cells > budget) {
    throw SizeError("lattice enumeration of " + cells.get_str() +
                    " points exceeds the budget of " + std::to_string(budget));
  }
  const auto& v = poly.vertices();
  const std::size_t nv = v.size();
  std::int64_t count = 0;
  for (std::int64_t m = x0.get_si(); m <= x1.get_si(); ++m) {
    if (mod(m - a, d) != 0) continue;
    // Vertical extent of the scaled polygon at x = m.
    const Rational x(m, scale);
    bool any = false;
    Rational lo, hi;
    for (std::size_t i = 0; i < nv; ++i) {
      const RatPoint& p = v[i];
      const RatPoint& q = v[(i + 1) % nv];
      const Rational& px = p.x;
      const Rational& qx = q.x;
      if ((x < px && x < qx) || (x > px && x > qx)) continue;
      std::vector<Rational> ys;
      if (px == qx) {
        ys = {p.y, q.y};
      } else {
        ys = {p.y + (q.y - p.y) * (x - px) / (qx - px)};
      }
      for (auto& y : ys) {
        if (!any) {
          lo = hi = y;
          any = true;
        } else {
          if (y < lo) lo = y;
          if (y > hi) hi = y;
        }
      }
    }
    if (!any) continue;
    const std::int64_t n0 = (lo * s).ceil().get_si();
    const std::int64_t n1 = (hi * s).floor().get_si();
    std::int64_t n = n0 + mod(b - n0, d);
    for (; n <= n1; n += d) {
      if (std::gcd(m, n) != 1) continue;
      if (!keep(m, n)) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace

std::int64_t lattice_count_exact(const ConvexPolygon& poly,
                                 std::int64_t scale, std::int64_t a,
                                 std::int64_t b, std::int64_t d,
                                 std::int64_t budget) {
  return count_columns(poly, scale, a, b, d, budget,
                       [](std::int64_t, std::int64_t) { return true; });
}

std::int64_t lattice_count_exact(std::span<const HalfPlane> hps,
                                 std::int64_t scale, std::int64_t a,
                                 std::int64_t b, std::int64_t d,
                                 std::int64_t budget) {
  std::vector<RatPoint> big{{-1024, -1024}, {1024, -1024}, {1024, 1024},
                            {-1024, 1024}};
  const ConvexPolygon closure = clip(ConvexPolygon(big), hps);
  for (const auto& v : closure.vertices()) {
    if (abs(v.x) == Rational(1024) || abs(v.y) == Rational(1024)) {
      throw DomainError("half-plane intersection is unbounded");
    }
  }
  std::vector<const HalfPlane*> open;
  for (const auto& hp : hps) {
    if (!hp.closed) open.push_back(&hp);
  }
  return count_columns(closure, scale, a, b, d, budget,
                       [&](std::int64_t m, std::int64_t n) {
                         if (open.empty()) return true;
                         const RatPoint p{Rational(m, scale),
                                          Rational(n, scale)};
                         for (const auto* hp : open) {
                           if (!hp->contains(p)) return false;
                         }
                         return true;
                       });
}

std::vector<HalfPlane> farey_triangle_halfplanes() {
  return {HalfPlane(1, 0, 1, true), HalfPlane(0, 1, 1, true),
          HalfPlane(-1, -1, -1, false)};
}

double lattice_main_term(const Rational& area_unit, std::int64_t scale,
                         std::int64_t d) {
  if (d < 1) throw DomainError("modulus must be >= 1");
  const Rational r = Rational(6, d * d) * squarefree_factor(d) * area_unit *
                     Rational(scale) * Rational(scale);
  return r.to_double() / (std::numbers::pi * std::numbers::pi);
}

}  // namespace farey
