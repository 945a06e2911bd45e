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

// Residue traces and admissible starting residues, Euler's totient, the
// predicted size of F^Q(c, d) and a brute-force coprime lattice counter.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "farey/continuants.hpp"
#include "farey/engine.hpp"
#include "farey/geometry.hpp"
#include "farey/rational.hpp"

namespace farey {

// q_{-1}, q_0, ..., q_n modulo d for the chain started from residues
// (c, e). All entries in [0, d).
std::vector<std::int64_t> residue_trace(const IndexTuple& k, std::int64_t c,
                                        std::int64_t e, std::int64_t d);

struct AdmissibleResidues {
  IndexTuple k;
  TupleType pattern;
  ProgressionClass cls{0, 2};
  std::vector<std::int64_t> residues;

  std::size_t size() const { return residues.size(); }
  bool empty() const { return residues.empty(); }
};

// Residues e in [0, d) with gcd(c, e, d) = 1 whose trace is = c at the
// positions selected by `pattern` and != c at every other position in
// [0, |r| - 1]. DomainError unless order(k) = |pattern| - 1.
AdmissibleResidues admissible_residues(const IndexTuple& k,
                                       const TupleType& pattern,
                                       const ProgressionClass& cls);

std::int64_t euler_phi(std::int64_t n);
// Distinct prime divisors in increasing order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);
// prod over primes p | d of (1 - 1/p^2)^{-1}.
Rational squarefree_factor(std::int64_t d);

// Main term of #F^Q(c, d) as coefficient / pi^2, with the coefficient
// kept exact.
struct CardinalityPrediction {
  std::int64_t Q = 0;
  ProgressionClass cls{0, 2};
  Rational coefficient;

  double value() const;
};

CardinalityPrediction predicted_cardinality(std::int64_t Q,
                                            const ProgressionClass& cls);

// Default ceiling on the number of lattice candidates examined.
inline constexpr std::int64_t kDefaultLatticeBudget = 50'000'000;

// Integer points (m, n) of scale * poly with m = a, n = b (mod d) and
// gcd(m, n) = 1. SizeError when the scaled bounding box holds more than
// `budget` points.
std::int64_t lattice_count_exact(const ConvexPolygon& poly,
                                 std::int64_t scale, std::int64_t a,
                                 std::int64_t b, std::int64_t d,
                                 std::int64_t budget = kDefaultLatticeBudget);

// Same count over an intersection of half-planes, honouring open sides.
// The closure of the intersection must be bounded.
std::int64_t lattice_count_exact(std::span<const HalfPlane> hps,
                                 std::int64_t scale, std::int64_t a,
                                 std::int64_t b, std::int64_t d,
                                 std::int64_t budget = kDefaultLatticeBudget);

// {x <= 1, y <= 1, x + y > 1}.
std::vector<HalfPlane> farey_triangle_halfplanes();

// (6 / (pi^2 d^2)) * squarefree_factor(d) * area * scale^2.
double lattice_main_term(const Rational& area_unit, std::int64_t scale,
                         std::int64_t d);

}  // namespace farey
