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

// Limit density of consecutive class denominators: the layered tile sum,
// the first term for longer gap patterns, the empirical histogram and the
// comparison between the two.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "farey/engine.hpp"
#include "farey/geometry.hpp"
#include "farey/tiles.hpp"

namespace farey {

enum class PrefactorConvention {
  // 2g / (d phi(g)), g = gcd(c, d); integrates to one.
  kDerived,
  // 2 / phi(d).
  kPrinted,
};

Rational prefactor(const ProgressionClass& cls,
                   PrefactorConvention conv = PrefactorConvention::kDerived);

struct DensityLayerWeight {
  BigInt kernel;
  std::int64_t multiplicity = 0;
  Rational prefactor;

  // prefactor * multiplicity / kernel.
  Rational contribution() const;
};

DensityLayerWeight layer_weight(
    const Tile& t, const ProgressionClass& cls,
    PrefactorConvention conv = PrefactorConvention::kDerived);

inline constexpr std::int64_t kDefaultDensityEntryCap = 1000;

struct DensityQuery {
  RatPoint point;
  ProgressionClass cls{1, 5};
  int max_order = 12;
  // Cap on every index entry; tiles past it are left out of the sum.
  std::int64_t max_entry = kDefaultDensityEntryCap;
  std::int64_t budget = kDefaultNodeBudget;
  PrefactorConvention convention = PrefactorConvention::kDerived;
};

enum class PointClass { kGeneric, kOnEdge, kOnVertex, kOutside };

const char* to_string(PointClass c);

struct DensityValue {
  double value = 0;
  PointClass classification = PointClass::kOutside;
  std::size_t tiles = 0;  // tiles whose closure holds the point
};

// Sum of tile weights over the enumerated tiles holding the point; a tile
// counts with the share of a small disc around the point that it covers.
DensityValue g1_eval(const DensityQuery& q);

// Weight of a single tile list at p, same incidence rule as g1_eval.
DensityValue density_from_tiles(const std::vector<Tile>& tiles,
                                const RatPoint& p, const ProgressionClass& cls,
                                PrefactorConvention conv);

// prefactor * |M_{k,r}| * area(strip polygon) / 4 when the core lies in
// the region of k, else 0. The core is taken from the first selected
// coordinate: x = point[0], x_{r_1 - 1} = point[1].
double gs_first_term(const std::vector<Rational>& point,
                     const ProgressionClass& cls, const TupleType& r,
                     const IndexTuple& k,
                     PrefactorConvention conv = PrefactorConvention::kDerived);

struct EmpiricalHistogram {
  std::int64_t Q = 0;
  ProgressionClass cls{1, 5};
  int bins_per_side = 1;
  // Row-major by x bin: counts[i * B + j] holds x in bin i, y in bin j.
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;

  std::int64_t at(int i, int j) const { return counts[i * bins_per_side + j]; }
};

// Bin of v / Q among B equal bins of [0, 1]; v = Q falls in the last one.
int bin_of(std::int64_t v, std::int64_t Q, int B);

EmpiricalHistogram empirical_histogram(std::int64_t Q,
                                       const ProgressionClass& cls, int B);

struct CompareOptions {
  int max_order = 14;
  std::int64_t max_entry = kDefaultDensityEntryCap;
  std::int64_t budget = kDefaultNodeBudget;
  PrefactorConvention convention = PrefactorConvention::kDerived;
};

struct CompareReport {
  // Sum of |empirical - theoretical| over bins whose four corners lie in
  // the closed tile union.
  double l1 = 0;
  // Largest |empirical / theoretical - 1| over the same bins.
  double max_ratio_deviation = 0;
  // Theoretical mass of all enumerated tiles.
  double theoretical_mass = 0;
  std::size_t interior_bins = 0;
  std::size_t tiles = 0;
  std::vector<double> empirical;    // normalized, row-major
  std::vector<double> theoretical;  // row-major
  std::vector<bool> interior;
};

// Theoretical bin masses from exact tile-bin clipping.
CompareReport compare(const EmpiricalHistogram& hist,
                      const CompareOptions& opts = {});
CompareReport compare(const EmpiricalHistogram& hist,
                      const std::vector<Tile>& tiles,
                      PrefactorConvention conv);

// prefactor * sum of |M| * area(region) over tiles.
Rational theoretical_mass(const std::vector<Tile>& tiles,
                          const ProgressionClass& cls,
                          PrefactorConvention conv);

struct SupportOptions {
  int max_order = 14;
  std::int64_t max_entry = kDefaultDensityEntryCap;
  std::int64_t budget = kDefaultNodeBudget;
  // Extra closed set every point must lie in, e.g. a known mosaic outline.
  std::optional<ConvexPolygon> hull;
};

struct SupportViolation {
  std::int64_t q0 = 0;
  std::int64_t q1 = 0;
  double distance = 0;  // to the nearest enumerated tile, or to the hull
  std::string reason;
};

struct SupportReport {
  std::int64_t pairs = 0;
  // Pairs whose own tile is among the enumerated ones.
  std::int64_t enumerated = 0;
  // Pairs whose own tile lies past max_order or max_entry.
  std::int64_t deep = 0;
  std::vector<SupportViolation> violations;
};

// Every consecutive pair (q_0, q_1) of F^Q(c, d) is matched with the tile
// of its own index sequence. The match is exact: the generator (q_0, q'')/Q
// reproduces the sequence, the choice map sends it to (q_0, q_1)/Q, and
// q'' mod d is an admissible residue. Tiles within the bounds must also be
// among the enumerated ones.
SupportReport support_membership(std::int64_t Q, const ProgressionClass& cls,
                                 const SupportOptions& opts = {});

}  // namespace farey
