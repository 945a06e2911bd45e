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

// Regions of the Farey triangle on which the index sequence is constant,
// their images under the choice map (tiles), strip polygons, cores and
// the depth-first enumeration of admissible tiles.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "farey/continuants.hpp"
#include "farey/engine.hpp"
#include "farey/geometry.hpp"
#include "farey/progression.hpp"

namespace farey {

struct Region {
  IndexTuple k;
  ConvexPolygon poly;
  // The triangle's three sides followed by two faces per index: the lower
  // face closed, the upper face open.
  std::vector<HalfPlane> constraints;

  // Exact membership in the half-open set, not its closure.
  bool contains(const RatPoint& p) const;
};

Region region(const IndexTuple& k);

struct Tile {
  IndexTuple k;
  TupleType pattern;
  ConvexPolygon poly;
  BigInt kernel;
  AdmissibleResidues residues;

  std::size_t order() const { return k.order(); }
  std::size_t multiplicity() const { return residues.size(); }
};

// Image of region(k) under (x, y) -> (x, x_n). std::nullopt when the
// region has no area or no residue is admissible.
std::optional<Tile> tile(const IndexTuple& k, const TupleType& pattern,
                         const ProgressionClass& cls);

struct StripPolygon {
  IndexTuple k;
  TupleType pattern;
  std::vector<Rational> anchor;
  ConvexPolygon poly;
};

// Intersection of |x - a_0| <= 1 and |x_{j_i} - a_i| <= 1 for the selected
// positions j_i, in the generator plane. DomainError when unbounded.
StripPolygon strip_polygon(const IndexTuple& k, const TupleType& pattern,
                           const std::vector<Rational>& anchor);

// Preimage of target under the choice map of a single-gap pattern.
RatPoint core_point(const IndexTuple& k, const RatPoint& target);

inline constexpr std::int64_t kDefaultNodeBudget = 1'000'000;

struct EnumerateOptions {
  int max_order = 0;
  // Keep only tiles of this kernel. Entries are then capped at
  // kernel + max_order, which no tile of that kernel can exceed.
  std::optional<std::int64_t> kernel;
  // Keep only tiles of kernel <= max_kernel (same entry cap).
  std::optional<std::int64_t> max_kernel;
  // Explicit cap on every entry k_j.
  std::optional<std::int64_t> max_entry;
  // Only visit regions that meet the vertical line x = x_line.
  std::optional<Rational> x_line;
  std::int64_t budget = kDefaultNodeBudget;
};

struct EnumerateStats {
  std::int64_t nodes = 0;
};

// All tiles with single-gap patterns, order <= max_order, positive area and
// non-empty admissible residues, sorted by k. DomainError when no entry
// bound is given and a region is unbounded in index; BudgetError past the
// node budget.
std::vector<Tile> enumerate_tiles(const ProgressionClass& cls,
                                  const EnumerateOptions& opts,
                                  EnumerateStats* stats = nullptr);

}  // namespace farey
