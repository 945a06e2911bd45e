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

// Same-kernel tiles grouped into mosaics by seeded edge-adjacent growth,
// with names, outlines, adjacency trees, mirror partners and table rows.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "farey/geometry.hpp"
#include "farey/tiles.hpp"

namespace farey {

struct Mosaic {
  BigInt kernel;
  std::vector<Tile> tiles;  // sorted by k
  Outline outline;
  std::size_t root = 0;  // index of the tile with vertex (1, 1)
  std::string name;
  std::size_t order_min = 0;
  std::size_t order_max = 0;
  bool symmetric = false;

  const Tile& root_tile() const { return tiles.at(root); }
  Rational area() const;
};

struct Assembly {
  std::vector<Mosaic> mosaics;  // sorted by (order of root, root k)
  // Tiles not attached to any seed, e.g. because max_order cut a chain.
  std::vector<Tile> orphans;
};

// AmbiguityError when a tile could join more than one mosaic.
Assembly assemble(std::vector<Tile> tiles, const BigInt& kernel);

// "{S|N}{T|Q|P|H|HV|O}_{order}[root k]". ShapeError outside that
// repertoire.
std::string name(const Mosaic& m);

// Outer outline vertices starting at (1, 1), counter-clockwise.
std::vector<RatPoint> vertices(const Mosaic& m);

struct AdjacencyTree {
  std::vector<IndexTuple> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
  std::size_t root = 0;

  bool connected() const;
  bool acyclic() const;
  std::vector<std::size_t> neighbours(std::size_t i) const;
  std::optional<std::size_t> find(const IndexTuple& k) const;
  bool has_edge(const IndexTuple& a, const IndexTuple& b) const;
};

AdjacencyTree adjacency_tree(const Mosaic& m);

// m itself when symmetric, else the mosaic holding its mirror image.
// PartnerMissing when none does.
const Mosaic& symmetry_partner(const Mosaic& m,
                               const std::vector<Mosaic>& all);

struct TableRow {
  std::int64_t kernel = 0;
  std::string name;  // "-" for a kernel without mosaics
  std::size_t tiles = 0;
  bool truncated = false;  // growth still reaching max_order
  int max_order = 0;
  std::size_t order_min = 0;
  std::size_t order_max = 0;
  std::vector<RatPoint> vertices;
  bool empty() const { return name == "-"; }
};

struct TableOptions {
  int max_order = 16;
  std::int64_t budget = kDefaultNodeBudget;
};

std::vector<TableRow> table(const ProgressionClass& cls,
                            const std::vector<std::int64_t>& kernels,
                            const TableOptions& opts);

// Rows of one kernel from an assembly, with max_order used to flag
// truncated growth.
std::vector<TableRow> table_rows(std::int64_t kernel, const Assembly& a,
                                 int max_order);

}  // namespace farey
