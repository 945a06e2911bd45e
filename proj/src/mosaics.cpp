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

#include "farey/mosaics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "farey/errors.hpp"

namespace farey {

namespace {

const RatPoint kCorner{1, 1};

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Edge-adjacency lists over tiles, with a bounding-box prefilter. Inside a
// mosaic, neighbouring tiles have orders one apart; with `consecutive`
// other contacts are skipped, since they belong to overlapping layers.
std::vector<std::vector<std::size_t>> edge_graph(
    const std::vector<Tile>& tiles, const std::vector<BoundingBox>& boxes,
    bool consecutive) {
  std::vector<std::vector<std::size_t>> adj(tiles.size());
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (std::size_t j = i + 1; j < tiles.size(); ++j) {
      if (!boxes[i].overlaps(boxes[j])) continue;
      if (consecutive && tiles[i].order() + 1 != tiles[j].order() &&
          tiles[j].order() + 1 != tiles[i].order()) {
        continue;
      }
      if (share_edge(tiles[i].poly, tiles[j].poly)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

std::set<std::vector<RatPoint>> polygon_set(const std::vector<Tile>& tiles,
                                            bool mirrored) {
  std::set<std::vector<RatPoint>> out;
  for (const auto& t : tiles) {
    const ConvexPolygon p = mirrored ? reflect_diagonal(t.poly) : t.poly;
    out.insert(p.canonical().vertices());
  }
  return out;
}

std::string k_label(const IndexTuple& k) {
  return "[" + k.to_string(",", true) + "]";
}

Mosaic finish(std::vector<Tile> members, const BigInt& kernel) {
  Mosaic m;
  m.kernel = kernel;
  std::sort(members.begin(), members.end(),
            [](const Tile& a, const Tile& b) { return a.k < b.k; });
  m.tiles = std::move(members);
  std::vector<ConvexPolygon> polys;
  polys.reserve(m.tiles.size());
  m.order_min = m.tiles.front().order();
  m.order_max = m.tiles.front().order();
  for (std::size_t i = 0; i < m.tiles.size(); ++i) {
    const Tile& t = m.tiles[i];
    polys.push_back(t.poly);
    m.order_min = std::min(m.order_min, t.order());
    m.order_max = std::max(m.order_max, t.order());
    if (t.poly.has_vertex(kCorner)) m.root = i;
  }
  m.outline = union_outline(polys);
  m.symmetric = polygon_set(m.tiles, false) == polygon_set(m.tiles, true);
  try {
    m.name = name(m);
  } catch (const ShapeError&) {
    const std::size_t n =
        m.outline.loops.empty() ? 0 : m.outline.loops.front().size();
    m.name = std::string(m.symmetric ? "S" : "N") + "?" + std::to_string(n) +
             "_" + std::to_string(m.root_tile().order()) +
             k_label(m.root_tile().k);
  }
  return m;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Pending {
  std::size_t tile;
  std::vector<std::size_t> candidates;
};

// Seeded growth. A tile joins the one mosaic it touches along an edge
// and does not overlap. Tiles with several candidates wait; when no
// unique move is left, each remaining choice is tried and the branch that
// places the most tiles wins, provided it is the only one to do so.
class Grower {
 public:
  Grower(const std::vector<Tile>& tiles, const std::vector<BoundingBox>& boxes,
         const std::vector<std::vector<std::size_t>>& adj,
         const std::vector<std::size_t>& seeds)
      : tiles_(tiles), boxes_(boxes), adj_(adj), seeds_(seeds) {}

  std::vector<std::vector<std::size_t>> run() {
    State start;
    start.owner.assign(tiles_.size(), kNone);
    for (std::size_t s = 0; s < seeds_.size(); ++s) {
      start.owner[seeds_[s]] = s;
      start.groups.push_back({seeds_[s]});
    }
    search(std::move(start));
    if (tied_) {
      throw AmbiguityError("tile " + k_label(tiles_[tie_tile_].k) +
                           " fits several mosaics, seeds:" + tie_seeds_);
    }
    return best_->groups;
  }

 private:
  struct State {
    std::vector<std::size_t> owner;
    std::vector<std::vector<std::size_t>> groups;
    std::size_t placed = 0;
  };

  static constexpr int kMaxBranches = 4096;

  bool fits(const State& st, std::size_t i, std::size_t g) const {
    for (std::size_t j : st.groups[g]) {
      if (boxes_[i].overlaps(boxes_[j]) &&
          interiors_intersect(tiles_[i].poly, tiles_[j].poly)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Pending> propagate(State& st) const {
    std::vector<Pending> pending;
    bool changed = true;
    while (changed) {
      changed = false;
      pending.clear();
      for (std::size_t i = 0; i < tiles_.size(); ++i) {
        if (st.owner[i] != kNone) continue;
        std::set<std::size_t> near;
        for (std::size_t j : adj_[i]) {
          if (st.owner[j] != kNone) near.insert(st.owner[j]);
        }
        std::vector<std::size_t> cands;
        for (std::size_t g : near) {
          if (fits(st, i, g)) cands.push_back(g);
        }
        if (cands.size() > 1) {
          pending.push_back({i, std::move(cands)});
        } else if (cands.size() == 1) {
          st.owner[i] = cands.front();
          st.groups[cands.front()].push_back(i);
          ++st.placed;
          changed = true;
        }
      }
    }
    return pending;
  }

  void search(State st) {
    if (++branches_ > kMaxBranches) {
      throw AmbiguityError("mosaic assignment search exceeded " +
                           std::to_string(kMaxBranches) + " branches");
    }
    const auto pending = propagate(st);
    if (pending.empty()) {
      if (!best_ || st.placed > best_->placed) {
        best_ = std::move(st);
        tied_ = false;
      } else if (st.placed == best_->placed && st.owner != best_->owner) {
        tied_ = true;
        tie_tile_ = first_choice_;
        tie_seeds_.clear();
        for (std::size_t g : first_candidates_) {
          tie_seeds_ += " " + k_label(tiles_[seeds_[g]].k);
        }
      }
      return;
    }
    const Pending& p = pending.front();
    if (branches_ == 1) {
      first_choice_ = p.tile;
      first_candidates_ = p.candidates;
    }
    for (std::size_t g : p.candidates) {
      State next = st;
      next.owner[p.tile] = g;
      next.groups[g].push_back(p.tile);
      ++next.placed;
      search(std::move(next));
    }
  }

  const std::vector<Tile>& tiles_;
  const std::vector<BoundingBox>& boxes_;
  const std::vector<std::vector<std::size_t>>& adj_;
  const std::vector<std::size_t>& seeds_;
  std::optional<State> best_;
  bool tied_ = false;
  int branches_ = 0;
  std::size_t first_choice_ = 0;
  std::vector<std::size_t> first_candidates_;
  std::size_t tie_tile_ = 0;
  std::string tie_seeds_;
};

}  // namespace

Rational Mosaic::area() const {
  Rational s;
  for (const auto& t : tiles) s += farey::area(t.poly);
  return s;
}

Assembly assemble(std::vector<Tile> tiles, const BigInt& kernel) {
  for (const auto& t : tiles) {
    if (t.kernel != kernel) {
      throw DomainError("tile " + k_label(t.k) + " has kernel " +
                        t.kernel.get_str() + ", expected " + kernel.get_str());
    }
  }
  std::sort(tiles.begin(), tiles.end(),
            [](const Tile& a, const Tile& b) { return a.k < b.k; });
  std::vector<BoundingBox> boxes;
  boxes.reserve(tiles.size());
  std::vector<std::size_t> seeds;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    boxes.push_back(bounding_box(tiles[i].poly));
    if (tiles[i].poly.has_vertex(kCorner)) seeds.push_back(i);
  }
  const auto adj = edge_graph(tiles, boxes, true);
  const auto groups = Grower(tiles, boxes, adj, seeds).run();

  Assembly out;
  std::vector<bool> used(tiles.size(), false);
  for (const auto& g : groups) {
    std::vector<Tile> members;
    for (std::size_t i : g) {
      members.push_back(tiles[i]);
      used[i] = true;
    }
    out.mosaics.push_back(finish(std::move(members), kernel));
  }
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (!used[i]) out.orphans.push_back(tiles[i]);
  }
  std::sort(out.mosaics.begin(), out.mosaics.end(),
            [](const Mosaic& a, const Mosaic& b) {
              const auto& ka = a.root_tile().k;
              const auto& kb = b.root_tile().k;
              if (ka.order() != kb.order()) return ka.order() < kb.order();
              return ka < kb;
            });
  return out;
}

std::string name(const Mosaic& m) {
  if (m.outline.loops.size() != 1) {
    throw ShapeError("outline has " + std::to_string(m.outline.loops.size()) +
                     " loops");
  }
  const auto& loop = m.outline.loops.front();
  const std::size_t n = loop.size();
  bool convex = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(loop[(i + n - 1) % n], loop[i], loop[(i + 1) % n]).sign() < 0) {
      convex = false;
    }
  }
  std::string shape;
  if (convex) {
    switch (n) {
      case 3: shape = "T"; break;
      case 4: shape = "Q"; break;
      case 5: shape = "P"; break;
      case 6: shape = "H"; break;
      case 8: shape = "O"; break;
      default: break;
    }
  } else if (n == 6) {
    shape = "HV";
  }
  if (shape.empty()) {
    throw ShapeError(std::string(convex ? "convex" : "concave") +
                     " outline with " + std::to_string(n) + " vertices");
  }
  const Tile& root = m.root_tile();
  return std::string(m.symmetric ? "S" : "N") + shape + "_" +
         std::to_string(root.order()) + k_label(root.k);
}

std::vector<RatPoint> vertices(const Mosaic& m) {
  if (m.outline.loops.empty()) return {};
  auto loop = m.outline.loops.front();
  auto it = std::find(loop.begin(), loop.end(), kCorner);
  if (it == loop.end()) it = std::min_element(loop.begin(), loop.end());
  std::rotate(loop.begin(), it, loop.end());
  return loop;
}

bool AdjacencyTree::connected() const {
  if (nodes.empty()) return true;
  DisjointSets ds(nodes.size());
  std::size_t parts = nodes.size();
  for (const auto& [a, b] : edges) {
    if (ds.unite(a, b)) --parts;
  }
  return parts == 1;
}

bool AdjacencyTree::acyclic() const {
  DisjointSets ds(nodes.size());
  for (const auto& [a, b] : edges) {
    if (!ds.unite(a, b)) return false;
  }
  return true;
}

std::vector<std::size_t> AdjacencyTree::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : edges) {
    if (a == i) out.push_back(b);
    if (b == i) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> AdjacencyTree::find(const IndexTuple& k) const {
  auto it = std::find(nodes.begin(), nodes.end(), k);
  if (it == nodes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

bool AdjacencyTree::has_edge(const IndexTuple& a, const IndexTuple& b) const {
  const auto ia = find(a);
  const auto ib = find(b);
  if (!ia || !ib) return false;
  const auto key = std::minmax(*ia, *ib);
  return std::find(edges.begin(), edges.end(),
                   std::make_pair(key.first, key.second)) != edges.end();
}

AdjacencyTree adjacency_tree(const Mosaic& m) {
  AdjacencyTree t;
  t.root = m.root;
  std::vector<BoundingBox> boxes;
  for (const auto& tile : m.tiles) {
    t.nodes.push_back(tile.k);
    boxes.push_back(bounding_box(tile.poly));
  }
  const auto adj = edge_graph(m.tiles, boxes, false);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j : adj[i]) {
      if (i < j) t.edges.emplace_back(i, j);
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

const Mosaic& symmetry_partner(const Mosaic& m,
                               const std::vector<Mosaic>& all) {
  if (m.symmetric) return m;
  const auto mirrored = polygon_set(m.tiles, true);
  for (const auto& other : all) {
    if (other.kernel == m.kernel && polygon_set(other.tiles, false) == mirrored) {
      return other;
    }
  }
  throw PartnerMissing("no mirror image of " + m.name + " among " +
                       std::to_string(all.size()) + " mosaics");
}

std::vector<TableRow> table_rows(std::int64_t kernel, const Assembly& a,
                                 int max_order) {
  std::vector<TableRow> rows;
  for (const auto& m : a.mosaics) {
    TableRow row;
    row.kernel = kernel;
    row.name = m.name;
    row.tiles = m.tiles.size();
    row.max_order = max_order;
    row.truncated = static_cast<int>(m.order_max) >= max_order;
    row.order_min = m.order_min;
    row.order_max = m.order_max;
    row.vertices = vertices(m);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    TableRow row;
    row.kernel = kernel;
    row.name = "-";
    row.max_order = max_order;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> table(const ProgressionClass& cls,
                            const std::vector<std::int64_t>& kernels,
                            const TableOptions& opts) {
  std::vector<TableRow> rows;
  for (auto kernel : kernels) {
    EnumerateOptions eo;
    eo.max_order = opts.max_order;
    eo.kernel = kernel;
    eo.budget = opts.budget;
    auto tiles = enumerate_tiles(cls, eo);
    const auto a =
        assemble(std::move(tiles), BigInt(static_cast<long>(kernel)));
    auto part = table_rows(kernel, a, opts.max_order);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

}  // namespace farey
