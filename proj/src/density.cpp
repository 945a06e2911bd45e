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

#include "farey/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "farey/errors.hpp"
#include "farey/progression.hpp"

namespace farey {

Rational prefactor(const ProgressionClass& cls, PrefactorConvention conv) {
  if (conv == PrefactorConvention::kPrinted) {
    return Rational(2, euler_phi(cls.d()));
  }
  const std::int64_t g = cls.g();
  return Rational(2 * g, cls.d() * euler_phi(g));
}

Rational DensityLayerWeight::contribution() const {
  return prefactor * Rational(multiplicity) / Rational(kernel);
}

DensityLayerWeight layer_weight(const Tile& t, const ProgressionClass& cls,
                                PrefactorConvention conv) {
  return {t.kernel, static_cast<std::int64_t>(t.multiplicity()),
          prefactor(cls, conv)};
}

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::kGeneric:
      return "Generic";
    case PointClass::kOnEdge:
      return "OnEdge";
    case PointClass::kOnVertex:
      return "OnVertex";
    case PointClass::kOutside:
      return "Outside";
  }
  return "?";
}

namespace {

int degeneracy(Incidence k) {
  switch (k) {
    case Incidence::kInterior:
      return 1;
    case Incidence::kEdge:
      return 2;
    case Incidence::kVertex:
      return 3;
    case Incidence::kOutside:
      return 0;
  }
  return 0;
}

PointClass classify(int level) {
  switch (level) {
    case 1:
      return PointClass::kGeneric;
    case 2:
      return PointClass::kOnEdge;
    case 3:
      return PointClass::kOnVertex;
    default:
      return PointClass::kOutside;
  }
}

bool in_box(const BoundingBox& b, const RatPoint& p) {
  return b.xmin <= p.x && p.x <= b.xmax && b.ymin <= p.y && p.y <= b.ymax;
}

}  // namespace

DensityValue density_from_tiles(const std::vector<Tile>& tiles,
                                const RatPoint& p, const ProgressionClass& cls,
                                PrefactorConvention conv) {
  DensityValue out;
  int level = 0;
  const Rational pre = prefactor(cls, conv);
  for (const auto& t : tiles) {
    const Location loc = locate(t.poly, p);
    if (loc.kind == Incidence::kOutside) continue;
    ++out.tiles;
    level = std::max(level, degeneracy(loc.kind));
    const Rational w = pre * Rational(static_cast<std::int64_t>(
                                 t.multiplicity())) /
                       Rational(t.kernel);
    out.value += w.to_double() * loc.coverage();
  }
  out.classification = classify(level);
  return out;
}

DensityValue g1_eval(const DensityQuery& q) {
  const auto& p = q.point;
  if (p.x < Rational(0) || p.x > Rational(1) || p.y < Rational(0) ||
      p.y > Rational(1)) {
    return {};
  }
  if (q.max_order < 0) throw DomainError("max_order must be >= 0");
  EnumerateOptions eo;
  eo.max_order = q.max_order;
  eo.max_entry = q.max_entry;
  eo.x_line = p.x;
  eo.budget = q.budget;
  const auto tiles = enumerate_tiles(q.cls, eo);
  return density_from_tiles(tiles, p, q.cls, q.convention);
}

double gs_first_term(const std::vector<Rational>& point,
                     const ProgressionClass& cls, const TupleType& r,
                     const IndexTuple& k, PrefactorConvention conv) {
  if (point.size() != r.s() + 1) {
    throw DomainError("point has " + std::to_string(point.size()) +
                      " coordinates, pattern needs " +
                      std::to_string(r.s() + 1));
  }
  const auto m = admissible_residues(k, r, cls);
  if (m.empty()) return 0.0;
  const int j = static_cast<int>(r.r().front()) - 1;
  const IndexTuple head = k.sub(1, static_cast<std::size_t>(j));
  const RatPoint core = core_point(head, {point[0], point[1]});
  if (!region(k).contains(core)) return 0.0;
  const auto strip = strip_polygon(k, r, point);
  const Rational value = prefactor(cls, conv) *
                         Rational(static_cast<std::int64_t>(m.size())) *
                         area(strip.poly) / Rational(4);
  return value.to_double();
}

int bin_of(std::int64_t v, std::int64_t Q, int B) {
  const std::int64_t i = v * B / Q;
  return static_cast<int>(std::min<std::int64_t>(i, B - 1));
}

EmpiricalHistogram empirical_histogram(std::int64_t Q,
                                       const ProgressionClass& cls, int B) {
  if (B < 1) throw DomainError("bin count must be >= 1");
  if (Q < 1) throw DomainError("Q must be >= 1");
  EmpiricalHistogram h;
  h.Q = Q;
  h.cls = cls;
  h.bins_per_side = B;
  h.counts.assign(static_cast<std::size_t>(B) * B, 0);
  std::optional<std::int64_t> prev;
  for (const auto& f : farey_filtered(Q, cls)) {
    if (prev) {
      ++h.counts[bin_of(*prev, Q, B) * B + bin_of(f.q, Q, B)];
      ++h.total;
    }
    prev = f.q;
  }
  return h;
}

Rational theoretical_mass(const std::vector<Tile>& tiles,
                          const ProgressionClass& cls,
                          PrefactorConvention conv) {
  Rational s;
  for (const auto& t : tiles) {
    s += Rational(static_cast<std::int64_t>(t.multiplicity())) *
         area(t.poly) / Rational(t.kernel);
  }
  return prefactor(cls, conv) * s;
}

CompareReport compare(const EmpiricalHistogram& hist,
                      const std::vector<Tile>& tiles,
                      PrefactorConvention conv) {
  const int B = hist.bins_per_side;
  const std::size_t nb = static_cast<std::size_t>(B) * B;
  CompareReport rep;
  rep.tiles = tiles.size();
  rep.empirical.assign(nb, 0.0);
  rep.theoretical.assign(nb, 0.0);
  rep.interior.assign(nb, false);
  if (hist.total > 0) {
    for (std::size_t i = 0; i < nb; ++i) {
      rep.empirical[i] = static_cast<double>(hist.counts[i]) /
                         static_cast<double>(hist.total);
    }
  }
  const Rational pre = prefactor(hist.cls, conv);
  const Rational step(1, B);
  std::vector<BoundingBox> boxes;
  boxes.reserve(tiles.size());
  for (const auto& t : tiles) boxes.push_back(bounding_box(t.poly));

  for (std::size_t ti = 0; ti < tiles.size(); ++ti) {
    const auto& t = tiles[ti];
    const auto& bb = boxes[ti];
    const Rational w = pre *
                       Rational(static_cast<std::int64_t>(t.multiplicity())) /
                       Rational(t.kernel);
    const int i0 = std::max(0, static_cast<int>((bb.xmin * B).floor().get_si()));
    const int i1 =
        std::min(B - 1, static_cast<int>((bb.xmax * B).ceil().get_si()) - 1);
    const int j0 = std::max(0, static_cast<int>((bb.ymin * B).floor().get_si()));
    const int j1 =
        std::min(B - 1, static_cast<int>((bb.ymax * B).ceil().get_si()) - 1);
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) {
        const Rational x0 = step * Rational(i), x1 = step * Rational(i + 1);
        const Rational y0 = step * Rational(j), y1 = step * Rational(j + 1);
        const HalfPlane box[4] = {{-1, 0, -x0}, {1, 0, x1}, {0, -1, -y0},
                                  {0, 1, y1}};
        const ConvexPolygon piece = clip(t.poly, box);
        if (piece.empty()) continue;
        rep.theoretical[static_cast<std::size_t>(i) * B + j] +=
            (w * area(piece)).to_double();
      }
    }
  }

  auto covered = [&](const RatPoint& p) {
    for (std::size_t ti = 0; ti < tiles.size(); ++ti) {
      if (!in_box(boxes[ti], p)) continue;
      if (locate(tiles[ti].poly, p).kind != Incidence::kOutside) return true;
    }
    return false;
  };
  std::vector<char> corner((B + 1) * (B + 1), 0);
  for (int i = 0; i <= B; ++i) {
    for (int j = 0; j <= B; ++j) {
      corner[i * (B + 1) + j] = covered({step * Rational(i), step * Rational(j)});
    }
  }
  for (int i = 0; i < B; ++i) {
    for (int j = 0; j < B; ++j) {
      const bool in = corner[i * (B + 1) + j] && corner[(i + 1) * (B + 1) + j] &&
                      corner[i * (B + 1) + j + 1] &&
                      corner[(i + 1) * (B + 1) + j + 1];
      const std::size_t b = static_cast<std::size_t>(i) * B + j;
      rep.interior[b] = in;
      if (!in) continue;
      ++rep.interior_bins;
      rep.l1 += std::abs(rep.empirical[b] - rep.theoretical[b]);
      if (rep.theoretical[b] > 0) {
        rep.max_ratio_deviation =
            std::max(rep.max_ratio_deviation,
                     std::abs(rep.empirical[b] / rep.theoretical[b] - 1.0));
      }
    }
  }
  rep.theoretical_mass = theoretical_mass(tiles, hist.cls, conv).to_double();
  return rep;
}

CompareReport compare(const EmpiricalHistogram& hist,
                      const CompareOptions& opts) {
  EnumerateOptions eo;
  eo.max_order = opts.max_order;
  eo.max_entry = opts.max_entry;
  eo.budget = opts.budget;
  const auto tiles = enumerate_tiles(hist.cls, eo);
  return compare(hist, tiles, opts.convention);
}

namespace {

double distance_to_tiles(const std::vector<Tile>& tiles, const RatPoint& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& t : tiles) {
    if (locate(t.poly, p).kind != Incidence::kOutside) return 0.0;
    best = std::min(best, boundary_distance(t.poly, p));
  }
  return best;
}

}  // namespace

SupportReport support_membership(std::int64_t Q, const ProgressionClass& cls,
                                 const SupportOptions& opts) {
  SupportReport rep;
  EnumerateOptions eo;
  eo.max_order = opts.max_order;
  eo.max_entry = opts.max_entry;
  eo.budget = opts.budget;
  const auto tiles = enumerate_tiles(cls, eo);
  std::set<IndexTuple> known;
  for (const auto& t : tiles) known.insert(t.k);

  const Rational q_scale(Q);
  for (const auto& pr : consecutive_pairs(Q, cls)) {
    ++rep.pairs;
    const RatPoint image{Rational(pr.q0) / q_scale, Rational(pr.q1) / q_scale};
    auto fail = [&](std::string why) {
      SupportViolation v;
      v.q0 = pr.q0;
      v.q1 = pr.q1;
      v.distance = distance_to_tiles(tiles, image);
      v.reason = std::move(why);
      rep.violations.push_back(std::move(v));
    };
    if (opts.hull && locate(*opts.hull, image).kind == Incidence::kOutside) {
      SupportViolation v;
      v.q0 = pr.q0;
      v.q1 = pr.q1;
      v.distance = boundary_distance(*opts.hull, image);
      v.reason = "outside hull";
      rep.violations.push_back(std::move(v));
      continue;
    }
    const int n = static_cast<int>(pr.gap) - 1;
    const auto [k, chain] = index_sequence_int(pr.q0, pr.next_in_full, Q, n);
    const Rational x = Rational(pr.q0) / q_scale;
    const Rational y = Rational(pr.next_in_full) / q_scale;
    const auto real = index_sequence_real(x, y, n);
    if (real.first != k) {
      fail("generator index sequence mismatch");
      continue;
    }
    if (eval_linear(k, n, x, y) != image.y) {
      fail("choice map misses the pair");
      continue;
    }
    const TupleType pattern{pr.gap};
    const auto m = admissible_residues(k, pattern, cls);
    const std::int64_t e = pr.next_in_full % cls.d();
    if (std::find(m.residues.begin(), m.residues.end(), e) ==
        m.residues.end()) {
      fail("residue " + std::to_string(e) + " not admissible for [" +
           k.to_string(",", true) + "]");
      continue;
    }
    const bool in_bounds = n <= opts.max_order &&
                           (k.order() == 0 || k.max_entry() <= opts.max_entry);
    if (in_bounds) {
      if (!known.contains(k)) {
        fail("tile [" + k.to_string(",", true) + "] missing from enumeration");
        continue;
      }
      ++rep.enumerated;
    } else {
      ++rep.deep;
    }
  }
  return rep;
}

}  // namespace farey
