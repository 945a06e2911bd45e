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

#include "farey/tiles.hpp"

#include <algorithm>
#include <numeric>

#include "farey/errors.hpp"

namespace farey {

namespace {

// Faces of index m between x_{j-1} = (A1, B1) and x_{j-2} = (A2, B2),
// where (A, B) stands for A*y - B*x.
HalfPlane lower_face(std::int64_t m, const BigInt& A1, const BigInt& B1,
                     const BigInt& A2, const BigInt& B2) {
  const BigInt mm = m;
  return HalfPlane(Rational(BigInt(B2 - mm * B1)), Rational(BigInt(mm * A1 - A2)),
                   1, true);
}

HalfPlane upper_face(std::int64_t m, const BigInt& A1, const BigInt& B1,
                     const BigInt& A2, const BigInt& B2) {
  const BigInt mm = m + 1;
  return HalfPlane(Rational(BigInt(mm * B1 - B2)), Rational(BigInt(A2 - mm * A1)),
                   -1, false);
}

Rational form_at(const BigInt& A, const BigInt& B, const RatPoint& p) {
  return Rational(A) * p.y - Rational(B) * p.x;
}

}  // namespace

bool Region::contains(const RatPoint& p) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const HalfPlane& hp) { return hp.contains(p); });
}

Region region(const IndexTuple& k) {
  Region out{k, ConvexPolygon::farey_triangle(), farey_triangle_halfplanes()};
  BigInt A2 = 0, B2 = -1, A1 = 1, B1 = 0;
  for (auto m : k.entries()) {
    out.constraints.push_back(lower_face(m, A1, B1, A2, B2));
    out.constraints.push_back(upper_face(m, A1, B1, A2, B2));
    BigInt A = BigInt(static_cast<long>(m)) * A1 - A2;
    BigInt B = BigInt(static_cast<long>(m)) * B1 - B2;
    A2 = std::move(A1);
    B2 = std::move(B1);
    A1 = std::move(A);
    B1 = std::move(B);
  }
  out.poly = clip(std::move(out.poly), out.constraints);
  return out;
}

std::optional<Tile> tile(const IndexTuple& k, const TupleType& pattern,
                         const ProgressionClass& cls) {
  if (pattern.s() != 1) {
    throw DomainError("tiles are built for single-gap patterns only");
  }
  auto res = admissible_residues(k, pattern, cls);
  if (res.empty()) return std::nullopt;
  Region reg = region(k);
  if (reg.poly.empty()) return std::nullopt;
  const int n = static_cast<int>(k.order());
  const LinearForm form = linear_form(k, n);
  return Tile{k, pattern, affine_image(reg.poly, form.p, form.pp), form.p,
              std::move(res)};
}

StripPolygon strip_polygon(const IndexTuple& k, const TupleType& pattern,
                           const std::vector<Rational>& anchor) {
  if (static_cast<std::int64_t>(k.order()) != pattern.total() - 1) {
    throw DomainError("order(k) must equal |r| - 1");
  }
  if (anchor.size() != pattern.s() + 1) {
    throw DomainError("anchor needs s + 1 coordinates");
  }
  const Rational one(1);
  std::vector<HalfPlane> hps{HalfPlane(1, 0, anchor[0] + one),
                             HalfPlane(-1, 0, one - anchor[0])};
  std::optional<LinearForm> bounding;
  std::size_t bounding_index = 0;
  const auto positions = pattern.positions();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const LinearForm f = linear_form(k, static_cast<int>(positions[i]));
    const Rational a(BigInt(-f.pp));
    const Rational b(f.p);
    if (a.is_zero() && b.is_zero()) {
      throw DomainError("degenerate strip with a zero linear form");
    }
    hps.emplace_back(a, b, anchor[i + 1] + one);
    hps.emplace_back(-a, -b, one - anchor[i + 1]);
    if (!bounding && f.p != 0) {
      bounding = f;
      bounding_index = i + 1;
    }
  }
  if (!bounding) throw DomainError("strip intersection is unbounded");
  // Parallelogram of the x-strip and the first strip with a y term.
  const Rational A(bounding->p);
  const Rational B(bounding->pp);
  const Rational& ai = anchor[bounding_index];
  std::vector<RatPoint> start;
  for (const Rational& x : {anchor[0] - one, anchor[0] + one}) {
    for (const Rational& t : {ai - one, ai + one}) {
      start.push_back({x, (t + B * x) / A});
    }
  }
  std::swap(start[2], start[3]);
  ConvexPolygon poly = clip(ConvexPolygon(std::move(start)), hps);
  return {k, pattern, anchor, std::move(poly)};
}

RatPoint core_point(const IndexTuple& k, const RatPoint& target) {
  const LinearForm f = linear_form(k, static_cast<int>(k.order()));
  if (f.p == 0) throw DomainError("zero continuant has no core");
  return {target.x, (Rational(f.pp) * target.x + target.y) / Rational(f.p)};
}

namespace {

struct LiveResidue {
  std::int64_t e;
  std::int64_t prev;
  std::int64_t cur;
};

struct Node {
  std::vector<std::int64_t> k;
  ConvexPolygon poly;
  BigInt A_prev, B_prev, A, B;
  std::vector<LiveResidue> live;
};

// Endpoints of poly cut by the line x = x0, or nothing when they miss.
std::optional<std::pair<RatPoint, RatPoint>> vertical_section(
    const ConvexPolygon& poly, const Rational& x0) {
  const auto& v = poly.vertices();
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatPoint& p = v[i];
    const RatPoint& q = v[(i + 1) % v.size()];
    if ((x0 < p.x && x0 < q.x) || (x0 > p.x && x0 > q.x)) continue;
    std::vector<Rational> ys;
    if (p.x == q.x) {
      ys = {p.y, q.y};
    } else {
      ys = {p.y + (q.y - p.y) * (x0 - p.x) / (q.x - p.x)};
    }
    for (auto& y : ys) {
      if (!lo || y < *lo) lo = y;
      if (!hi || y > *hi) hi = y;
    }
  }
  if (!lo) return std::nullopt;
  return std::make_pair(RatPoint{x0, *lo}, RatPoint{x0, *hi});
}

bool meets_line(const ConvexPolygon& poly, const Rational& x0) {
  if (poly.empty()) return false;
  const auto box = bounding_box(poly);
  return box.xmin <= x0 && x0 <= box.xmax;
}

}  // namespace

std::vector<Tile> enumerate_tiles(const ProgressionClass& cls,
                                  const EnumerateOptions& opts,
                                  EnumerateStats* stats) {
  if (opts.max_order < 0) throw DomainError("max_order must be >= 0");
  std::optional<std::int64_t> cap = opts.max_entry;
  auto tighten = [&](std::int64_t v) { cap = cap ? std::min(*cap, v) : v; };
  if (opts.kernel) tighten(*opts.kernel + opts.max_order);
  if (opts.max_kernel) tighten(*opts.max_kernel + opts.max_order);

  const std::int64_t c = cls.c();
  const std::int64_t d = cls.d();
  std::vector<Node> stack;
  {
    Node root{{}, ConvexPolygon::farey_triangle(), 0, -1, 1, 0, {}};
    for (std::int64_t e = 0; e < d; ++e) {
      if (std::gcd(std::gcd(c, e), d) == 1) root.live.push_back({e, c, e});
    }
    if (!opts.x_line || meets_line(root.poly, *opts.x_line)) {
      stack.push_back(std::move(root));
    }
  }

  std::vector<Tile> out;
  std::int64_t nodes = 0;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++nodes > opts.budget) {
      throw BudgetError("tile enumeration exceeded " +
                        std::to_string(opts.budget) + " nodes");
    }
    const std::size_t n = node.k.size();
    std::vector<std::int64_t> hits;
    std::vector<LiveResidue> rest;
    for (const auto& lr : node.live) {
      (lr.cur == c ? hits.push_back(lr.e) : rest.push_back(lr));
    }
    const bool kernel_ok =
        (!opts.kernel || node.A == *opts.kernel) &&
        (!opts.max_kernel || node.A <= *opts.max_kernel);
    if (!hits.empty() && kernel_ok) {
      IndexTuple k(node.k);
      TupleType pattern{static_cast<std::int64_t>(n + 1)};
      out.push_back(Tile{k, pattern, affine_image(node.poly, node.A, node.B),
                         node.A, AdmissibleResidues{k, pattern, cls, hits}});
    }
    if (rest.empty() || n >= static_cast<std::size_t>(opts.max_order)) {
      continue;
    }

    // Range of k_{n+1} = floor((1 + x_{n-1}) / x_n) over the region, or
    // over its section by the line x = x_line.
    std::vector<RatPoint> probe;
    if (opts.x_line) {
      auto sec = vertical_section(node.poly, *opts.x_line);
      if (!sec) continue;
      probe = {sec->first, sec->second};
    } else {
      probe = node.poly.vertices();
    }
    bool unbounded = false;
    std::optional<Rational> fmin, fmax;
    for (const auto& p : probe) {
      const Rational xn = form_at(node.A, node.B, p);
      if (xn.sign() <= 0) {
        unbounded = true;
        continue;
      }
      const Rational f =
          (Rational(1) + form_at(node.A_prev, node.B_prev, p)) / xn;
      if (!fmin || f < *fmin) fmin = f;
      if (!fmax || f > *fmax) fmax = f;
    }
    std::int64_t lo = fmin ? std::max<std::int64_t>(1, fmin->floor().get_si())
                           : 1;
    std::int64_t hi;
    if (unbounded) {
      if (!cap) {
        throw DomainError(
            "index range is unbounded; give a kernel, max_kernel or "
            "max_entry");
      }
      hi = *cap;
    } else {
      hi = fmax->floor().get_si();
      if (cap) hi = std::min(hi, *cap);
    }
    for (std::int64_t m = hi; m >= lo; --m) {
      ConvexPolygon child =
          clip(node.poly, lower_face(m, node.A, node.B, node.A_prev,
                                     node.B_prev));
      if (child.empty()) continue;
      child = clip(child,
                   upper_face(m, node.A, node.B, node.A_prev, node.B_prev));
      if (child.empty()) continue;
      if (opts.x_line && !meets_line(child, *opts.x_line)) continue;
      Node next;
      next.k = node.k;
      next.k.push_back(m);
      next.poly = std::move(child);
      const BigInt mm = m;
      next.A = mm * node.A - node.A_prev;
      next.B = mm * node.B - node.B_prev;
      next.A_prev = node.A;
      next.B_prev = node.B;
      next.live.reserve(rest.size());
      for (const auto& lr : rest) {
        std::int64_t q = ((m % d) * lr.cur - lr.prev) % d;
        if (q < 0) q += d;
        next.live.push_back({lr.e, lr.cur, q});
      }
      stack.push_back(std::move(next));
    }
  }
  if (stats) stats->nodes = nodes;
  std::sort(out.begin(), out.end(),
            [](const Tile& a, const Tile& b) { return a.k < b.k; });
  return out;
}

}  // namespace farey
