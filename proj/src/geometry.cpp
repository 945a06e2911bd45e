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

#include "farey/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <utility>

#include "farey/errors.hpp"

namespace farey {

Rational cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational cross(const RatPoint& u, const RatPoint& v) {
  return u.x * v.y - u.y * v.x;
}

namespace {

Rational dot(const RatPoint& u, const RatPoint& v) {
  return u.x * v.x + u.y * v.y;
}

// Removes cyclic repeats.
std::vector<RatPoint> drop_repeats(std::vector<RatPoint> loop) {
  std::vector<RatPoint> out;
  out.reserve(loop.size());
  for (auto& p : loop) {
    if (out.empty() || out.back() != p) out.push_back(std::move(p));
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

// Strictly between a and b on the segment ab (collinearity assumed).
bool strictly_between(const RatPoint& a, const RatPoint& b,
                      const RatPoint& p) {
  const RatPoint d = b - a;
  const Rational t = dot(p - a, d);
  return t.sign() > 0 && t < dot(d, d);
}

bool on_segment(const RatPoint& a, const RatPoint& b, const RatPoint& p) {
  if (!cross(a, b, p).is_zero()) return false;
  const RatPoint d = b - a;
  const Rational t = dot(p - a, d);
  return t.sign() >= 0 && t <= dot(d, d);
}

}  // namespace

Rational signed_area2(std::span<const RatPoint> loop) {
  Rational s;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& p = loop[i];
    const RatPoint& q = loop[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

std::vector<RatPoint> merge_collinear(std::vector<RatPoint> loop) {
  loop = drop_repeats(std::move(loop));
  bool changed = true;
  while (changed && loop.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const std::size_t n = loop.size();
      const RatPoint& a = loop[(i + n - 1) % n];
      const RatPoint& b = loop[i];
      const RatPoint& c = loop[(i + 1) % n];
      if (cross(a, b, c).is_zero()) {
        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
        loop = drop_repeats(std::move(loop));
        changed = true;
        break;
      }
    }
  }
  if (loop.size() < 3) loop.clear();
  return loop;
}

namespace {

// Cleans a loop already known to be convex; fixes orientation.
std::vector<RatPoint> clean_convex(std::vector<RatPoint> vertices) {
  auto loop = merge_collinear(std::move(vertices));
  if (loop.empty()) return loop;
  const Rational a2 = signed_area2(loop);
  if (a2.is_zero()) return {};
  if (a2.sign() < 0) std::reverse(loop.begin(), loop.end());
  return loop;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<RatPoint> vertices) {
  auto loop = clean_convex(std::move(vertices));
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& a = loop[i];
    const RatPoint& b = loop[(i + 1) % n];
    for (const RatPoint& p : loop) {
      if (cross(a, b, p).sign() < 0) {
        throw DomainError("polygon vertices are not in convex position");
      }
    }
  }
  vertices_ = std::move(loop);
}

ConvexPolygon ConvexPolygon::from_convex(std::vector<RatPoint> vertices) {
  ConvexPolygon out;
  out.vertices_ = clean_convex(std::move(vertices));
  return out;
}


ConvexPolygon ConvexPolygon::unit_square() {
  return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon ConvexPolygon::farey_triangle() {
  return ConvexPolygon({{1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon ConvexPolygon::canonical() const {
  if (vertices_.empty()) return *this;
  auto v = vertices_;
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
  ConvexPolygon out;
  out.vertices_ = std::move(v);
  return out;
}

bool ConvexPolygon::has_vertex(const RatPoint& p) const {
  return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

HalfPlane::HalfPlane(Rational a_, Rational b_, Rational c_, bool closed_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), closed(closed_) {
  if (a.is_zero() && b.is_zero()) {
    throw DomainError("half-plane with zero normal");
  }
}

Rational HalfPlane::eval(const RatPoint& p) const {
  return a * p.x + b * p.y - c;
}

bool HalfPlane::contains(const RatPoint& p) const {
  const int s = eval(p).sign();
  return closed ? s <= 0 : s < 0;
}

HalfPlane HalfPlane::complement() const { return {-a, -b, -c, !closed}; }

ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& hp) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  if (n == 0) return {};
  std::vector<Rational> val(n);
  bool all_in = true;
  bool all_out = true;
  for (std::size_t i = 0; i < n; ++i) {
    val[i] = hp.eval(v[i]);
    if (val[i].sign() > 0) all_in = false;
    if (val[i].sign() < 0) all_out = false;
  }
  if (all_in) return poly;
  if (all_out) return {};
  std::vector<RatPoint> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const int si = val[i].sign();
    const int sj = val[j].sign();
    if (si <= 0) out.push_back(v[i]);
    if ((si < 0 && sj > 0) || (si > 0 && sj < 0)) {
      const Rational t = val[i] / (val[i] - val[j]);
      out.push_back({v[i].x + t * (v[j].x - v[i].x),
                     v[i].y + t * (v[j].y - v[i].y)});
    }
  }
  return ConvexPolygon::from_convex(std::move(out));
}

ConvexPolygon clip(ConvexPolygon poly, std::span<const HalfPlane> hps) {
  for (const auto& hp : hps) {
    if (poly.empty()) break;
    poly = clip(poly, hp);
  }
  return poly;
}

Rational area(const ConvexPolygon& poly) {
  return signed_area2(poly.vertices()) / Rational(2);
}

ConvexPolygon affine_image(const ConvexPolygon& poly, const BigInt& p,
                           const BigInt& pp) {
  if (p < 1) throw DomainError("affine_image needs a positive determinant");
  std::vector<RatPoint> out;
  out.reserve(poly.size());
  const Rational rp(p);
  const Rational rpp(pp);
  for (const auto& v : poly.vertices()) {
    out.push_back({v.x, rp * v.y - rpp * v.x});
  }
  return ConvexPolygon::from_convex(std::move(out));
}

ConvexPolygon reflect_diagonal(const ConvexPolygon& poly) {
  std::vector<RatPoint> out;
  out.reserve(poly.size());
  for (const auto& v : poly.vertices()) out.push_back({v.y, v.x});
  return ConvexPolygon::from_convex(std::move(out));
}

bool BoundingBox::overlaps(const BoundingBox& o) const {
  return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
}

BoundingBox bounding_box(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  if (v.empty()) throw DomainError("bounding box of an empty polygon");
  BoundingBox b{v[0].x, v[0].y, v[0].x, v[0].y};
  for (const auto& p : v) {
    if (p.x < b.xmin) b.xmin = p.x;
    if (p.x > b.xmax) b.xmax = p.x;
    if (p.y < b.ymin) b.ymin = p.y;
    if (p.y > b.ymax) b.ymax = p.y;
  }
  return b;
}

namespace {

// True when some edge line of a has all of b on its closed outer side.
bool edge_separates(const ConvexPolygon& a, const ConvexPolygon& b) {
  const auto& v = a.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& p = v[i];
    const RatPoint& q = v[(i + 1) % n];
    bool separated = true;
    for (const auto& w : b.vertices()) {
      if (cross(p, q, w).sign() > 0) {
        separated = false;
        break;
      }
    }
    if (separated) return true;
  }
  return false;
}

}  // namespace

bool interiors_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.empty() || b.empty()) return false;
  return !edge_separates(a, b) && !edge_separates(b, a);
}

bool share_edge(const ConvexPolygon& a, const ConvexPolygon& b) {
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  for (std::size_t i = 0; i < va.size(); ++i) {
    const RatPoint& p = va[i];
    const RatPoint& q = va[(i + 1) % va.size()];
    const RatPoint d = q - p;
    const Rational len2 = dot(d, d);
    for (std::size_t j = 0; j < vb.size(); ++j) {
      const RatPoint& r = vb[j];
      const RatPoint& s = vb[(j + 1) % vb.size()];
      if (!cross(p, q, r).is_zero() || !cross(p, q, s).is_zero()) continue;
      Rational tr = dot(r - p, d);
      Rational ts = dot(s - p, d);
      if (ts < tr) std::swap(tr, ts);
      const Rational lo = tr.sign() > 0 ? tr : Rational(0);
      const Rational hi = ts < len2 ? ts : len2;
      if (lo < hi) return true;
    }
  }
  return false;
}

bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner) {
  if (inner.empty()) return true;
  if (outer.empty()) return false;
  const auto& v = outer.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatPoint& p = v[i];
    const RatPoint& q = v[(i + 1) % v.size()];
    for (const auto& w : inner.vertices()) {
      if (cross(p, q, w).sign() < 0) return false;
    }
  }
  return true;
}

Rational Outline::area() const {
  Rational s;
  for (const auto& loop : loops) s += signed_area2(loop);
  return s / Rational(2);
}

std::size_t Outline::vertex_count() const {
  std::size_t n = 0;
  for (const auto& loop : loops) n += loop.size();
  return n;
}

namespace {

using Fragment = std::pair<RatPoint, RatPoint>;

// Rank of the turn from `in` to `out`: right turns < straight < left turns
// < reversal. Larger means further counter-clockwise.
int turn_rank(const RatPoint& in, const RatPoint& out) {
  const int c = cross(in, out).sign();
  if (c < 0) return 0;
  if (c > 0) return 2;
  return dot(in, out).sign() > 0 ? 1 : 3;
}

// True when `a` turns further left than `b` relative to `in`.
bool turns_more_left(const RatPoint& in, const RatPoint& a,
                     const RatPoint& b) {
  const int ra = turn_rank(in, a);
  const int rb = turn_rank(in, b);
  if (ra != rb) return ra > rb;
  return cross(b, a).sign() > 0;
}

}  // namespace

Outline union_outline(std::span<const ConvexPolygon> tiles) {
  std::vector<const ConvexPolygon*> live;
  std::vector<BoundingBox> boxes;
  for (const auto& t : tiles) {
    if (t.empty()) continue;
    live.push_back(&t);
    boxes.push_back(bounding_box(t));
  }
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      if (boxes[i].overlaps(boxes[j]) &&
          interiors_intersect(*live[i], *live[j])) {
        throw OverlapError("tiles " + std::to_string(i) + " and " +
                           std::to_string(j) + " have overlapping interiors");
      }
    }
  }

  std::vector<RatPoint> all;
  for (const auto* t : live) {
    all.insert(all.end(), t->vertices().begin(), t->vertices().end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::map<Fragment, int> count;
  for (const auto* t : live) {
    const auto& v = t->vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const RatPoint& a = v[i];
      const RatPoint& b = v[(i + 1) % v.size()];
      const Rational& x0 = a.x < b.x ? a.x : b.x;
      const Rational& x1 = a.x < b.x ? b.x : a.x;
      auto lo = std::lower_bound(all.begin(), all.end(), RatPoint{x0, Rational(0)},
                                 [](const RatPoint& p, const RatPoint& key) {
                                   return p.x < key.x;
                                 });
      std::vector<RatPoint> cuts;
      for (auto it = lo; it != all.end() && it->x <= x1; ++it) {
        if (cross(a, b, *it).is_zero() && strictly_between(a, b, *it)) {
          cuts.push_back(*it);
        }
      }
      const RatPoint d = b - a;
      std::sort(cuts.begin(), cuts.end(),
                [&](const RatPoint& p, const RatPoint& q) {
                  return dot(p - a, d) < dot(q - a, d);
                });
      RatPoint prev = a;
      for (auto& c : cuts) {
        ++count[{prev, c}];
        prev = c;
      }
      ++count[{prev, b}];
    }
  }

  std::multimap<RatPoint, RatPoint> outgoing;
  for (const auto& [frag, n] : count) {
    auto rev = count.find({frag.second, frag.first});
    const int m = rev == count.end() ? 0 : rev->second;
    for (int k = m; k < n; ++k) outgoing.emplace(frag.first, frag.second);
  }

  Outline out;
  while (!outgoing.empty()) {
    auto first = outgoing.begin();
    const RatPoint start = first->first;
    RatPoint from = first->first;
    RatPoint at = first->second;
    outgoing.erase(first);
    std::vector<RatPoint> loop{start};
    while (at != start) {
      loop.push_back(at);
      auto [b, e] = outgoing.equal_range(at);
      if (b == e) throw OverlapError("outline edges do not close into loops");
      const RatPoint in = at - from;
      auto best = b;
      for (auto it = std::next(b); it != e; ++it) {
        if (turns_more_left(in, it->second - at, best->second - at)) {
          best = it;
        }
      }
      from = at;
      at = best->second;
      outgoing.erase(best);
    }
    auto merged = merge_collinear(std::move(loop));
    if (!merged.empty()) out.loops.push_back(std::move(merged));
  }
  std::stable_sort(out.loops.begin(), out.loops.end(),
                   [](const auto& a, const auto& b) {
                     return abs(signed_area2(a)) > abs(signed_area2(b));
                   });
  return out;
}

double Location::interior_angle() const {
  switch (kind) {
    case Incidence::kInterior:
      return 2 * std::numbers::pi;
    case Incidence::kEdge:
      return std::numbers::pi;
    case Incidence::kOutside:
      return 0.0;
    case Incidence::kVertex: {
      const double c = cross(to_next, to_prev).to_double();
      const double d = dot(to_next, to_prev).to_double();
      double theta = std::atan2(c, d);
      if (theta <= 0) theta += 2 * std::numbers::pi;
      return theta;
    }
  }
  return 0.0;
}

double Location::coverage() const {
  return interior_angle() / (2 * std::numbers::pi);
}

Location locate(const ConvexPolygon& poly, const RatPoint& p) {
  Location loc;
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  if (n == 0) return loc;
  bool on_edge = false;
  for (std::size_t i = 0; i < n; ++i) {
    const int s = cross(v[i], v[(i + 1) % n], p).sign();
    if (s < 0) return loc;
    if (s == 0) on_edge = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == p) {
      loc.kind = Incidence::kVertex;
      loc.to_prev = v[(i + n - 1) % n] - p;
      loc.to_next = v[(i + 1) % n] - p;
      return loc;
    }
  }
  loc.kind = on_edge ? Incidence::kEdge : Incidence::kInterior;
  return loc;
}

Location locate(const Outline& outline, const RatPoint& p) {
  Location loc;
  for (const auto& loop : outline.loops) {
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (loop[i] == p) {
        loc.kind = Incidence::kVertex;
        loc.to_prev = loop[(i + n - 1) % n] - p;
        loc.to_next = loop[(i + 1) % n] - p;
        return loc;
      }
    }
  }
  for (const auto& loop : outline.loops) {
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (on_segment(loop[i], loop[(i + 1) % n], p)) {
        loc.kind = Incidence::kEdge;
        return loc;
      }
    }
  }
  int winding = 0;
  for (const auto& loop : outline.loops) {
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const RatPoint& a = loop[i];
      const RatPoint& b = loop[(i + 1) % n];
      if (a.y <= p.y) {
        if (b.y > p.y && cross(a, b, p).sign() > 0) ++winding;
      } else if (b.y <= p.y && cross(a, b, p).sign() < 0) {
        --winding;
      }
    }
  }
  loc.kind = winding != 0 ? Incidence::kInterior : Incidence::kOutside;
  return loc;
}

namespace {

double segment_distance(double ax, double ay, double bx, double by, double px,
                        double py) {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(ax + t * dx - px, ay + t * dy - py);
}

double loop_distance(std::span<const RatPoint> loop, const RatPoint& p) {
  double best = std::numeric_limits<double>::infinity();
  const double px = p.x.to_double();
  const double py = p.y.to_double();
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const RatPoint& a = loop[i];
    const RatPoint& b = loop[(i + 1) % loop.size()];
    best = std::min(best, segment_distance(a.x.to_double(), a.y.to_double(),
                                           b.x.to_double(), b.y.to_double(),
                                           px, py));
  }
  return best;
}

}  // namespace

double boundary_distance(const ConvexPolygon& poly, const RatPoint& p) {
  return loop_distance(poly.vertices(), p);
}

double boundary_distance(const Outline& outline, const RatPoint& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& loop : outline.loops) {
    best = std::min(best, loop_distance(loop, p));
  }
  return best;
}

ConvexPolygon convex_hull(std::vector<RatPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return {};
  std::vector<RatPoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]).sign() <= 0) {
      --k;
    }
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return ConvexPolygon::from_convex(std::move(hull));
}

}  // namespace farey
