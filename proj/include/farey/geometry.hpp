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

// Exact 2-D polygon kernel over rationals: convex clipping, areas, the
// shear maps that carry regions onto tiles, union outlines by edge
// cancellation, and point location.

#pragma once

#include <compare>
#include <span>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

struct RatPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  friend std::strong_ordering operator<=>(const RatPoint& a,
                                          const RatPoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

inline RatPoint operator+(const RatPoint& a, const RatPoint& b) {
  return {a.x + b.x, a.y + b.y};
}
inline RatPoint operator-(const RatPoint& a, const RatPoint& b) {
  return {a.x - b.x, a.y - b.y};
}

// z-component of (a - o) x (b - o); positive when o, a, b turn left.
Rational cross(const RatPoint& o, const RatPoint& a, const RatPoint& b);
// z-component of u x v.
Rational cross(const RatPoint& u, const RatPoint& v);

// Twice the signed area of a closed vertex loop.
Rational signed_area2(std::span<const RatPoint> loop);

// Convex polygon with counter-clockwise vertices, no repeated points and
// no three consecutive collinear vertices. The empty polygon has no
// vertices; segments and points collapse to it.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  // Normalizes orientation, drops repeats and collinear vertices. Throws
  // DomainError if the cleaned loop is not convex.
  explicit ConvexPolygon(std::vector<RatPoint> vertices);
  // Same clean-up without the convexity check, for loops that are convex
  // by construction (clipping results, images under affine maps).
  static ConvexPolygon from_convex(std::vector<RatPoint> vertices);

  static ConvexPolygon unit_square();
  // The closure of {(x,y) in (0,1]^2 : x + y > 1}.
  static ConvexPolygon farey_triangle();

  const std::vector<RatPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const RatPoint& operator[](std::size_t i) const { return vertices_[i]; }

  // Same vertex cycle, rotated to start at the lexicographically least
  // vertex; lets polygons be compared as sets.
  ConvexPolygon canonical() const;
  bool has_vertex(const RatPoint& p) const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  std::vector<RatPoint> vertices_;
};

// {(x,y) : a*x + b*y <= c}, or < c when open.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
  bool closed = true;

  HalfPlane(Rational a, Rational b, Rational c, bool closed = true);

  // a*x + b*y - c; non-positive inside the closure.
  Rational eval(const RatPoint& p) const;
  bool contains(const RatPoint& p) const;
  // The other side: open when this one is closed and vice versa.
  HalfPlane complement() const;
};

// poly intersected with the closure of hp.
ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& hp);
ConvexPolygon clip(ConvexPolygon poly, std::span<const HalfPlane> hps);

Rational area(const ConvexPolygon& poly);

// Image under (x, y) -> (x, p*y - pp*x). Requires p >= 1, so the map
// scales areas by p and keeps orientation.
ConvexPolygon affine_image(const ConvexPolygon& poly, const BigInt& p,
                           const BigInt& pp);

// Mirror in the first diagonal, (x, y) -> (y, x).
ConvexPolygon reflect_diagonal(const ConvexPolygon& poly);

struct BoundingBox {
  Rational xmin, ymin, xmax, ymax;
  bool overlaps(const BoundingBox& o) const;
};
BoundingBox bounding_box(const ConvexPolygon& poly);

// Exact test: do the open interiors of a and b meet?
bool interiors_intersect(const ConvexPolygon& a, const ConvexPolygon& b);
// Do a and b share a boundary segment of positive length?
bool share_edge(const ConvexPolygon& a, const ConvexPolygon& b);
bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner);

// Boundary of a union. The outer loop is counter-clockwise, holes are
// clockwise; the first loop is the one of largest area.
struct Outline {
  std::vector<std::vector<RatPoint>> loops;

  bool empty() const { return loops.empty(); }
  Rational area() const;
  std::size_t vertex_count() const;
};

// Outline of a union of interior-disjoint convex tiles by exact edge
// cancellation. Throws OverlapError if two tiles overlap.
Outline union_outline(std::span<const ConvexPolygon> tiles);

enum class Incidence { kInterior, kEdge, kVertex, kOutside };

struct Location {
  Incidence kind = Incidence::kOutside;
  // For kVertex: directions from the vertex to its predecessor and to its
  // successor along the boundary (interior on the left).
  RatPoint to_prev;
  RatPoint to_next;

  // Interior angle at the vertex, in radians. pi for kEdge, 2*pi for
  // kInterior and 0 for kOutside.
  double interior_angle() const;
  // Share of a small disc around the point that lies in the region.
  double coverage() const;
};

Location locate(const ConvexPolygon& poly, const RatPoint& p);
Location locate(const Outline& outline, const RatPoint& p);

// Euclidean distance from p to the boundary of poly (floating point).
double boundary_distance(const ConvexPolygon& poly, const RatPoint& p);
double boundary_distance(const Outline& outline, const RatPoint& p);

// Convex hull of a point set (monotone chain); empty below three
// non-collinear points.
ConvexPolygon convex_hull(std::vector<RatPoint> points);

// Removes vertices whose neighbours are collinear with them.
std::vector<RatPoint> merge_collinear(std::vector<RatPoint> loop);

}  // namespace farey
