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

#include "farey/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "farey/errors.hpp"

namespace farey {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RatPoint& p) {
  return Json::array({to_json(p.x), to_json(p.y)});
}

Json to_json(const std::vector<RatPoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

Json to_json(const Tile& t) {
  Json j;
  j["k"] = t.k.entries();
  j["pattern"] = t.pattern.r();
  j["kernel"] = t.kernel.get_str();
  j["residues"] = t.residues.residues;
  j["vertices"] = to_json(t.poly.vertices());
  return j;
}

Json to_json(const TableRow& row) {
  Json j;
  j["kernel"] = row.kernel;
  j["name"] = row.name;
  if (row.empty()) {
    j["tiles"] = nullptr;
    j["orders"] = nullptr;
    j["vertices"] = Json::array();
    return j;
  }
  j["tiles"] = row.tiles;
  j["truncated"] = row.truncated;
  j["max_order"] = row.max_order;
  j["orders"] = Json::array({row.order_min, row.order_max});
  j["vertices"] = to_json(row.vertices);
  return j;
}

Json to_json(const EmpiricalHistogram& h) {
  Json j;
  j["Q"] = h.Q;
  j["c"] = h.cls.c();
  j["d"] = h.cls.d();
  j["bins"] = h.bins_per_side;
  j["total"] = h.total;
  j["counts"] = h.counts;
  return j;
}

Json to_json(const CompareReport& r) {
  Json j;
  j["l1"] = r.l1;
  j["max_ratio_deviation"] = r.max_ratio_deviation;
  j["theoretical_mass"] = r.theoretical_mass;
  j["interior_bins"] = r.interior_bins;
  j["tiles"] = r.tiles;
  return j;
}

Json to_json(const SupportReport& r) {
  Json j;
  j["pairs"] = r.pairs;
  j["enumerated"] = r.enumerated;
  j["deep"] = r.deep;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"q0", x.q0}, {"q1", x.q1}, {"distance", x.distance},
                 {"reason", x.reason}});
  }
  j["violations"] = std::move(v);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump());
}

RatPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("expected a point [x, y], got " + j.dump());
  }
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

ConvexPolygon polygon_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("vertices") ? j["vertices"] : j;
  if (!arr.is_array()) throw ParseError("expected a vertex array");
  std::vector<RatPoint> pts;
  for (const auto& p : arr) pts.push_back(point_from_json(p));
  return ConvexPolygon(std::move(pts));
}

EmpiricalHistogram histogram_from_json(const Json& j) {
  try {
    EmpiricalHistogram h;
    h.Q = j.at("Q").get<std::int64_t>();
    h.cls = ProgressionClass(j.at("c").get<std::int64_t>(),
                             j.at("d").get<std::int64_t>());
    h.bins_per_side = j.at("bins").get<int>();
    h.total = j.at("total").get<std::int64_t>();
    h.counts = j.at("counts").get<std::vector<std::int64_t>>();
    const auto b = static_cast<std::size_t>(h.bins_per_side);
    if (h.bins_per_side < 1 || h.counts.size() != b * b) {
      throw ParseError("histogram counts do not match the bin grid");
    }
    return h;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("histogram: ") + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

// "_1[3]" from "SH_1[3]" or "S?32_1[3]".
std::string subscript_and_root(const std::string& name) {
  const auto us = name.rfind('_');
  return us == std::string::npos ? name : name.substr(us);
}

std::string describe(const TableRow& r) {
  std::string s = r.name + " " + std::to_string(r.tiles) + " tiles, orders " +
                  std::to_string(r.order_min) + "-" +
                  std::to_string(r.order_max) + ",";
  for (const auto& p : r.vertices) {
    s += " (" + p.x.to_string() + "," + p.y.to_string() + ")";
  }
  return s;
}

}  // namespace

std::vector<RowCheck> check_table(const Json& golden,
                                  const std::vector<TableRow>& rows) {
  std::set<std::int64_t> kernels;
  for (const auto& r : rows) kernels.insert(r.kernel);
  std::vector<RowCheck> out;
  for (const auto& g : golden.at("rows")) {
    RowCheck c;
    c.kernel = g.at("kernel").get<std::int64_t>();
    c.name = g.at("name").get<std::string>();
    if (!kernels.contains(c.kernel)) continue;
    std::vector<const TableRow*> same_kernel;
    for (const auto& r : rows) {
      if (r.kernel == c.kernel) same_kernel.push_back(&r);
    }
    if (c.name == "-") {
      c.passed = same_kernel.size() == 1 && same_kernel.front()->empty();
      c.detail = c.passed ? "no mosaics" : "expected no mosaics";
      out.push_back(std::move(c));
      continue;
    }
    const bool unbounded = g.at("tiles").is_string();
    if (unbounded) {
      const std::string key = subscript_and_root(c.name);
      for (const auto* r : same_kernel) {
        if (r->truncated && subscript_and_root(r->name) == key) {
          c.passed = true;
          c.detail = "still growing at order " + std::to_string(r->max_order) +
                     " with " + std::to_string(r->tiles) + " tiles";
        }
      }
      if (!c.passed) c.detail = "no truncated mosaic with root " + key;
      out.push_back(std::move(c));
      continue;
    }
    const TableRow* match = nullptr;
    for (const auto* r : same_kernel) {
      if (r->name == c.name) match = r;
    }
    if (!match) {
      c.detail = "missing; regenerated:";
      for (const auto* r : same_kernel) c.detail += " " + r->name;
      out.push_back(std::move(c));
      continue;
    }
    std::vector<RatPoint> want;
    for (const auto& p : g.at("vertices")) want.push_back(point_from_json(p));
    const auto tiles = g.at("tiles").get<std::size_t>();
    const auto lo = g.at("orders")[0].get<std::size_t>();
    const auto hi = g.at("orders")[1].get<std::size_t>();
    c.passed = !match->truncated && match->tiles == tiles &&
               match->order_min == lo && match->order_max == hi &&
               match->vertices == want;
    c.detail = describe(*match);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace farey
