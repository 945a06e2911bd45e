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

// JSON forms of the library's values. Rationals travel as "p/q" strings,
// points as two-element arrays of them.

#pragma once

#include <json.hpp>

#include "farey/density.hpp"
#include "farey/geometry.hpp"
#include "farey/mosaics.hpp"
#include "farey/tiles.hpp"

namespace farey {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RatPoint& p);
Json to_json(const std::vector<RatPoint>& pts);
Json to_json(const Tile& t);
Json to_json(const TableRow& row);
Json to_json(const EmpiricalHistogram& h);
Json to_json(const CompareReport& r);
Json to_json(const SupportReport& r);

// Accepts "p/q" strings and integers. ParseError otherwise.
Rational rational_from_json(const Json& j);
RatPoint point_from_json(const Json& j);
// A bare vertex array or an object with a "vertices" array.
ConvexPolygon polygon_from_json(const Json& j);
EmpiricalHistogram histogram_from_json(const Json& j);

// ParseError on malformed input.
Json parse_json(const std::string& text);
// Whole file as text; ParseError when unreadable.
std::string read_file(const std::string& path);

// One golden table row checked against regenerated rows of its kernel.
struct RowCheck {
  std::int64_t kernel = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Golden rows look like {"kernel", "name", "tiles", "orders", "vertices"},
// with "inf" for unbounded counts and orders. Finite rows must match a
// regenerated row of the same name in count, order range and vertex list.
// Unbounded rows must match a truncated row with the same order subscript
// and root. Rows of kernels absent from `rows` are skipped.
std::vector<RowCheck> check_table(const Json& golden,
                                  const std::vector<TableRow>& rows);

}  // namespace farey
