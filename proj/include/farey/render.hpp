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

// Text emitters: SVG pictures of mosaics, DOT adjacency graphs and the
// mosaic tables as JSON or Markdown. Output bytes depend only on inputs.

#pragma once

#include <string>
#include <vector>

#include "farey/mosaics.hpp"

namespace farey {

struct RenderStyle {
  int width = 800;
  int height = 800;
  int margin = 40;
  // Tile fill colors; order n gets palette[n % size].
  std::vector<std::string> palette = {
      "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
      "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};
  bool labels = false;
  std::string background = "#ffffff";
};

// Decimal places of every coordinate written.
inline constexpr int kRenderDigits = 10;

const std::string& order_color(const RenderStyle& style, std::size_t order);

// Unit square with axes, then every tile as a filled path and every
// outline stroked. DomainError on an empty palette.
std::string render_mosaics(const std::vector<Mosaic>& mosaics,
                           const RenderStyle& style = {});
std::string render_mosaic(const Mosaic& m, const RenderStyle& style = {});

// Nodes labelled "2 2 3"; the root comes first, then nodes by order and
// k. Edges point from the lower order to the higher.
std::string render_tree(const AdjacencyTree& t,
                        const std::string& graph_name = "mosaic");

enum class TableFormat { kJson, kMarkdown };

// Columns Kernel | Name | No. of tiles | Orders | Vertices. Truncated rows
// show "∞(truncated at N)" tiles and orders "a-∞".
std::string emit_table(const std::vector<TableRow>& rows, TableFormat format);

}  // namespace farey
