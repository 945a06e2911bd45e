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

#include "farey/render.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "farey/errors.hpp"
#include "farey/io.hpp"

namespace farey {

const std::string& order_color(const RenderStyle& style, std::size_t order) {
  if (style.palette.empty()) throw DomainError("empty palette");
  return style.palette[order % style.palette.size()];
}

namespace {

struct Viewport {
  Rational sx, sy, ox, oy;

  explicit Viewport(const RenderStyle& s)
      : sx(s.width - 2 * s.margin),
        sy(s.height - 2 * s.margin),
        ox(s.margin),
        oy(s.height - s.margin) {}

  std::string x(const Rational& v) const {
    return (ox + v * sx).to_decimal(kRenderDigits);
  }
  std::string y(const Rational& v) const {
    return (oy - v * sy).to_decimal(kRenderDigits);
  }
};

std::string path_data(const Viewport& vp, const std::vector<RatPoint>& loop) {
  std::string d;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    d += (i == 0 ? "M " : " L ") + vp.x(loop[i].x) + " " + vp.y(loop[i].y);
  }
  return d + " Z";
}

void write_axes(std::ostringstream& os, const RenderStyle& style,
                const Viewport& vp) {
  const Rational zero(0), one(1);
  os << "<g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
  os << "<line x1=\"" << vp.x(zero) << "\" y1=\"" << vp.y(zero) << "\" x2=\""
     << vp.x(one) << "\" y2=\"" << vp.y(zero) << "\"/>\n";
  os << "<line x1=\"" << vp.x(zero) << "\" y1=\"" << vp.y(zero) << "\" x2=\""
     << vp.x(zero) << "\" y2=\"" << vp.y(one) << "\"/>\n";
  os << "<rect x=\"" << vp.x(zero) << "\" y=\"" << vp.y(one) << "\" width=\""
     << vp.sx.to_decimal(kRenderDigits) << "\" height=\""
     << vp.sy.to_decimal(kRenderDigits)
     << "\" stroke-dasharray=\"4 4\" stroke=\"#999999\"/>\n";
  os << "</g>\n";
  os << "<g id=\"ticks\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<text x=\"" << vp.x(zero) << "\" y=\"" << (style.height - style.margin / 2)
     << "\">0</text>\n";
  os << "<text x=\"" << vp.x(one) << "\" y=\"" << (style.height - style.margin / 2)
     << "\">1</text>\n";
  os << "<text x=\"" << (style.margin / 4) << "\" y=\"" << vp.y(one)
     << "\">1</text>\n";
  os << "</g>\n";
}

RatPoint vertex_mean(const ConvexPolygon& p) {
  RatPoint s{0, 0};
  for (const auto& v : p.vertices()) s = s + v;
  const Rational n(static_cast<std::int64_t>(p.size()));
  return {s.x / n, s.y / n};
}

std::string k_words(const IndexTuple& k) { return k.to_string(" ", true); }

std::string escape_md(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string vertex_list(const std::vector<RatPoint>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += "; ";
    out += "(" + pts[i].x.to_string() + "," + pts[i].y.to_string() + ")";
  }
  return out;
}

}  // namespace

std::string render_mosaics(const std::vector<Mosaic>& mosaics,
                           const RenderStyle& style) {
  if (style.palette.empty()) throw DomainError("empty palette");
  const Viewport vp(style);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width
     << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width
     << " " << style.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"" << style.background
     << "\"/>\n";
  write_axes(os, style, vp);
  for (const auto& m : mosaics) {
    os << "<g class=\"mosaic\" data-name=\"" << m.name << "\" data-kernel=\""
       << m.kernel.get_str() << "\">\n";
    for (const auto& t : m.tiles) {
      os << "<path class=\"tile\" data-k=\"" << k_words(t.k)
         << "\" data-order=\"" << t.order() << "\" fill=\""
         << order_color(style, t.order())
         << "\" stroke=\"#333333\" stroke-width=\"0.5\" d=\""
         << path_data(vp, t.poly.vertices()) << "\"/>\n";
    }
    for (const auto& loop : m.outline.loops) {
      os << "<path class=\"outline\" fill=\"none\" stroke=\"#000000\" "
            "stroke-width=\"2\" d=\""
         << path_data(vp, loop) << "\"/>\n";
    }
    if (style.labels) {
      for (const auto& t : m.tiles) {
        const RatPoint c = vertex_mean(t.poly);
        os << "<text class=\"label\" font-family=\"sans-serif\" "
              "font-size=\"8\" text-anchor=\"middle\" x=\""
           << vp.x(c.x) << "\" y=\"" << vp.y(c.y) << "\">" << k_words(t.k)
           << "</text>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_mosaic(const Mosaic& m, const RenderStyle& style) {
  return render_mosaics({m}, style);
}

std::string render_tree(const AdjacencyTree& t, const std::string& graph_name) {
  std::vector<std::size_t> order(t.nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if ((a == t.root) != (b == t.root)) return a == t.root;
    const auto& ka = t.nodes[a];
    const auto& kb = t.nodes[b];
    if (ka.order() != kb.order()) return ka.order() < kb.order();
    return ka < kb;
  });
  std::vector<std::size_t> rank(t.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i : order) {
    os << "  n" << rank[i] << " [label=\"" << k_words(t.nodes[i]) << "\"];\n";
  }
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& [a, b] : t.edges) {
    std::size_t u = a, v = b;
    const auto oa = t.nodes[a].order(), ob = t.nodes[b].order();
    if (ob < oa || (ob == oa && rank[b] < rank[a])) std::swap(u, v);
    arcs.emplace_back(rank[u], rank[v]);
  }
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [u, v] : arcs) {
    os << "  n" << u << " -> n" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_table(const std::vector<TableRow>& rows, TableFormat format) {
  if (format == TableFormat::kJson) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = to_json(r);
      if (!r.empty() && r.truncated) {
        j["tiles_display"] =
            "∞(truncated at " + std::to_string(r.max_order) + ")";
      }
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "| Kernel | Name | No. of tiles | Orders | Vertices of the mosaic |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.kernel << " | ";
    if (r.empty()) {
      os << "- | - | - | - |\n";
      continue;
    }
    os << escape_md(r.name) << " | ";
    if (r.truncated) {
      os << "∞(truncated at " << r.max_order << ") | " << r.order_min << "-∞";
    } else {
      os << r.tiles << " | " << r.order_min << "-" << r.order_max;
    }
    os << " | " << vertex_list(r.vertices) << " |\n";
  }
  return os.str();
}

}  // namespace farey
