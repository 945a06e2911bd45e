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

// farey: command-line front end. Exit codes: 0 success, 2 invalid input
// or golden-data mismatch, 3 budget exceeded, 1 anything else.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "farey/continuants.hpp"
#include "farey/density.hpp"
#include "farey/engine.hpp"
#include "farey/errors.hpp"
#include "farey/io.hpp"
#include "farey/mosaics.hpp"
#include "farey/progression.hpp"
#include "farey/render.hpp"
#include "farey/tiles.hpp"

namespace {

using namespace farey;

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

struct Global {
  int max_order = 16;
  std::int64_t budget = kDefaultNodeBudget;
  std::uint64_t seed = 1;
  std::string out;
};

struct ClassArgs {
  std::int64_t c = 1;
  std::int64_t d = 5;
  ProgressionClass cls() const { return ProgressionClass(c, d); }
};

void add_class(CLI::App* cmd, ClassArgs& a) {
  cmd->add_option("--c", a.c, "residue c")->capture_default_str();
  cmd->add_option("--d", a.d, "modulus d")->capture_default_str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ParseError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  return IndexTuple::parse(text).entries();
}

// "1-9" or "3,9,15".
std::vector<std::int64_t> parse_kernels(const std::string& text) {
  const auto dash = text.find('-');
  if (dash != std::string::npos) {
    const auto lo = std::stoll(text.substr(0, dash));
    const auto hi = std::stoll(text.substr(dash + 1));
    if (lo < 1 || hi < lo) throw ParseError("bad kernel range " + text);
    std::vector<std::int64_t> out;
    for (auto k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  return parse_int_list(text);
}

Assembly assemble_kernel(const ProgressionClass& cls, std::int64_t kernel,
                         const Global& g) {
  EnumerateOptions eo;
  eo.max_order = g.max_order;
  eo.kernel = kernel;
  eo.budget = g.budget;
  return assemble(enumerate_tiles(cls, eo), BigInt(static_cast<long>(kernel)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Farey fractions in arithmetic progressions: index sequences, "
               "tiles, mosaics and densities"};
  app.set_config("--config", "", "TOML/INI file with default flag values");
  app.fallthrough();
  app.require_subcommand(1);

  Global g;
  app.add_option("--max-order", g.max_order, "largest order of k explored")
      ->capture_default_str();
  app.add_option("--budget", g.budget, "node budget of tile enumeration")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed of sampled diagnostics")
      ->capture_default_str();
  app.add_option("--out", g.out, "output file (default: stdout)");

  int status = 0;

  // list
  std::int64_t list_q = 10;
  ClassArgs list_cls;
  bool list_filtered = false;
  auto* list = app.add_subcommand("list", "fractions of F^Q, optionally filtered");
  list->add_option("--q", list_q, "order Q")->required();
  list->add_option("--c", list_cls.c, "residue c (with --d)");
  list->add_option("--d", list_cls.d, "modulus d")
      ->each([&](const std::string&) { list_filtered = true; });
  list->callback([&] {
    Output out(g.out);
    auto& os = out.stream();
    if (list_filtered) {
      for (const auto& f : farey_filtered(list_q, list_cls.cls())) {
        os << f.to_string() << "\n";
      }
    } else {
      for (const auto& f : farey_stream(list_q)) os << f.to_string() << "\n";
    }
  });

  // tuples
  std::int64_t tup_q = 25;
  int tup_s = 1;
  ClassArgs tup_cls;
  auto* tuples = app.add_subcommand("tuples", "consecutive (s+1)-tuples of F^Q(c,d) denominators");
  tuples->add_option("--q", tup_q, "order Q")->required();
  tuples->add_option("--s", tup_s, "tuple length minus one")->capture_default_str();
  add_class(tuples, tup_cls);
  tuples->callback([&] {
    if (tup_s < 1) throw DomainError("--s must be >= 1");
    Output out(g.out);
    for (const auto& t : consecutive_tuples(tup_q, tup_cls.cls(), tup_s)) {
      out.stream() << join(t.denominators) << " r=" << t.type.to_string()
                   << "\n";
    }
  });

  // kseq
  std::int64_t ks_q = 25;
  std::string ks_pair;
  int ks_n = 1;
  auto* kseq = app.add_subcommand("kseq", "index sequence and successors of a chain in F^Q");
  kseq->add_option("--q", ks_q, "order Q")->required();
  kseq->add_option("--pair", ks_pair, "generators q',q''")->required();
  kseq->add_option("--n", ks_n, "number of indices")->required();
  kseq->callback([&] {
    const auto p = parse_int_list(ks_pair);
    if (p.size() != 2) throw ParseError("--pair needs two denominators");
    const auto [k, chain] = index_sequence_int(p[0], p[1], ks_q, ks_n);
    Output out(g.out);
    out.stream() << "k = " << join(k.entries()) << "\n"
                 << "successors = " << join(chain.successors) << "\n";
  });

  // mosaic
  auto* mosaic = app.add_subcommand("mosaic", "tiles and mosaics");
  mosaic->require_subcommand(1);

  ClassArgs me_cls;
  std::int64_t me_kernel = 0;
  std::int64_t me_max_entry = 0;
  auto* menum = mosaic->add_subcommand("enumerate", "admissible tiles as JSON");
  add_class(menum, me_cls);
  menum->add_option("--kernel", me_kernel, "keep only this kernel");
  menum->add_option("--max-entry", me_max_entry, "cap on index entries (no kernel filter)");
  menum->callback([&] {
    EnumerateOptions eo;
    eo.max_order = g.max_order;
    eo.budget = g.budget;
    if (me_kernel > 0) eo.kernel = me_kernel;
    if (me_max_entry > 0) eo.max_entry = me_max_entry;
    EnumerateStats stats;
    const auto tiles = enumerate_tiles(me_cls.cls(), eo, &stats);
    Json arr = Json::array();
    for (const auto& t : tiles) arr.push_back(to_json(t));
    Output out(g.out);
    out.stream() << arr.dump(1) << "\n";
    std::cerr << tiles.size() << " tiles, " << stats.nodes << " nodes\n";
  });

  ClassArgs mt_cls;
  std::string mt_kernels = "1-9";
  std::string mt_format = "md";
  auto* mtable = mosaic->add_subcommand("table", "mosaic table rows");
  add_class(mtable, mt_cls);
  mtable->add_option("--kernels", mt_kernels, "range a-b or list")->capture_default_str();
  mtable->add_option("--format", mt_format, "md or json")
      ->check(CLI::IsMember({"md", "json"}))
      ->capture_default_str();
  mtable->callback([&] {
    std::vector<TableRow> rows;
    for (auto kernel : parse_kernels(mt_kernels)) {
      try {
        const auto a = assemble_kernel(mt_cls.cls(), kernel, g);
        const auto part = table_rows(kernel, a, g.max_order);
        rows.insert(rows.end(), part.begin(), part.end());
      } catch (const AmbiguityError& e) {
        std::cerr << "kernel " << kernel << ": " << e.what() << "\n";
        status = kExitValidation;
      }
    }
    Output out(g.out);
    out.stream() << emit_table(rows, mt_format == "json" ? TableFormat::kJson
                                                         : TableFormat::kMarkdown);
  });

  ClassArgs mr_cls;
  std::int64_t mr_kernel = 1;
  std::string mr_name;
  bool mr_labels = false;
  int mr_size = 800;
  auto* mrender = mosaic->add_subcommand("render", "SVG of the mosaics of one kernel");
  add_class(mrender, mr_cls);
  mrender->add_option("--kernel", mr_kernel, "kernel")->required();
  mrender->add_option("--name", mr_name, "only the mosaic with this name");
  mrender->add_flag("--labels", mr_labels, "write k at tile centres");
  mrender->add_option("--size", mr_size, "width and height in pixels")->capture_default_str();
  mrender->callback([&] {
    const auto a = assemble_kernel(mr_cls.cls(), mr_kernel, g);
    std::vector<Mosaic> chosen;
    for (const auto& m : a.mosaics) {
      if (mr_name.empty() || m.name == mr_name) chosen.push_back(m);
    }
    if (!mr_name.empty() && chosen.empty()) {
      throw DomainError("no mosaic named " + mr_name);
    }
    RenderStyle style;
    style.width = style.height = mr_size;
    style.labels = mr_labels;
    Output out(g.out);
    out.stream() << render_mosaics(chosen, style);
  });

  ClassArgs mtr_cls;
  std::int64_t mtr_kernel = 7;
  std::string mtr_root;
  auto* mtree = mosaic->add_subcommand("tree", "DOT adjacency graph of one mosaic");
  add_class(mtree, mtr_cls);
  mtree->add_option("--kernel", mtr_kernel, "kernel")->required();
  mtree->add_option("--root", mtr_root, "root k of the mosaic, e.g. 2,2,3")->required();
  mtree->callback([&] {
    const auto root = IndexTuple::parse(mtr_root);
    const auto a = assemble_kernel(mtr_cls.cls(), mtr_kernel, g);
    for (const auto& m : a.mosaics) {
      if (m.root_tile().k == root) {
        Output out(g.out);
        out.stream() << render_tree(adjacency_tree(m), m.name);
        return;
      }
    }
    throw DomainError("no mosaic with root [" + root.to_string() + "]");
  });

  // density
  auto* density = app.add_subcommand("density", "limit density");
  density->require_subcommand(1);

  ClassArgs de_cls;
  std::string de_x, de_y;
  std::int64_t de_entry = kDefaultDensityEntryCap;
  bool de_printed = false;
  auto* deval = density->add_subcommand("eval", "g_1 at a point");
  add_class(deval, de_cls);
  deval->add_option("--x", de_x, "x as p/q")->required();
  deval->add_option("--y", de_y, "y as p/q")->required();
  deval->add_option("--max-entry", de_entry, "cap on index entries")->capture_default_str();
  deval->add_flag("--printed-prefactor", de_printed, "use 2/phi(d)");
  deval->callback([&] {
    DensityQuery q;
    q.point = {Rational::parse(de_x), Rational::parse(de_y)};
    q.cls = de_cls.cls();
    q.max_order = g.max_order;
    q.max_entry = de_entry;
    q.budget = g.budget;
    if (de_printed) q.convention = PrefactorConvention::kPrinted;
    const auto v = g1_eval(q);
    Json j;
    j["x"] = to_json(q.point.x);
    j["y"] = to_json(q.point.y);
    j["value"] = v.value;
    j["classification"] = to_string(v.classification);
    j["tiles"] = v.tiles;
    j["prefactor"] = to_json(prefactor(q.cls, q.convention));
    Output out(g.out);
    out.stream() << j.dump(2) << "\n";
  });

  ClassArgs dh_cls;
  std::int64_t dh_q = 1000;
  int dh_bins = 40;
  auto* demp = density->add_subcommand("empirical", "histogram of scaled consecutive pairs");
  add_class(demp, dh_cls);
  demp->add_option("--q", dh_q, "order Q")->required();
  demp->add_option("--bins", dh_bins, "bins per side")->capture_default_str();
  demp->callback([&] {
    const auto h = empirical_histogram(dh_q, dh_cls.cls(), dh_bins);
    Output out(g.out);
    out.stream() << to_json(h).dump() << "\n";
  });

  std::string dc_hist;
  std::int64_t dc_entry = kDefaultDensityEntryCap;
  bool dc_printed = false;
  auto* dcmp = density->add_subcommand("compare", "histogram against exact bin masses");
  dcmp->add_option("--hist", dc_hist, "histogram JSON")->required();
  dcmp->add_option("--max-entry", dc_entry, "cap on index entries")->capture_default_str();
  dcmp->add_flag("--printed-prefactor", dc_printed, "use 2/phi(d)");
  dcmp->callback([&] {
    const auto h = histogram_from_json(parse_json(read_file(dc_hist)));
    CompareOptions o;
    o.max_order = g.max_order;
    o.max_entry = dc_entry;
    o.budget = g.budget;
    if (dc_printed) o.convention = PrefactorConvention::kPrinted;
    const auto r = compare(h, o);
    Output out(g.out);
    out.stream() << to_json(r).dump(2) << "\n";
  });

  ClassArgs ds_cls;
  std::int64_t ds_q = 1000;
  std::int64_t ds_entry = kDefaultDensityEntryCap;
  auto* dsup = density->add_subcommand("support", "every scaled pair inside its tile");
  add_class(dsup, ds_cls);
  dsup->add_option("--q", ds_q, "order Q")->required();
  dsup->add_option("--max-entry", ds_entry, "cap on index entries")->capture_default_str();
  dsup->callback([&] {
    SupportOptions o;
    o.max_order = g.max_order;
    o.max_entry = ds_entry;
    o.budget = g.budget;
    const auto r = support_membership(ds_q, ds_cls.cls(), o);
    Output out(g.out);
    out.stream() << to_json(r).dump(2) << "\n";
    if (!r.violations.empty()) status = kExitValidation;
  });

  // verify
  auto* verify = app.add_subcommand("verify", "checks against counts and golden data");
  verify->require_subcommand(1);

  ClassArgs vc_cls;
  std::int64_t vc_q = 1000;
  double vc_tol = 0.05;
  auto* vcard = verify->add_subcommand("cardinality", "#F^Q(c,d) against its main term");
  add_class(vcard, vc_cls);
  vcard->add_option("--q", vc_q, "order Q")->required();
  vcard->add_option("--tolerance", vc_tol, "largest relative error")->capture_default_str();
  vcard->callback([&] {
    const auto cls = vc_cls.cls();
    const auto exact = filtered_count(vc_q, cls);
    const double predicted = predicted_cardinality(vc_q, cls).value();
    const double rel = std::abs(static_cast<double>(exact) - predicted) / predicted;
    Output out(g.out);
    out.stream() << "exact " << exact << "\nmain term " << predicted
                 << "\nrelative error " << rel << "\n";
    if (rel > vc_tol) status = kExitValidation;
  });

  std::string vl_poly;
  std::int64_t vl_scale = 100, vl_a = 0, vl_b = 0, vl_d = 1;
  int vl_samples = 0;
  auto* vlat = verify->add_subcommand("lattice", "coprime lattice count against its main term");
  vlat->add_option("--poly", vl_poly, "polygon JSON (vertex list)");
  vlat->add_option("--scale", vl_scale, "dilation factor")->capture_default_str();
  vlat->add_option("--a", vl_a, "residue of m")->capture_default_str();
  vlat->add_option("--b", vl_b, "residue of n")->capture_default_str();
  vlat->add_option("--d", vl_d, "modulus")->capture_default_str();
  vlat->add_option("--samples", vl_samples, "random polygons instead of --poly (uses --seed)");
  vlat->callback([&] {
    std::vector<ConvexPolygon> polys;
    if (!vl_poly.empty()) {
      polys.push_back(polygon_from_json(parse_json(read_file(vl_poly))));
    } else {
      if (vl_samples < 1) throw ParseError("give --poly or --samples");
      std::mt19937_64 rng(g.seed);
      std::uniform_int_distribution<std::int64_t> coord(0, 1000);
      while (static_cast<int>(polys.size()) < vl_samples) {
        std::vector<RatPoint> pts;
        for (int i = 0; i < 6; ++i) {
          pts.push_back({Rational(coord(rng), 1000), Rational(coord(rng), 1000)});
        }
        auto h = convex_hull(std::move(pts));
        if (!h.empty()) polys.push_back(std::move(h));
      }
    }
    Output out(g.out);
    for (const auto& p : polys) {
      const auto exact = lattice_count_exact(p, vl_scale, vl_a, vl_b, vl_d);
      const double main = lattice_main_term(area(p), vl_scale, vl_d);
      out.stream() << "exact " << exact << " main " << main << " diff "
                   << (static_cast<double>(exact) - main) << "\n";
    }
  });

  std::string vt_golden;
  std::string vt_kernels;
  auto* vtab = verify->add_subcommand("tables", "regenerate a mosaic table and compare with golden rows");
  vtab->add_option("--golden", vt_golden, "golden table JSON")->required();
  vtab->add_option("--kernels", vt_kernels, "kernels to check (default: all in the file)");
  vtab->callback([&] {
    const Json golden = parse_json(read_file(vt_golden));
    const ProgressionClass cls(golden.at("class").at("c").get<std::int64_t>(),
                               golden.at("class").at("d").get<std::int64_t>());
    std::vector<std::int64_t> kernels;
    if (!vt_kernels.empty()) {
      kernels = parse_kernels(vt_kernels);
    } else {
      for (const auto& r : golden.at("rows")) {
        const auto k = r.at("kernel").get<std::int64_t>();
        if (kernels.empty() || kernels.back() != k) kernels.push_back(k);
      }
    }
    Output out(g.out);
    bool ok = true;
    std::vector<TableRow> rows;
    for (auto kernel : kernels) {
      try {
        const auto a = assemble_kernel(cls, kernel, g);
        const auto part = table_rows(kernel, a, g.max_order);
        rows.insert(rows.end(), part.begin(), part.end());
      } catch (const AmbiguityError& e) {
        out.stream() << "FAIL kernel " << kernel << ": " << e.what() << "\n";
        ok = false;
      }
    }
    for (const auto& c : check_table(golden, rows)) {
      out.stream() << (c.passed ? "PASS " : "FAIL ") << c.kernel << " "
                   << c.name << ": " << c.detail << "\n";
      ok = ok && c.passed;
    }
    if (!ok) status = kExitValidation;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const SizeError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const RangeError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
