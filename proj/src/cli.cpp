#include "steinhaus/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinhaus/catalog.hpp"
#include "steinhaus/chromatic.hpp"
#include "steinhaus/core.hpp"
#include "steinhaus/criteria.hpp"
#include "steinhaus/engine.hpp"
#include "steinhaus/plane.hpp"

namespace steinhaus {
namespace {

using json = nlohmann::ordered_json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return out;
}

json witness_json(const std::optional<PeriodicSet>& w) {
  if (!w) return nullptr;
  return json{{"period", w->period}, {"residues", w->residues}};
}

struct DecideOpts {
  std::vector<int> gaps;
  int diameter_cap = kDiameterCap;
};

int cmd_decide(const DecideOpts& o, std::ostream& out) {
  GapTuple t = canonicalize(GapTuple::create(o.gaps, o.diameter_cap));
  Classification c = decide(t);
  json j;
  j["status"] = to_string(c.status);
  j["period"] = c.minimal_period ? json(*c.minimal_period) : json(nullptr);
  j["residues"] = c.witness ? json(c.witness->residues) : json(nullptr);
  j["provenance"] = c.provenance;
  j["stats"] = {{"states", c.stats.valid_states}, {"nodes", c.stats.search_nodes}};
  out << j.dump() << '\n';
  return c.status == Status::Steinhaus ? 0 : 1;
}

struct ConstructOpts {
  std::vector<int> gaps;
  std::optional<long long> period;
  int diameter_cap = kDiameterCap;
};

int cmd_construct(const ConstructOpts& o, std::ostream& out) {
  GapTuple t = canonicalize(GapTuple::create(o.gaps, o.diameter_cap));
  auto witness = construct(t, o.period);
  if (!witness) {
    out << "none\n";
    return 1;
  }
  out << witness_json(witness).dump() << '\n';
  return 0;
}

struct EnumerateOpts {
  int arity = 0;
  int max_gap = 0;
  std::string out_path;
};

int cmd_enumerate(const EnumerateOpts& o, std::ostream& out) {
  auto records = enumerate_catalog(o.arity, o.max_gap);
  std::ofstream file;
  std::ostream* sink = &out;
  if (o.out_path != "-") {
    file.open(o.out_path);
    if (!file) throw std::invalid_argument("cannot write catalog file: " + o.out_path);
    sink = &file;
  }
  *sink << catalog_header() << '\n';
  for (const auto& r : records) *sink << to_csv(r) << '\n';
  return 0;
}

struct ChromaticOpts {
  std::string distances;
  int max_colors = 0;
  std::uint64_t state_cap = ChromaticLimits{}.state_cap;
};

int cmd_chromatic(const ChromaticOpts& o, std::ostream& out) {
  DistanceSet d = DistanceSet::create(parse_int_list(o.distances));
  ChromaticLimits limits{o.state_cap};
  for (int k = 1; k <= o.max_colors; ++k) {
    if (auto coloring = k_colorable(d, k, limits)) {
      json j;
      j["chi"] = k;
      j["period"] = coloring->period;
      j["colors"] = coloring->colors;
      out << j.dump() << '\n';
      return 0;
    }
  }
  out << "chi > " << o.max_colors << '\n';
  return 1;
}

struct PlaneOpts {
  std::vector<std::string> pattern;
  std::string points_path;
  std::vector<std::string> grid;
  std::vector<std::string> tipped;
  std::size_t copy_cap = kCopyCap;
};

PatternSpec plane_pattern(const std::vector<std::string>& spec) {
  if (spec.empty()) throw std::invalid_argument("missing pattern");
  const std::string& kind = spec[0];
  if (kind == "square") {
    if (spec.size() != 2) throw std::invalid_argument("pattern: square SIDE");
    return make_pattern_square(Rat::parse(spec[1]));
  }
  if (kind == "rect") {
    if (spec.size() != 3) throw std::invalid_argument("pattern: rect WIDTH HEIGHT_SQ");
    return make_pattern_rectangle(Rat::parse(spec[1]), Rat::parse(spec[2]));
  }
  if (kind == "collinear") {
    if (spec.size() != 2) throw std::invalid_argument("pattern: collinear G1,G2,...");
    return make_pattern_collinear(GapTuple::create(parse_int_list(spec[1])));
  }
  throw std::invalid_argument("unknown pattern kind '" + kind + "'");
}

int cmd_plane(const PlaneOpts& o, std::ostream& out) {
  PatternSpec pattern = plane_pattern(o.pattern);
  std::vector<RatPoint> points;
  if (!o.points_path.empty()) {
    auto pts = parse_points_file(o.points_path);
    points.insert(points.end(), pts.begin(), pts.end());
  }
  if (!o.grid.empty()) {
    if (o.grid.size() != 4) throw std::invalid_argument("--grid COLS ROWS SX SY");
    auto pts = gen_grid(std::stoi(o.grid[0]), std::stoi(o.grid[1]),
                        Rat::parse(o.grid[2]), Rat::parse(o.grid[3]));
    points.insert(points.end(), pts.begin(), pts.end());
  }
  if (!o.tipped.empty()) {
    if (o.tipped.size() != 5 && o.tipped.size() != 7)
      throw std::invalid_argument("--tipped COLS ROWS A B C [OX OY]");
    RatPoint origin{0, 0};
    if (o.tipped.size() == 7)
      origin = {Rat::parse(o.tipped[5]), Rat::parse(o.tipped[6])};
    auto pts = gen_tipped_lattice(std::stoi(o.tipped[0]), std::stoi(o.tipped[1]),
                                  std::stoi(o.tipped[2]), std::stoi(o.tipped[3]),
                                  std::stoi(o.tipped[4]), origin);
    points.insert(points.end(), pts.begin(), pts.end());
  }
  if (points.empty())
    throw std::invalid_argument("no point source: use --points, --grid or --tipped");
  points = dedup_points(std::move(points));

  WitnessResult r = check_witness(points, pattern, o.copy_cap);
  out << "copies " << r.copy_count << '\n';
  out << (r.sat ? "SAT" : "UNSAT") << " nodes=" << r.stats.nodes
      << " propagations=" << r.stats.propagations << '\n';
  if (r.sat)
    for (int idx : r.assignment) {
      const RatPoint& p = points[static_cast<std::size_t>(idx)];
      out << p.x.str() << ' ' << p.y.str() << '\n';
    }
  return r.sat ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact decision toolkit for Steinhaus and Jackson gap tuples"};
  app.require_subcommand(1);
  int code = 2;

  auto decide_opts = std::make_shared<DecideOpts>();
  auto* cmd_d = app.add_subcommand("decide", "classify a gap tuple");
  cmd_d->add_option("gaps", decide_opts->gaps, "positive integer gaps")->required();
  cmd_d->add_option("--unsafe-diameter", decide_opts->diameter_cap,
                    "raise the diameter cap (absolute limit 63)");
  cmd_d->callback([&, decide_opts] { code = cmd_decide(*decide_opts, out); });

  auto construct_opts = std::make_shared<ConstructOpts>();
  auto* cmd_c = app.add_subcommand("construct", "build a periodic witness");
  cmd_c->add_option("gaps", construct_opts->gaps, "positive integer gaps")->required();
  long long period_arg = 0;
  auto* period_opt = cmd_c->add_option("--period", period_arg, "exact witness period");
  cmd_c->add_option("--unsafe-diameter", construct_opts->diameter_cap,
                    "raise the diameter cap (absolute limit 63)");
  cmd_c->callback([&, construct_opts, period_opt] {
    if (period_opt->count()) construct_opts->period = period_arg;
    code = cmd_construct(*construct_opts, out);
  });

  auto enum_opts = std::make_shared<EnumerateOpts>();
  auto* cmd_e = app.add_subcommand("enumerate", "classify all canonical tuples into a catalog");
  cmd_e->add_option("--arity", enum_opts->arity, "number of gaps")->required();
  cmd_e->add_option("--max-gap", enum_opts->max_gap, "largest gap value")->required();
  cmd_e->add_option("--out", enum_opts->out_path, "catalog file path ('-' for stdout)")
      ->required();
  cmd_e->callback([&, enum_opts] { code = cmd_enumerate(*enum_opts, out); });

  auto chrom_opts = std::make_shared<ChromaticOpts>();
  auto* cmd_ch = app.add_subcommand("chromatic", "chromatic number of G(Z, D)");
  cmd_ch->add_option("--distances", chrom_opts->distances, "comma-separated distances")
      ->required();
  cmd_ch->add_option("--max-colors", chrom_opts->max_colors, "largest color count to try")
      ->required();
  cmd_ch->add_option("--unsafe-states", chrom_opts->state_cap,
                     "raise the k^max(D) state-space cap");
  cmd_ch->callback([&, chrom_opts] { code = cmd_chromatic(*chrom_opts, out); });

  auto plane_opts = std::make_shared<PlaneOpts>();
  auto* cmd_p = app.add_subcommand("plane", "finite-witness transversal check");
  cmd_p->add_option("--pattern", plane_opts->pattern,
                    "square SIDE | rect WIDTH HEIGHT_SQ | collinear GAPS")
      ->required()
      ->expected(-1);
  cmd_p->add_option("--points", plane_opts->points_path, "points file");
  cmd_p->add_option("--grid", plane_opts->grid, "COLS ROWS SX SY")->expected(-1);
  cmd_p->add_option("--tipped", plane_opts->tipped, "COLS ROWS A B C [OX OY]")->expected(-1);
  cmd_p->add_option("--unsafe-copies", plane_opts->copy_cap, "raise the copy cap");
  cmd_p->callback([&, plane_opts] { code = cmd_plane(*plane_opts, out); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}

}  // namespace steinhaus
