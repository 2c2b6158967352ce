#include "cli.hpp"

#include "mpld/errors.hpp"
#include "mpld/generate.hpp"
#include "mpld/graph_io.hpp"
#include "mpld/pipeline.hpp"
#include "mpld/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

namespace mpld::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct InputFlags {
  std::string layout_path;
  std::string graph_path;
  int masks = 3;
  double min_cs = 120.0;
  std::string alpha = "0.1";
  std::uint64_t seed = 0;
  int pop_size = 8;
  int max_iter = 500;
  double inherit_rate = 0.5;
  double refine_rate = 0.25;
  std::string solver = "deappm";
  std::uint64_t node_limit = 50'000'000;
};

struct Problem {
  std::optional<Layout> layout;
  DecompositionGraph graph;
};

void add_input_flags(CLI::App& cmd, InputFlags& f) {
  auto* layout = cmd.add_option("--layout", f.layout_path, "Layout JSON file");
  auto* graph = cmd.add_option("--graph", f.graph_path, "Decomposition graph JSON file");
  layout->excludes(graph);
  graph->excludes(layout);
  cmd.add_option("--masks", f.masks, "Number of masks k")->capture_default_str();
  cmd.add_option("--min-cs", f.min_cs, "Minimum coloring spacing in nm")->capture_default_str();
  cmd.add_option("--alpha", f.alpha, "Stitch weight as a decimal")->capture_default_str();
  cmd.add_option("--seed", f.seed, "Random seed")->capture_default_str();
  cmd.add_option("--pop-size", f.pop_size, "Population size")->capture_default_str();
  cmd.add_option("--max-iter", f.max_iter, "Outer iteration cap")->capture_default_str();
  cmd.add_option("--inherit-rate", f.inherit_rate, "Probability of inheriting a parent color when sampling")
      ->capture_default_str();
  cmd.add_option("--refine-rate", f.refine_rate, "Distribution learning rate")->capture_default_str();
  cmd.add_option("--solver", f.solver, "deappm or exact")
      ->check(CLI::IsMember({"deappm", "exact"}))
      ->capture_default_str();
  cmd.add_option("--node-limit", f.node_limit, "Search-node cap for the exact solver")->capture_default_str();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
  if (!out) throw ParseError("failed writing '" + path + "'");
}

Problem load_problem(const InputFlags& f) {
  if (f.layout_path.empty() == f.graph_path.empty()) {
    throw ParseError("exactly one of --layout or --graph is required");
  }
  Problem p;
  if (!f.graph_path.empty()) {
    auto in = open_input(f.graph_path);
    p.graph = parse_graph(in);
    return p;
  }
  if (!(f.min_cs > 0.0)) throw ParseError("--min-cs must be positive");
  auto in = open_input(f.layout_path);
  p.layout = parse_layout(in);
  p.graph = insert_stitch_candidates(*p.layout, build_layout_graph(*p.layout, f.min_cs));
  return p;
}

PipelineOptions make_options(const InputFlags& f, std::uint64_t seed) {
  PipelineOptions o;
  o.solver.k = f.masks;
  o.solver.alpha = StitchWeight::parse(f.alpha);
  o.solver.population = f.pop_size;
  o.solver.max_outer_iters = f.max_iter;
  o.solver.inherit_rate = f.inherit_rate;
  o.solver.refine_rate = f.refine_rate;
  o.solver.seed = seed;
  o.kind = f.solver == "exact" ? SolverKind::Exact : SolverKind::DeaPpm;
  o.exact_node_limit = f.node_limit;
  // Bad knobs are user input here, not a programming error.
  try {
    o.solver.validate();
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
  return o;
}

int run_decompose(const InputFlags& f, const std::string& svg_path, const std::string& emit_path, std::ostream& out) {
  const Problem p = load_problem(f);
  if (!svg_path.empty() && !p.layout) throw ParseError("--svg needs --layout input");
  const auto options = make_options(f, f.seed);
  if (!emit_path.empty()) write_file(emit_path, graph_to_json(p.graph) + "\n");

  const auto result = decompose(p.graph, options);
  const auto& s = result.solution;
  bool proved = true;
  for (const auto& c : result.components) proved = proved && c.proved_optimal;

  ordered_json report;
  report["solver"] = f.solver;
  report["masks"] = f.masks;
  report["alpha"] = options.solver.alpha.to_string();
  report["seed"] = f.seed;
  if (p.layout) {
    report["features"] = p.layout->features.size();
    report["min_cs"] = f.min_cs;
  }
  report["vertices"] = p.graph.size();
  report["conflict_edges"] = p.graph.conflict_edges().size();
  report["stitch_edges"] = p.graph.stitch_edges().size();
  report["components"] = result.simplified.components.size();
  report["hidden"] = result.simplified.stack.size();
  if (options.kind == SolverKind::Exact) report["proved_optimal"] = proved;
  report["st"] = s.stitches;
  report["cn"] = s.conflicts;
  report["cost"] = options.solver.alpha.to_double(s.conflicts, s.stitches);
  report["time_s"] = result.solve_seconds;
  report["colors"] = s.colors;
  out << report.dump() << '\n';

  if (!svg_path.empty()) write_file(svg_path, render_svg(*p.layout, p.graph, s.colors, f.masks));
  return kExitOk;
}

struct RunRecord {
  std::int64_t st = 0;
  std::int64_t cn = 0;
  std::int64_t scaled = 0;
  double cost = 0.0;
  double time_s = 0.0;
};

std::pair<double, double> mean_and_sample_std(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

int run_benchmark(const InputFlags& f, int runs, const std::string& format, std::ostream& out) {
  if (runs < 1) throw ParseError("--runs must be at least 1");
  const Problem p = load_problem(f);
  const auto base = make_options(f, f.seed);

  std::vector<RunRecord> records;
  for (int r = 0; r < runs; ++r) {
    auto options = base;
    options.solver.seed = f.seed + static_cast<std::uint64_t>(r);
    const auto result = decompose(p.graph, options);
    const auto& s = result.solution;
    records.push_back({s.stitches, s.conflicts, s.scaled_cost, base.solver.alpha.to_double(s.conflicts, s.stitches),
                       result.solve_seconds});
  }

  // Cost statistics from exact scaled integers so constant samples give std 0 exactly.
  const double den = static_cast<double>(base.solver.alpha.denominator());
  std::vector<double> scaled, times, st, cn;
  for (const auto& rec : records) {
    scaled.push_back(static_cast<double>(rec.scaled));
    times.push_back(rec.time_s);
    st.push_back(static_cast<double>(rec.st));
    cn.push_back(static_cast<double>(rec.cn));
  }
  const auto [mean_scaled, std_scaled] = mean_and_sample_std(scaled);
  const auto [mean_time, std_time] = mean_and_sample_std(times);
  const double mean_st = mean_and_sample_std(st).first;
  const double mean_cn = mean_and_sample_std(cn).first;

  if (format == "table") {
    out << std::left << std::setw(6) << "run" << std::setw(8) << "st#" << std::setw(8) << "cn#" << std::setw(12)
        << "cost" << "time(s)\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      out << std::setw(6) << i << std::setw(8) << rec.st << std::setw(8) << rec.cn << std::setw(12)
          << base.solver.alpha.format(rec.cn, rec.st) << std::fixed << std::setprecision(3) << rec.time_s
          << std::defaultfloat << '\n';
    }
    out << "mean  " << std::setw(8) << mean_st << std::setw(8) << mean_cn << std::setw(12) << mean_scaled / den
        << mean_time << '\n';
    out << "std   " << std::setw(8) << "" << std::setw(8) << "" << std::setw(12) << std_scaled / den << std_time
        << '\n';
    return kExitOk;
  }

  ordered_json report;
  report["solver"] = f.solver;
  report["masks"] = f.masks;
  report["alpha"] = base.solver.alpha.to_string();
  report["vertices"] = p.graph.size();
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    ordered_json row;
    row["run"] = i;
    row["seed"] = f.seed + i;
    row["st"] = records[i].st;
    row["cn"] = records[i].cn;
    row["cost"] = records[i].cost;
    row["time_s"] = records[i].time_s;
    rows.push_back(std::move(row));
  }
  report["runs"] = std::move(rows);
  report["mean_st"] = mean_st;
  report["mean_cn"] = mean_cn;
  report["mean_cost"] = mean_scaled / den;
  report["std_cost"] = std_scaled / den;
  report["mean_time_s"] = mean_time;
  report["std_time_s"] = std_time;
  out << report.dump() << '\n';
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple-patterning layout decomposition", "mpld"};
  app.require_subcommand(1);

  InputFlags decompose_flags;
  std::string svg_path;
  std::string emit_path;
  auto* decompose_cmd = app.add_subcommand("decompose", "Assign masks to a layout or decomposition graph");
  add_input_flags(*decompose_cmd, decompose_flags);
  decompose_cmd->add_option("--svg", svg_path, "Write an SVG rendering (layout input only)");
  decompose_cmd->add_option("--emit-graph", emit_path, "Write the decomposition graph JSON");

  InputFlags bench_flags;
  int runs = 10;
  std::string format = "json";
  auto* bench_cmd = app.add_subcommand("benchmark", "Repeat decomposition with seeds seed..seed+runs-1");
  add_input_flags(*bench_cmd, bench_flags);
  bench_cmd->add_option("--runs", runs, "Independent runs")->capture_default_str();
  bench_cmd->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string mode;
  GraphParams graph_params;
  LayoutParams layout_params;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Emit a random layout or decomposition graph");
  gen_cmd->add_option("--mode", mode, "layout or graph")->required()->check(CLI::IsMember({"layout", "graph"}));
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--n", graph_params.vertices, "graph: vertex count")->capture_default_str();
  gen_cmd->add_option("--ce", graph_params.conflict_edges, "graph: conflict edges")->capture_default_str();
  gen_cmd->add_option("--se", graph_params.stitch_edges, "graph: stitch edges")->capture_default_str();
  gen_cmd->add_option("--rects", layout_params.rects, "layout: wire count")->capture_default_str();
  gen_cmd->add_option("--track-pitch", layout_params.track_pitch, "layout: track pitch")->capture_default_str();
  gen_cmd->add_option("--wire-width", layout_params.wire_width, "layout: wire width")->capture_default_str();
  gen_cmd->add_option("--min-len", layout_params.min_length, "layout: shortest wire")->capture_default_str();
  gen_cmd->add_option("--max-len", layout_params.max_length, "layout: longest wire")->capture_default_str();
  gen_cmd->add_option("--min-gap", layout_params.min_gap, "layout: smallest gap on a track")->capture_default_str();
  gen_cmd->add_option("--max-gap", layout_params.max_gap, "layout: largest gap on a track")->capture_default_str();
  gen_cmd->add_option("--row-length", layout_params.row_length, "layout: track length")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (decompose_cmd->parsed()) return run_decompose(decompose_flags, svg_path, emit_path, out);
    if (bench_cmd->parsed()) return run_benchmark(bench_flags, runs, format, out);
    if (mode == "graph") {
      graph_params.seed = gen_seed;
      out << graph_to_json(random_graph(graph_params)) << '\n';
    } else {
      layout_params.seed = gen_seed;
      out << layout_to_json(random_layout(layout_params)) << '\n';
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitContract;
  }
}

} // namespace mpld::cli
