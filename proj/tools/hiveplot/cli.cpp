#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "hive/crossings.hpp"
#include "hive/pipeline.hpp"
#include "hive/render.hpp"
#include "hive/synth.hpp"
#include "hive/validate.hpp"

namespace hiveplot {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_pipeline_options(CLI::App& sub, RunConfig& c, std::optional<std::size_t>& k) {
  sub.add_option("-k", k, "Number of axes (greedy modularity); Louvain decides when omitted")
      ->check(CLI::Validator(
          [](std::string& value) {
            return std::stoull(value) >= 2 ? std::string{} : std::string("must be at least 2");
          },
          "UINT>=2"));
  sub.add_option("-g,--gaps", c.gaps, "Gaps per axis")->check(CLI::PositiveNumber)->capture_default_str();
  sub.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub.add_option("--max-iter", c.max_iter, "Inter-axis sweep cycles")->capture_default_str();
  sub.add_option("--max-iter-intra", c.max_iter_intra, "Intra-axis sweep rounds")->capture_default_str();
  sub.add_option("--brute-force-max", c.brute_force_threshold,
                 "Largest k ordered by exhaustive search")
      ->capture_default_str();
  sub.add_option("--anneal-t0", c.anneal.initial_temperature,
                 "Initial annealing temperature (default max weight * k)")
      ->check(CLI::PositiveNumber);
  sub.add_option("--anneal-cooling", c.anneal.cooling, "Geometric cooling factor")
      ->check(CLI::Range(1e-9, 1.0 - 1e-12))
      ->capture_default_str();
  sub.add_option("--anneal-tmin", c.anneal.final_temperature, "Final annealing temperature")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--anneal-restarts", c.anneal.restarts, "Annealing restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_artifact(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
}

std::set<hive::AxisId> expanded_axes(const std::vector<std::string>& requested, std::size_t k) {
  std::set<hive::AxisId> axes;
  for (const auto& item : requested) {
    if (item == "all") {
      for (hive::AxisId a = 0; a < k; ++a) axes.insert(a);
      continue;
    }
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || id >= k) {
      throw UsageError("--expand: '" + item + "' is not an axis id in [0, " + std::to_string(k) + ")");
    }
    axes.insert(static_cast<hive::AxisId>(id));
  }
  return axes;
}

std::string fixed(double value, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

int run_layout(const RunConfig& c, std::ostream& out, std::ostream& err) {
  hive::BuiltGraph built;
  try {
    const auto format = c.format.value_or(hive::guess_format(c.input));
    built = hive::load_graph(c.input, format);
  } catch (const hive::HiveError& e) {
    throw InputError(e.what());
  }
  if (built.graph.vertex_count() == 0) throw InputError("'" + c.input + "' has no vertices");
  if (c.k && *c.k > built.graph.vertex_count()) {
    throw UsageError("-k " + std::to_string(*c.k) + " exceeds the vertex count " +
                     std::to_string(built.graph.vertex_count()));
  }

  hive::PipelineOptions options;
  options.k = c.k;
  options.gaps = c.gaps;
  options.seed = c.seed;
  options.phase1_iterations = c.max_iter;
  options.phase2_iterations = c.max_iter_intra;
  options.brute_force_threshold = c.brute_force_threshold;
  options.anneal = c.anneal;
  const auto result = hive::run_layout_pipeline(built.graph, built.partition, options);
  const auto& layout = result.minimized.layout;

  if (auto violations = hive::validate_layout(layout, built.graph); !violations.empty()) {
    for (const auto& v : violations) err << "hiveplot: invalid layout: " << v.code << ": " << v.message << '\n';
    return kExitValidation;
  }

  hive::RenderStyle style;
  style.expanded_axes = expanded_axes(c.expand, layout.axis_count());
  style.symmetric_intra = c.symmetric_intra;
  style.scale_by_degree = c.scale_degree;
  style.labels = c.labels;
  const auto geometry = hive::place_labels(hive::compute_geometry(layout, built.graph, style), built.graph, style);

  const bool json_to_stdout = c.svg_path.empty() && c.json_path.empty();
  if (!c.svg_path.empty()) write_artifact(c.svg_path, hive::render_svg(geometry, style), out);
  if (!c.json_path.empty() || json_to_stdout) {
    const auto json = hive::export_layout_json(layout, built.graph, geometry,
                                               hive::LayoutMeta{c.seed, result.minimized.report});
    write_artifact(json_to_stdout ? "-" : c.json_path, json, out);
  }

  if (built.stats.self_loops_dropped + built.stats.duplicate_edges_dropped > 0) {
    err << "hiveplot: dropped " << built.stats.self_loops_dropped << " self-loops and "
        << built.stats.duplicate_edges_dropped << " duplicate edges\n";
  }
  const auto& cls = result.classes;
  err << built.graph.vertex_count() << " vertices, " << built.graph.edge_count() << " edges, k="
      << result.partition.group_count() << " (" << hive::partition_source_name(result.partition_source)
      << "), g=" << c.gaps << ", intra=" << cls.intra << " proper=" << cls.proper
      << " long=" << cls.long_edges << ", crossings inter=" << result.minimized.report.inter_axis
      << " intra=" << result.minimized.report.intra_axis << ", "
      << fixed(result.elapsed_seconds, 4) << " s\n";
  return kExitOk;
}

int run_validate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto text = read_file(c.input);
  std::optional<hive::LoadedLayout> loaded;
  try {
    loaded.emplace(hive::load_layout_json(text));
  } catch (const hive::HiveError& e) {
    err << "hiveplot: " << e.what() << '\n';
    return kExitValidation;
  }
  auto violations = hive::validate_layout(loaded->layout, loaded->graph);
  if (violations.empty()) {
    const auto recount = hive::count_crossings(loaded->layout, loaded->graph);
    if (recount != loaded->meta.crossings) {
      violations.push_back({"crossing count",
                            "meta reports inter=" + std::to_string(loaded->meta.crossings.inter_axis) +
                                " intra=" + std::to_string(loaded->meta.crossings.intra_axis) +
                                ", layout has inter=" + std::to_string(recount.inter_axis) +
                                " intra=" + std::to_string(recount.intra_axis)});
    }
  }
  if (!violations.empty()) {
    for (const auto& v : violations) err << "hiveplot: " << v.code << ": " << v.message << '\n';
    return kExitValidation;
  }
  out << "ok\n";
  return kExitOk;
}

int run_bench(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto& b = c.bench;
  hive::SynthConfig config;
  config.n_min = b.n_min;
  config.n_max = b.n_max;
  config.n_step = b.n_step;
  config.partitions = b.partitions;
  config.graphs_per_step = b.replicates;
  config.gap_values = b.gaps;
  config.seed = c.seed;
  config.phase1_iterations = c.max_iter;
  config.phase2_iterations = c.max_iter_intra;
  config.threads = b.threads;
  for (auto n : config.n_values()) {
    if (n % config.partitions != 0) {
      throw UsageError("n = " + std::to_string(n) + " is not divisible by " +
                       std::to_string(config.partitions) + " partitions");
    }
  }
  const auto records = hive::run_gap_experiment(config);
  std::ostringstream csv;
  hive::write_experiment_csv(csv, records);
  write_artifact(b.csv.empty() ? "-" : b.csv, csv.str(), out);

  struct Mean {
    double inter = 0, intra = 0, time = 0;
    std::size_t count = 0;
  };
  std::map<std::pair<std::size_t, std::size_t>, Mean> means;
  for (const auto& r : records) {
    auto& m = means[{r.n, r.g}];
    m.inter += static_cast<double>(r.inter_axis_crossings);
    m.intra += static_cast<double>(r.intra_axis_crossings);
    m.time += r.wall_time_seconds;
    ++m.count;
  }
  for (const auto& [key, m] : means) {
    const double count = static_cast<double>(m.count);
    err << "n=" << key.first << " g=" << key.second << " mean inter=" << fixed(m.inter / count, 1)
        << " intra=" << fixed(m.intra / count, 1) << " time=" << fixed(m.time / count, 4) << " s\n";
  }
  return kExitOk;
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::optional<std::size_t> layout_k;
  std::string format;
  std::string labels = "on";

  CLI::App app{"Hive plot layout engine"};
  app.name("hiveplot");
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "TOML/INI file with option defaults")->envname(kConfigEnv);

  auto* layout = app.add_subcommand("layout", "Compute a hive plot layout; writes SVG and/or layout JSON");
  layout->add_option("-i,--input", c.input, "Graph file (edge list or JSON)")->required();
  layout->add_option("--format", format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"edgelist", "json"}));
  add_pipeline_options(*layout, c, layout_k);
  layout->add_option("-o,--svg", c.svg_path, "SVG output path ('-' for stdout)");
  layout->add_option("--json", c.json_path,
                     "Layout JSON output path ('-' for stdout); JSON goes to stdout when no output is given");
  layout->add_option("--expand", c.expand, "Axis ids to draw expanded, or 'all'")->delimiter(',');
  layout->add_flag("--symmetric-intra", c.symmetric_intra, "Mirror intra-axis edges on expanded axes");
  layout->add_flag("--scale-degree", c.scale_degree, "Scale vertex marks by degree");
  layout->add_option("--labels", labels, "Vertex labels")->check(CLI::IsMember({"on", "off"}))->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Run the gap-count experiment on random partition graphs; writes CSV");
  bench->add_option("--n-min", c.bench.n_min, "Smallest vertex count")->capture_default_str();
  bench->add_option("--n-max", c.bench.n_max, "Largest vertex count")->capture_default_str();
  bench->add_option("--n-step", c.bench.n_step, "Vertex count step")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--partitions", c.bench.partitions, "Groups (axes) per graph")
      ->check(CLI::Range(std::size_t{2}, std::size_t{8}))
      ->capture_default_str();
  bench->add_option("--replicates", c.bench.replicates, "Graphs per vertex count")->capture_default_str();
  bench->add_option("--gap-values", c.bench.gaps, "Gap counts to compare")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--threads", c.bench.threads, "Worker threads (1 for timing runs)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--csv", c.bench.csv, "CSV output path (default stdout)");
  bench->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  bench->add_option("--max-iter", c.max_iter, "Inter-axis sweep cycles")->capture_default_str();
  bench->add_option("--max-iter-intra", c.max_iter_intra, "Intra-axis sweep rounds")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Check a layout JSON file against the layout invariants");
  validate->add_option("-i,--input", c.input, "Layout JSON file")->required();

  if (argc <= 1) {
    err << app.help();
    return {std::nullopt, kExitUsage};
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "hiveplot: " << e.what() << "\n";
    err << "Run with --help for usage.\n";
    return {std::nullopt, kExitUsage};
  }

  if (layout->parsed()) {
    c.command = Command::kLayout;
    c.k = layout_k;
    if (format == "edgelist") c.format = hive::GraphFormat::kEdgeList;
    if (format == "json") c.format = hive::GraphFormat::kJson;
    c.labels = labels == "on";
  } else if (bench->parsed()) {
    c.command = Command::kBench;
    if (c.bench.n_min > c.bench.n_max) {
      err << "hiveplot: --n-min exceeds --n-max\n";
      return {std::nullopt, kExitUsage};
    }
  } else if (validate->parsed()) {
    c.command = Command::kValidate;
  }
  return {c, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kLayout:
        return run_layout(config, out, err);
      case Command::kBench:
        return run_bench(config, out, err);
      case Command::kValidate:
        return run_validate(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "hiveplot: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "hiveplot: " << e.what() << '\n';
    return kExitInput;
  } catch (const hive::HiveError& e) {
    err << "hiveplot: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace hiveplot
