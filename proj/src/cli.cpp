#include "wconvex/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "wconvex/errors.hpp"
#include "wconvex/io.hpp"

namespace wconvex::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

struct Options {
  std::string graph, seeds, points, examples, config;
  std::string scheme = "graph";
  std::string format = "json";
  std::string out;
  double theta = 0.0;
  std::size_t k = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
};

/// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw Error("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

template <typename Doc>
void emit(const Options& o, std::ostream& out, const Doc& result, nlohmann::json extra = {}) {
  Sink sink(o.out, out);
  if (o.format == "csv") {
    io::write_csv(sink.get(), result);
    return;
  }
  nlohmann::json doc = io::to_json(result);
  if (!extra.is_null()) doc.update(extra);
  sink.get() << doc.dump() << '\n';
}

FiniteMetricSpace load_graph(const std::string& path) {
  auto in = open_input(path);
  return geodesic_space(io::read_graph(in));
}

int hull_ext(const Options& o, std::ostream& out) {
  const auto space = load_graph(o.graph);
  auto in = open_input(o.seeds);
  const auto seeds = io::read_vertices(in, space.size());
  emit(o, out, weak_hull_ext(space, seeds, Theta(o.theta)));
  return 0;
}

int hull_int(const Options& o, std::ostream& out) {
  auto in = open_input(o.points);
  if (o.scheme == "hamming") {
    const auto pts = io::read_bitstrings(in).positive;
    if (pts.empty()) throw ParseError(0, "no points given");
    emit(o, out, weak_hull_int(HammingScheme(pts.front().length), std::span<const BitString>(pts), Theta(o.theta)));
  } else if (o.scheme == "boxes") {
    const auto pts = io::read_points(in).positive;
    if (pts.empty()) throw ParseError(0, "no points given");
    emit(o, out, weak_hull_int(BoxScheme(pts.front().size()), std::span<const PointR>(pts), Theta(o.theta)));
  } else {
    throw Error("hull-int needs --scheme hamming or boxes; use hull-ext for graphs");
  }
  return 0;
}

template <typename Result, typename Solve>
int answer(const Options& o, std::ostream& out, std::size_t positives, Solve solve) {
  const std::optional<Result> yes = solve(o.k);
  if (yes) {
    emit(o, out, *yes, {{"answer", "yes"}, {"k", o.k}});
    return 0;
  }
  // The greatest consistent hull has the fewest blocks; report its size.
  const std::optional<Result> best = solve(std::max<std::size_t>(1, positives));
  out << "no: every consistent hypothesis needs at least " << best->block_count() << " blocks, k = " << o.k
      << '\n';
  return 1;
}

int chf(const Options& o, std::ostream& out) {
  if (o.scheme == "graph") {
    const auto space = load_graph(o.graph);
    auto in = open_input(o.examples);
    const auto ex = io::read_vertex_labels(in, space.size());
    return answer<ThetaDecomposition>(o, out, ex.positive.size(),
                                      [&](std::size_t k) { return chf_ext(space, ex.positive, ex.negative, k); });
  }
  auto in = open_input(o.examples);
  if (o.scheme == "hamming") {
    const auto ex = io::read_bitstrings(in);
    const unsigned n = !ex.positive.empty() ? ex.positive.front().length
                       : !ex.negative.empty() ? ex.negative.front().length : 1;
    const HammingScheme scheme(n);
    return answer<BlockSet<Term>>(o, out, ex.positive.size(), [&](std::size_t k) {
      return chf_int(scheme, std::span<const BitString>(ex.positive), std::span<const BitString>(ex.negative), k);
    });
  }
  const auto ex = io::read_points(in);
  const std::size_t d = !ex.positive.empty() ? ex.positive.front().size()
                        : !ex.negative.empty() ? ex.negative.front().size() : 1;
  for (const auto& p : ex.negative)
    if (p.size() != d) throw DimensionMismatch("positive and negative examples differ in dimension");
  const BoxScheme scheme(d);
  return answer<BlockSet<Box>>(o, out, ex.positive.size(), [&](std::size_t k) {
    return chf_int(scheme, std::span<const PointR>(ex.positive), std::span<const PointR>(ex.negative), k);
  });
}

std::string cells_path(const std::string& results) {
  const auto dot = results.rfind(".csv");
  return (dot != std::string::npos && dot + 4 == results.size() ? results.substr(0, dot) : results) + ".cells.csv";
}

int bench(const Options& o, std::ostream& out, std::ostream& err) {
  auto in = open_input(o.config);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("config is not valid JSON: ") + e.what());
  }
  SuiteConfig config = io::suite_config_from_json(doc);
  if (o.seed) config.master_seed = *o.seed;
  if (o.workers) config.workers = *o.workers;

  const SuiteResult result = run_suite(config);
  const std::string path = o.out.empty() ? "results.csv" : o.out;
  {
    std::ofstream csv(path);
    if (!csv) throw Error("cannot write '" + path + "'");
    write_results_csv(csv, result.rows);
    std::ofstream cells(cells_path(path));
    if (!cells) throw Error("cannot write '" + cells_path(path) + "'");
    write_cells_csv(cells, result.cells);
  }
  for (const CellSummary& c : result.cells)
    out << "n=" << c.graph_size << " weighted=" << c.weighted << " m=" << c.train_size << " tasks=" << c.tasks
        << std::fixed << std::setprecision(3) << " accuracy=" << c.accuracy_mean << "±" << c.accuracy_std
        << " baseline=" << c.baseline_mean << "±" << c.baseline_std << std::defaultfloat << '\n';
  out << result.rows.size() << " rows written to " << path << '\n';
  if (!result.complete()) {
    err << "partial results: " << result.failures.size() << " failures\n";
    for (const auto& f : result.failures) err << "  " << f << '\n';
    return 3;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly convex hulls and consistent hypothesis finding"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.out, "write the result to this file");
  };

  auto* he = app.add_subcommand("hull-ext", "hull of a vertex set in a graph's shortest-path metric");
  he->add_option("--graph", o.graph, "graph file")->required();
  he->add_option("--seeds", o.seeds, "vertex ids of A")->required();
  he->add_option("--theta", o.theta)->required()->check(CLI::NonNegativeNumber);
  add_format(he);

  auto* hi = app.add_subcommand("hull-int", "hull of points via a representation scheme");
  hi->add_option("--scheme", o.scheme)->required()->check(CLI::IsMember({"hamming", "boxes"}));
  hi->add_option("--points", o.points, "bit strings or CSV points")->required();
  hi->add_option("--theta", o.theta)->required()->check(CLI::NonNegativeNumber);
  add_format(hi);

  auto* ch = app.add_subcommand("chf", "consistent hypothesis with at most k blocks");
  ch->add_option("--scheme", o.scheme)->check(CLI::IsMember({"graph", "hamming", "boxes"}));
  ch->add_option("--graph", o.graph, "graph file (scheme graph)");
  ch->add_option("--examples,--labels", o.examples, "labeled examples")->required();
  ch->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  add_format(ch);

  auto* be = app.add_subcommand("bench", "run a benchmark suite from a JSON config");
  be->add_option("--config", o.config)->required();
  be->add_option("--out", o.out, "results CSV (default results.csv)");
  be->add_option("--seed", o.seed, "override master_seed");
  be->add_option("--workers", o.workers, "worker threads (0: all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (he->parsed()) return hull_ext(o, out);
    if (hi->parsed()) return hull_int(o, out);
    if (ch->parsed()) {
      if (o.scheme == "graph" && o.graph.empty()) throw Error("chf --scheme graph needs --graph");
      return chf(o, out);
    }
    return bench(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace wconvex::cli
