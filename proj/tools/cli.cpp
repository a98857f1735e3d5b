#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "spaf/apsp_af.hpp"
#include "spaf/bottleneck.hpp"
#include "spaf/graph.hpp"
#include "spaf/oracle.hpp"
#include "spaf/result_io.hpp"
#include "spaf/sssp_af.hpp"

namespace spaf::cli {

namespace {

/// Bad flags, unreadable files, malformed input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string caps;
  std::uint64_t seed = 0;
  bool tsv = false;
  std::size_t source = 0;
  std::optional<std::size_t> r;
  unsigned threads = 1;
  std::size_t from = 0;
  std::size_t to = 0;
  std::string flow;
  bool path = false;
  std::string seeds;
  std::size_t repeat = 1;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Capacity parse_demand(const std::string& text) {
  try {
    return Capacity::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--flow: ") + e.what());
  }
}

Vertex to_vertex(std::size_t one_based, std::size_t n, const char* flag) {
  if (one_based < 1 || one_based > n) {
    throw UsageError(std::string(flag) + " must be a vertex in 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(one_based - 1);
}

// Writes to the -o file when given, else to `out`.
template <typename Fn>
void emit(const Options& opt, std::ostream& out, Fn&& write) {
  if (opt.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw UsageError("cannot open output file '" + opt.output + "'");
  write(file);
}

int cmd_gen(const Options& opt, std::ostream& out) {
  std::vector<Capacity> pool;
  std::stringstream list(opt.caps);
  for (std::string item; std::getline(list, item, ',');) {
    try {
      pool.push_back(Capacity::parse(item));
    } catch (const std::exception& e) {
      throw UsageError(std::string("--caps: ") + e.what());
    }
  }
  Graph g;
  try {
    g = generate_random(opt.n, opt.m, pool, opt.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(opt, out, [&](std::ostream& o) { serialize_graph(g, o); });
  return kExitOk;
}

int cmd_bottleneck(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt.input);
  const BottleneckResult res = network_bottleneck(g);
  std::string value;
  switch (res.status) {
    case BottleneckStatus::kFound: value = g.flow_rank().value(*res.rank).literal(); break;
    case BottleneckStatus::kNotStronglyConnected: value = "NONE"; break;
    case BottleneckStatus::kDegenerate: value = "DEGENERATE"; break;
  }
  if (opt.tsv) {
    out << value << '\t' << res.probe_count << '\n';
  } else {
    out << value << '\n';
  }
  return res.status == BottleneckStatus::kFound ? kExitOk : kExitDomain;
}

int cmd_sssp_af(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt.input);
  const Vertex s = to_vertex(opt.source, g.vertex_count(), "-s");
  const ApspAfResult table = as_all_pairs(sssp_af(g, s));
  emit(opt, out, [&](std::ostream& o) { write_result_json(table, o); });
  return kExitOk;
}

ApspAfOptions solver_options(const Options& opt, const Graph& g) {
  ApspAfOptions options;
  options.threads = opt.threads;
  if (opt.r) {
    if (*opt.r < 1 || *opt.r + 1 > g.vertex_count()) {
      throw UsageError("-r must lie in 1.." + std::to_string(g.vertex_count() - 1));
    }
    options.r = static_cast<Length>(*opt.r);
  }
  return options;
}

int cmd_apsp_af(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt.input);
  const ApspAfResult res = apsp_af(g, solver_options(opt, g));
  emit(opt, out, [&](std::ostream& o) { write_result_json(res, o); });
  return kExitOk;
}

int cmd_query(const Options& opt, std::ostream& out) {
  std::ifstream in(opt.input);
  if (!in) throw UsageError("cannot open result file '" + opt.input + "'");
  ApspAfResult res;
  try {
    res = read_result_json(in);
  } catch (const ResultFormatError& e) {
    throw UsageError(opt.input + ": " + e.what());
  }
  const Vertex i = to_vertex(opt.from, res.n, "--from");
  const Vertex j = to_vertex(opt.to, res.n, "--to");
  const Capacity demand = parse_demand(opt.flow);

  const auto step = query_apsp(res, i, j, demand);
  if (!step) {
    out << "NONE\n";
    return kExitDomain;
  }
  const char sep = opt.tsv ? '\t' : ' ';
  out << step->length << sep << res.flow_rank.value(step->flow).literal() << '\n';
  if (opt.path) {
    const auto path = path_apsp(res, i, j, demand);
    for (std::size_t k = 0; k < path->size(); ++k) out << (k ? " " : "") << (*path)[k] + 1;
    out << '\n';
  }
  return kExitOk;
}

// Empty when every cross-check agrees, else a description of the first
// disagreement.
std::string cross_check(const Graph& g) {
  const ApspAfResult fast = apsp_af(g);
  const ApspAfResult reference = oracle_apsp_af_bfs(g);
  auto describe = [](const char* what, const ComparisonReport& rep) {
    const Divergence& d = *rep.first_divergence;
    return std::string(what) + " at (" + std::to_string(d.i + 1) + "," + std::to_string(d.j + 1) +
           "): " + d.detail;
  };

  if (auto rep = compare(fast, reference); !rep.equal) return describe("apsp-af vs bfs oracle", rep);
  if (g.vertex_count() <= kEnumerationLimit) {
    if (auto rep = compare(oracle_apsp_af_enum(g), reference); !rep.equal) {
      return describe("enumeration vs bfs oracle", rep);
    }
  }
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const SsspAfResult single = sssp_af(g, s);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!(single.staircases[v] == fast.staircases(s, v))) {
        return "sssp-af vs apsp-af at (" + std::to_string(s + 1) + "," + std::to_string(v + 1) + "): " +
               format_staircase(single.staircases[v], g.flow_rank()) + " vs " +
               format_staircase(fast.staircases(s, v), g.flow_rank());
      }
    }
  }
  const BottleneckResult b = network_bottleneck(g);
  const BottleneckResult b_ref = network_bottleneck_oracle(g);
  if (b.status != b_ref.status || b.rank != b_ref.rank) return "network bottleneck vs closure oracle";
  return {};
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.input.empty() && opt.seeds.empty()) throw UsageError("verify needs -i or --seeds");
  if (!opt.input.empty()) {
    if (auto diff = cross_check(load_graph(opt.input)); !diff.empty()) {
      out << "DIFFERENT " << diff << '\n';
      return kExitDomain;
    }
  }
  if (!opt.seeds.empty()) {
    static const std::regex range(R"((\d+)\.\.(\d+))");
    std::smatch mt;
    if (!std::regex_match(opt.seeds, mt, range)) throw UsageError("--seeds expects A..B");
    const std::uint64_t first = std::stoull(mt[1]);
    const std::uint64_t last = std::stoull(mt[2]);
    if (first > last) throw UsageError("--seeds range is empty");
    for (std::uint64_t seed = first; seed <= last; ++seed) {
      if (auto diff = cross_check(corpus_graph(seed)); !diff.empty()) {
        out << "DIFFERENT seed " << seed << ": " << diff << '\n';
        return kExitDomain;
      }
    }
  }
  out << "EQUAL\n";
  return kExitOk;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt.input);
  if (g.vertex_count() < 2) throw UsageError("bench needs at least two vertices");
  const ApspAfOptions options = solver_options(opt, g);
  const std::size_t repeat = std::max<std::size_t>(opt.repeat, 1);

  double accel = 1e300, cruise = 1e300, fin = 1e300, sssp_all = 1e300;
  ApspAfStats stats;
  for (std::size_t k = 0; k < repeat; ++k) {
    const ApspAfResult res = apsp_af(g, options);
    stats = res.stats;
    accel = std::min(accel, res.stats.acceleration_seconds);
    cruise = std::min(cruise, res.stats.cruising_seconds);
    fin = std::min(fin, res.stats.finalize_seconds);

    const auto t0 = std::chrono::steady_clock::now();
    for (Vertex s = 0; s < g.vertex_count(); ++s) (void)sssp_af(g, s);
    sssp_all = std::min(
        sssp_all, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  out << "n\t" << g.vertex_count() << "\nm\t" << g.edge_count() << "\nd\t" << g.flow_rank().size()
      << "\nr\t" << stats.r << "\ncruising_rounds\t" << stats.cruising.rounds() << '\n';
  out << std::fixed << std::setprecision(6) << "acceleration_s\t" << accel << "\ncruising_s\t" << cruise
      << "\nfinalize_s\t" << fin << "\nsssp_af_all_sources_s\t" << sssp_all << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest paths for all flows on unit-cost capacitated digraphs", "spaf"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("gen", "Generate a random graph");
  gen->add_option("-n", opt.n, "Vertex count")->required();
  gen->add_option("-m", opt.m, "Edge count")->required();
  gen->add_option("--caps", opt.caps, "Comma-separated capacity pool")->required();
  gen->add_option("--seed", opt.seed, "RNG seed")->required();
  gen->add_option("-o", opt.output, "Output file");

  auto* bottleneck = app.add_subcommand("bottleneck", "Bottleneck of the whole network");
  bottleneck->add_option("-i", opt.input, "Graph file")->required();
  bottleneck->add_flag("--tsv", opt.tsv, "Print value and probe count as TSV");

  auto* sssp = app.add_subcommand("sssp-af", "Single-source shortest paths for all flows");
  sssp->add_option("-i", opt.input, "Graph file")->required();
  sssp->add_option("-s", opt.source, "Source vertex (1-indexed)")->required();
  sssp->add_option("-o", opt.output, "Output JSON file");

  auto* apsp = app.add_subcommand("apsp-af", "All-pairs shortest paths for all flows");
  apsp->add_option("-i", opt.input, "Graph file")->required();
  apsp->add_option("-r", opt.r, "Acceleration horizon (default ceil(sqrt(d)))");
  apsp->add_option("--threads", opt.threads, "Worker threads for the cruising phase");
  apsp->add_option("-o", opt.output, "Output JSON file");

  auto* query = app.add_subcommand("query", "Look up a solved result");
  query->add_option("-i", opt.input, "Result JSON file")->required();
  query->add_option("--from", opt.from, "Source vertex (1-indexed)")->required();
  query->add_option("--to", opt.to, "Target vertex (1-indexed)")->required();
  query->add_option("--flow", opt.flow, "Flow demand")->required();
  query->add_flag("--path", opt.path, "Also print a path");
  query->add_flag("--tsv", opt.tsv, "Tab-separated output");

  auto* verify = app.add_subcommand("verify", "Cross-check solvers against the oracles");
  verify->add_option("-i", opt.input, "Graph file");
  verify->add_option("--seeds", opt.seeds, "Corpus seed range A..B");

  auto* bench = app.add_subcommand("bench", "Time the solver phases");
  bench->add_option("-i", opt.input, "Graph file")->required();
  bench->add_option("--repeat", opt.repeat, "Repetitions (minimum time is reported)");
  bench->add_option("-r", opt.r, "Acceleration horizon");
  bench->add_option("--threads", opt.threads, "Worker threads for the cruising phase");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(opt, out);
    if (bottleneck->parsed()) return cmd_bottleneck(opt, out);
    if (sssp->parsed()) return cmd_sssp_af(opt, out);
    if (apsp->parsed()) return cmd_apsp_af(opt, out);
    if (query->parsed()) return cmd_query(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (bench->parsed()) return cmd_bench(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace spaf::cli
