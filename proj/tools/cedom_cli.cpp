// cedom: cross-entropy solver for domination variants.
//
//   cedom solve --instance data/zachary.txt --variant secure --out out/zachary
//   cedom exact --generate grid:5,5 --variant dom
//   cedom bench --suite data/suites/grids.txt --optima data/optima.json --out out/grids
//   cedom gen   --generate snark:5 --out j5.txt

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "cedom/benchmark.hpp"
#include "cedom/exact.hpp"
#include "cedom/instance_io.hpp"

using namespace cedom;

namespace {

struct InstanceSource {
  std::string file;
  std::string spec;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--instance", file, "Edge-list instance file");
    auto* g = cmd->add_option("--generate", spec, "Generator spec, e.g. grid:5,5 or snark:5");
    f->excludes(g);
    g->excludes(f);
  }

  Instance load() const {
    if (!file.empty()) return load_instance(file);
    if (!spec.empty()) return generate_instance(spec);
    throw CLI::RequiredError("--instance or --generate");
  }
};

struct SolverFlags {
  CEParams params;
  std::vector<std::uint64_t> seeds;
  std::size_t runs = 10;
  unsigned threads = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--N", params.samples, "Samples per iteration")->capture_default_str();
    cmd->add_option("--M", params.elite, "Elite set size")->capture_default_str();
    cmd->add_option("--rho", params.rho, "Weighting parameter")->capture_default_str();
    cmd->add_option("--alpha", params.alpha, "Smoothing parameter")->capture_default_str();
    cmd->add_option("--r", params.stagnation, "Iterations without improvement before stopping")
        ->capture_default_str();
    cmd->add_option("--max-iterations", params.max_iterations, "Iteration cap per run")->capture_default_str();
    cmd->add_option("--seeds", seeds, "Comma-separated seed list (overrides --runs)")->delimiter(',');
    cmd->add_option("--runs", runs, "Number of runs, seeded 1..runs")->capture_default_str();
    cmd->add_option("--threads", threads, "Concurrent runs")->capture_default_str();
  }

  std::vector<std::uint64_t> seed_list() const {
    if (!seeds.empty()) return seeds;
    if (runs == 0) throw std::invalid_argument("--runs must be at least 1");
    std::vector<std::uint64_t> out(runs);
    std::iota(out.begin(), out.end(), std::uint64_t{1});
    return out;
  }
};

VariantKind variant_from(const std::string& name) {
  auto kind = parse_variant(name);
  if (!kind) throw std::invalid_argument("unknown variant '" + name + "' (expected dom, total, 2dom or secure)");
  return *kind;
}

std::string join_labels(const Instance& inst, const std::vector<Vertex>& set) {
  std::string out;
  for (Vertex v : set) {
    if (!out.empty()) out += ' ';
    out += inst.labels[v];
  }
  return out;
}

int run_solve(const InstanceSource& source, const SolverFlags& flags, const std::string& variant,
              const std::string& out) {
  const Instance inst = source.load();
  const VariantKind kind = variant_from(variant);
  const auto seeds = flags.seed_list();
  const auto tables = build_tables(inst.graph);
  const auto runs = ce_multi(inst.graph, tables, kind, flags.params, seeds, flags.threads);
  const auto record = make_record(inst, kind, flags.params, seeds, runs);

  std::cout << inst.name << " " << variant_name(kind) << " best=" << record.best_score
            << " mean_seconds=" << format_seconds(record.mean_seconds()) << "\n"
            << "set: " << join_labels(inst, runs.best().best_set) << "\n";
  if (!out.empty()) write_outputs(out, {record});
  return 0;
}

int run_exact(const InstanceSource& source, const std::string& variant, std::uint64_t budget) {
  const Instance inst = source.load();
  const VariantKind kind = variant_from(variant);
  const auto result = exact_min(inst.graph, kind, budget);
  const bool optimal = result.status == ExactStatus::Optimal;
  std::cout << inst.name << " " << variant_name(kind) << " " << (optimal ? "optimum=" : "upper_bound=")
            << result.optimum << " lower_bound=" << result.lower_bound << " explored=" << result.explored
            << "\n"
            << "set: " << join_labels(inst, result.witness) << "\n";
  return 0;
}

int run_bench(const std::string& suite_path, const std::string& optima_path, const SolverFlags& flags,
              const std::string& out) {
  const auto suite = load_suite(suite_path);
  const OptimaTable optima = optima_path.empty() ? OptimaTable{} : load_optima(optima_path);
  BenchmarkOptions options;
  options.params = flags.params;
  options.seeds = flags.seed_list();
  options.threads = flags.threads;
  options.on_record = [](const ResultRecord& r) {
    std::cerr << r.instance << " " << variant_name(r.variant) << " "
              << (r.feasible ? std::to_string(r.best_score) : std::string("inf"));
    if (r.known) std::cerr << " (known " << r.known->value << ")";
    std::cerr << " " << format_seconds(r.mean_seconds()) << "s/run\n";
  };
  const auto base_dir = std::filesystem::path(suite_path).parent_path();
  const auto records = run_benchmark(suite, base_dir, optima, options);
  write_outputs(out, records, suite);
  std::cout << "wrote " << out << ".csv and " << out << ".json (" << records.size() << " records)\n";
  return 0;
}

// Unit disk specs may bump their seed until the sample is connected.
int run_gen(const std::string& spec, const std::string& out, int retries) {
  std::string current = spec;
  Instance inst;
  for (int attempt = 0;; ++attempt) {
    try {
      inst = generate_instance(current);
      break;
    } catch (const std::invalid_argument&) {
      if (attempt >= retries || current.rfind("udg:", 0) != 0) throw;
      const auto comma = current.rfind(',');
      const auto seed = std::stoull(current.substr(comma + 1));
      current = current.substr(0, comma + 1) + std::to_string(seed + 1);
    }
  }
  const std::string text = "# " + inst.name + "\n" + write_instance(inst.graph);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << text;
    std::cerr << "wrote " << inst.name << " to " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-entropy solver for domination, total, 2- and secure domination"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Best-of-seeds cross-entropy solve");
  InstanceSource solve_source;
  SolverFlags solve_flags;
  std::string solve_variant = "dom", solve_out;
  solve_source.attach(solve);
  solve_flags.attach(solve);
  solve->add_option("--variant", solve_variant, "dom, total, 2dom or secure")->capture_default_str();
  solve->add_option("--out", solve_out, "Output prefix for <prefix>.csv and <prefix>.json");

  auto* exact = app.add_subcommand("exact", "Brute-force minimum for small instances");
  InstanceSource exact_source;
  std::string exact_variant = "dom";
  std::uint64_t budget = kDefaultExactBudget;
  exact_source.attach(exact);
  exact->add_option("--variant", exact_variant, "dom, total, 2dom or secure")->capture_default_str();
  exact->add_option("--budget", budget, "Maximum criterion evaluations")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite_path, optima_path, bench_out = "results";
  SolverFlags bench_flags;
  bench->add_option("--suite", suite_path, "Suite file")->required();
  bench->add_option("--optima", optima_path, "Known optima JSON sidecar");
  bench->add_option("--out", bench_out, "Output prefix")->capture_default_str();
  bench_flags.attach(bench);

  auto* gen = app.add_subcommand("gen", "Write a generated instance as an edge list");
  std::string gen_spec, gen_out;
  int retries = 0;
  gen->add_option("--generate", gen_spec, "Generator spec")->required();
  gen->add_option("--out", gen_out, "Output file (default stdout)");
  gen->add_option("--retry", retries, "Unit disk: try up to this many following seeds if disconnected");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(solve_source, solve_flags, solve_variant, solve_out);
    if (*exact) return run_exact(exact_source, exact_variant, budget);
    if (*bench) return run_bench(suite_path, optima_path, bench_flags, bench_out);
    if (*gen) return run_gen(gen_spec, gen_out, retries);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
