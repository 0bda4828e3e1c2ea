#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hiersearch/baselines.hpp"
#include "hiersearch/benchmarks.hpp"
#include "hiersearch/engine.hpp"
#include "hiersearch/errors.hpp"
#include "hiersearch/harness.hpp"
#include "hiersearch/hierarchy.hpp"

namespace {

using namespace hiersearch;

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_out(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write '" + path + "'");
  out << text;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hierarchical collaborative random search"};
  app.require_subcommand(1);

  std::string objective, method = "hiersearch", config_path, out_path;
  long iters = 10, budget = 3, connections = 2, trials = 50;
  double omega = 9.0, delta = 2.0;
  unsigned long long seed = 0;
  int threads = -1;

  auto add_common = [&](CLI::App *cmd, bool with_method) {
    cmd->add_option("--objective", objective, "benchmark key, e.g. rastrigin-6d")
        ->required();
    cmd->add_option("--iters", iters, "iterations I");
    cmd->add_option("--budget", budget, "evaluations per agent per iteration");
    cmd->add_option("--connections", connections, "children per manager (c)");
    cmd->add_option("--omega", omega, "initial width exponent; eps = 2^-(omega+1)");
    cmd->add_option("--delta", delta, "width growth factor on stagnation");
    cmd->add_option("--seed", seed, "master seed");
    if (with_method)
      cmd->add_option("--method", method, "hiersearch | random | lhs");
  };

  auto *run = app.add_subcommand("run", "one method, one trial, report JSON");
  add_common(run, true);
  run->add_option("--threads", threads, "evaluation workers; default from HIERSEARCH_THREADS");

  auto *sweep = app.add_subcommand("sweep", "experiment config file -> CSV");
  sweep->add_option("config", config_path, "JSON experiment config")->required();
  sweep->add_option("-o,--out", out_path, "CSV path (default stdout)");

  auto *compare =
      app.add_subcommand("compare", "all three methods, matched counts -> CSV");
  add_common(compare, false);
  compare->add_option("--trials", trials, "trials per method");
  compare->add_option("-o,--out", out_path, "CSV path (default stdout)");

  auto *bench = app.add_subcommand("bench", "benchmark registry");
  auto *bench_list = bench->add_subcommand("list", "list registry keys");
  bench->require_subcommand(1);

  auto *dump =
      app.add_subcommand("dump-tree", "hierarchy for an objective, as JSON");
  dump->add_option("--objective", objective, "benchmark key")->required();
  dump->add_option("--connections", connections, "children per manager (c)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      if (iters < 0 || budget < 1 || connections < 2)
        throw ConfigError("need iters >= 0, budget >= 1, connections >= 2");
      RunParams p{static_cast<std::size_t>(iters),
                  static_cast<std::size_t>(budget),
                  static_cast<std::size_t>(connections), omega, delta};
      RunReport report =
          run_single(parse_method(method), objective, p, seed, seed, threads);
      SearchSpace space = benchmark_space(make_benchmark(objective, seed));
      std::cout << report_json(report, space);
    } else if (*sweep) {
      ExperimentConfig cfg = parse_config(read_file(config_path));
      write_out(to_csv(cfg, run_experiment(cfg)), out_path);
    } else if (*compare) {
      if (iters < 0 || budget < 1 || connections < 2 || trials < 1)
        throw ConfigError(
            "need iters >= 0, budget >= 1, connections >= 2, trials >= 1");
      ExperimentConfig cfg;
      cfg.objective = objective;
      cfg.iterations = static_cast<std::size_t>(iters);
      cfg.budget = static_cast<std::size_t>(budget);
      cfg.connections = static_cast<std::size_t>(connections);
      cfg.omega = omega;
      cfg.delta = delta;
      cfg.trials = static_cast<std::size_t>(trials);
      cfg.master_seed = seed;
      write_out(to_csv(cfg, run_experiment(cfg)), out_path);
    } else if (*bench_list) {
      for (const auto &key : benchmark_keys()) {
        BenchmarkFunction f = make_benchmark(key, 0);
        std::printf("%-22s d=%-3zu domain=[%g, %g] optimum=%g\n", key.c_str(),
                    f.dims, f.lo, f.hi, f.known_optimum);
      }
    } else if (*dump) {
      if (connections < 2)
        throw ConfigError("connections must be >= 2");
      SearchSpace space = benchmark_space(make_benchmark(objective, seed));
      Hierarchy h =
          build_hierarchy(space, static_cast<std::size_t>(connections));
      std::cout << hierarchy_json(h);
    }
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
