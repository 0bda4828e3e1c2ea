#include "hiersearch/harness.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "json.hpp"

#include "hiersearch/baselines.hpp"
#include "hiersearch/benchmarks.hpp"
#include "hiersearch/errors.hpp"
#include "hiersearch/parallel.hpp"

namespace hiersearch {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

} // namespace

std::string method_name(Method m) {
  switch (m) {
  case Method::hiersearch:
    return "hiersearch";
  case Method::random:
    return "random";
  case Method::lhs:
    return "lhs";
  }
  return "?";
}

Method parse_method(const std::string &name) {
  if (name == "hiersearch")
    return Method::hiersearch;
  if (name == "random")
    return Method::random;
  if (name == "lhs")
    return Method::lhs;
  throw ConfigError("unknown method '" + name +
                    "' (want hiersearch, random, or lhs)");
}

std::string axis_name(SweepAxis a) {
  switch (a) {
  case SweepAxis::none:
    return "none";
  case SweepAxis::iterations:
    return "iterations";
  case SweepAxis::budget:
    return "budget";
  case SweepAxis::width:
    return "width";
  case SweepAxis::connections:
    return "connections";
  }
  return "?";
}

SweepAxis parse_axis(const std::string &name) {
  if (name == "iterations")
    return SweepAxis::iterations;
  if (name == "budget")
    return SweepAxis::budget;
  if (name == "width")
    return SweepAxis::width;
  if (name == "connections")
    return SweepAxis::connections;
  throw ConfigError("unknown sweep axis '" + name +
                    "' (want iterations, budget, width, or connections)");
}

namespace {

std::size_t as_count(const json &v, const std::string &key) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError("'" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

double as_real(const json &v, const std::string &key) {
  if (!v.is_number())
    throw ConfigError("'" + key + "' must be a number");
  return v.get<double>();
}

} // namespace

ExperimentConfig parse_config(const std::string &json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception &e) {
    throw ConfigError(std::string("bad config JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ConfigError("config must be a JSON object");

  static const std::set<std::string> known{
      "method", "objective", "I",           "b",    "c",
      "omega",  "delta",     "master_seed", "trials", "sweep"};
  for (const auto &[key, _] : j.items())
    if (!known.count(key))
      throw ConfigError("unknown config key '" + key + "'");

  ExperimentConfig cfg;
  if (j.contains("method")) {
    const json &m = j["method"];
    if (m.is_string()) {
      if (m.get<std::string>() != "all")
        cfg.methods = {parse_method(m.get<std::string>())};
    } else if (m.is_array() && !m.empty()) {
      cfg.methods.clear();
      for (const auto &v : m)
        cfg.methods.push_back(parse_method(v.get<std::string>()));
    } else {
      throw ConfigError("'method' must be a name, a list of names, or "
                        "\"all\"");
    }
  }
  if (!j.contains("objective") || !j["objective"].is_string())
    throw ConfigError("config needs an 'objective' benchmark key");
  cfg.objective = j["objective"].get<std::string>();
  if (j.contains("I"))
    cfg.iterations = as_count(j["I"], "I");
  if (j.contains("b"))
    cfg.budget = as_count(j["b"], "b");
  if (j.contains("c"))
    cfg.connections = as_count(j["c"], "c");
  if (j.contains("omega"))
    cfg.omega = as_real(j["omega"], "omega");
  if (j.contains("delta"))
    cfg.delta = as_real(j["delta"], "delta");
  if (j.contains("trials"))
    cfg.trials = as_count(j["trials"], "trials");
  if (j.contains("master_seed"))
    cfg.master_seed = as_count(j["master_seed"], "master_seed");

  if (j.contains("sweep")) {
    const json &s = j["sweep"];
    if (!s.is_object())
      throw ConfigError("'sweep' must be an object");
    for (const auto &[key, _] : s.items())
      if (key != "axis" && key != "values")
        throw ConfigError("unknown sweep key '" + key + "'");
    if (!s.contains("axis") || !s["axis"].is_string())
      throw ConfigError("sweep needs an 'axis' name");
    cfg.axis = parse_axis(s["axis"].get<std::string>());
    if (!s.contains("values") || !s["values"].is_array() ||
        s["values"].empty())
      throw ConfigError("sweep needs a nonempty 'values' list");
    for (const auto &v : s["values"]) {
      if (cfg.axis == SweepAxis::width)
        cfg.sweep_values.push_back(as_real(v, "sweep value"));
      else
        cfg.sweep_values.push_back(
            static_cast<double>(as_count(v, "sweep value")));
    }
  }

  validate_config(cfg);
  return cfg;
}

void validate_config(const ExperimentConfig &cfg) {
  if (cfg.methods.empty())
    throw ConfigError("no methods selected");
  if (cfg.trials < 1)
    throw ConfigError("trials must be >= 1");
  if (cfg.budget < 1 && cfg.axis != SweepAxis::budget)
    throw ConfigError("b must be >= 1");
  if (cfg.connections <= 1 && cfg.axis != SweepAxis::connections)
    throw ConfigError("c must be > 1");
  if (cfg.axis != SweepAxis::none && cfg.sweep_values.empty())
    throw ConfigError("sweep values must be nonempty");
  for (double v : cfg.sweep_values) {
    if (!std::isfinite(v))
      throw ConfigError("sweep values must be finite");
    if (cfg.axis == SweepAxis::budget && v < 1)
      throw ConfigError("budget sweep values must be >= 1");
    if (cfg.axis == SweepAxis::connections && v <= 1)
      throw ConfigError("connections sweep values must be > 1");
  }
  make_benchmark(cfg.objective, cfg.master_seed); // key must resolve
}

RunReport run_single(Method m, const std::string &objective,
                     const RunParams &p, std::uint64_t run_seed,
                     std::uint64_t chi_seed, int threads) {
  BenchmarkFunction bench = make_benchmark(objective, chi_seed);
  SearchSpace space = benchmark_space(bench);
  ObjectiveHandle handle(as_objective(bench), bench.dims);

  if (m == Method::hiersearch) {
    Hierarchy h = build_hierarchy(space, p.connections);
    TuneOptions opts;
    opts.iterations = p.iterations;
    opts.budget = p.budget;
    opts.omega = p.omega;
    opts.delta = p.delta;
    opts.seed = run_seed;
    opts.threads = threads;
    return tune(h, space, handle, opts);
  }

  BaselineOptions opts;
  opts.iterations = p.iterations;
  opts.budget = p.budget;
  opts.seed = run_seed;
  opts.threads = threads;
  return m == Method::random ? random_search(space, handle, opts)
                             : latin_hypercube(space, handle, opts);
}

double mean_of(const std::vector<double> &xs) {
  double sum = 0.0;
  for (double x : xs)
    sum += x;
  return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

double std_error_of(const std::vector<double> &xs) {
  if (xs.size() < 2)
    return 0.0;
  double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs)
    ss += (x - m) * (x - m);
  double n = static_cast<double>(xs.size());
  return std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
}

std::vector<TrialSummary> run_experiment(const ExperimentConfig &cfg) {
  validate_config(cfg);
  const std::vector<double> values =
      cfg.axis == SweepAxis::none ? std::vector<double>{0.0}
                                  : cfg.sweep_values;
  const std::size_t dims = make_benchmark(cfg.objective, cfg.master_seed).dims;
  const std::size_t workers = resolve_threads(-1);

  std::vector<TrialSummary> out;
  for (double value : values) {
    RunParams p{cfg.iterations, cfg.budget, cfg.connections, cfg.omega,
                cfg.delta};
    switch (cfg.axis) {
    case SweepAxis::iterations:
      p.iterations = static_cast<std::size_t>(value);
      break;
    case SweepAxis::budget:
      p.budget = static_cast<std::size_t>(value);
      break;
    case SweepAxis::connections:
      p.connections = static_cast<std::size_t>(value);
      break;
    case SweepAxis::width:
      p.omega = value;
      break;
    case SweepAxis::none:
      break;
    }

    TrialSummary summary;
    summary.axis_value = value;
    const std::size_t expected = dims * p.budget * p.iterations;
    for (Method m : cfg.methods) {
      std::vector<double> best(cfg.trials);
      // Trials are self-contained, so they can fan out; the inner runs
      // stay sequential to keep one level of parallelism.
      parallel_for(cfg.trials, workers, [&](std::size_t t) {
        RunReport r = run_single(m, cfg.objective, p, cfg.master_seed + t,
                                 cfg.master_seed + t, 0);
        if (r.evaluations != expected)
          throw Error("evaluation parity broken: " + method_name(m) +
                      " trial " + std::to_string(t) + " spent " +
                      std::to_string(r.evaluations) + " of " +
                      std::to_string(expected));
        best[t] = r.best_psi;
      });
      MethodSummary ms;
      ms.method = m;
      ms.mean_best = mean_of(best);
      ms.std_error = std_error_of(best);
      ms.trials = cfg.trials;
      ms.evals_per_trial = expected;
      summary.per_method.push_back(ms);
    }
    out.push_back(std::move(summary));
  }
  return out;
}

std::string to_csv(const ExperimentConfig &cfg,
                   const std::vector<TrialSummary> &summaries) {
  std::string out =
      "axis,axis_value,method,mean_best,std_error,trials,evals_per_trial\n";
  for (const auto &s : summaries)
    for (const auto &m : s.per_method) {
      out += axis_name(cfg.axis) + ',' + fmt(s.axis_value) + ',' +
             method_name(m.method) + ',' + fmt(m.mean_best) + ',' +
             fmt(m.std_error) + ',' + std::to_string(m.trials) + ',' +
             std::to_string(m.evals_per_trial) + '\n';
    }
  return out;
}

std::string report_json(const RunReport &report, const SearchSpace &space) {
  ordered_json j;
  ordered_json best = ordered_json::object();
  if (report.best.values.size() == space.size()) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      const Dimension &d = space.dimensions[i];
      if (d.is_categorical())
        best[d.name] = std::get<CategoricalDomain>(d.domain)
                           .labels[static_cast<std::size_t>(
                               report.best.values[i])];
      else
        best[d.name] = d.to_external(report.best.values[i]);
    }
  }
  j["best"] = std::move(best);
  j["best_psi"] = report.best_psi;
  j["iterations_run"] = report.iterations_run;
  j["evaluations"] = report.evaluations;
  j["setup_evaluations"] = report.setup_evaluations;
  j["width_fallbacks"] = report.width_fallbacks;
  ordered_json widths = ordered_json::object();
  for (const auto &n : space.objective_names) {
    auto it = report.final_widths.find(n);
    if (it != report.final_widths.end())
      widths[n] = it->second;
  }
  j["final_widths"] = std::move(widths);
  ordered_json trace = ordered_json::array();
  for (const auto &t : report.trace) {
    ordered_json row;
    row["iteration"] = t.iteration;
    row["start_psi"] = t.start_psi;
    row["best_psi"] = t.best_psi;
    row["stagnated"] = t.stagnated;
    row["per_terminal_best"] = t.per_terminal_best;
    trace.push_back(std::move(row));
  }
  j["trace"] = std::move(trace);
  return j.dump(2) + "\n";
}

std::string hierarchy_json(const Hierarchy &h) {
  ordered_json j;
  HierarchyStats stats = hierarchy_stats(h);
  j["node_count"] = stats.node_count;
  j["depth"] = stats.depth;
  j["terminal_count"] = stats.terminal_count;
  j["root"] = h.root;
  ordered_json nodes = ordered_json::array();
  for (const auto &n : h.nodes) {
    ordered_json row;
    row["id"] = n.id;
    row["level"] = n.level;
    if (n.parent)
      row["parent"] = *n.parent;
    else
      row["parent"] = nullptr;
    row["children"] = n.children;
    row["primary"] = n.primary;
    row["subsidiary"] = n.subsidiary;
    row["capacity"] = n.capacity;
    row["terminal"] = n.is_terminal();
    nodes.push_back(std::move(row));
  }
  j["nodes"] = std::move(nodes);
  return j.dump(2) + "\n";
}

} // namespace hiersearch
