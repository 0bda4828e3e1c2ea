#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hiersearch/engine.hpp"
#include "hiersearch/hierarchy.hpp"

namespace hiersearch {

enum class Method { hiersearch, random, lhs };

std::string method_name(Method m);
Method parse_method(const std::string &name);

enum class SweepAxis { none, iterations, budget, width, connections };

std::string axis_name(SweepAxis a);
SweepAxis parse_axis(const std::string &name);

struct ExperimentConfig {
  std::vector<Method> methods{Method::hiersearch, Method::random,
                              Method::lhs};
  std::string objective;       // benchmark registry key
  std::size_t iterations = 10; // I
  std::size_t budget = 3;      // b
  std::size_t connections = 2; // c
  double omega = 9.0;          // initial width = 2^-(omega+1)
  double delta = 2.0;
  std::size_t trials = 50;
  std::uint64_t master_seed = 0;
  SweepAxis axis = SweepAxis::none;
  std::vector<double> sweep_values; // nonempty iff axis != none
};

// Strict JSON reader: keys mirror the config fields ("method", "objective",
// "I", "b", "c", "omega", "delta", "trials", "master_seed", "sweep");
// anything unrecognized is an error. "method" takes one name, a list, or
// "all".
ExperimentConfig parse_config(const std::string &json_text);
void validate_config(const ExperimentConfig &cfg);

struct RunParams {
  std::size_t iterations = 10;
  std::size_t budget = 3;
  std::size_t connections = 2;
  double omega = 9.0;
  double delta = 2.0;
};

// One method, one trial, on a registry objective. chi_seed feeds only the
// toy-MAE ground truth (regenerated each trial, shared across methods so
// they chase the same target); run_seed drives the search itself.
RunReport run_single(Method m, const std::string &objective,
                     const RunParams &p, std::uint64_t run_seed,
                     std::uint64_t chi_seed, int threads);

struct MethodSummary {
  Method method = Method::hiersearch;
  double mean_best = 0.0;
  double std_error = 0.0; // sample stddev / sqrt(n); 0 when n == 1
  std::size_t trials = 0;
  std::size_t evals_per_trial = 0;
};

struct TrialSummary {
  double axis_value = 0.0;
  std::vector<MethodSummary> per_method; // config method order
};

// The full protocol: for every sweep value and method, `trials` runs with
// seeds master_seed + t, summarized per cell. Every run's evaluation count
// must land exactly on dims x b x I or the experiment aborts.
std::vector<TrialSummary> run_experiment(const ExperimentConfig &cfg);

// Schema-stable rows: axis,axis_value,method,mean_best,std_error,trials,
// evals_per_trial. Same config and seed -> byte-identical text.
std::string to_csv(const ExperimentConfig &cfg,
                   const std::vector<TrialSummary> &summaries);

// Stable JSON renderings for the CLI (and the determinism checks, which
// diff these strings byte for byte).
std::string report_json(const RunReport &report, const SearchSpace &space);
std::string hierarchy_json(const Hierarchy &h);

double mean_of(const std::vector<double> &xs);
double std_error_of(const std::vector<double> &xs);

} // namespace hiersearch
