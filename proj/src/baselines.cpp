#include "hiersearch/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "hiersearch/errors.hpp"
#include "hiersearch/parallel.hpp"
#include "hiersearch/rng.hpp"

namespace hiersearch {

namespace {

std::size_t agent_count(const SearchSpace &space, const BaselineOptions &o) {
  return o.agents ? o.agents : space.objective_names.size();
}

void check(const BaselineOptions &o) {
  if (o.budget == 0)
    throw ConfigError("budget must be >= 1");
}

// Shared reduction: evaluate `coords` in iteration-sized chunks, tracking
// the running best exactly like the engine does (first strict improvement
// wins, non-finite responses never win).
RunReport reduce(const SearchSpace &space, const ObjectiveHandle &objective,
                 const std::vector<Coordinate> &coords, std::size_t agents,
                 std::size_t iterations, std::size_t budget, int threads) {
  const long evals0 = objective.evaluations();
  const std::size_t per_iter = agents * budget;
  const std::size_t workers = resolve_threads(threads);

  RunReport report;
  report.best_psi = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> psis(coords.size());

  for (std::size_t iter = 1; iter <= iterations; ++iter) {
    std::size_t base = (iter - 1) * per_iter;
    parallel_for(per_iter, workers, [&](std::size_t j) {
      psis[base + j] = objective(coords[base + j]);
    });

    IterationTrace tr;
    tr.iteration = iter;
    tr.start_psi = report.best_psi;
    bool improved = false;
    for (std::size_t a = 0; a < agents; ++a) {
      double best_here = psis[base + a * budget];
      for (std::size_t j = 0; j < budget; ++j) {
        double psi = psis[base + a * budget + j];
        if (is_better(psi, best_here, space.direction))
          best_here = psi;
        if (report.best.values.empty() ||
            is_better(psi, report.best_psi, space.direction)) {
          report.best = coords[base + a * budget + j];
          report.best_psi = psi;
          improved = true;
        }
      }
      tr.per_terminal_best.push_back(best_here);
    }
    tr.best_psi = report.best_psi;
    tr.stagnated = !improved;
    report.trace.push_back(std::move(tr));
    report.iterations_run = iter;
  }

  report.evaluations =
      static_cast<std::size_t>(objective.evaluations() - evals0);
  return report;
}

} // namespace

RunReport random_search(const SearchSpace &space,
                        const ObjectiveHandle &objective,
                        const BaselineOptions &opts) {
  validate_space(space);
  check(opts);
  const std::size_t agents = agent_count(space, opts);

  // Each agent draws its own stream so runs don't depend on agent count
  // elsewhere; draws are laid out iteration-major to match evaluation order.
  std::vector<Coordinate> coords;
  coords.reserve(agents * opts.budget * opts.iterations);
  std::vector<Rng> streams;
  for (std::size_t a = 0; a < agents; ++a)
    streams.push_back(
        make_stream(opts.seed, StreamPurpose::random_agent, a));
  for (std::size_t iter = 0; iter < opts.iterations; ++iter)
    for (std::size_t a = 0; a < agents; ++a)
      for (std::size_t j = 0; j < opts.budget; ++j)
        coords.push_back(draw_start(space, streams[a]));

  return reduce(space, objective, coords, agents, opts.iterations,
                opts.budget, opts.threads);
}

static std::vector<Coordinate> lhs_design(const SearchSpace &space,
                                          std::size_t b, Rng &rng) {
  Coordinate base;
  base.values.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Dimension &d = space.dimensions[i];
    auto fixed = space.fixed_assignments.find(d.name);
    if (fixed != space.fixed_assignments.end())
      base.values[i] = d.to_internal(fixed->second);
  }
  std::vector<Coordinate> design(b, base);

  // One point per stratum per dimension, strata assigned by an independent
  // permutation each dimension (plain Fisher-Yates on our own draws so the
  // sequence doesn't depend on the standard library).
  std::vector<std::size_t> perm(b);
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Dimension &d = space.dimensions[i];
    if (space.fixed_assignments.count(d.name))
      continue;
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t j = b; j > 1; --j) {
      auto pick = static_cast<std::size_t>(uniform_double(rng) *
                                           static_cast<double>(j));
      std::swap(perm[j - 1], perm[std::min(pick, j - 1)]);
    }
    double lo = d.internal_lo(), span = d.internal_hi() - lo;
    for (std::size_t p = 0; p < b; ++p) {
      double v = lo + (static_cast<double>(perm[p]) + uniform_double(rng)) *
                          span / static_cast<double>(b);
      if (d.is_categorical())
        v = std::min(std::floor(v),
                     static_cast<double>(d.category_count()) - 1.0);
      design[p].values[i] = v;
    }
  }
  return design;
}

RunReport latin_hypercube(const SearchSpace &space,
                          const ObjectiveHandle &objective,
                          const BaselineOptions &opts) {
  validate_space(space);
  check(opts);
  const std::size_t agents = agent_count(space, opts);

  // Each agent lays down one fresh b-point hypercube per repetition.
  std::vector<Rng> streams;
  for (std::size_t a = 0; a < agents; ++a)
    streams.push_back(make_stream(opts.seed, StreamPurpose::lhs_agent, a));
  std::vector<Coordinate> coords;
  coords.reserve(agents * opts.budget * opts.iterations);
  for (std::size_t iter = 0; iter < opts.iterations; ++iter)
    for (std::size_t a = 0; a < agents; ++a)
      for (auto &c : lhs_design(space, opts.budget, streams[a]))
        coords.push_back(std::move(c));

  return reduce(space, objective, coords, agents, opts.iterations,
                opts.budget, opts.threads);
}

} // namespace hiersearch
