#include "hiersearch/engine.hpp"

#include <algorithm>
#include <cmath>

#include "hiersearch/errors.hpp"
#include "hiersearch/parallel.hpp"
#include "hiersearch/sampler.hpp"

namespace hiersearch {

std::map<std::string, double> default_widths(const SearchSpace &space,
                                             double omega) {
  std::map<std::string, double> w;
  double eps = std::pow(2.0, -(omega + 1.0));
  for (const auto &n : space.objective_names)
    w[n] = eps;
  return w;
}

Coordinate draw_start(const SearchSpace &space, Rng &rng) {
  Coordinate c;
  c.values.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Dimension &d = space.dimensions[i];
    auto fixed = space.fixed_assignments.find(d.name);
    if (fixed != space.fixed_assignments.end()) {
      c.values[i] = d.to_internal(fixed->second);
    } else if (d.is_categorical()) {
      double k = static_cast<double>(d.category_count());
      c.values[i] = std::min(std::floor(uniform_double(rng) * k), k - 1.0);
    } else {
      c.values[i] = uniform_in(rng, d.internal_lo(), d.internal_hi());
    }
  }
  return c;
}

namespace {

bool target_reached(double psi, double target, Direction dir) {
  if (!std::isfinite(psi))
    return false;
  return dir == Direction::minimize ? psi <= target : psi >= target;
}

const EvaluationRecord &best_record(const std::vector<EvaluationRecord> &rs,
                                    Direction direction) {
  const EvaluationRecord *best = &rs.front();
  for (const auto &r : rs)
    if (is_better(r.best_psi, best->best_psi, direction))
      best = &r;
  return *best;
}

} // namespace

Feedback initial_feedback(const SearchSpace &space, Rng &rng) {
  Feedback fb;
  Coordinate start = draw_start(space, rng);
  for (const auto &n : space.objective_names)
    fb.per_terminal[n] = start;
  return fb;
}

Feedback prepare_feedback(const std::vector<EvaluationRecord> &records,
                          Direction direction) {
  if (records.empty())
    throw ConfigError("feedback needs at least one record");
  const EvaluationRecord &win = best_record(records, direction);
  Feedback fb;
  for (const auto &r : records)
    fb.per_terminal[r.dim_name] = win.best;
  return fb;
}

RunReport tune(const Hierarchy &h, const SearchSpace &space,
               const ObjectiveHandle &objective, const TuneOptions &opts) {
  validate_space(space);
  if (opts.budget == 0)
    throw ConfigError("budget must be >= 1");
  if (h.nodes.empty() || h.node(h.root).primary != space.objective_names)
    throw ConfigError("hierarchy does not cover this space's objective set");

  auto eps0 = opts.eps.empty() ? default_widths(space, opts.omega) : opts.eps;
  for (const auto &n : space.objective_names)
    if (!eps0.count(n))
      throw ConfigError("no width given for objective dimension '" + n + "'");
  WidthState initial;
  initial.eps = eps0;
  for (const auto &n : space.objective_names)
    initial.deltas[n] = opts.delta;

  // Every terminal carries its own width vector and random stream, keyed by
  // its dimension's position so results don't depend on tree layout.
  const auto terminal_ids = h.terminal_ids();
  std::vector<Rng> streams;
  std::vector<WidthState> widths(terminal_ids.size(), initial);
  streams.reserve(terminal_ids.size());
  for (std::size_t t : terminal_ids) {
    const auto &name = h.node(t).primary.front();
    auto pos = std::find(space.objective_names.begin(),
                         space.objective_names.end(), name) -
               space.objective_names.begin();
    streams.push_back(make_stream(opts.seed, StreamPurpose::terminal_agent,
                                  static_cast<std::uint64_t>(pos)));
  }

  const long evals0 = objective.evaluations();
  const long setup0 = objective.setup_evaluations();

  Coordinate start;
  if (opts.start) {
    start = *opts.start;
    if (!in_domain(space, start))
      throw DomainError("provided start coordinate is outside the space");
  } else {
    Rng srng = make_stream(opts.seed, StreamPurpose::initial_start);
    start = draw_start(space, srng);
  }
  double start_psi = objective.evaluate_setup(start);

  RunReport report;
  const std::size_t workers = resolve_threads(opts.threads);

  for (std::size_t iter = 1; iter <= opts.iterations; ++iter) {
    if (opts.target_psi &&
        target_reached(start_psi, *opts.target_psi, space.direction))
      break;

    std::vector<CandidateSet> sets(terminal_ids.size());
    for (std::size_t t = 0; t < terminal_ids.size(); ++t) {
      sets[t] = generate_candidates(space, h.node(terminal_ids[t]), start,
                                    widths[t], opts.budget, streams[t]);
      sets[t].psis[0] = start_psi; // travels with the broadcast
      if (sets[t].used_fallback)
        ++report.width_fallbacks;
    }

    // Only the fresh coordinates (indices 1..b of each set) get evaluated.
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    jobs.reserve(terminal_ids.size() * opts.budget);
    for (std::size_t t = 0; t < sets.size(); ++t)
      for (std::size_t i = 1; i < sets[t].coords.size(); ++i)
        jobs.emplace_back(t, i);
    parallel_for(jobs.size(), workers, [&](std::size_t j) {
      auto [t, i] = jobs[j];
      sets[t].psis[i] = objective(sets[t].coords[i]);
    });

    IterationTrace tr;
    tr.iteration = iter;
    tr.start_psi = start_psi;

    // Records go up; the root's argmin over them becomes the next
    // broadcast. Each record already folds the start in (select_best keeps
    // it on ties), so the winner can only improve on it.
    std::vector<EvaluationRecord> records;
    records.reserve(sets.size());
    for (std::size_t t = 0; t < sets.size(); ++t) {
      records.push_back(select_best(h.node(terminal_ids[t]).primary.front(),
                                    sets[t], space.direction));
      tr.per_terminal_best.push_back(records.back().best_psi);
      if (records.back().best_index == 0) // own samples never beat the start
        widths[t] = update_width(widths[t], true);
    }

    const EvaluationRecord &win = best_record(records, space.direction);
    bool improved = is_better(win.best_psi, start_psi, space.direction);
    tr.stagnated = !improved;
    if (improved) {
      start = win.best;
      start_psi = win.best_psi;
    }
    tr.best_psi = start_psi;
    report.trace.push_back(std::move(tr));
    report.iterations_run = iter;
  }

  report.best = std::move(start);
  report.best_psi = start_psi;
  report.evaluations =
      static_cast<std::size_t>(objective.evaluations() - evals0);
  report.setup_evaluations =
      static_cast<std::size_t>(objective.setup_evaluations() - setup0);
  for (std::size_t t = 0; t < terminal_ids.size(); ++t) {
    const auto &name = h.node(terminal_ids[t]).primary.front();
    report.final_widths[name] = widths[t].eps.at(name);
  }
  return report;
}

} // namespace hiersearch
