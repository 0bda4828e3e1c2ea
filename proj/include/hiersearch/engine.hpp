#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hiersearch/domain.hpp"
#include "hiersearch/hierarchy.hpp"
#include "hiersearch/rng.hpp"
#include "hiersearch/sampler.hpp"

namespace hiersearch {

// What the root sends down: one start per terminal dimension. Under the
// broadcast rule every entry is the same coordinate.
struct Feedback {
  std::map<std::string, Coordinate> per_terminal;
};

// The shared first start: objective dimensions drawn uniformly, fixed ones
// pinned; all terminals begin at the same point.
Feedback initial_feedback(const SearchSpace &space, Rng &rng);

// The collaboration rule: the best record's coordinate (ties keep the
// earliest record) becomes everyone's next start.
Feedback prepare_feedback(const std::vector<EvaluationRecord> &records,
                          Direction direction);

struct TuneOptions {
  std::size_t iterations = 10; // I
  std::size_t budget = 3;      // b, evaluations per terminal per iteration
  double omega = 9.0;          // default width exponent: eps = 2^-(omega+1)
  std::map<std::string, double> eps; // per-dimension widths; empty -> omega
  double delta = 2.0;                // width growth factor on stagnation
  std::uint64_t seed = 0;
  int threads = -1; // workers for evaluation; negative -> HIERSEARCH_THREADS
  std::optional<double> target_psi;  // stop once reached
  std::optional<Coordinate> start;   // else drawn from the seed
};

// eps = 2^-(omega+1) for every objective dimension.
std::map<std::string, double> default_widths(const SearchSpace &space,
                                             double omega);

// Fixed dimensions at their pinned values, objective dimensions uniform over
// their (internal) domains.
Coordinate draw_start(const SearchSpace &space, Rng &rng);

struct IterationTrace {
  std::size_t iteration = 0; // 1-based
  double start_psi = 0.0;    // response at the iteration's shared start
  double best_psi = 0.0;     // winning record, becomes the next start
  bool stagnated = false;    // no sample beat the start -> widths grew
  std::vector<double> per_terminal_best; // best sampled psi, terminal order
};

struct RunReport {
  Coordinate best;
  double best_psi = 0.0;
  std::size_t iterations_run = 0;
  std::size_t evaluations = 0;       // counted objective calls in this run
  std::size_t setup_evaluations = 0; // the initial start's one-off
  std::size_t width_fallbacks = 0;   // window-covered-domain events
  std::map<std::string, double> final_widths;
  std::vector<IterationTrace> trace;
};

// The full search loop: each iteration the shared start goes down the tree,
// terminals sample and evaluate, the records come back up, and the root
// broadcasts the best record (which ties back to the start, growing every
// width by delta, whenever no sample improved on it). The start's response
// travels with the broadcast, so it is never re-evaluated.
RunReport tune(const Hierarchy &h, const SearchSpace &space,
               const ObjectiveHandle &objective, const TuneOptions &opts);

} // namespace hiersearch
