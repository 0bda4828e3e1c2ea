#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hiersearch/domain.hpp"
#include "hiersearch/hierarchy.hpp"
#include "hiersearch/rng.hpp"

namespace hiersearch {

// Interval of a dimension's internal space. The local range around a start
// is a single clipped interval (zero width iff eps == 0 on a continuous
// dimension); a complement is a list of these. Categorical indices live on
// the [0, k) continuum here and get floored back to integers at draw time.
struct Region {
  double lo = 0.0;
  double hi = 0.0;

  double measure() const { return hi - lo; }
};

// R = [max(inf D, s - eps), min(sup D, s + eps)); categorical dimensions
// widen by whole categories, floor(eps) each side, and always keep the
// start's own category inside.
Region local_range(const Dimension &dim, double s, double eps);

// The domain minus `r`, as up to two ascending intervals.
std::vector<Region> complement_of(const Dimension &dim, const Region &r);

double total_measure(const std::vector<Region> &intervals);

// Concatenates the intervals, cuts the total mass into num_slots equal
// slices, and draws uniformly inside the slot_index-th (1-based) slice.
// Zero total measure throws EmptyRegion; a bad slot index throws BadSplit.
double uniform_rand(const std::vector<Region> &intervals,
                    std::size_t num_slots, std::size_t slot_index, Rng &rng);

// One uniform draw inside the local range; a zero-width range returns the
// start unchanged (and consumes no randomness).
double local_draw(const Dimension &dim, double start, double eps, Rng &rng);

// Each agent's exploration window per objective dimension, and how much the
// window grows when the agent stalls.
struct WidthState {
  std::map<std::string, double> eps;
  std::map<std::string, double> deltas;
};

WidthState make_widths(const SearchSpace &space, double eps, double delta);

// E' = delta (.) E when the agent's best candidate was its start, else E.
WidthState update_width(const WidthState &ws, bool stagnated);

struct CandidateSet {
  std::vector<Coordinate> coords; // b+1 entries; index 0 is the start
  std::vector<double> psis;       // parallel; psis[0] is the start's known
                                  // response, the rest start unset (NaN)
  bool used_fallback = false;     // local range swallowed the whole domain
};

// One terminal's proposal step: coords[0] is the start verbatim and is
// never re-evaluated; coords[1] draws the primary dimension from the local
// range, coords[2..b] take one draw per equal-measure slot of the
// complement. Every fresh coordinate gets a local draw per subsidiary
// dimension and copies the start elsewhere. When the local range covers the
// whole domain there is no complement, so all b draws spread over the
// domain instead (used_fallback).
CandidateSet generate_candidates(const SearchSpace &space,
                                 const AgentNode &terminal,
                                 const Coordinate &start,
                                 const WidthState &ws, std::size_t b,
                                 Rng &rng);

// What flows upward: the agent's primary dimension and its winning
// coordinate. best_index 0 means the start survived (the stagnation test).
struct EvaluationRecord {
  std::string dim_name;
  std::size_t best_index = 0;
  Coordinate best;
  double best_psi = 0.0;
};

// Argmin (or argmax) over all b+1 entries; ties keep the lowest index, so
// the start wins any tie.
EvaluationRecord select_best(const std::string &dim_name,
                             const CandidateSet &cands, Direction direction);

} // namespace hiersearch
