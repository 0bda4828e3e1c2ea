#pragma once

#include <cstddef>
#include <cstdint>

#include "hiersearch/domain.hpp"
#include "hiersearch/engine.hpp"

namespace hiersearch {

// Matched-evaluation setup for the reference methods: `agents` players each
// spend `budget` evaluations per iteration, so a run costs exactly
// agents x budget x iterations calls — the same bill as the hierarchy's
// terminals. agents == 0 means one per objective dimension.
struct BaselineOptions {
  std::size_t agents = 0;
  std::size_t iterations = 10;
  std::size_t budget = 3;
  std::uint64_t seed = 0;
  int threads = -1; // negative -> HIERSEARCH_THREADS
};

// Independent uniform draws over the whole space, best-of-all.
RunReport random_search(const SearchSpace &space,
                        const ObjectiveHandle &objective,
                        const BaselineOptions &opts);

// One Latin hypercube design over all agents x budget x iterations points
// (every dimension cut into that many strata, visited once each), evaluated
// in design order and reported in iteration-sized chunks.
RunReport latin_hypercube(const SearchSpace &space,
                          const ObjectiveHandle &objective,
                          const BaselineOptions &opts);

} // namespace hiersearch
