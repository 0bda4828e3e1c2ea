#include "hiersearch/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hiersearch/errors.hpp"

namespace hiersearch {

namespace {

Region domain_interval(const Dimension &dim) {
  return Region{dim.internal_lo(), dim.internal_hi()};
}

double floor_category(const Dimension &dim, double v, double cap) {
  return std::min(std::floor(v), cap - 1.0);
}

} // namespace

Region local_range(const Dimension &dim, double s, double eps) {
  if (eps < 0.0)
    throw ConfigError("width must be >= 0, got " + std::to_string(eps));
  if (dim.is_categorical()) {
    double w = std::floor(eps);
    double k = static_cast<double>(dim.category_count());
    return Region{std::max(0.0, s - w), std::min(k, s + w + 1.0)};
  }
  return Region{std::max(dim.internal_lo(), s - eps),
                std::min(dim.internal_hi(), s + eps)};
}

std::vector<Region> complement_of(const Dimension &dim, const Region &r) {
  Region d = domain_interval(dim);
  std::vector<Region> out;
  if (r.lo > d.lo)
    out.push_back({d.lo, std::min(r.lo, d.hi)});
  if (r.hi < d.hi)
    out.push_back({std::max(r.hi, d.lo), d.hi});
  return out;
}

double total_measure(const std::vector<Region> &intervals) {
  double sum = 0.0;
  for (const auto &r : intervals)
    sum += r.measure();
  return sum;
}

double uniform_rand(const std::vector<Region> &intervals,
                    std::size_t num_slots, std::size_t slot_index, Rng &rng) {
  double total = total_measure(intervals);
  if (intervals.empty() || total <= 0.0)
    throw EmptyRegion("nothing to sample from");
  if (num_slots < 1 || slot_index < 1 || slot_index > num_slots)
    throw BadSplit("slot " + std::to_string(slot_index) + " of " +
                   std::to_string(num_slots));

  // Position along the concatenated mass, then walk back to an interval.
  double t = (static_cast<double>(slot_index - 1) + uniform_double(rng)) *
             total / static_cast<double>(num_slots);
  double acc = 0.0;
  for (const auto &r : intervals) {
    if (t < acc + r.measure())
      return r.lo + (t - acc);
    acc += r.measure();
  }
  return intervals.back().hi; // unreachable barring fp dust at the far edge
}

double local_draw(const Dimension &dim, double start, double eps, Rng &rng) {
  Region r = local_range(dim, start, eps);
  if (r.measure() <= 0.0)
    return start; // zero-width window: stay put
  double v = r.lo + uniform_double(rng) * r.measure();
  if (dim.is_categorical())
    v = floor_category(dim, v, r.hi);
  return v;
}

WidthState make_widths(const SearchSpace &space, double eps, double delta) {
  WidthState ws;
  for (const auto &n : space.objective_names) {
    ws.eps[n] = eps;
    ws.deltas[n] = delta;
  }
  return ws;
}

WidthState update_width(const WidthState &ws, bool stagnated) {
  if (!stagnated)
    return ws;
  WidthState out = ws;
  for (auto &[name, eps] : out.eps) {
    auto it = out.deltas.find(name);
    if (it == out.deltas.end())
      throw ConfigError("no delta for dimension '" + name + "'");
    eps *= it->second;
  }
  return out;
}

CandidateSet generate_candidates(const SearchSpace &space,
                                 const AgentNode &terminal,
                                 const Coordinate &start,
                                 const WidthState &ws, std::size_t b,
                                 Rng &rng) {
  if (b == 0)
    throw ConfigError("sampling budget must be >= 1");
  if (!terminal.is_terminal() || terminal.primary.size() != 1)
    throw ConfigError("candidate generation needs a single-dimension "
                      "terminal agent");

  const std::string &pname = terminal.primary.front();
  const Dimension &pdim = space.dim(pname);
  std::size_t pidx = space.index_of(pname);
  double s = start.values.at(pidx);
  auto width = [&](const std::string &name) {
    auto it = ws.eps.find(name);
    if (it == ws.eps.end())
      throw ConfigError("no width for dimension '" + name + "'");
    return it->second;
  };

  CandidateSet out;
  Region r = local_range(pdim, s, width(pname));
  std::vector<Region> rest = complement_of(pdim, r);

  std::vector<double> primary_vals;
  primary_vals.reserve(b);
  if (total_measure(rest) > 0.0 || b == 1) {
    primary_vals.push_back(local_draw(pdim, s, width(pname), rng));
    for (std::size_t j = 1; j < b; ++j) {
      double v = uniform_rand(rest, b - 1, j, rng);
      if (pdim.is_categorical())
        v = floor_category(pdim, v,
                           static_cast<double>(pdim.category_count()));
      primary_vals.push_back(v);
    }
  } else {
    // The window covers the whole domain, so "outside it" is empty; spread
    // every draw over the domain instead.
    out.used_fallback = true;
    std::vector<Region> whole{domain_interval(pdim)};
    for (std::size_t j = 1; j <= b; ++j) {
      double v = uniform_rand(whole, b, j, rng);
      if (pdim.is_categorical())
        v = floor_category(pdim, v,
                           static_cast<double>(pdim.category_count()));
      primary_vals.push_back(v);
    }
  }

  out.coords.reserve(b + 1);
  out.coords.push_back(start); // index 0: the start, never re-evaluated
  for (std::size_t j = 0; j < b; ++j) {
    Coordinate c = start;
    c.values[pidx] = primary_vals[j];
    for (const auto &sub : terminal.subsidiary) {
      std::size_t si = space.index_of(sub);
      c.values[si] =
          local_draw(space.dimensions[si], start.values[si], width(sub), rng);
    }
    out.coords.push_back(std::move(c));
  }
  out.psis.assign(b + 1, std::numeric_limits<double>::quiet_NaN());
  return out;
}

EvaluationRecord select_best(const std::string &dim_name,
                             const CandidateSet &cands, Direction direction) {
  if (cands.coords.empty() || cands.coords.size() != cands.psis.size())
    throw ConfigError("candidate set is incomplete");
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.psis.size(); ++i)
    if (is_better(cands.psis[i], cands.psis[best], direction))
      best = i;
  return EvaluationRecord{dim_name, best, cands.coords[best],
                          cands.psis[best]};
}

} // namespace hiersearch
