#include "hiersearch/domain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hiersearch {

Dimension Dimension::continuous(std::string name, double lo, double hi,
                                Scale scale) {
  if (!(std::isfinite(lo) && std::isfinite(hi)))
    throw DomainError("dimension '" + name + "': bounds must be finite");
  if (!(lo < hi))
    throw DomainError("dimension '" + name + "': lower bound must be < upper");
  if (scale == Scale::log10 && !(lo > 0.0))
    throw DomainError("dimension '" + name +
                      "': log10 scale needs positive bounds");
  return Dimension{std::move(name), ContinuousDomain{lo, hi, scale}};
}

Dimension Dimension::categorical(std::string name,
                                 std::vector<std::string> labels) {
  if (labels.size() < 2)
    throw DomainError("dimension '" + name + "': needs at least 2 categories");
  std::set<std::string_view> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw DomainError("dimension '" + name + "': duplicate category label");
  return Dimension{std::move(name), CategoricalDomain{std::move(labels)}};
}

std::size_t Dimension::category_count() const {
  return std::get<CategoricalDomain>(domain).labels.size();
}

double Dimension::internal_lo() const {
  if (is_categorical())
    return 0.0;
  const auto &c = std::get<ContinuousDomain>(domain);
  return c.scale == Scale::log10 ? std::log10(c.lo) : c.lo;
}

double Dimension::internal_hi() const {
  if (is_categorical())
    return static_cast<double>(category_count());
  const auto &c = std::get<ContinuousDomain>(domain);
  return c.scale == Scale::log10 ? std::log10(c.hi) : c.hi;
}

double Dimension::to_internal(double external) const {
  if (is_categorical())
    return external;
  const auto &c = std::get<ContinuousDomain>(domain);
  return c.scale == Scale::log10 ? std::log10(external) : external;
}

double Dimension::to_external(double internal) const {
  if (is_categorical())
    return internal;
  const auto &c = std::get<ContinuousDomain>(domain);
  return c.scale == Scale::log10 ? std::pow(10.0, internal) : internal;
}

std::size_t SearchSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < dimensions.size(); ++i)
    if (dimensions[i].name == name)
      return i;
  throw DomainError("unknown dimension '" + std::string(name) + "'");
}

const Dimension &SearchSpace::dim(std::string_view name) const {
  return dimensions[index_of(name)];
}

bool SearchSpace::is_objective(std::string_view name) const {
  return std::find(objective_names.begin(), objective_names.end(), name) !=
         objective_names.end();
}

std::vector<std::size_t> SearchSpace::objective_indices() const {
  std::vector<std::size_t> out;
  out.reserve(objective_names.size());
  for (const auto &n : objective_names)
    out.push_back(index_of(n));
  return out;
}

std::vector<double> to_external(const SearchSpace &space, const Coordinate &c) {
  std::vector<double> out(c.values.size());
  for (std::size_t i = 0; i < c.values.size(); ++i)
    out[i] = space.dimensions[i].to_external(c.values[i]);
  return out;
}

void validate_space(const SearchSpace &space) {
  std::set<std::string_view> names;
  for (const auto &d : space.dimensions) {
    if (d.name.empty())
      throw DomainError("dimension with empty name");
    if (!names.insert(d.name).second)
      throw DomainError("duplicate dimension '" + d.name + "'");
  }

  if (space.objective_names.empty())
    throw EmptyObjectiveSet("objective set is empty");

  std::set<std::string_view> objective;
  for (const auto &n : space.objective_names) {
    if (!names.count(n))
      throw DomainError("objective dimension '" + n + "' not in space");
    if (!objective.insert(n).second)
      throw DomainError("objective dimension '" + n + "' listed twice");
  }

  for (const auto &[name, value] : space.fixed_assignments) {
    if (!names.count(name))
      throw DomainError("fixed dimension '" + name + "' not in space");
    if (objective.count(name))
      throw OverlappingSets("dimension '" + name +
                            "' is both objective and fixed");
    const Dimension &d = space.dim(name);
    if (d.is_categorical()) {
      double idx = 0.0;
      if (std::modf(value, &idx) != 0.0 || value < 0.0 ||
          value >= static_cast<double>(d.category_count()))
        throw CategoryOutOfRange("fixed value for '" + name +
                                 "' is not a valid category index");
    } else {
      const auto &c = std::get<ContinuousDomain>(d.domain);
      if (!(value >= c.lo && value <= c.hi))
        throw DomainError("fixed value for '" + name + "' outside its domain");
    }
  }

  // Every non-objective dimension must be pinned: agents only move objective
  // dimensions, everything else needs a value.
  for (const auto &d : space.dimensions)
    if (!objective.count(d.name) && !space.fixed_assignments.count(d.name))
      throw DomainError("dimension '" + d.name +
                        "' is neither objective nor fixed");
}

double clamp_to_domain(const Dimension &dim, double v) {
  if (dim.is_categorical()) {
    double idx = 0.0;
    if (std::modf(v, &idx) != 0.0 || v < 0.0 ||
        v >= static_cast<double>(dim.category_count()))
      throw CategoryOutOfRange("category index " + std::to_string(v) +
                               " out of range for '" + dim.name + "'");
    return v;
  }
  return std::clamp(v, dim.internal_lo(), dim.internal_hi());
}

bool in_domain(const SearchSpace &space, const Coordinate &c) {
  if (c.values.size() != space.size())
    return false;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const Dimension &d = space.dimensions[i];
    double v = c.values[i];
    if (d.is_categorical()) {
      double idx = 0.0;
      if (std::modf(v, &idx) != 0.0 || v < 0.0 ||
          v >= static_cast<double>(d.category_count()))
        return false;
    } else if (!(v >= d.internal_lo() && v <= d.internal_hi())) {
      return false;
    }
  }
  return true;
}

double ObjectiveHandle::invoke(const Coordinate &c) const {
  try {
    return fn_(c);
  } catch (const std::exception &e) {
    throw ObjectiveFailure(std::string("objective raised: ") + e.what());
  }
}

void ObjectiveHandle::check_arity(const Coordinate &c) const {
  if (arity_ != 0 && c.values.size() != arity_)
    throw DomainError("coordinate has " + std::to_string(c.values.size()) +
                      " values, objective expects " + std::to_string(arity_));
}

void validate_query(const SearchSpace &space, const Query &q) {
  std::set<std::string_view> primary(q.primary.begin(), q.primary.end());
  if (primary.size() != q.primary.size())
    throw DomainError("query primary set has duplicates");
  for (const auto &n : q.subsidiary)
    if (primary.count(n))
      throw OverlappingSets("dimension '" + n +
                            "' is both primary and subsidiary");

  std::set<std::string_view> covered(primary);
  covered.insert(q.subsidiary.begin(), q.subsidiary.end());
  for (const auto &n : space.objective_names)
    if (!covered.count(n))
      throw DomainError("objective dimension '" + n + "' missing from query");
  for (const auto &n : covered)
    if (!space.is_objective(n))
      throw DomainError("query names non-objective dimension '" +
                        std::string(n) + "'");
}

bool is_better(double candidate, double incumbent, Direction direction) {
  if (!std::isfinite(candidate))
    return false;
  if (!std::isfinite(incumbent))
    return true;
  return direction == Direction::minimize ? candidate < incumbent
                                          : candidate > incumbent;
}

} // namespace hiersearch
