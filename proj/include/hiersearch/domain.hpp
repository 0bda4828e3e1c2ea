#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hiersearch/errors.hpp"

namespace hiersearch {

enum class Scale { linear, log10 };
enum class Direction { minimize, maximize };

struct ContinuousDomain {
  double lo = 0.0;
  double hi = 1.0;
  Scale scale = Scale::linear;
};

struct CategoricalDomain {
  std::vector<std::string> labels;
};

// A single decision variable. Continuous dimensions with log10 scale are
// sampled and width-adapted in exponent space; categorical dimensions are
// represented as an index into the label list, sampled over [0, k).
struct Dimension {
  std::string name;
  std::variant<ContinuousDomain, CategoricalDomain> domain;

  static Dimension continuous(std::string name, double lo, double hi,
                              Scale scale = Scale::linear);
  static Dimension categorical(std::string name,
                               std::vector<std::string> labels);

  bool is_categorical() const {
    return std::holds_alternative<CategoricalDomain>(domain);
  }
  std::size_t category_count() const;

  // Bounds of the internal sampling interval: exponent space for log10
  // dimensions, [0, k) for categorical ones.
  double internal_lo() const;
  double internal_hi() const;

  double to_internal(double external) const;
  double to_external(double internal) const;
};

// The decision variables plus the objective/fixed split. Fixed assignments
// are stored in external units (a label index for categorical dimensions).
struct SearchSpace {
  std::vector<Dimension> dimensions;
  std::vector<std::string> objective_names;
  std::map<std::string, double> fixed_assignments;
  Direction direction = Direction::minimize;

  std::size_t size() const { return dimensions.size(); }
  std::size_t index_of(std::string_view name) const;
  const Dimension &dim(std::string_view name) const;
  bool is_objective(std::string_view name) const;
  std::vector<std::size_t> objective_indices() const;
};

// A complete assignment, one internal-space value per dimension of the
// owning SearchSpace, in the space's dimension order.
struct Coordinate {
  std::vector<double> values;

  bool operator==(const Coordinate &) const = default;

  double at(const SearchSpace &space, std::string_view name) const {
    return values.at(space.index_of(name));
  }
};

// Maps a coordinate back to external units (exponentiating log10 dimensions).
std::vector<double> to_external(const SearchSpace &space, const Coordinate &c);

// Throws OverlappingSets, EmptyObjectiveSet, or DomainError when an
// invariant fails; returns normally otherwise.
void validate_space(const SearchSpace &space);

// Identity for in-domain values; clips continuous values (internal space) to
// the nearest bound. Categorical indices outside [0, k) throw.
double clamp_to_domain(const Dimension &dim, double v);

// True when clamp_to_domain(dim, v) == v for every dimension.
bool in_domain(const SearchSpace &space, const Coordinate &c);

// The response function Psi. Counts every evaluation; the one-off evaluation
// of a run's initial start is charged to a separate setup counter.
class ObjectiveHandle {
public:
  using Fn = std::function<double(const Coordinate &)>;

  explicit ObjectiveHandle(Fn fn, std::size_t expected_arity = 0)
      : fn_(std::move(fn)), arity_(expected_arity) {}

  ObjectiveHandle(const ObjectiveHandle &) = delete;
  ObjectiveHandle &operator=(const ObjectiveHandle &) = delete;

  double operator()(const Coordinate &c) const {
    check_arity(c);
    evaluations_.fetch_add(1, std::memory_order_relaxed);
    return invoke(c);
  }

  double evaluate_setup(const Coordinate &c) const {
    check_arity(c);
    setup_evaluations_.fetch_add(1, std::memory_order_relaxed);
    return invoke(c);
  }

  long evaluations() const {
    return evaluations_.load(std::memory_order_relaxed);
  }
  long setup_evaluations() const {
    return setup_evaluations_.load(std::memory_order_relaxed);
  }

private:
  double invoke(const Coordinate &c) const;
  void check_arity(const Coordinate &c) const;

  Fn fn_;
  std::size_t arity_;
  mutable std::atomic<long> evaluations_{0};
  mutable std::atomic<long> setup_evaluations_{0};
};

// The tuple an agent receives: its primary targets, the objective dimensions
// other agents own, the pinned values, and the coordinate to start from.
// Dataset context lives behind the objective handle.
struct Query {
  std::vector<std::string> primary;
  std::vector<std::string> subsidiary;
  std::map<std::string, double> fixed;
  std::optional<Coordinate> start;
};

// Throws unless primary and subsidiary are disjoint and together cover the
// space's objective names.
void validate_query(const SearchSpace &space, const Query &q);

// Direction-aware strict comparison. Non-finite values lose against
// everything (and tie with each other), keeping argmin/argmax total.
bool is_better(double candidate, double incumbent, Direction direction);

} // namespace hiersearch
