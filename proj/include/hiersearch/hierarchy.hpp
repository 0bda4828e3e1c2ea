#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hiersearch/domain.hpp"

namespace hiersearch {

// One agent in the tree. Terminals (no children) always hold exactly one
// primary dimension; managers hold the union of their children's primaries.
// Every node's subsidiary set is the rest of the objective set.
struct AgentNode {
  std::size_t id = 0;
  std::size_t level = 0;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::vector<std::string> primary;
  std::vector<std::string> subsidiary;
  std::size_t capacity = 0; // c requested for this node, before clamping

  bool is_terminal() const { return children.empty(); }
};

struct Hierarchy {
  std::vector<AgentNode> nodes; // node id == index, root first
  std::size_t root = 0;

  std::size_t size() const { return nodes.size(); }
  const AgentNode &node(std::size_t id) const { return nodes.at(id); }
  std::size_t depth() const; // max level
  std::vector<std::size_t> terminal_ids() const; // ascending id
};

// Capacity for the node at (level, ordinal-within-level), counting ordinals
// in creation order. Must return >= 2 for any node still holding two or
// more primaries.
using CapacityPolicy =
    std::function<std::size_t(std::size_t level, std::size_t ordinal)>;

CapacityPolicy uniform_capacity(std::size_t c);

// Splits items into k contiguous chunks whose sizes differ by at most one,
// earlier chunks taking the extras. k must be in [1, items.size()].
std::vector<std::vector<std::string>> divide(
    const std::vector<std::string> &items, std::size_t k);

// Recursive top-down construction: the root owns the whole objective set;
// each node with more than one primary splits it across
// min(capacity, |primary|) children until single-dimension terminals remain.
Hierarchy build_hierarchy(const SearchSpace &space,
                          const CapacityPolicy &capacity);
Hierarchy build_hierarchy(const SearchSpace &space, std::size_t c);

struct HierarchyStats {
  std::size_t node_count = 0;
  std::size_t depth = 0;
  std::size_t terminal_count = 0;
};

HierarchyStats hierarchy_stats(const Hierarchy &h);

// Indented one-node-per-line listing, ids in creation order.
std::string render_tree(const Hierarchy &h);

} // namespace hiersearch
