#include "hiersearch/hierarchy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "hiersearch/errors.hpp"

namespace hiersearch {

std::size_t Hierarchy::depth() const {
  std::size_t d = 0;
  for (const auto &n : nodes)
    d = std::max(d, n.level);
  return d;
}

std::vector<std::size_t> Hierarchy::terminal_ids() const {
  std::vector<std::size_t> out;
  for (const auto &n : nodes)
    if (n.is_terminal())
      out.push_back(n.id);
  return out;
}

CapacityPolicy uniform_capacity(std::size_t c) {
  return [c](std::size_t, std::size_t) { return c; };
}

std::vector<std::vector<std::string>> divide(
    const std::vector<std::string> &items, std::size_t k) {
  if (k == 0 || k > items.size())
    throw BadSplit("cannot divide " + std::to_string(items.size()) +
                   " items into " + std::to_string(k) + " chunks");
  const std::size_t n = items.size();
  const std::size_t base = n / k;
  const std::size_t extra = n % k; // first `extra` chunks get one more
  std::vector<std::vector<std::string>> chunks(k);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t len = base + (i < extra ? 1 : 0);
    chunks[i].assign(items.begin() + pos, items.begin() + pos + len);
    pos += len;
  }
  return chunks;
}

Hierarchy build_hierarchy(const SearchSpace &space,
                          const CapacityPolicy &capacity) {
  validate_space(space);

  Hierarchy h;
  auto subsidiary_of = [&](const std::vector<std::string> &primary) {
    std::vector<std::string> sub;
    for (const auto &n : space.objective_names)
      if (std::find(primary.begin(), primary.end(), n) == primary.end())
        sub.push_back(n);
    return sub;
  };

  std::map<std::size_t, std::size_t> ordinal_at_level;
  auto make_node = [&](std::vector<std::string> primary, std::size_t level,
                       std::optional<std::size_t> parent) {
    AgentNode node;
    node.id = h.nodes.size();
    node.level = level;
    node.parent = parent;
    node.subsidiary = subsidiary_of(primary);
    node.primary = std::move(primary);
    node.capacity = capacity(level, ordinal_at_level[level]++);
    h.nodes.push_back(std::move(node));
    return h.nodes.back().id;
  };

  std::deque<std::size_t> pending;
  pending.push_back(make_node(space.objective_names, 0, std::nullopt));

  // Level-order expansion, so ids read top-down left-to-right.
  while (!pending.empty()) {
    std::size_t id = pending.front();
    pending.pop_front();
    auto primary = h.nodes[id].primary; // copy: make_node reallocates nodes
    if (primary.size() <= 1)
      continue;
    std::size_t cap = h.nodes[id].capacity;
    if (cap < 2)
      throw ConfigError("capacity " + std::to_string(cap) + " at node " +
                        std::to_string(id) + " cannot split " +
                        std::to_string(primary.size()) + " dimensions");
    std::size_t k = std::min(cap, primary.size());
    for (auto &chunk : divide(primary, k)) {
      std::size_t child = make_node(std::move(chunk), h.nodes[id].level + 1, id);
      h.nodes[id].children.push_back(child);
      pending.push_back(child);
    }
  }
  return h;
}

Hierarchy build_hierarchy(const SearchSpace &space, std::size_t c) {
  return build_hierarchy(space, uniform_capacity(c));
}

HierarchyStats hierarchy_stats(const Hierarchy &h) {
  return {h.size(), h.depth(), h.terminal_ids().size()};
}

std::string render_tree(const Hierarchy &h) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i)
        s += ", ";
      s += v[i];
    }
    return s;
  };
  // Depth-first so the indentation reads as a tree.
  std::vector<std::size_t> stack{h.root};
  while (!stack.empty()) {
    const AgentNode &n = h.node(stack.back());
    stack.pop_back();
    out << std::string(2 * n.level, ' ') << '[' << n.id << "] "
        << (n.is_terminal() ? "terminal" : "manager") << " primary={"
        << join(n.primary) << '}';
    if (!n.is_terminal())
      out << " c=" << n.capacity;
    out << '\n';
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
      stack.push_back(*it);
  }
  return out.str();
}

} // namespace hiersearch
