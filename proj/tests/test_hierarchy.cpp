#include "doctest.h"

#include <algorithm>
#include <set>

#include "hiersearch/hierarchy.hpp"

using namespace hiersearch;

namespace {

SearchSpace space_of(std::size_t n) {
  SearchSpace s;
  for (std::size_t i = 1; i <= n; ++i) {
    std::string name = "l" + std::to_string(i);
    s.dimensions.push_back(Dimension::continuous(name, 0.0, 1.0));
    s.objective_names.push_back(name);
  }
  return s;
}

// Smallest d with c^d >= n, i.e. ceil(log_c n), in exact integer arithmetic.
std::size_t depth_formula(std::size_t n, std::size_t c) {
  std::size_t d = 0, reach = 1;
  while (reach < n) {
    reach *= c;
    ++d;
  }
  return d;
}

std::size_t geom_sum(std::size_t c, std::size_t d) { // (c^(d+1)-1)/(c-1)
  std::size_t sum = 0, term = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    sum += term;
    term *= c;
  }
  return sum;
}

} // namespace

TEST_CASE("divide splits six dimensions as in the two-subtree layout") {
  std::vector<std::string> six{"l1", "l2", "l3", "l4", "l5", "l6"};
  auto chunks = divide(six, 2);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[0] == std::vector<std::string>{"l1", "l2", "l3"});
  CHECK(chunks[1] == std::vector<std::string>{"l4", "l5", "l6"});
}

TEST_CASE("divide passes singletons through and rejects bad splits") {
  std::vector<std::string> one{"l1"};
  CHECK(divide(one, 1) == std::vector<std::vector<std::string>>{{"l1"}});
  CHECK_THROWS_AS(divide(one, 2), BadSplit);
  CHECK_THROWS_AS(divide(one, 0), BadSplit);
}

TEST_CASE("divide is an order-preserving near-even partition") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<std::string> items;
    for (std::size_t i = 0; i < n; ++i)
      items.push_back("d" + std::to_string(i));
    for (std::size_t k = 1; k <= n; ++k) {
      auto chunks = divide(items, k);
      REQUIRE(chunks.size() == k);
      std::vector<std::string> flattened;
      for (std::size_t i = 0; i < k; ++i) {
        CHECK(!chunks[i].empty());
        CHECK(chunks[i].size() + 1 >= chunks[0].size()); // larger first
        CHECK(chunks[i].size() <= chunks[0].size());
        flattened.insert(flattened.end(), chunks[i].begin(), chunks[i].end());
      }
      CHECK(flattened == items);
    }
  }
}

TEST_CASE("six dimensions with c=2 form the eleven-node tree") {
  Hierarchy h = build_hierarchy(space_of(6), 2);
  auto stats = hierarchy_stats(h);
  CHECK(stats.node_count == 11);
  CHECK(stats.depth == 3);
  CHECK(stats.terminal_count == 6);

  const AgentNode &root = h.node(h.root);
  CHECK(root.level == 0);
  CHECK(root.primary == std::vector<std::string>{"l1", "l2", "l3", "l4",
                                                 "l5", "l6"});
  CHECK(root.subsidiary.empty());

  std::set<std::string> terminals;
  for (std::size_t id : h.terminal_ids()) {
    const AgentNode &n = h.node(id);
    REQUIRE(n.primary.size() == 1);
    terminals.insert(n.primary.front());
    // subsidiary is the rest of the objective set
    CHECK(n.subsidiary.size() == 5);
  }
  CHECK(terminals == std::set<std::string>{"l1", "l2", "l3", "l4", "l5",
                                           "l6"});
}

TEST_CASE("an oversized capacity on a two-dimension node is clamped") {
  // Same shape as the uniform c=2 tree: a node holding two dimensions can
  // only ever split in two, whatever its capacity says.
  auto policy = [](std::size_t level, std::size_t ordinal) -> std::size_t {
    return (level == 2 && ordinal == 0) ? 3 : 2;
  };
  Hierarchy h = build_hierarchy(space_of(6), policy);
  auto stats = hierarchy_stats(h);
  CHECK(stats.node_count == 11);
  CHECK(stats.depth == 3);
  CHECK(stats.terminal_count == 6);
}

TEST_CASE("a single objective dimension is both root and terminal") {
  Hierarchy h = build_hierarchy(space_of(1), 5);
  CHECK(h.size() == 1);
  CHECK(h.depth() == 0);
  CHECK(h.node(h.root).is_terminal());
  CHECK(h.node(h.root).primary == std::vector<std::string>{"l1"});
}

TEST_CASE("ten dimensions at c=2 reach depth four") {
  Hierarchy h = build_hierarchy(space_of(10), 2);
  CHECK(h.depth() == 4);
  CHECK(h.terminal_ids().size() == 10);
}

TEST_CASE("children partition their parent's primary set") {
  Hierarchy h = build_hierarchy(space_of(13), 3);
  for (const AgentNode &n : h.nodes) {
    if (n.is_terminal()) {
      CHECK(n.primary.size() == 1);
      continue;
    }
    CHECK(n.children.size() >= 2);
    CHECK(n.children.size() <= n.capacity);
    std::vector<std::string> merged;
    for (std::size_t c : n.children) {
      const AgentNode &child = h.node(c);
      CHECK(child.parent == n.id);
      CHECK(child.level == n.level + 1);
      merged.insert(merged.end(), child.primary.begin(), child.primary.end());
    }
    CHECK(merged == n.primary);
  }
}

TEST_CASE("uniform trees hit the depth formula and the node-count bound") {
  for (std::size_t n = 1; n <= 64; ++n) {
    SearchSpace s = space_of(n);
    for (std::size_t c = 2; c <= 8; ++c) {
      Hierarchy h = build_hierarchy(s, c);
      auto stats = hierarchy_stats(h);
      std::size_t d = depth_formula(n, c);
      CHECK(stats.depth == d);
      CHECK(stats.terminal_count == n);
      if (d > 0)
        CHECK(stats.node_count > geom_sum(c, d - 1));
      CHECK(stats.node_count <= geom_sum(c, d));
    }
  }
}

TEST_CASE("capacity below two cannot split a multi-dimension node") {
  CHECK_THROWS_AS(build_hierarchy(space_of(4), uniform_capacity(1)),
                  ConfigError);
}

TEST_CASE("tree rendering lists every node once") {
  Hierarchy h = build_hierarchy(space_of(6), 2);
  std::string text = render_tree(h);
  for (const AgentNode &n : h.nodes)
    CHECK(text.find("[" + std::to_string(n.id) + "]") != std::string::npos);
  CHECK(text.find("manager") != std::string::npos);
  CHECK(text.find("terminal") != std::string::npos);
}
