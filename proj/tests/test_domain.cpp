#include "doctest.h"

#include <cmath>

#include "hiersearch/domain.hpp"

using namespace hiersearch;

namespace {

SearchSpace unit_1d() {
  SearchSpace s;
  s.dimensions.push_back(Dimension::continuous("x1", 0.0, 1.0));
  s.objective_names = {"x1"};
  return s;
}

} // namespace

TEST_CASE("minimal valid space passes validation") {
  CHECK_NOTHROW(validate_space(unit_1d()));
}

TEST_CASE("a dimension cannot be objective and fixed at once") {
  SearchSpace s = unit_1d();
  s.fixed_assignments["x1"] = 0.5;
  CHECK_THROWS_AS(validate_space(s), OverlappingSets);
}

TEST_CASE("degenerate and inverted intervals are rejected") {
  CHECK_THROWS_AS(Dimension::continuous("x", 5.0, 5.0), DomainError);
  CHECK_THROWS_AS(Dimension::continuous("x", 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(Dimension::continuous("x", 0.0, 1.0, Scale::log10),
                  DomainError);
}

TEST_CASE("categorical dimensions need two distinct labels") {
  CHECK_THROWS_AS(Dimension::categorical("k", {"only"}), DomainError);
  CHECK_THROWS_AS(Dimension::categorical("k", {"a", "a"}), DomainError);
  CHECK_NOTHROW(Dimension::categorical("k", {"a", "b"}));
}

TEST_CASE("empty objective set is its own error") {
  SearchSpace s = unit_1d();
  s.objective_names.clear();
  s.fixed_assignments["x1"] = 0.5;
  CHECK_THROWS_AS(validate_space(s), EmptyObjectiveSet);
}

TEST_CASE("every non-objective dimension must be pinned") {
  SearchSpace s = unit_1d();
  s.dimensions.push_back(Dimension::continuous("x2", 0.0, 1.0));
  CHECK_THROWS_AS(validate_space(s), DomainError);
  s.fixed_assignments["x2"] = 0.25;
  CHECK_NOTHROW(validate_space(s));
  s.fixed_assignments["x2"] = 1.5; // outside [0,1]
  CHECK_THROWS_AS(validate_space(s), DomainError);
}

TEST_CASE("clamp keeps in-domain values and clips to the bounds") {
  Dimension unit = Dimension::continuous("u", 0.0, 1.0);
  CHECK(clamp_to_domain(unit, 0.5) == 0.5);
  CHECK(clamp_to_domain(unit, 1.7) == 1.0);
  Dimension ras = Dimension::continuous("r", -5.12, 5.12);
  CHECK(clamp_to_domain(ras, -9.0) == -5.12);
}

TEST_CASE("categorical clamp rejects out-of-range indices") {
  Dimension k = Dimension::categorical("k", {"a", "b", "c"});
  CHECK(clamp_to_domain(k, 2.0) == 2.0);
  CHECK_THROWS_AS(clamp_to_domain(k, 3.0), CategoryOutOfRange);
  CHECK_THROWS_AS(clamp_to_domain(k, -1.0), CategoryOutOfRange);
  CHECK_THROWS_AS(clamp_to_domain(k, 0.5), CategoryOutOfRange);
}

TEST_CASE("log10 dimensions map through exponent space") {
  Dimension lr = Dimension::continuous("lr", 1e-4, 1e2, Scale::log10);
  CHECK(lr.internal_lo() == doctest::Approx(-4.0));
  CHECK(lr.internal_hi() == doctest::Approx(2.0));
  CHECK(lr.to_external(lr.to_internal(0.01)) == doctest::Approx(0.01));
  CHECK(lr.to_external(-1.0) == doctest::Approx(0.1));
}

TEST_CASE("objective handle counts each call exactly once") {
  ObjectiveHandle h([](const Coordinate &c) { return c.values[0]; }, 1);
  Coordinate c{{0.25}};
  CHECK(h(c) == 0.25);
  CHECK(h(c) == 0.25);
  CHECK(h.evaluations() == 2);
  CHECK(h.setup_evaluations() == 0);
  CHECK(h.evaluate_setup(c) == 0.25);
  CHECK(h.evaluations() == 2);
  CHECK(h.setup_evaluations() == 1);
}

TEST_CASE("objective handle checks arity and wraps failures") {
  ObjectiveHandle h([](const Coordinate &) -> double {
    throw std::runtime_error("boom");
  }, 2);
  Coordinate wrong{{1.0}};
  CHECK_THROWS_AS(h(wrong), DomainError);
  Coordinate right{{1.0, 2.0}};
  CHECK_THROWS_AS(h(right), ObjectiveFailure);
}

TEST_CASE("query primary and subsidiary must split the objective set") {
  SearchSpace s;
  s.dimensions.push_back(Dimension::continuous("a", 0.0, 1.0));
  s.dimensions.push_back(Dimension::continuous("b", 0.0, 1.0));
  s.objective_names = {"a", "b"};

  Query ok{{"a"}, {"b"}, {}, std::nullopt};
  CHECK_NOTHROW(validate_query(s, ok));

  Query overlap{{"a"}, {"a", "b"}, {}, std::nullopt};
  CHECK_THROWS_AS(validate_query(s, overlap), OverlappingSets);

  Query missing{{"a"}, {}, {}, std::nullopt};
  CHECK_THROWS_AS(validate_query(s, missing), DomainError);
}

TEST_CASE("comparison treats non-finite responses as worst-possible") {
  const double nan = std::nan("");
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(is_better(1.0, 2.0, Direction::minimize));
  CHECK_FALSE(is_better(2.0, 1.0, Direction::minimize));
  CHECK(is_better(2.0, 1.0, Direction::maximize));
  CHECK_FALSE(is_better(nan, 100.0, Direction::minimize));
  CHECK_FALSE(is_better(inf, 100.0, Direction::minimize));
  CHECK(is_better(100.0, nan, Direction::minimize));
  CHECK_FALSE(is_better(nan, nan, Direction::minimize));
  CHECK_FALSE(is_better(1.0, 1.0, Direction::minimize)); // strict
}

TEST_CASE("external mapping exponentiates log dims only") {
  SearchSpace s;
  s.dimensions.push_back(Dimension::continuous("lin", -2.0, 2.0));
  s.dimensions.push_back(
      Dimension::continuous("log", 1e-3, 1e3, Scale::log10));
  s.objective_names = {"lin", "log"};
  Coordinate c{{1.5, 2.0}};
  auto ext = to_external(s, c);
  CHECK(ext[0] == doctest::Approx(1.5));
  CHECK(ext[1] == doctest::Approx(100.0));
}
