#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tol/axioms.hpp"
#include "tol/digraph.hpp"
#include "tol/io.hpp"
#include "tol/lines.hpp"

using namespace tol;

TEST_CASE("directed cycles") {
  const auto c3 = cycle_digraph(3);
  CHECK(c3.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});

  const auto c4 = cycle_digraph(4);
  CHECK(c4.arc_count() == 4);
  CHECK_NOTHROW(quasimetric(c4));  // strongly connected

  CHECK_THROWS_AS(cycle_digraph(2), DomainError);
}

TEST_CASE("doubled cycles") {
  const auto d3 = doubled_cycle_digraph(3);
  CHECK(d3.n() == 6);
  CHECK(d3.arc_count() == 12);

  const auto d5 = doubled_cycle_digraph(5);
  CHECK(d5.n() == 10);
  CHECK(d5.arc_count() == 20);

  // original 0 -> duplicate 1 is an arc; original 0 -> original 2 is not.
  CHECK(d3.has_arc(0, 3));
  CHECK_FALSE(d3.has_arc(0, 4));
}

TEST_CASE("doubled-cycle subdigraphs") {
  const std::vector<int> none;
  const auto plain = doubled_cycle_subdigraph(4, none);
  CHECK(plain.n() == 4);
  CHECK(plain.arcs() == cycle_digraph(4).arcs());

  const std::vector<int> all = {0, 1, 2};
  const auto full = doubled_cycle_subdigraph(3, all);
  CHECK(full.n() == 6);
  CHECK(full.arc_count() == 12);
  // Same structure as the doubled cycle, only the labeling differs.
  const auto full_rel = betweenness_from_quasimetric(quasimetric(full));
  const auto dpp_rel = betweenness_from_quasimetric(quasimetric(doubled_cycle_digraph(3)));
  CHECK(are_isomorphic(full_rel, dpp_rel).has_value());

  const std::vector<int> zero = {0};
  const auto star = doubled_cycle_subdigraph(3, zero);
  CHECK(star.n() == 4);
  CHECK(star.has_arc(3, 1));  // duplicate of 0 -> original 1
  CHECK(star.has_arc(2, 3));  // original 2 -> duplicate of 0
  CHECK(star.arc_count() == 5);

  CHECK_THROWS_AS(doubled_cycle_subdigraph(3, std::vector<int>{3}), DomainError);
}

TEST_CASE("quasimetric distances") {
  const auto d3 = quasimetric(cycle_digraph(3));
  CHECK(d3.at(0, 1) == 1);
  CHECK(d3.at(1, 0) == 2);

  const std::vector<int> zero = {0};
  const auto dstar = quasimetric(doubled_cycle_subdigraph(3, zero));
  CHECK(dstar.at(0, 3) == 3);  // original 0 to its duplicate: all the way around
  CHECK(dstar.at(3, 0) == 3);

  Digraph g(2);
  g.add_arc(0, 1);
  CHECK_THROWS_WITH_AS(quasimetric(g),
                       "digraph is not strongly connected: no path from 1 to 0",
                       DomainError);
}

TEST_CASE("betweenness from quasimetric") {
  CHECK(betweenness_from_quasimetric(quasimetric(cycle_digraph(3))) ==
        make_relation(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));

  CHECK(path_betweenness(3) == make_relation(3, {{0, 1, 2}, {2, 1, 0}}));

  CHECK(betweenness_from_quasimetric(DistanceMatrix(1, {0})) ==
        TernaryRelation::empty(1));
}

TEST_CASE("cycle order closed form") {
  CHECK(cycle_order(3) == make_relation(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  CHECK_FALSE(cycle_order(3).contains(0, 2, 1));

  const auto z4 = cycle_order(4);
  CHECK(z4.size() == 12);
  for (Triple t : {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 2, 3}, Triple{1, 2, 3}}) {
    CHECK(z4.contains(t));
    CHECK(z4.contains(bca(t)));
    CHECK(z4.contains(cab(t)));
  }

  for (int p = 3; p <= 7; ++p)
    CHECK(cycle_order(p) == betweenness_from_quasimetric(quasimetric(cycle_digraph(p))));

  CHECK_THROWS_AS(cycle_order(2), DomainError);
}

TEST_CASE("cycle orders satisfy the cycle-order axioms") {
  for (int p = 3; p <= 7; ++p) {
    const auto rel = cycle_order(p);
    for (AxiomId ax : kCycleOrderAxioms) CHECK(holds(rel, ax));
  }
}

TEST_CASE("doubled-cycle betweenness closed form") {
  const auto formula3 = doubled_cycle_betweenness_formula(3);
  CHECK(formula3.contains(0, 2, 1));        // original 0, original 1, duplicate 0
  CHECK_FALSE(formula3.contains(0, 1, 2));  // the duplicate cannot be an endpoint middle

  for (int p = 3; p <= 5; ++p)
    CHECK(doubled_cycle_betweenness_formula(p) ==
          betweenness_from_quasimetric(quasimetric(doubled_cycle_digraph(p))));
}

TEST_CASE("paths and the 4-cycle") {
  CHECK(path_betweenness(2) == TernaryRelation::empty(2));
  CHECK(path_betweenness(1) == TernaryRelation::empty(1));

  const auto c4 = c4_betweenness();
  CHECK(c4.contains(0, 1, 2));
  CHECK(c4.contains(2, 1, 0));
  CHECK_FALSE(c4.contains(0, 1, 3));
  CHECK(c4.size() == 8);
}

TEST_CASE("every strongly connected doubled-cycle subdigraph gives a one-line bcdf2 model") {
  for (int p = 3; p <= 5; ++p) {
    for (unsigned pick = 0; pick < (1u << p); ++pick) {
      std::vector<int> dup;
      for (int i = 0; i < p; ++i)
        if (pick & (1u << i)) dup.push_back(i);
      const auto rel =
          betweenness_from_quasimetric(quasimetric(doubled_cycle_subdigraph(p, dup)));
      for (AxiomId ax : kBcdf2Axioms) CHECK(holds(rel, ax));
      const auto family = all_lines(rel);
      REQUIRE(family.size() == 1);
      CHECK(static_cast<int>(family.begin()->size()) == rel.n());
    }
  }
}

TEST_CASE("digraph text round-trips") {
  const auto g = doubled_cycle_subdigraph(3, std::vector<int>{0});
  const auto text = io::digraph_to_text(g);
  const auto parsed = io::parse_digraph_text(text);
  CHECK(parsed.n() == g.n());
  CHECK(parsed.arcs() == g.arcs());
  CHECK_THROWS_AS(io::parse_digraph_text("n 2\n0 0\n"), ParseError);
}
