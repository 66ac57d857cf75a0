#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tol/io.hpp"
#include "tol/relation.hpp"

using namespace tol;

namespace {

TernaryRelation cycle3() {
  return make_relation(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

TernaryRelation random_relation(int n, std::mt19937& rng, double density = 0.3) {
  std::bernoulli_distribution coin(density);
  RelationBuilder b(n);
  for (Point a = 0; a < n; ++a)
    for (Point b2 = 0; b2 < n; ++b2)
      for (Point c = 0; c < n; ++c)
        if (coin(rng)) b.add(a, b2, c);
  return std::move(b).build();
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<Point> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("make_relation basics") {
  const auto empty = make_relation(3, {});
  CHECK(empty.n() == 3);
  CHECK(empty.size() == 0);
  CHECK_FALSE(empty.contains(0, 1, 2));

  const auto z3 = cycle3();
  CHECK(z3.size() == 3);
  CHECK(z3.contains(0, 1, 2));
  CHECK(z3.contains(1, 2, 0));
  CHECK_FALSE(z3.contains(0, 2, 1));

  CHECK_THROWS_AS(make_relation(3, {{0, 1, 2}, {1, 0, 3}}), DomainError);
  CHECK_THROWS_AS(make_relation(0, {}), DomainError);
}

TEST_CASE("members are sorted and round-trip") {
  const auto z3 = cycle3();
  const auto m = z3.members();
  REQUIRE(m.size() == 3);
  CHECK(std::is_sorted(m.begin(), m.end()));
  CHECK(make_relation(3, m) == z3);
}

TEST_CASE("apply_permutation") {
  const auto z3 = cycle3();
  CHECK(apply_permutation(z3, Permutation::identity(3)) == z3);

  // The rotation 0->1->2->0 fixes the cyclic order.
  CHECK(apply_permutation(z3, Permutation({1, 2, 0})) == z3);

  const auto p3 = make_relation(3, {{0, 1, 2}, {2, 1, 0}});
  CHECK(apply_permutation(p3, Permutation({2, 1, 0})) == p3);

  CHECK_THROWS_AS(apply_permutation(z3, Permutation::identity(4)), DomainError);
}

TEST_CASE("apply_permutation round-trips through the inverse") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto rel = random_relation(n, rng);
      const auto p = random_permutation(n, rng);
      CHECK(apply_permutation(apply_permutation(rel, p), p.inverse()) == rel);
    }
  }
}

TEST_CASE("are_isomorphic") {
  const auto z3 = cycle3();
  const auto reversed = make_relation(3, {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  const auto p = are_isomorphic(z3, reversed);
  REQUIRE(p.has_value());
  CHECK(apply_permutation(z3, *p) == reversed);

  CHECK_FALSE(are_isomorphic(z3, make_relation(3, {{0, 1, 2}, {2, 1, 0}})).has_value());
  CHECK_FALSE(are_isomorphic(z3, make_relation(4, {})).has_value());

  const auto self = are_isomorphic(z3, z3);
  REQUIRE(self.has_value());
  CHECK(apply_permutation(z3, *self) == z3);
}

TEST_CASE("canonical_form is idempotent and permutation-invariant") {
  std::mt19937 rng(13);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto rel = random_relation(n, rng);
      const auto canon = canonical_form(rel);
      CHECK(canonical_form(canon) == canon);
      CHECK(canonical_form(apply_permutation(rel, random_permutation(n, rng))) == canon);
    }
  }
}

TEST_CASE("canonical forms separate isomorphism classes") {
  const auto z3 = cycle3();
  const auto reversed = make_relation(3, {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK(canonical_form(z3) == canonical_form(reversed));
  CHECK(canonical_form(z3) != canonical_form(make_relation(3, {{0, 1, 2}, {2, 1, 0}})));

  const auto empty = make_relation(3, {});
  CHECK(canonical_form(empty) == empty);
}

TEST_CASE("relation text format round-trips") {
  const auto z3 = cycle3();
  CHECK(io::parse_relation_text(io::relation_to_text(z3)) == z3);
  CHECK(io::relation_to_text(z3) == "n 3\n0 1 2\n1 2 0\n2 0 1\n");

  const auto parsed = io::parse_relation_text("# cyclic order\nn 3\n0 1 2\n\n1 2 0 # tail\n2 0 1\n");
  CHECK(parsed == z3);

  CHECK_THROWS_AS(io::parse_relation_text("n 3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_relation_text("3\n0 1 2\n"), ParseError);
  try {
    io::parse_relation_text("n 3\n0 1 2\n0 1 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("relation JSON round-trips and is sniffed") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rel = random_relation(4, rng);
    CHECK(io::parse_relation_json(io::relation_to_json(rel)) == rel);
    CHECK(io::parse_relation(io::relation_to_json(rel).dump()) == rel);
    CHECK(io::parse_relation(io::relation_to_text(rel)) == rel);
  }
}
