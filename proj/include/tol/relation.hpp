#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tol/errors.hpp"

namespace tol {

// Ground-set element, always in [0, n) of the owning relation.
using Point = int;

// Ordered triple of points. Repeats are representable on purpose: axiom D
// ("members have pairwise distinct points") must be checkable, so the
// membership domain is all of V^3.
struct Triple {
  Point a = 0, b = 0, c = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// The five non-identity rearrangements of a triple, named by the resulting
// letter pattern for (a,b,c).
constexpr Triple acb(Triple t) { return {t.a, t.c, t.b}; }
constexpr Triple bac(Triple t) { return {t.b, t.a, t.c}; }
constexpr Triple bca(Triple t) { return {t.b, t.c, t.a}; }
constexpr Triple cab(Triple t) { return {t.c, t.a, t.b}; }
constexpr Triple cba(Triple t) { return {t.c, t.b, t.a}; }

constexpr bool pairwise_distinct(Triple t) {
  return t.a != t.b && t.b != t.c && t.a != t.c;
}

// A bijection on [0, n). image()[i] is where point i goes.
class Permutation {
 public:
  explicit Permutation(std::vector<Point> image);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(image_.size()); }
  Point operator()(Point p) const { return image_[static_cast<size_t>(p)]; }
  Triple operator()(Triple t) const { return {(*this)(t.a), (*this)(t.b), (*this)(t.c)}; }
  Permutation inverse() const;
  const std::vector<Point>& image() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> image_;
};

// A finite ternary relation: a set of ordered triples over ground set
// {0, ..., n-1}. Values are immutable after construction and safe to share
// across threads. Membership is kept as a bit array indexed by
// (a*n + b)*n + c, which makes whole-relation operations cheap during
// enumeration.
class TernaryRelation {
 public:
  // Throws DomainError naming the offending triple if any point is out of
  // range. n must be >= 1.
  TernaryRelation(int n, std::span<const Triple> triples);
  static TernaryRelation empty(int n) { return TernaryRelation(n, {}); }

  int n() const { return n_; }
  bool contains(Triple t) const {
    return in_range(t) && test(index(t));
  }
  bool contains(Point a, Point b, Point c) const { return contains({a, b, c}); }

  // Number of member triples.
  std::size_t size() const;
  bool is_empty() const { return size() == 0; }

  // All members in lexicographic (a,b,c) order.
  std::vector<Triple> members() const;

  friend bool operator==(const TernaryRelation&, const TernaryRelation&) = default;

  // Total order used for canonical forms: by n, then by the membership bit
  // sequence in triple-index order (absent < present at the first index
  // where the two relations differ).
  friend bool operator<(const TernaryRelation& lhs, const TernaryRelation& rhs);

 private:
  friend class RelationBuilder;
  bool in_range(Triple t) const {
    return t.a >= 0 && t.a < n_ && t.b >= 0 && t.b < n_ && t.c >= 0 && t.c < n_;
  }
  std::size_t index(Triple t) const {
    return (static_cast<size_t>(t.a) * n_ + t.b) * n_ + t.c;
  }
  bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }

  int n_;
  std::vector<std::uint64_t> bits_;
};

// Incremental construction, used by readers and generators. The finished
// relation is still immutable.
class RelationBuilder {
 public:
  explicit RelationBuilder(int n);
  void add(Triple t);  // throws DomainError if out of range
  void add(Point a, Point b, Point c) { add({a, b, c}); }
  TernaryRelation build() &&;

 private:
  TernaryRelation rel_;
};

TernaryRelation make_relation(int n, std::span<const Triple> triples);
TernaryRelation make_relation(int n, std::initializer_list<Triple> triples);

// Relabeled copy: abc is a member of the result iff p^-1(a) p^-1(b) p^-1(c)
// is a member of rel. Throws DomainError on size mismatch.
TernaryRelation apply_permutation(const TernaryRelation& rel, const Permutation& p);

// Some permutation carrying r1 onto r2, or nullopt. Exhaustive over all n!
// permutations; intended for n <= 10. Distinct ground-set sizes are simply
// not isomorphic.
std::optional<Permutation> are_isomorphic(const TernaryRelation& r1,
                                          const TernaryRelation& r2);

// Minimum relabeling of rel under the fixed relation order above. Two
// relations have equal canonical forms iff they are isomorphic.
TernaryRelation canonical_form(const TernaryRelation& rel);

}  // namespace tol
