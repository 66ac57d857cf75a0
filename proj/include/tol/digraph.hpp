#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tol/relation.hpp"

namespace tol {

// Loop-free digraph on vertices {0, ..., n-1}.
class Digraph {
 public:
  explicit Digraph(int n);

  int n() const { return n_; }
  void add_arc(int u, int v);  // throws DomainError on loops / out of range
  bool has_arc(int u, int v) const;
  std::size_t arc_count() const;
  // Arcs in (u, v) lexicographic order.
  std::vector<std::pair<int, int>> arcs() const;
  const std::vector<int>& out_neighbors(int u) const { return out_[static_cast<size_t>(u)]; }

 private:
  int n_;
  std::vector<std::vector<int>> out_;  // each list kept sorted
};

// All-pairs directed hop distances. Always satisfies d(a,a) = 0,
// d(a,b) > 0 for a != b, and the triangle inequality; symmetry is not
// required (quasimetric).
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> distances);  // validates invariants

  int n() const { return n_; }
  int at(int a, int b) const { return d_[static_cast<size_t>(a) * n_ + b]; }

 private:
  int n_;
  std::vector<int> d_;
};

// Directed cycle 0 -> 1 -> ... -> p-1 -> 0. Requires p >= 3.
Digraph cycle_digraph(int p);

// The directed p-cycle with every vertex duplicated: a duplicate has the
// same in- and out-neighborhoods as its original. Fixed labeling:
// original i -> 2i, duplicate i -> 2i+1. Requires p >= 3.
Digraph doubled_cycle_digraph(int p);

// Induced subdigraph of the doubled cycle keeping every original vertex and
// the duplicates for the indices in `dup`. Compact labeling: originals
// 0..p-1, then duplicates in increasing index order. Requires p >= 3;
// duplicate indices must lie in [0, p).
Digraph doubled_cycle_subdigraph(int p, std::span<const int> dup);

// Undirected path 0 - 1 - ... - n-1 (each edge as two arcs).
Digraph path_digraph(int n);

// Undirected 4-cycle 0 - 1 - 2 - 3 - 0 (each edge as two arcs).
Digraph c4_digraph();

// Shortest-path hop distances. Throws DomainError naming an unreachable
// ordered pair when g is not strongly connected.
DistanceMatrix quasimetric(const Digraph& g);

// abc is a member iff a,b,c are pairwise distinct and
// d(a,c) = d(a,b) + d(b,c).
TernaryRelation betweenness_from_quasimetric(const DistanceMatrix& d);

// The cyclic order of the directed p-cycle: ijk is a member iff the three
// forward gaps i->j, j->k, k->i are all positive and sum to p. Equal to
// betweenness_from_quasimetric(quasimetric(cycle_digraph(p))).
TernaryRelation cycle_order(int p);

// Closed-form member set of the doubled cycle's quasimetric betweenness:
// triples across three distinct cycle indices follow the cyclic order, and
// each original/duplicate pair has every other point between its two
// traversal directions. Cross-checked against the shortest-path route.
TernaryRelation doubled_cycle_betweenness_formula(int p);

// Metric betweenness of the undirected path on n points.
TernaryRelation path_betweenness(int n);

// Metric betweenness of the undirected 4-cycle.
TernaryRelation c4_betweenness();

}  // namespace tol
