#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "tol/axioms.hpp"
#include "tol/relation.hpp"

namespace tol {

// Thrown by classify when the input fails one of the required axioms.
struct AxiomViolationError : DomainError {
  AxiomViolationError(std::string msg, Witness w)
      : DomainError(std::move(msg)), witness(std::move(w)) {}
  Witness witness;
};

// Cyclic point sequence x_0 ... x_{p-1} with every consecutive triple
// x_{i-1} x_i x_{i+1} a member (indices mod p).
struct GeodesicCircuit {
  std::vector<Point> points;

  int length() const { return static_cast<int>(points.size()); }
  Point at(int i) const {  // cyclic indexing
    const int p = length();
    return points[static_cast<size_t>(((i % p) + p) % p)];
  }
  bool contains(Point a) const;
};

// Lexicographically first 3-set whose induced member set is cyclic.
std::optional<std::array<Point, 3>> find_cyclic_3set(const TernaryRelation& rel);

// Grow a maximal geodesic circuit from a cyclic 3-set by greedy insertion:
// scan gaps in index order and insert the smallest point that fits between
// two consecutive circuit points. The result admits no further insertion.
// Throws ConsistencyError if an insertion breaks the circuit invariant
// (impossible when the relation satisfies B, C, D, F and 2).
GeodesicCircuit grow_geodesic_circuit(const TernaryRelation& rel,
                                      std::array<Point, 3> seed);

// The interval [x y]: all z with xzy a member, plus x and y. Sorted.
// Throws DomainError when x == y.
std::vector<Point> interval(const TernaryRelation& rel, Point x, Point y);

// The unique index i with x_{i-1} a x_{i+1} a member, for an off-circuit
// point a of a maximal circuit. Throws DomainError if a lies on the
// circuit, ConsistencyError if the index is missing or not unique.
int locate_type(const TernaryRelation& rel, const GeodesicCircuit& circuit, Point a);

// The three shapes a model of {B, C, D, F, 2} can take.
struct LinearOrder {
  std::vector<Point> order;  // path order; reversal is equivalent
};
struct FourCycle {
  std::array<Point, 4> labeling;  // labeling[k] is the point at 4-cycle vertex k
};
struct DuplicatedCycle {
  int p = 0;                   // circuit length
  std::vector<int> duplicated; // sorted duplicate indices in [0, p)
  std::vector<int> mapping;    // point -> vertex of the doubled-cycle subdigraph
};
using Classification = std::variant<LinearOrder, FourCycle, DuplicatedCycle>;

// Implements the structure theorem for {B, C, D, F, 2}: axioms are checked
// first (AxiomViolationError on failure); a relation with a cyclic 3-set is
// mapped onto the quasimetric betweenness of a doubled-cycle subdigraph;
// otherwise it is a path order or the exceptional 4-cycle. The returned
// classification always passes verify_classification.
Classification classify(const TernaryRelation& rel);

// Rebuild the target relation named by the classification and check that
// its mapping is a bijection carrying rel exactly onto it. Never throws;
// false on any mismatch.
bool verify_classification(const TernaryRelation& rel, const Classification& cls);

}  // namespace tol
