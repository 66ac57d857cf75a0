#pragma once

#include <vector>

#include "tol/axioms.hpp"
#include "tol/relation.hpp"

namespace tol::clauses {

// Fixed bit indexing of a triple domain: either all of V^3 or only the
// pairwise-distinct triples, in lexicographic (a,b,c) order.
class TripleSpace {
 public:
  static TripleSpace distinct(int n);
  static TripleSpace full(int n);

  int n() const { return n_; }
  bool distinct_only() const { return distinct_only_; }
  int bits() const { return static_cast<int>(triples_.size()); }

  // Bit index of t, or -1 when t is not representable in this space.
  int index(Triple t) const;
  Triple triple_at(int bit) const { return triples_[static_cast<size_t>(bit)]; }

  // Conversions for spaces of at most 25 bits (little-endian membership
  // mask over the bit indices).
  TernaryRelation to_relation(std::uint32_t mask) const;
  std::uint32_t to_mask(const TernaryRelation& rel) const;  // throws if not representable

 private:
  TripleSpace(int n, bool distinct_only);
  int n_;
  bool distinct_only_;
  std::vector<Triple> triples_;
  std::vector<int> rank_;  // full-cube index -> bit or -1
};

// One universally quantified axiom instance, lowered to bit indices:
// the clause FIRES (i.e. the axiom is violated) iff every hyp bit is set
// and every concl bit is clear. Axiom holds on a relation iff no clause
// of its program fires.
struct Clause {
  std::vector<int> hyp;    // sorted, deduplicated
  std::vector<int> concl;  // sorted, deduplicated

  friend auto operator<=>(const Clause&, const Clause&) = default;
};

// Compile the axiom's full quantifier sweep over the space. Instances whose
// hypothesis mentions an unrepresentable triple are dropped (unsatisfiable
// hypothesis); unrepresentable conclusion triples are removed from the
// disjunction; instances whose conclusion repeats a hypothesis triple are
// dropped (trivially true). The result is deduplicated and sorted, so it is
// deterministic.
std::vector<Clause> compile_axiom(AxiomId ax, const TripleSpace& space);

// Evaluate a compiled program against a relation-as-bitmask (little-endian
// over bit indices, for spaces of at most 25 bits). Test helper and scalar
// reference for the sweep kernels.
bool program_holds(const std::vector<Clause>& program, std::uint32_t mask);

}  // namespace tol::clauses
