#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "tol/axioms.hpp"
#include "tol/relation.hpp"

namespace tol {

// An enumeration request: all relations on n points satisfying every
// `require` axiom and violating every `forbid` axiom. The two sets must be
// disjoint. With distinct_triples_only the member domain is restricted to
// pairwise-distinct triples (axiom D then holds trivially).
struct SearchSpec {
  int n = 3;
  std::set<AxiomId> require;
  std::set<AxiomId> forbid;
  bool distinct_triples_only = true;
};

// Isomorphism-deduplicated result. Models are canonical forms, sorted
// ascending, pairwise non-isomorphic. total_before_dedup counts search
// hits before deduplication (the pruned engine applies sound symmetry
// breaking, so its raw hit count can be lower than the oracle's).
struct ModelSet {
  std::vector<TernaryRelation> models;
  std::uint64_t total_before_dedup = 0;
};

// Brute-force oracle: sweeps every relation in the space. Refuses spaces
// larger than 2^25 masks (throws DomainError stating the size); that allows
// n <= 4 over distinct triples and n <= 2 over the full triple domain.
ModelSet enumerate_raw(const SearchSpec& spec);

// Pruned engine: requires {B, C, D, F} among the required axioms and
// n <= 8. Assigns one of the five admissible states (three symmetric, two
// cyclic) to each unordered 3-set with backtracking, propagating every
// other required axiom as clauses once their supporting 3-sets are
// assigned. Where both engines are feasible the model set equals
// enumerate_raw's. workers = 0 means the TOL_THREADS default.
ModelSet enumerate_models(const SearchSpec& spec, int workers = 0);

// First relation (in canonical order) on n points over distinct triples
// satisfying all antecedents but not the consequent; nullopt when the
// implication holds exhaustively. Raw mode, so n <= 4.
std::optional<TernaryRelation> check_implication(int n,
                                                 const std::set<AxiomId>& antecedents,
                                                 AxiomId consequent);

// For each axiom in the set, the smallest-n relation (n <= max_n)
// satisfying the other axioms of the set while violating it.
// searched_up_to records how far the search could actually go per axiom:
// full-domain raw covers n <= 2, distinct-domain raw n <= 4, and the
// pruned engine n <= 8 when the remaining axioms contain {B, C, D, F}.
struct IndependenceReport {
  std::map<AxiomId, std::optional<TernaryRelation>> witnesses;
  std::map<AxiomId, int> searched_up_to;
};

IndependenceReport independence_witnesses(const std::set<AxiomId>& axiom_set,
                                          int max_n);

// Worker count from TOL_THREADS, else hardware concurrency.
int default_worker_count();

}  // namespace tol
