#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tol/relation.hpp"

namespace tol {

// The fixed axiom catalog. Every id maps to one universally quantified
// predicate over point tuples; see `holds` for the exact statements.
enum class AxiomId {
  A,           // abc in B  =>  cba in B
  B,           // a,b,c pairwise distinct => some ordering of them is in B
  Bprime,      // a != b  =>  the line through (a,b) is all of V
  C,           // abc in B  =>  acb not in B
  Cprime,      // abc in B  =>  bac not in B
  D,           // abc in B  =>  a,b,c pairwise distinct
  E,           // abc in B  =>  bca in B
  F,           // abc in B  =>  bca in B or cba in B
  One,         // abc, bcx in B  =>  abx in B
  Two,         // abc, bxc in B  =>  abx in B
  TwoPrime,    // abc, axb in B  =>  axc in B
  Three,       // abc, bxc in B  =>  axc in B
  ThreePrime,  // abc, axb in B  =>  xbc in B
  Nine,        // abc in B  =>  abx in B or xbc in B   (x != b)
  L,           // abc in B  =>  B restricted to {a,b,c}^3 is {abc,cba} or {abc,bca,cab}
  G,           // a,b,c distinct and abc not in B  =>  bac in B or acb in B
};

inline constexpr std::array<AxiomId, 16> kAllAxioms = {
    AxiomId::A,        AxiomId::B,     AxiomId::Bprime,     AxiomId::C,
    AxiomId::Cprime,   AxiomId::D,     AxiomId::E,          AxiomId::F,
    AxiomId::One,      AxiomId::Two,   AxiomId::TwoPrime,   AxiomId::Three,
    AxiomId::ThreePrime, AxiomId::Nine, AxiomId::L,         AxiomId::G,
};

// Display name ("A", "B'", "2", ...).
std::string_view axiom_name(AxiomId id);
// Accepts display names and spelled-out aliases ("Bprime", "Two", ...),
// case-insensitively. nullopt for unknown names.
std::optional<AxiomId> parse_axiom(std::string_view name);
// Every valid display name, in catalog order. Used by CLI error messages.
std::vector<std::string_view> axiom_names();

// A concrete violating assignment: replaying `points` against the relation
// reproduces the failure described in `note`.
struct Witness {
  AxiomId axiom;
  std::vector<Point> points;  // length 3 or 4 (3 for pair axioms via the probe point)
  std::string note;
};

// True iff the axiom's universally quantified predicate holds over all
// point tuples. Quantifier domains are all of V (repeats included) except
// where an axiom explicitly restricts them: B and G quantify over pairwise
// distinct a,b,c; Bprime over a != b; Nine over x != b.
bool holds(const TernaryRelation& rel, AxiomId ax);

// Lexicographically smallest violating tuple, or nullopt when the axiom
// holds.
std::optional<Witness> find_violation(const TernaryRelation& rel, AxiomId ax);

struct AxiomReport {
  AxiomId axiom;
  bool holds;
  std::optional<Witness> witness;
};

// One report entry per requested axiom, in the given order.
std::vector<AxiomReport> holds_all(const TernaryRelation& rel,
                                   std::span<const AxiomId> axioms);

bool all_hold(const TernaryRelation& rel, std::span<const AxiomId> axioms);

// The named systems.
inline constexpr std::array<AxiomId, 6> kBetweennessAxioms = {
    AxiomId::A, AxiomId::B, AxiomId::C, AxiomId::D, AxiomId::One, AxiomId::Two};
inline constexpr std::array<AxiomId, 5> kPreBetweennessAxioms = {
    AxiomId::A, AxiomId::B, AxiomId::C, AxiomId::D, AxiomId::Two};
inline constexpr std::array<AxiomId, 5> kCycleOrderAxioms = {
    AxiomId::B, AxiomId::C, AxiomId::D, AxiomId::E, AxiomId::Two};
inline constexpr std::array<AxiomId, 5> kBcdf2Axioms = {
    AxiomId::B, AxiomId::C, AxiomId::D, AxiomId::F, AxiomId::Two};
inline constexpr std::array<AxiomId, 5> kBcdf9Axioms = {
    AxiomId::B, AxiomId::C, AxiomId::D, AxiomId::F, AxiomId::Nine};

bool is_betweenness(const TernaryRelation& rel);
bool is_pre_betweenness(const TernaryRelation& rel);
bool is_cycle_order(const TernaryRelation& rel);

enum class ThreeSetKind { Symmetric, Cyclic, Other };

// Classification of every unordered 3-subset of V: Symmetric when the
// induced member set is {xyz, zyx} for some labeling of the subset, Cyclic
// when it is {xyz, yzx, zxy}, Other otherwise.
struct ThreeSetProfile {
  std::map<std::array<Point, 3>, ThreeSetKind> kinds;  // keys sorted ascending

  ThreeSetKind at(Point a, Point b, Point c) const;
  std::size_t count(ThreeSetKind kind) const;
};

ThreeSetProfile three_set_profile(const TernaryRelation& rel);

// Kind of one 3-set in isolation; a,b,c must be pairwise distinct.
ThreeSetKind classify_three_set(const TernaryRelation& rel, Point a, Point b, Point c);

}  // namespace tol
