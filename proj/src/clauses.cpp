#include "tol/clauses.hpp"

#include <algorithm>
#include <set>

namespace tol::clauses {

TripleSpace::TripleSpace(int n, bool distinct_only)
    : n_(n), distinct_only_(distinct_only) {
  if (n < 1) throw DomainError("triple space needs n >= 1");
  rank_.assign(static_cast<size_t>(n) * n * n, -1);
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point c = 0; c < n; ++c) {
        const Triple t{a, b, c};
        if (distinct_only && !pairwise_distinct(t)) continue;
        rank_[(static_cast<size_t>(a) * n + b) * n + c] =
            static_cast<int>(triples_.size());
        triples_.push_back(t);
      }
}

TripleSpace TripleSpace::distinct(int n) { return TripleSpace(n, true); }
TripleSpace TripleSpace::full(int n) { return TripleSpace(n, false); }

int TripleSpace::index(Triple t) const {
  if (t.a < 0 || t.a >= n_ || t.b < 0 || t.b >= n_ || t.c < 0 || t.c >= n_) return -1;
  return rank_[(static_cast<size_t>(t.a) * n_ + t.b) * n_ + t.c];
}

TernaryRelation TripleSpace::to_relation(std::uint32_t mask) const {
  if (bits() > 25) throw DomainError("triple space too large for packed masks");
  RelationBuilder b(n_);
  for (int i = 0; i < bits(); ++i)
    if ((mask >> i) & 1) b.add(triple_at(i));
  return std::move(b).build();
}

std::uint32_t TripleSpace::to_mask(const TernaryRelation& rel) const {
  if (bits() > 25) throw DomainError("triple space too large for packed masks");
  if (rel.n() != n_) throw DomainError("relation ground set does not match triple space");
  std::uint32_t mask = 0;
  for (Triple t : rel.members()) {
    const int i = index(t);
    if (i < 0)
      throw DomainError("relation member is not representable in this triple space");
    mask |= std::uint32_t{1} << i;
  }
  return mask;
}

namespace {

// Lower one quantifier instance to a clause, applying the representability
// rules, and add it to the set.
void emit(std::set<Clause>& out, const TripleSpace& sp,
          const std::vector<Triple>& hyp, const std::vector<Triple>& concl) {
  Clause cl;
  for (Triple t : hyp) {
    const int i = sp.index(t);
    if (i < 0) return;  // hypothesis unsatisfiable in this space
    cl.hyp.push_back(i);
  }
  std::sort(cl.hyp.begin(), cl.hyp.end());
  cl.hyp.erase(std::unique(cl.hyp.begin(), cl.hyp.end()), cl.hyp.end());
  for (Triple t : concl) {
    const int i = sp.index(t);
    if (i < 0) continue;  // disjunct can never be satisfied
    if (std::binary_search(cl.hyp.begin(), cl.hyp.end(), i)) return;  // trivially true
    cl.concl.push_back(i);
  }
  std::sort(cl.concl.begin(), cl.concl.end());
  cl.concl.erase(std::unique(cl.concl.begin(), cl.concl.end()), cl.concl.end());
  out.insert(std::move(cl));
}

// L instances grouped by the point set of the quantified triple. For each
// admissible point set, every assignment of the member bits over that set
// that breaks the pattern condition becomes one exact-state clause.
void emit_l_clauses(std::set<Clause>& out, const TripleSpace& sp,
                    const std::vector<Point>& pts) {
  std::vector<int> universe;
  std::vector<Triple> uni_triples;
  for (Point a : pts)
    for (Point b : pts)
      for (Point c : pts) {
        const int i = sp.index({a, b, c});
        if (i >= 0) {
          universe.push_back(i);
          uni_triples.push_back({a, b, c});
        }
      }
  if (universe.empty()) return;
  if (universe.size() > 16)
    throw DomainError("axiom L compilation is infeasible for this triple space");
  const std::uint32_t states = std::uint32_t{1} << universe.size();
  for (std::uint32_t s = 0; s < states; ++s) {
    std::set<Triple> present;
    for (size_t k = 0; k < universe.size(); ++k)
      if (s & (std::uint32_t{1} << k)) present.insert(uni_triples[k]);
    bool valid = true;
    for (Triple t : present) {
      const std::set<Triple> sym = {t, cba(t)};
      const std::set<Triple> cyc = {t, bca(t), cab(t)};
      if (present != sym && present != cyc) {
        valid = false;
        break;
      }
    }
    if (valid) continue;
    Clause cl;
    for (size_t k = 0; k < universe.size(); ++k)
      ((s >> k) & 1 ? cl.hyp : cl.concl).push_back(universe[k]);
    std::sort(cl.hyp.begin(), cl.hyp.end());
    std::sort(cl.concl.begin(), cl.concl.end());
    out.insert(std::move(cl));
  }
}

template <typename Fn>
void for_each_triple(int n, Fn fn) {
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point c = 0; c < n; ++c) fn(Triple{a, b, c});
}

}  // namespace

std::vector<Clause> compile_axiom(AxiomId ax, const TripleSpace& sp) {
  const int n = sp.n();
  std::set<Clause> out;

  switch (ax) {
    case AxiomId::A:
      for_each_triple(n, [&](Triple t) { emit(out, sp, {t}, {cba(t)}); });
      break;
    case AxiomId::B:
      for_each_triple(n, [&](Triple t) {
        if (pairwise_distinct(t))
          emit(out, sp, {}, {t, acb(t), bac(t), bca(t), cab(t), cba(t)});
      });
      break;
    case AxiomId::Bprime:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b) {
          if (a == b) continue;
          for (Point x = 0; x < n; ++x) {
            if (x == a || x == b) continue;
            emit(out, sp, {}, {{x, a, b}, {a, x, b}, {a, b, x}});
          }
        }
      break;
    case AxiomId::C:
      for_each_triple(n, [&](Triple t) { emit(out, sp, {t, acb(t)}, {}); });
      break;
    case AxiomId::Cprime:
      for_each_triple(n, [&](Triple t) { emit(out, sp, {t, bac(t)}, {}); });
      break;
    case AxiomId::D:
      for_each_triple(n, [&](Triple t) {
        if (!pairwise_distinct(t)) emit(out, sp, {t}, {});
      });
      break;
    case AxiomId::E:
      for_each_triple(n, [&](Triple t) { emit(out, sp, {t}, {bca(t)}); });
      break;
    case AxiomId::F:
      for_each_triple(n, [&](Triple t) { emit(out, sp, {t}, {bca(t), cba(t)}); });
      break;
    case AxiomId::One:
      for_each_triple(n, [&](Triple t) {
        for (Point x = 0; x < n; ++x)
          emit(out, sp, {t, {t.b, t.c, x}}, {{t.a, t.b, x}});
      });
      break;
    case AxiomId::Two:
      for_each_triple(n, [&](Triple t) {
        for (Point x = 0; x < n; ++x)
          emit(out, sp, {t, {t.b, x, t.c}}, {{t.a, t.b, x}});
      });
      break;
    case AxiomId::TwoPrime:
      for_each_triple(n, [&](Triple t) {
        for (Point x = 0; x < n; ++x)
          emit(out, sp, {t, {t.a, x, t.b}}, {{t.a, x, t.c}});
      });
      break;
    case AxiomId::Three:
      for_each_triple(n, [&](Triple t) {
        for (Point x = 0; x < n; ++x)
          emit(out, sp, {t, {t.b, x, t.c}}, {{t.a, x, t.c}});
      });
      break;
    case AxiomId::ThreePrime:
      for_each_triple(n, [&](Triple t) {
        for (Point x = 0; x < n; ++x)
          emit(out, sp, {t, {t.a, x, t.b}}, {{x, t.b, t.c}});
      });
      break;
    case AxiomId::Nine:
      for_each_triple(n, [&](Triple t) {
        for (Point x = 0; x < n; ++x) {
          if (x == t.b) continue;
          emit(out, sp, {t}, {{t.a, t.b, x}, {x, t.b, t.c}});
        }
      });
      break;
    case AxiomId::G:
      for_each_triple(n, [&](Triple t) {
        if (pairwise_distinct(t)) emit(out, sp, {}, {t, bac(t), acb(t)});
      });
      break;
    case AxiomId::L: {
      // One group per nonempty point set of size <= 3.
      for (Point a = 0; a < n; ++a) {
        emit_l_clauses(out, sp, {a});
        for (Point b = a + 1; b < n; ++b) {
          emit_l_clauses(out, sp, {a, b});
          for (Point c = b + 1; c < n; ++c) emit_l_clauses(out, sp, {a, b, c});
        }
      }
      break;
    }
  }
  return {out.begin(), out.end()};
}

bool program_holds(const std::vector<Clause>& program, std::uint32_t mask) {
  for (const Clause& cl : program) {
    bool fires = true;
    for (int i : cl.hyp)
      if (!((mask >> i) & 1)) {
        fires = false;
        break;
      }
    if (!fires) continue;
    for (int i : cl.concl)
      if ((mask >> i) & 1) {
        fires = false;
        break;
      }
    if (fires) return false;
  }
  return true;
}

}  // namespace tol::clauses
