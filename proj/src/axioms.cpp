#include "tol/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tol {

namespace {

constexpr std::array<std::string_view, 16> kNames = {
    "A", "B", "B'", "C", "C'", "D", "E", "F",
    "1", "2", "2'", "3", "3'", "9", "L", "G"};

std::string ts(Triple t) {
  return std::to_string(t.a) + std::to_string(t.b) + std::to_string(t.c);
}

Witness witness3(AxiomId ax, Triple t, std::string note) {
  return Witness{ax, {t.a, t.b, t.c}, std::move(note)};
}

Witness witness4(AxiomId ax, Triple t, Point x, std::string note) {
  return Witness{ax, {t.a, t.b, t.c, x}, std::move(note)};
}

// The member set induced on the point set of {a,b,c} (repeats collapse).
std::set<Triple> induced_members(const TernaryRelation& rel, Triple t) {
  std::set<Point> pts = {t.a, t.b, t.c};
  std::set<Triple> out;
  for (Point p : pts)
    for (Point q : pts)
      for (Point r : pts)
        if (rel.contains(p, q, r)) out.insert({p, q, r});
  return out;
}

bool l_admissible(const std::set<Triple>& induced, Triple t) {
  const std::set<Triple> sym = {t, cba(t)};
  const std::set<Triple> cyc = {t, bca(t), cab(t)};
  return induced == sym || induced == cyc;
}

// Shared scan for the five hypothesis-pair axioms (1, 2, 2', 3, 3'): for
// every (a,b,c,x), hyp1=abc and a second member implies a conclusion.
template <typename Second, typename Conclusion>
std::optional<Witness> scan_pair_axiom(const TernaryRelation& rel, AxiomId ax,
                                       Second second, Conclusion conclusion,
                                       std::string_view what) {
  const int n = rel.n();
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point c = 0; c < n; ++c) {
        const Triple t{a, b, c};
        if (!rel.contains(t)) continue;
        for (Point x = 0; x < n; ++x) {
          const Triple h2 = second(t, x);
          if (!rel.contains(h2)) continue;
          const Triple concl = conclusion(t, x);
          if (!rel.contains(concl))
            return witness4(ax, t, x,
                            ts(t) + " and " + ts(h2) + " in B but " + ts(concl) +
                                std::string(what));
        }
      }
  return std::nullopt;
}

}  // namespace

std::string_view axiom_name(AxiomId id) {
  return kNames[static_cast<size_t>(id)];
}

std::optional<AxiomId> parse_axiom(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (size_t i = 0; i < kNames.size(); ++i) {
    std::string cand(kNames[i]);
    std::transform(cand.begin(), cand.end(), cand.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == cand) return kAllAxioms[i];
  }
  if (lower == "bprime") return AxiomId::Bprime;
  if (lower == "cprime") return AxiomId::Cprime;
  if (lower == "one") return AxiomId::One;
  if (lower == "two") return AxiomId::Two;
  if (lower == "twoprime") return AxiomId::TwoPrime;
  if (lower == "three") return AxiomId::Three;
  if (lower == "threeprime") return AxiomId::ThreePrime;
  if (lower == "nine") return AxiomId::Nine;
  return std::nullopt;
}

std::vector<std::string_view> axiom_names() {
  return {kNames.begin(), kNames.end()};
}

std::optional<Witness> find_violation(const TernaryRelation& rel, AxiomId ax) {
  const int n = rel.n();

  switch (ax) {
    case AxiomId::A:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (rel.contains(t) && !rel.contains(cba(t)))
              return witness3(ax, t, ts(t) + " in B but " + ts(cba(t)) + " not in B");
          }
      return std::nullopt;

    case AxiomId::B:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (!pairwise_distinct(t)) continue;
            if (!rel.contains(t) && !rel.contains(acb(t)) && !rel.contains(bac(t)) &&
                !rel.contains(bca(t)) && !rel.contains(cab(t)) && !rel.contains(cba(t)))
              return witness3(ax, t, "no ordering of {" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) +
                                         "} is in B");
          }
      return std::nullopt;

    case AxiomId::Bprime:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b) {
          if (a == b) continue;
          for (Point x = 0; x < n; ++x) {
            if (x == a || x == b) continue;
            if (!rel.contains(x, a, b) && !rel.contains(a, x, b) && !rel.contains(a, b, x))
              return Witness{ax, {a, b, x},
                             std::to_string(x) + " is not on the line through (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")"};
          }
        }
      return std::nullopt;

    case AxiomId::C:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (rel.contains(t) && rel.contains(acb(t)))
              return witness3(ax, t, ts(t) + " and " + ts(acb(t)) + " both in B");
          }
      return std::nullopt;

    case AxiomId::Cprime:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (rel.contains(t) && rel.contains(bac(t)))
              return witness3(ax, t, ts(t) + " and " + ts(bac(t)) + " both in B");
          }
      return std::nullopt;

    case AxiomId::D:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (rel.contains(t) && !pairwise_distinct(t))
              return witness3(ax, t, ts(t) + " in B has repeated points");
          }
      return std::nullopt;

    case AxiomId::E:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (rel.contains(t) && !rel.contains(bca(t)))
              return witness3(ax, t, ts(t) + " in B but " + ts(bca(t)) + " not in B");
          }
      return std::nullopt;

    case AxiomId::F:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (rel.contains(t) && !rel.contains(bca(t)) && !rel.contains(cba(t)))
              return witness3(ax, t, ts(t) + " in B but neither " + ts(bca(t)) +
                                         " nor " + ts(cba(t)));
          }
      return std::nullopt;

    case AxiomId::One:
      return scan_pair_axiom(
          rel, ax, [](Triple t, Point x) { return Triple{t.b, t.c, x}; },
          [](Triple t, Point x) { return Triple{t.a, t.b, x}; }, " missing");

    case AxiomId::Two:
      return scan_pair_axiom(
          rel, ax, [](Triple t, Point x) { return Triple{t.b, x, t.c}; },
          [](Triple t, Point x) { return Triple{t.a, t.b, x}; }, " missing");

    case AxiomId::TwoPrime:
      return scan_pair_axiom(
          rel, ax, [](Triple t, Point x) { return Triple{t.a, x, t.b}; },
          [](Triple t, Point x) { return Triple{t.a, x, t.c}; }, " missing");

    case AxiomId::Three:
      return scan_pair_axiom(
          rel, ax, [](Triple t, Point x) { return Triple{t.b, x, t.c}; },
          [](Triple t, Point x) { return Triple{t.a, x, t.c}; }, " missing");

    case AxiomId::ThreePrime:
      return scan_pair_axiom(
          rel, ax, [](Triple t, Point x) { return Triple{t.a, x, t.b}; },
          [](Triple t, Point x) { return Triple{x, t.b, t.c}; }, " missing");

    case AxiomId::Nine:
      // x = b is excluded: with it the axiom could only hold vacuously on
      // relations without repeated-point members. x = a and x = c are
      // immaterial (one disjunct is then the hypothesis itself).
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (!rel.contains(t)) continue;
            for (Point x = 0; x < n; ++x) {
              if (x == b) continue;
              if (!rel.contains(a, b, x) && !rel.contains(x, b, c))
                return witness4(ax, t, x,
                                ts(t) + " in B but neither " + ts({a, b, x}) +
                                    " nor " + ts({x, b, c}));
            }
          }
      return std::nullopt;

    case AxiomId::L:
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (!rel.contains(t)) continue;
            if (!l_admissible(induced_members(rel, t), t))
              return witness3(ax, t, "members on {" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) +
                                         "} are neither the symmetric nor the cyclic pattern");
          }
      return std::nullopt;

    case AxiomId::G:
      // Distinct points only; with repeats allowed the axiom would fail on
      // every relation whose members have distinct points.
      for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
          for (Point c = 0; c < n; ++c) {
            const Triple t{a, b, c};
            if (!pairwise_distinct(t)) continue;
            if (!rel.contains(t) && !rel.contains(bac(t)) && !rel.contains(acb(t)))
              return witness3(ax, t, "none of " + ts(t) + ", " + ts(bac(t)) + ", " +
                                         ts(acb(t)) + " is in B");
          }
      return std::nullopt;
  }
  return std::nullopt;  // unreachable
}

bool holds(const TernaryRelation& rel, AxiomId ax) {
  return !find_violation(rel, ax).has_value();
}

std::vector<AxiomReport> holds_all(const TernaryRelation& rel,
                                   std::span<const AxiomId> axioms) {
  std::vector<AxiomReport> out;
  out.reserve(axioms.size());
  for (AxiomId ax : axioms) {
    auto w = find_violation(rel, ax);
    out.push_back({ax, !w.has_value(), std::move(w)});
  }
  return out;
}

bool all_hold(const TernaryRelation& rel, std::span<const AxiomId> axioms) {
  return std::all_of(axioms.begin(), axioms.end(),
                     [&](AxiomId ax) { return holds(rel, ax); });
}

bool is_betweenness(const TernaryRelation& rel) {
  return all_hold(rel, kBetweennessAxioms);
}

bool is_pre_betweenness(const TernaryRelation& rel) {
  return all_hold(rel, kPreBetweennessAxioms);
}

bool is_cycle_order(const TernaryRelation& rel) {
  return all_hold(rel, kCycleOrderAxioms);
}

ThreeSetKind ThreeSetProfile::at(Point a, Point b, Point c) const {
  std::array<Point, 3> key = {a, b, c};
  std::sort(key.begin(), key.end());
  return kinds.at(key);
}

std::size_t ThreeSetProfile::count(ThreeSetKind kind) const {
  std::size_t c = 0;
  for (const auto& [k, v] : kinds)
    if (v == kind) ++c;
  return c;
}

ThreeSetKind classify_three_set(const TernaryRelation& rel, Point a, Point b, Point c) {
  const Triple t{a, b, c};
  const std::set<Triple> induced = induced_members(rel, t);
  for (Triple lab : {t, acb(t), bac(t)}) {
    if (induced == std::set<Triple>{lab, cba(lab)}) return ThreeSetKind::Symmetric;
  }
  for (Triple lab : {t, acb(t)}) {
    if (induced == std::set<Triple>{lab, bca(lab), cab(lab)}) return ThreeSetKind::Cyclic;
  }
  return ThreeSetKind::Other;
}

ThreeSetProfile three_set_profile(const TernaryRelation& rel) {
  ThreeSetProfile profile;
  const int n = rel.n();
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      for (Point c = b + 1; c < n; ++c)
        profile.kinds[{a, b, c}] = classify_three_set(rel, a, b, c);
  return profile;
}

}  // namespace tol
