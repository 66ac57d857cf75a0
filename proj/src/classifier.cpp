#include "tol/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "tol/digraph.hpp"

namespace tol {

bool GeodesicCircuit::contains(Point a) const {
  return std::find(points.begin(), points.end(), a) != points.end();
}

std::optional<std::array<Point, 3>> find_cyclic_3set(const TernaryRelation& rel) {
  const int n = rel.n();
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      for (Point c = b + 1; c < n; ++c)
        if (classify_three_set(rel, a, b, c) == ThreeSetKind::Cyclic)
          return std::array<Point, 3>{a, b, c};
  return std::nullopt;
}

namespace {

std::string pt(Point p) { return std::to_string(p); }

void check_circuit_triple(const TernaryRelation& rel, const GeodesicCircuit& c, int i) {
  if (!rel.contains(c.at(i - 1), c.at(i), c.at(i + 1)))
    throw ConsistencyError("geodesic circuit invariant broken at (" + pt(c.at(i - 1)) +
                           "," + pt(c.at(i)) + "," + pt(c.at(i + 1)) + ")");
}

}  // namespace

GeodesicCircuit grow_geodesic_circuit(const TernaryRelation& rel,
                                      std::array<Point, 3> seed) {
  if (classify_three_set(rel, seed[0], seed[1], seed[2]) != ThreeSetKind::Cyclic)
    throw DomainError("seed {" + pt(seed[0]) + "," + pt(seed[1]) + "," + pt(seed[2]) +
                      "} is not a cyclic 3-set");
  // Orient the seed: start at its smallest point and follow a member triple.
  GeodesicCircuit circuit;
  {
    const Point a = seed[0];
    std::array<Point, 2> rest = {seed[1], seed[2]};
    if (rel.contains(a, rest[0], rest[1]))
      circuit.points = {a, rest[0], rest[1]};
    else
      circuit.points = {a, rest[1], rest[0]};
  }
  for (int i = 0; i < 3; ++i) check_circuit_triple(rel, circuit, i);

  bool inserted = true;
  while (inserted) {
    inserted = false;
    const int p = circuit.length();
    for (int gap = 0; gap < p && !inserted; ++gap) {
      for (Point a = 0; a < rel.n(); ++a) {
        if (circuit.contains(a)) continue;
        if (!rel.contains(circuit.at(gap), a, circuit.at(gap + 1))) continue;
        circuit.points.insert(circuit.points.begin() + gap + 1, a);
        // The insertion must preserve geodesicity around the new point.
        check_circuit_triple(rel, circuit, gap);
        check_circuit_triple(rel, circuit, gap + 1);
        check_circuit_triple(rel, circuit, gap + 2);
        inserted = true;
        break;
      }
    }
  }
  return circuit;
}

std::vector<Point> interval(const TernaryRelation& rel, Point x, Point y) {
  if (x == y) throw DomainError("interval endpoints must differ");
  if (x < 0 || x >= rel.n() || y < 0 || y >= rel.n())
    throw DomainError("interval endpoint out of range");
  std::vector<Point> out;
  for (Point z = 0; z < rel.n(); ++z)
    if (z == x || z == y || rel.contains(x, z, y)) out.push_back(z);
  return out;
}

int locate_type(const TernaryRelation& rel, const GeodesicCircuit& circuit, Point a) {
  if (a < 0 || a >= rel.n()) throw DomainError("point " + pt(a) + " out of range");
  if (circuit.contains(a))
    throw DomainError("point " + pt(a) + " already lies on the circuit");
  int found = -1;
  for (int i = 0; i < circuit.length(); ++i) {
    if (rel.contains(circuit.at(i - 1), a, circuit.at(i + 1))) {
      if (found >= 0)
        throw ConsistencyError("point " + pt(a) + " has more than one type index");
      found = i;
    }
  }
  if (found < 0)
    throw ConsistencyError("point " + pt(a) + " fits between no circuit neighbors");
  return found;
}

namespace {

void require_bcdf2(const TernaryRelation& rel) {
  for (AxiomId ax : kBcdf2Axioms) {
    if (auto w = find_violation(rel, ax))
      throw AxiomViolationError("axiom " + std::string(axiom_name(ax)) +
                                    " fails: " + w->note,
                                *w);
  }
}

// Mapping check shared by all three branches: f must be a bijection from
// rel's points onto target's, with abc in rel iff f(a)f(b)f(c) in target.
bool carries_exactly(const TernaryRelation& rel, const TernaryRelation& target,
                     const std::vector<int>& mapping) {
  const int n = rel.n();
  if (target.n() != n || static_cast<int>(mapping.size()) != n) return false;
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int v : mapping) {
    if (v < 0 || v >= n || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = true;
  }
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point c = 0; c < n; ++c)
        if (rel.contains(a, b, c) !=
            target.contains(mapping[static_cast<size_t>(a)], mapping[static_cast<size_t>(b)],
                            mapping[static_cast<size_t>(c)]))
          return false;
  return true;
}

std::optional<LinearOrder> try_linear_order(const TernaryRelation& rel) {
  const int n = rel.n();
  if (n <= 2) {
    std::vector<Point> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return LinearOrder{std::move(order)};
  }
  if (n == 3) {
    // A symmetric 3-set reads off its own order.
    for (Triple t : rel.members())
      return LinearOrder{{t.a, t.b, t.c}};
    return std::nullopt;
  }
  // An endpoint is the middle of no member triple.
  std::vector<bool> is_middle(static_cast<size_t>(n), false);
  for (Triple t : rel.members()) is_middle[static_cast<size_t>(t.b)] = true;
  Point endpoint = -1;
  for (Point v = 0; v < n; ++v)
    if (!is_middle[static_cast<size_t>(v)]) {
      endpoint = v;
      break;
    }
  if (endpoint < 0) return std::nullopt;
  // Points sort by how much of the path the interval from the endpoint
  // covers; sizes must be exactly 2..n once each.
  std::vector<std::pair<size_t, Point>> keyed;
  for (Point v = 0; v < n; ++v)
    if (v != endpoint) keyed.emplace_back(interval(rel, endpoint, v).size(), v);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Point> order = {endpoint};
  for (size_t k = 0; k < keyed.size(); ++k) {
    if (keyed[k].first != k + 2) return std::nullopt;
    order.push_back(keyed[k].second);
  }
  std::vector<int> mapping(static_cast<size_t>(n));
  for (int pos = 0; pos < n; ++pos) mapping[static_cast<size_t>(order[static_cast<size_t>(pos)])] = pos;
  if (!carries_exactly(rel, path_betweenness(n), mapping)) return std::nullopt;
  return LinearOrder{std::move(order)};
}

Classification classify_acyclic(const TernaryRelation& rel) {
  if (auto linear = try_linear_order(rel)) return *linear;
  if (rel.n() == 4) {
    if (auto p = are_isomorphic(rel, c4_betweenness())) {
      FourCycle fc{};
      const auto inv = p->inverse();
      for (int k = 0; k < 4; ++k) fc.labeling[static_cast<size_t>(k)] = inv(k);
      return fc;
    }
  }
  throw ConsistencyError(
      "relation has no cyclic 3-set but is neither a path order nor the 4-cycle");
}

Classification classify_cyclic(const TernaryRelation& rel,
                               std::array<Point, 3> seed) {
  const GeodesicCircuit circuit = grow_geodesic_circuit(rel, seed);
  const int p = circuit.length();
  const int n = rel.n();

  std::map<int, Point> duplicate_of;  // type index -> off-circuit point
  for (Point a = 0; a < n; ++a) {
    if (circuit.contains(a)) continue;
    const int i = locate_type(rel, circuit, a);
    if (duplicate_of.count(i))
      throw ConsistencyError("two off-circuit points share type index " +
                             std::to_string(i));
    // a and x_i must see every point between them in both directions.
    const Point xi = circuit.at(i);
    const auto fwd = interval(rel, a, xi);
    const auto bwd = interval(rel, xi, a);
    std::vector<Point> both;
    std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(),
                          std::back_inserter(both));
    if (static_cast<int>(both.size()) != n)
      throw ConsistencyError("off-circuit point " + pt(a) +
                             " is not interchangeable with its circuit partner");
    duplicate_of[i] = a;
  }

  DuplicatedCycle dc;
  dc.p = p;
  dc.mapping.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < p; ++i) dc.mapping[static_cast<size_t>(circuit.at(i))] = i;
  int next = p;
  for (const auto& [i, a] : duplicate_of) {
    dc.duplicated.push_back(i);
    dc.mapping[static_cast<size_t>(a)] = next++;
  }
  return dc;
}

}  // namespace

Classification classify(const TernaryRelation& rel) {
  require_bcdf2(rel);
  Classification cls = [&]() -> Classification {
    if (auto seed = find_cyclic_3set(rel)) return classify_cyclic(rel, *seed);
    return classify_acyclic(rel);
  }();
  if (!verify_classification(rel, cls))
    throw ConsistencyError("classification failed verification");
  return cls;
}

bool verify_classification(const TernaryRelation& rel, const Classification& cls) {
  const int n = rel.n();
  try {
    if (const auto* lin = std::get_if<LinearOrder>(&cls)) {
      if (static_cast<int>(lin->order.size()) != n) return false;
      std::vector<int> mapping(static_cast<size_t>(n), -1);
      for (int pos = 0; pos < n; ++pos) {
        const Point v = lin->order[static_cast<size_t>(pos)];
        if (v < 0 || v >= n) return false;
        mapping[static_cast<size_t>(v)] = pos;
      }
      return carries_exactly(rel, path_betweenness(n), mapping);
    }
    if (const auto* fc = std::get_if<FourCycle>(&cls)) {
      if (n != 4) return false;
      std::vector<int> mapping(4, -1);
      for (int k = 0; k < 4; ++k) {
        const Point v = fc->labeling[static_cast<size_t>(k)];
        if (v < 0 || v >= 4) return false;
        mapping[static_cast<size_t>(v)] = k;
      }
      return carries_exactly(rel, c4_betweenness(), mapping);
    }
    const auto& dc = std::get<DuplicatedCycle>(cls);
    if (dc.p < 3 || dc.p + static_cast<int>(dc.duplicated.size()) != n) return false;
    const auto target = betweenness_from_quasimetric(
        quasimetric(doubled_cycle_subdigraph(dc.p, dc.duplicated)));
    return carries_exactly(rel, target, dc.mapping);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace tol
