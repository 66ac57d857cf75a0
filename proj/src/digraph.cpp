#include "tol/digraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace tol {

Digraph::Digraph(int n) : n_(n), out_(static_cast<size_t>(n)) {
  if (n < 1) throw DomainError("digraph needs at least one vertex");
}

void Digraph::add_arc(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw DomainError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(n_));
  if (u == v) throw DomainError("loops are not allowed: (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  auto& lst = out_[static_cast<size_t>(u)];
  auto it = std::lower_bound(lst.begin(), lst.end(), v);
  if (it == lst.end() || *it != v) lst.insert(it, v);
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& lst = out_[static_cast<size_t>(u)];
  return std::binary_search(lst.begin(), lst.end(), v);
}

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& lst : out_) c += lst.size();
  return c;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(arc_count());
  for (int u = 0; u < n_; ++u)
    for (int v : out_[static_cast<size_t>(u)]) out.emplace_back(u, v);
  return out;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> distances)
    : n_(n), d_(std::move(distances)) {
  if (n < 1 || d_.size() != static_cast<size_t>(n) * n)
    throw DomainError("distance matrix has wrong shape");
  for (int a = 0; a < n; ++a) {
    if (at(a, a) != 0) throw DomainError("distance matrix diagonal must be zero");
    for (int b = 0; b < n; ++b) {
      if (a != b && at(a, b) <= 0)
        throw DomainError("distance between distinct points must be positive");
      for (int c = 0; c < n; ++c)
        if (at(a, c) > at(a, b) + at(b, c))
          throw DomainError("triangle inequality fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
}

Digraph cycle_digraph(int p) {
  if (p < 3) throw DomainError("cycle length must be >= 3, got " + std::to_string(p));
  Digraph g(p);
  for (int i = 0; i < p; ++i) g.add_arc(i, (i + 1) % p);
  return g;
}

Digraph doubled_cycle_digraph(int p) {
  if (p < 3) throw DomainError("cycle length must be >= 3, got " + std::to_string(p));
  Digraph g(2 * p);
  const auto orig = [](int i) { return 2 * i; };
  const auto dup = [](int i) { return 2 * i + 1; };
  for (int i = 0; i < p; ++i) {
    const int j = (i + 1) % p;
    g.add_arc(orig(i), orig(j));
    g.add_arc(orig(i), dup(j));
    g.add_arc(dup(i), orig(j));
    g.add_arc(dup(i), dup(j));
  }
  return g;
}

Digraph doubled_cycle_subdigraph(int p, std::span<const int> dup) {
  if (p < 3) throw DomainError("cycle length must be >= 3, got " + std::to_string(p));
  std::set<int> keep;
  for (int i : dup) {
    if (i < 0 || i >= p)
      throw DomainError("duplicate index " + std::to_string(i) + " out of range for p=" +
                        std::to_string(p));
    keep.insert(i);
  }
  // Labels: original i -> i; duplicate i -> p + rank of i in `keep`.
  std::vector<int> dup_label(static_cast<size_t>(p), -1);
  int next = p;
  for (int i : keep) dup_label[static_cast<size_t>(i)] = next++;

  Digraph g(p + static_cast<int>(keep.size()));
  for (int i = 0; i < p; ++i) {
    const int j = (i + 1) % p;
    g.add_arc(i, j);
    if (dup_label[static_cast<size_t>(j)] >= 0) g.add_arc(i, dup_label[static_cast<size_t>(j)]);
    if (dup_label[static_cast<size_t>(i)] >= 0) g.add_arc(dup_label[static_cast<size_t>(i)], j);
    if (dup_label[static_cast<size_t>(i)] >= 0 && dup_label[static_cast<size_t>(j)] >= 0)
      g.add_arc(dup_label[static_cast<size_t>(i)], dup_label[static_cast<size_t>(j)]);
  }
  return g;
}

Digraph path_digraph(int n) {
  if (n < 1) throw DomainError("path needs at least one vertex");
  Digraph g(n);
  for (int i = 0; i + 1 < n; ++i) {
    g.add_arc(i, i + 1);
    g.add_arc(i + 1, i);
  }
  return g;
}

Digraph c4_digraph() {
  Digraph g(4);
  for (int i = 0; i < 4; ++i) {
    g.add_arc(i, (i + 1) % 4);
    g.add_arc((i + 1) % 4, i);
  }
  return g;
}

DistanceMatrix quasimetric(const Digraph& g) {
  const int n = g.n();
  std::vector<int> d(static_cast<size_t>(n) * n, -1);
  std::deque<int> queue;
  for (int src = 0; src < n; ++src) {
    auto dist = [&](int v) -> int& { return d[static_cast<size_t>(src) * n + v]; };
    dist(src) = 0;
    queue.clear();
    queue.push_back(src);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.out_neighbors(u)) {
        if (dist(v) < 0) {
          dist(v) = dist(u) + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (dist(v) < 0)
        throw DomainError("digraph is not strongly connected: no path from " +
                          std::to_string(src) + " to " + std::to_string(v));
  }
  return DistanceMatrix(n, std::move(d));  // constructor re-checks the invariants
}

TernaryRelation betweenness_from_quasimetric(const DistanceMatrix& d) {
  const int n = d.n();
  RelationBuilder out(n);
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (d.at(a, c) == d.at(a, b) + d.at(b, c)) out.add(a, b, c);
      }
  return std::move(out).build();
}

TernaryRelation cycle_order(int p) {
  if (p < 3) throw DomainError("cycle length must be >= 3, got " + std::to_string(p));
  RelationBuilder out(p);
  for (int i = 0; i < p; ++i)
    for (int fwd1 = 1; fwd1 <= p - 2; ++fwd1)
      for (int fwd2 = 1; fwd1 + fwd2 <= p - 1; ++fwd2)
        out.add(i, (i + fwd1) % p, (i + fwd1 + fwd2) % p);
  return std::move(out).build();
}

TernaryRelation doubled_cycle_betweenness_formula(int p) {
  if (p < 3) throw DomainError("cycle length must be >= 3, got " + std::to_string(p));
  const auto orig = [](int i) { return 2 * i; };
  const auto dup = [](int i) { return 2 * i + 1; };
  RelationBuilder out(2 * p);
  // Three distinct cycle indices: any original/duplicate choice at each
  // index, ordered like the cycle order.
  for (Triple t : cycle_order(p).members())
    for (int wa = 0; wa < 2; ++wa)
      for (int wb = 0; wb < 2; ++wb)
        for (int wc = 0; wc < 2; ++wc)
          out.add(2 * t.a + wa, 2 * t.b + wb, 2 * t.c + wc);
  // An original/duplicate pair is at distance p in both directions, so
  // every other point sits between them either way around.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      out.add(orig(i), orig(j), dup(i));
      out.add(orig(i), dup(j), dup(i));
      out.add(dup(i), orig(j), orig(i));
      out.add(dup(i), dup(j), orig(i));
    }
  return std::move(out).build();
}

TernaryRelation path_betweenness(int n) {
  if (n < 1) throw DomainError("path needs at least one vertex");
  if (n <= 2) return TernaryRelation::empty(n);
  return betweenness_from_quasimetric(quasimetric(path_digraph(n)));
}

TernaryRelation c4_betweenness() {
  return betweenness_from_quasimetric(quasimetric(c4_digraph()));
}

}  // namespace tol
