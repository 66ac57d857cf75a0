#include "tol/relation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace tol {

namespace {

std::string triple_str(Triple t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
         std::to_string(t.c) + ")";
}

}  // namespace

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (Point p : image_) {
    if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
      throw DomainError("permutation image is not a bijection on [0, " +
                        std::to_string(n) + ")");
    seen[static_cast<size_t>(p)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Point> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(image_.size());
  for (int i = 0; i < n(); ++i) inv[static_cast<size_t>(image_[static_cast<size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

TernaryRelation::TernaryRelation(int n, std::span<const Triple> triples) : n_(n) {
  if (n < 1) throw DomainError("ground set size must be >= 1, got " + std::to_string(n));
  const size_t cube = static_cast<size_t>(n) * n * n;
  bits_.assign((cube + 63) / 64, 0);
  for (Triple t : triples) {
    if (!in_range(t))
      throw DomainError("triple " + triple_str(t) + " out of range for n=" +
                        std::to_string(n));
    const size_t i = index(t);
    bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

std::size_t TernaryRelation::size() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<size_t>(std::popcount(w));
  return c;
}

std::vector<Triple> TernaryRelation::members() const {
  std::vector<Triple> out;
  out.reserve(size());
  for (Point a = 0; a < n_; ++a)
    for (Point b = 0; b < n_; ++b)
      for (Point c = 0; c < n_; ++c)
        if (test(index({a, b, c}))) out.push_back({a, b, c});
  return out;
}

bool operator<(const TernaryRelation& lhs, const TernaryRelation& rhs) {
  if (lhs.n_ != rhs.n_) return lhs.n_ < rhs.n_;
  for (size_t w = 0; w < lhs.bits_.size(); ++w) {
    const std::uint64_t d = lhs.bits_[w] ^ rhs.bits_[w];
    if (d) {
      const std::uint64_t lowest = d & (~d + 1);
      return (lhs.bits_[w] & lowest) == 0;  // absent beats present
    }
  }
  return false;
}

RelationBuilder::RelationBuilder(int n) : rel_(TernaryRelation::empty(n)) {}

void RelationBuilder::add(Triple t) {
  if (!rel_.in_range(t))
    throw DomainError("triple " + triple_str(t) + " out of range for n=" +
                      std::to_string(rel_.n()));
  const size_t i = rel_.index(t);
  rel_.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

TernaryRelation RelationBuilder::build() && { return std::move(rel_); }

TernaryRelation make_relation(int n, std::span<const Triple> triples) {
  return TernaryRelation(n, triples);
}

TernaryRelation make_relation(int n, std::initializer_list<Triple> triples) {
  return TernaryRelation(n, std::span<const Triple>(triples.begin(), triples.size()));
}

TernaryRelation apply_permutation(const TernaryRelation& rel, const Permutation& p) {
  if (p.n() != rel.n())
    throw DomainError("permutation size " + std::to_string(p.n()) +
                      " does not match ground set size " + std::to_string(rel.n()));
  RelationBuilder out(rel.n());
  for (Triple t : rel.members()) out.add(p(t));
  return std::move(out).build();
}

std::optional<Permutation> are_isomorphic(const TernaryRelation& r1,
                                          const TernaryRelation& r2) {
  if (r1.n() != r2.n() || r1.size() != r2.size()) return std::nullopt;
  const auto members = r1.members();
  std::vector<Point> img(static_cast<size_t>(r1.n()));
  std::iota(img.begin(), img.end(), 0);
  do {
    const Permutation p{std::vector<Point>(img)};
    bool ok = true;
    for (Triple t : members) {
      if (!r2.contains(p(t))) {
        ok = false;
        break;
      }
    }
    if (ok) return p;  // equal sizes, so injectivity of p gives set equality
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

TernaryRelation canonical_form(const TernaryRelation& rel) {
  const int n = rel.n();
  const auto members = rel.members();
  std::vector<Point> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Point> inv(static_cast<size_t>(n));

  auto materialize = [&](const std::vector<Point>& image) {
    RelationBuilder b(n);
    for (Triple t : members)
      b.add({image[static_cast<size_t>(t.a)], image[static_cast<size_t>(t.b)],
             image[static_cast<size_t>(t.c)]});
    return std::move(b).build();
  };

  TernaryRelation best = materialize(img);
  while (std::next_permutation(img.begin(), img.end())) {
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
    // Lazy bit-sequence comparison of the relabeled relation against the
    // current best; almost every permutation aborts within a few triples.
    int verdict = 0;  // -1 smaller, +1 larger
    for (Point a = 0; a < n && verdict == 0; ++a)
      for (Point b = 0; b < n && verdict == 0; ++b)
        for (Point c = 0; c < n && verdict == 0; ++c) {
          const bool relabeled = rel.contains(inv[static_cast<size_t>(a)],
                                              inv[static_cast<size_t>(b)],
                                              inv[static_cast<size_t>(c)]);
          const bool current = best.contains(a, b, c);
          if (relabeled != current) verdict = relabeled ? 1 : -1;
        }
    if (verdict < 0) best = materialize(img);
  }
  return best;
}

}  // namespace tol
