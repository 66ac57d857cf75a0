#include "tol/lines.hpp"

#include <string>

namespace tol {

Line line(const TernaryRelation& rel, Point a, Point b) {
  if (a == b)
    throw DomainError("line endpoints must differ, got (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
  if (a < 0 || a >= rel.n() || b < 0 || b >= rel.n())
    throw DomainError("line endpoint out of range");
  Line out{a, b, {}};
  for (Point x = 0; x < rel.n(); ++x) {
    if (x == a || x == b || rel.contains(x, a, b) || rel.contains(a, x, b) ||
        rel.contains(a, b, x))
      out.points.push_back(x);
  }
  return out;
}

std::set<std::vector<Point>> all_lines(const TernaryRelation& rel) {
  if (rel.n() < 2) throw DomainError("line family needs at least two points");
  std::set<std::vector<Point>> family;
  for (Point a = 0; a < rel.n(); ++a)
    for (Point b = 0; b < rel.n(); ++b)
      if (a != b) family.insert(line(rel, a, b).points);
  return family;
}

bool has_universal_line(const TernaryRelation& rel) {
  for (Point a = 0; a < rel.n(); ++a)
    for (Point b = 0; b < rel.n(); ++b)
      if (a != b && static_cast<int>(line(rel, a, b).points.size()) != rel.n())
        return false;
  return true;
}

}  // namespace tol
