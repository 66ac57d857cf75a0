#pragma once

#include <set>
#include <vector>

#include "tol/relation.hpp"

namespace tol {

// Directed line through (a, b): all x with xab, axb or abx in B, plus the
// pair itself. The two directions of a pair may differ.
struct Line {
  Point a, b;
  std::vector<Point> points;  // sorted ascending, includes a and b
};

// Throws DomainError when a == b.
Line line(const TernaryRelation& rel, Point a, Point b);

// The family of distinct lines, compared as point sets. Requires n >= 2.
std::set<std::vector<Point>> all_lines(const TernaryRelation& rel);

// True iff every line is the whole ground set; agrees with holds(rel, B').
bool has_universal_line(const TernaryRelation& rel);

}  // namespace tol
