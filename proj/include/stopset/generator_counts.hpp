#pragma once

#include <vector>

#include "stopset/bigint.hpp"
#include "stopset/geometry.hpp"

namespace stopset {

// Counting u-subsets of the points of an l-flat by how they sit inside it.
// These depend only on (kind, u, l), not on which l-flat is chosen.
//
//   count_generators(u, l): u-subsets whose span is the whole l-flat.
//   count_stopping_generators(u, l): u-subsets that span the l-flat and keep
//     spanning it after removal of any single point of the subset.
//
// Conventions baked into every route:
//   u <= 0 or l < 0            -> 0
//   l = 0                       -> 1 iff u = 1
//   stopping generators need at least l + 2 points: u <= l + 1 -> 0, and a
//   0-flat has none at all (removing its only point always breaks the span).
// The explicit formulas below are only valid once these gates have fired, so
// the gates come first everywhere.
//
// Each count has two independent routes: the defining recursion against
// C(#points, u), and an explicit alternating-sum formula.  The unsuffixed
// functions are memoized fronts over the explicit route; with verify mode on
// they also run the recursion and throw std::logic_error on any mismatch.

Bigint count_generators_recursive(GeometryKind kind, int u, int l);
Bigint count_generators_explicit(GeometryKind kind, int u, int l);
Bigint count_generators(GeometryKind kind, int u, int l);

Bigint count_stopping_generators_recursive(GeometryKind kind, int u, int l);
Bigint count_stopping_generators_explicit(GeometryKind kind, int u, int l);
Bigint count_stopping_generators(GeometryKind kind, int u, int l);

// number of points of an l-flat: 2^(l+1)-1 for PG, 2^l for EG
Bigint flat_point_count(GeometryKind kind, int l);

struct GeneratorCountTable {
  GeometryKind kind;
  int max_u;
  int max_l;
  // indexed [u][l] for u = 0..max_u, l = 0..max_l
  std::vector<std::vector<Bigint>> generators;
  std::vector<std::vector<Bigint>> stopping_generators;
};

GeneratorCountTable tabulate_generator_counts(GeometryKind kind, int max_u, int max_l);

}  // namespace stopset
