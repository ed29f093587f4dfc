#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stopset/bigint.hpp"
#include "stopset/bits.hpp"

namespace stopset {

// The two binary geometries the code families live in.  Both are described by
// the single parameter m of the associated code:
//   PG: the projective geometry PG(m-1, 2); points are the 2^m - 1 nonzero
//       vectors of GF(2)^m, point i <-> the vector with integer value i.
//   EG: the Euclidean geometry EG(m, 2); points are all 2^m vectors,
//       point i <-> the vector with integer value i - 1.
// The vector value reads coordinate 1 as the least significant bit.
enum class GeometryKind { PG, EG };

std::string geometry_kind_name(GeometryKind kind);
GeometryKind parse_geometry_kind(const std::string& name);

struct Geometry {
  GeometryKind kind;
  int m;  // code parameter, m >= 2

  static Geometry pg(int m);
  static Geometry eg(int m);

  int num_points() const;
  // dimension of the geometry itself: m-1 for PG(m-1,2), m for EG(m,2)
  int dim() const;

  // 1-based point index <-> vector in GF(2)^m
  BitVector point_vector(int point) const;
  int vector_point(const BitVector& v) const;
  uint64_t point_value(int point) const;
  int value_point(uint64_t value) const;

  bool operator==(const Geometry&) const = default;
};

// A mu-flat, stored as its sorted list of 1-based point indices.
// PG mu-flats have 2^(mu+1) - 1 points, EG mu-flats 2^mu points.
struct Flat {
  Geometry geometry;
  int dim = 0;
  std::vector<int> points;

  bool operator==(const Flat&) const = default;
};

// Smallest flat containing the given nonempty point set.
Flat span(const Geometry& g, const std::vector<int>& points);

// True iff the set is exactly a flat (the span of the set adds no point).
bool is_flat(const Geometry& g, const std::vector<int>& points);

// The line through two distinct points / the plane through three points not
// on a common line.  Both throw if the input is degenerate.
Flat line_through(const Geometry& g, int p1, int p2);
Flat plane_through(const Geometry& g, int p1, int p2, int p3);

// Every mu-flat of the geometry, sorted lexicographically by point list.
// Enumeration is meant for desk-scale geometries and refuses m beyond max_m.
std::vector<Flat> enumerate_flats(const Geometry& g, int mu, int max_m = 6);

// Gaussian binomial coefficient [n m]_q; 0 when m < 0 or m > n.
Bigint gaussian_binomial(int n, int m, long long q = 2);

// Number of mu1-flats contained in a given mu2-flat.
Bigint count_flats_in_flat(GeometryKind kind, int mu2, int mu1, long long q = 2);

// Number of mu2-flats containing a given mu1-flat, in a geometry of dimension
// geometry_dim (that is m-1 for PG(m-1,2) and m for EG(m,2)).
Bigint count_flats_through_flat(int mu2, int mu1, int geometry_dim, long long q = 2);

// alpha(l, k): the number of ways to pick k points extending an (l-k)-flat to
// an l-flat, counted as ordered chains divided by k!; alpha(l, 0) = 1.
Bigint count_flat_extension_pairs(GeometryKind kind, int l, int k);

// sum_{i=0..m} [m i]_2 2^(i(i-1)/2) (-1)^i equals 1 for m = 0 and 0 otherwise;
// returns true iff that holds for this m (used as a self-check of the
// Gaussian binomial implementation).
bool alternating_binomial_identity_holds(int m);

}  // namespace stopset
