#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stopset/config.hpp"
#include "stopset/generator_counts.hpp"
#include "support/oracles.hpp"

using namespace stopset;

namespace {

// a concrete l-flat of each kind, as a value set, straight from the closure
// oracle (first in its list)
std::set<uint64_t> oracle_flat(GeometryKind kind, int m, int l) {
  auto flats = kind == GeometryKind::PG ? oracle::naive_pg_flats(m, l)
                                        : oracle::naive_eg_flats(m, l);
  REQUIRE(!flats.empty());
  return flats.front();
}

}  // namespace

TEST_CASE("flat point counts") {
  CHECK(flat_point_count(GeometryKind::PG, 0) == 1);
  CHECK(flat_point_count(GeometryKind::PG, 2) == 7);
  CHECK(flat_point_count(GeometryKind::PG, 3) == 15);
  CHECK(flat_point_count(GeometryKind::EG, 0) == 1);
  CHECK(flat_point_count(GeometryKind::EG, 3) == 8);
  CHECK(flat_point_count(GeometryKind::EG, -1) == 0);
}

TEST_CASE("conventions and gates") {
  for (GeometryKind kind : {GeometryKind::PG, GeometryKind::EG}) {
    CHECK(count_generators(kind, 1, 0) == 1);
    CHECK(count_generators(kind, 2, 0) == 0);
    CHECK(count_generators(kind, 0, 3) == 0);
    CHECK(count_generators(kind, -2, 1) == 0);
    CHECK(count_generators(kind, 4, -1) == 0);
    // spanning needs more points than the dimension
    for (int l = 0; l <= 4; ++l)
      for (int u = 0; u <= l; ++u) CHECK(count_generators(kind, u, l) == 0);
    // stopping generators need u >= l + 2, and a 0-flat has none
    for (int l = 0; l <= 4; ++l)
      for (int u = 0; u <= l + 1; ++u) CHECK(count_stopping_generators(kind, u, l) == 0);
    CHECK(count_stopping_generators(kind, 5, 0) == 0);
  }
  // the gate matters: a 2-point EG line is spanned by both its points (B=1)
  // but removing either breaks the span (G=0)
  CHECK(count_generators(GeometryKind::EG, 2, 1) == 1);
  CHECK(count_stopping_generators(GeometryKind::EG, 2, 1) == 0);
}

TEST_CASE("hand-checked values") {
  CHECK(count_generators(GeometryKind::PG, 3, 1) == 1);   // the 3 points of a line
  CHECK(count_generators(GeometryKind::PG, 3, 2) == 28);  // triangles in a Fano plane
  CHECK(count_generators(GeometryKind::PG, 4, 2) == 35);  // C(7,4): all 4-subsets span
  CHECK(count_generators(GeometryKind::EG, 3, 2) == 4);   // drop one corner of a plane
  CHECK(count_generators(GeometryKind::EG, 4, 2) == 1);
  CHECK(count_generators(GeometryKind::EG, 2, 1) == 1);

  CHECK(count_stopping_generators(GeometryKind::PG, 3, 1) == 1);
  CHECK(count_stopping_generators(GeometryKind::PG, 4, 2) == 7);
  CHECK(count_stopping_generators(GeometryKind::PG, 5, 2) == 21);
  CHECK(count_stopping_generators(GeometryKind::EG, 4, 2) == 1);
  CHECK(count_stopping_generators(GeometryKind::EG, 5, 3) == 0);
}

TEST_CASE("explicit formula equals recursion everywhere tested") {
  for (GeometryKind kind : {GeometryKind::PG, GeometryKind::EG}) {
    for (int l = 0; l <= 5; ++l) {
      for (int u = 0; u <= 20; ++u) {
        CHECK(count_generators_explicit(kind, u, l) == count_generators_recursive(kind, u, l));
        CHECK(count_stopping_generators_explicit(kind, u, l) ==
              count_stopping_generators_recursive(kind, u, l));
      }
    }
  }
}

TEST_CASE("counts match brute force over concrete flats") {
  // PG flats inside GF(2)^4: dimensions 1..3 (3, 7, 15 points)
  for (int l = 1; l <= 3; ++l) {
    std::set<uint64_t> flat = oracle_flat(GeometryKind::PG, 4, l);
    int pts = static_cast<int>(flat.size());
    for (int u = 1; u <= std::min(pts, 7); ++u) {
      CHECK(count_generators(GeometryKind::PG, u, l) ==
            Bigint(oracle::naive_count_generators(true, flat, u)));
      CHECK(count_stopping_generators(GeometryKind::PG, u, l) ==
            Bigint(oracle::naive_count_stopping_generators(true, flat, u)));
    }
  }
  // EG flats inside GF(2)^4: dimensions 1..4 (2, 4, 8, 16 points)
  for (int l = 1; l <= 4; ++l) {
    std::set<uint64_t> flat = oracle_flat(GeometryKind::EG, 4, l);
    int pts = static_cast<int>(flat.size());
    for (int u = 1; u <= std::min(pts, 7); ++u) {
      CHECK(count_generators(GeometryKind::EG, u, l) ==
            Bigint(oracle::naive_count_generators(false, flat, u)));
      CHECK(count_stopping_generators(GeometryKind::EG, u, l) ==
            Bigint(oracle::naive_count_stopping_generators(false, flat, u)));
    }
  }
}

TEST_CASE("counts do not depend on which flat is chosen") {
  auto lines = oracle::naive_eg_flats(3, 2);  // all 2-flats of EG(3,2)
  for (const auto& flat : lines) {
    CHECK(Bigint(oracle::naive_count_generators(false, flat, 3)) ==
          count_generators(GeometryKind::EG, 3, 2));
  }
  auto planes = oracle::naive_pg_flats(4, 2);
  int checked = 0;
  for (const auto& flat : planes) {
    if (++checked > 5) break;
    CHECK(Bigint(oracle::naive_count_generators(true, flat, 4)) ==
          count_generators(GeometryKind::PG, 4, 2));
  }
}

TEST_CASE("defining recursion holds against binomial totals") {
  // C(#points(l), u) = sum_{i=0..l} N(l,i) B(u,i): every u-subset spans
  // exactly one subflat
  for (GeometryKind kind : {GeometryKind::PG, GeometryKind::EG}) {
    for (int l = 0; l <= 4; ++l) {
      for (int u = 1; u <= 10; ++u) {
        Bigint total = 0;
        for (int i = 0; i <= l; ++i)
          total += count_flats_in_flat(kind, l, i) * count_generators(kind, u, i);
        CHECK(total == binomial(static_cast<long long>(flat_point_count(kind, l)), u));
      }
    }
  }
}

TEST_CASE("B decomposes through alpha and G when u >= l + 2") {
  // below u = l + 2 every G term is zero while B can be positive (a minimal
  // spanning set has no removable point), so the identity starts at l + 2
  for (GeometryKind kind : {GeometryKind::PG, GeometryKind::EG}) {
    for (int l = 1; l <= 4; ++l) {
      for (int u = l + 2; u <= 12; ++u) {
        Bigint sum = 0;
        for (int k = 0; k < l; ++k)
          sum += count_flat_extension_pairs(kind, l, k) *
                 count_stopping_generators(kind, u - k, l - k);
        CHECK(sum == count_generators(kind, u, l));
      }
    }
  }
}

TEST_CASE("tabulation agrees with pointwise calls") {
  GeneratorCountTable t = tabulate_generator_counts(GeometryKind::PG, 8, 3);
  CHECK(t.max_u == 8);
  CHECK(t.max_l == 3);
  for (int u = 0; u <= 8; ++u) {
    for (int l = 0; l <= 3; ++l) {
      CHECK(t.generators[size_t(u)][size_t(l)] == count_generators(GeometryKind::PG, u, l));
      CHECK(t.stopping_generators[size_t(u)][size_t(l)] ==
            count_stopping_generators(GeometryKind::PG, u, l));
    }
  }
  CHECK_THROWS(tabulate_generator_counts(GeometryKind::PG, -1, 2));
}

TEST_CASE("verify mode cross-checks without complaint on correct inputs") {
  set_verify_mode(true);
  CHECK(count_generators(GeometryKind::EG, 6, 3) ==
        count_generators_recursive(GeometryKind::EG, 6, 3));
  CHECK(count_stopping_generators(GeometryKind::PG, 7, 2) ==
        count_stopping_generators_explicit(GeometryKind::PG, 7, 2));
  set_verify_mode(false);
}
