#include "stopset/geometry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stopset {

std::string geometry_kind_name(GeometryKind kind) {
  return kind == GeometryKind::PG ? "pg" : "eg";
}

GeometryKind parse_geometry_kind(const std::string& name) {
  if (name == "pg" || name == "PG") return GeometryKind::PG;
  if (name == "eg" || name == "EG") return GeometryKind::EG;
  throw std::invalid_argument("unknown geometry kind: " + name);
}

Geometry Geometry::pg(int m) {
  if (m < 1 || m > 62) throw std::invalid_argument("Geometry::pg: need 1 <= m <= 62");
  return Geometry{GeometryKind::PG, m};
}

Geometry Geometry::eg(int m) {
  if (m < 1 || m > 62) throw std::invalid_argument("Geometry::eg: need 1 <= m <= 62");
  return Geometry{GeometryKind::EG, m};
}

int Geometry::num_points() const {
  return kind == GeometryKind::PG ? (1 << m) - 1 : (1 << m);
}

int Geometry::dim() const { return kind == GeometryKind::PG ? m - 1 : m; }

uint64_t Geometry::point_value(int point) const {
  if (point < 1 || point > num_points()) throw std::out_of_range("point index out of range");
  return kind == GeometryKind::PG ? uint64_t(point) : uint64_t(point - 1);
}

int Geometry::value_point(uint64_t value) const {
  if (kind == GeometryKind::PG) {
    if (value < 1 || value > uint64_t(num_points()))
      throw std::out_of_range("no PG point for this value");
    return static_cast<int>(value);
  }
  if (value >= uint64_t(num_points())) throw std::out_of_range("no EG point for this value");
  return static_cast<int>(value) + 1;
}

BitVector Geometry::point_vector(int point) const {
  uint64_t value = point_value(point);
  BitVector v(m);
  for (int i = 0; i < m; ++i)
    if ((value >> i) & 1) v.set(i + 1);
  return v;
}

int Geometry::vector_point(const BitVector& v) const {
  if (v.length() != m) throw std::invalid_argument("vector length must equal m");
  return value_point(v.to_u64());
}

namespace {

// insert value into a GF(2) basis kept with distinct leading bits; returns
// false if value was already in the span
bool basis_insert(std::vector<uint64_t>& basis, uint64_t value) {
  for (uint64_t b : basis) value = std::min(value, value ^ b);
  if (value == 0) return false;
  basis.push_back(value);
  // keep leading bits distinct and descending
  std::sort(basis.begin(), basis.end(), std::greater<uint64_t>());
  return true;
}

std::vector<uint64_t> span_values(const std::vector<uint64_t>& basis) {
  std::vector<uint64_t> out;
  out.reserve(size_t(1) << basis.size());
  out.push_back(0);
  for (uint64_t b : basis) {
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

std::vector<int> sorted_unique(const Geometry& g, std::vector<int> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (int p : points) g.point_value(p);  // range check
  return points;
}

// All bases (in reduced echelon form) of k-dimensional subspaces of GF(2)^m.
// A basis is determined by its pivot bit positions p_0 < ... < p_{k-1} plus a
// free choice at every position q > p_i with q not itself a pivot.
std::vector<std::vector<uint64_t>> subspace_bases(int m, int k) {
  std::vector<std::vector<uint64_t>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > m) return out;
  std::vector<int> pivots(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pivots[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<bool> is_pivot(static_cast<size_t>(m), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::pair<int, int>> free_slots;  // (row, bit position)
    for (int i = 0; i < k; ++i)
      for (int q = pivots[static_cast<size_t>(i)] + 1; q < m; ++q)
        if (!is_pivot[static_cast<size_t>(q)]) free_slots.emplace_back(i, q);
    uint64_t combos = uint64_t(1) << free_slots.size();
    for (uint64_t assign = 0; assign < combos; ++assign) {
      std::vector<uint64_t> basis(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i)
        basis[static_cast<size_t>(i)] = uint64_t(1) << pivots[static_cast<size_t>(i)];
      for (size_t s = 0; s < free_slots.size(); ++s)
        if ((assign >> s) & 1)
          basis[static_cast<size_t>(free_slots[s].first)] |= uint64_t(1) << free_slots[s].second;
      out.push_back(std::move(basis));
    }
    // next pivot combination
    int i = k - 1;
    while (i >= 0 && pivots[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

Flat span(const Geometry& g, const std::vector<int>& points) {
  std::vector<int> pts = sorted_unique(g, points);
  std::vector<uint64_t> basis;
  Flat f{g, 0, {}};
  if (g.kind == GeometryKind::PG) {
    for (int p : pts) basis_insert(basis, g.point_value(p));
    f.dim = static_cast<int>(basis.size()) - 1;
    std::vector<int> out;
    for (uint64_t v : span_values(basis))
      if (v != 0) out.push_back(g.value_point(v));
    std::sort(out.begin(), out.end());
    f.points = std::move(out);
  } else {
    // affine span: translate to the origin, span linearly, translate back
    uint64_t t = g.point_value(pts[0]);
    for (int p : pts) basis_insert(basis, g.point_value(p) ^ t);
    f.dim = static_cast<int>(basis.size());
    std::vector<int> out;
    for (uint64_t v : span_values(basis)) out.push_back(g.value_point(v ^ t));
    std::sort(out.begin(), out.end());
    f.points = std::move(out);
  }
  return f;
}

bool is_flat(const Geometry& g, const std::vector<int>& points) {
  std::vector<int> pts = sorted_unique(g, points);
  return span(g, pts).points == pts;
}

Flat line_through(const Geometry& g, int p1, int p2) {
  if (p1 == p2) throw std::invalid_argument("line_through: points must be distinct");
  Flat f = span(g, {p1, p2});
  if (f.dim != 1) throw std::invalid_argument("line_through: points do not span a line");
  return f;
}

Flat plane_through(const Geometry& g, int p1, int p2, int p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw std::invalid_argument("plane_through: points must be distinct");
  Flat f = span(g, {p1, p2, p3});
  if (f.dim != 2) throw std::invalid_argument("plane_through: points are collinear");
  return f;
}

std::vector<Flat> enumerate_flats(const Geometry& g, int mu, int max_m) {
  if (g.m > max_m)
    throw std::invalid_argument("enumerate_flats: m exceeds the enumeration limit");
  if (mu < 0 || mu > g.dim())
    throw std::invalid_argument("enumerate_flats: flat dimension out of range");

  std::vector<Flat> out;
  if (g.kind == GeometryKind::PG) {
    for (const std::vector<uint64_t>& basis : subspace_bases(g.m, mu + 1)) {
      std::vector<int> pts;
      for (uint64_t v : span_values(basis))
        if (v != 0) pts.push_back(g.value_point(v));
      std::sort(pts.begin(), pts.end());
      out.push_back(Flat{g, mu, std::move(pts)});
    }
  } else {
    uint64_t total = uint64_t(1) << g.m;
    for (const std::vector<uint64_t>& basis : subspace_bases(g.m, mu)) {
      std::vector<uint64_t> sub = span_values(basis);
      std::vector<bool> used(static_cast<size_t>(total), false);
      for (uint64_t rep = 0; rep < total; ++rep) {
        if (used[static_cast<size_t>(rep)]) continue;
        std::vector<int> pts;
        for (uint64_t s : sub) {
          used[static_cast<size_t>(rep ^ s)] = true;
          pts.push_back(g.value_point(rep ^ s));
        }
        std::sort(pts.begin(), pts.end());
        out.push_back(Flat{g, mu, std::move(pts)});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Flat& a, const Flat& b) { return a.points < b.points; });
  return out;
}

Bigint gaussian_binomial(int n, int m, long long q) {
  if (m < 0 || n < 0 || m > n) return 0;
  Bigint num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= int_pow(q, n - i) - 1;
    den *= int_pow(q, m - i) - 1;
  }
  return exact_div(num, den);
}

Bigint count_flats_in_flat(GeometryKind kind, int mu2, int mu1, long long q) {
  if (mu1 < 0 || mu1 > mu2) return 0;
  Bigint num = 1, den = 1;
  if (kind == GeometryKind::PG) {
    for (int i = 0; i <= mu1; ++i) {
      num *= int_pow(q, mu2 - i + 1) - 1;
      den *= int_pow(q, mu1 - i + 1) - 1;
    }
    return exact_div(num, den);
  }
  for (int i = 1; i <= mu1; ++i) {
    num *= int_pow(q, mu2 - i + 1) - 1;
    den *= int_pow(q, mu1 - i + 1) - 1;
  }
  return int_pow(q, mu2 - mu1) * exact_div(num, den);
}

Bigint count_flats_through_flat(int mu2, int mu1, int geometry_dim, long long q) {
  if (mu1 < 0 || mu1 > mu2 || mu2 > geometry_dim) return 0;
  Bigint num = 1, den = 1;
  for (int i = mu1 + 1; i <= mu2; ++i) {
    num *= int_pow(q, geometry_dim - i + 1) - 1;
    den *= int_pow(q, mu2 - i + 1) - 1;
  }
  return exact_div(num, den);
}

Bigint count_flat_extension_pairs(GeometryKind kind, int l, int k) {
  if (k < 0 || k > l || l < 0) return 0;
  if (k == 0) return 1;
  Bigint prod = 1;
  for (int i = 1; i <= k; ++i) {
    if (kind == GeometryKind::PG)
      prod *= int_pow(2, l - i + 1) * (int_pow(2, l - i + 2) - 1);
    else
      prod *= int_pow(2, l - i + 1) * (int_pow(2, l - i + 1) - 1);
  }
  return exact_div(prod, factorial(k));
}

bool alternating_binomial_identity_holds(int m) {
  if (m < 0) throw std::invalid_argument("negative m");
  Bigint sum = 0;
  for (int i = 0; i <= m; ++i) {
    Bigint term = gaussian_binomial(m, i) * int_pow(2, i * (i - 1) / 2);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum == (m == 0 ? 1 : 0);
}

}  // namespace stopset
