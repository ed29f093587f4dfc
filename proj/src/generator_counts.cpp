#include "stopset/generator_counts.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "stopset/config.hpp"

namespace stopset {

namespace {

using Key = std::tuple<int, int, int>;  // (kind, u, l)

Key make_key(GeometryKind kind, int u, int l) { return {static_cast<int>(kind), u, l}; }

std::mutex g_memo_mutex;
std::map<Key, Bigint> g_generator_memo;
std::map<Key, Bigint> g_stopping_memo;

// Negative intermediate sums can only come from a formula bug; the counts are
// cardinalities.
void check_nonnegative(const Bigint& v, const char* what) {
  if (v < 0) throw std::logic_error(std::string(what) + ": alternating sum went negative");
}

}  // namespace

Bigint flat_point_count(GeometryKind kind, int l) {
  if (l < 0) return 0;
  return kind == GeometryKind::PG ? int_pow(2, l + 1) - 1 : int_pow(2, l);
}

Bigint count_generators_recursive(GeometryKind kind, int u, int l) {
  if (u <= 0 || l < 0) return 0;
  if (l == 0) return u == 1 ? 1 : 0;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_generator_memo.find(make_key(kind, u, l));
    if (it != g_generator_memo.end()) return it->second;
  }
  // every u-subset of the l-flat spans exactly one i-flat inside it:
  // C(#points, u) = sum_i N(l, i) * B(u, i)
  Bigint total = binomial(static_cast<long long>(flat_point_count(kind, l)), u);
  for (int i = 0; i < l; ++i)
    total -= count_flats_in_flat(kind, l, i) * count_generators_recursive(kind, u, i);
  check_nonnegative(total, "count_generators_recursive");
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_generator_memo.emplace(make_key(kind, u, l), total);
  return total;
}

Bigint count_generators_explicit(GeometryKind kind, int u, int l) {
  if (u <= 0 || l < 0) return 0;
  if (l == 0) return u == 1 ? 1 : 0;
  Bigint sum = 0;
  for (int j = 0; j <= l; ++j) {
    Bigint term;
    if (kind == GeometryKind::PG)
      term = int_pow(2, j * (j - 1) / 2) * gaussian_binomial(l + 1, j) *
             binomial((1LL << (l - j + 1)) - 1, u);
    else
      term = int_pow(2, j * (j + 1) / 2) * gaussian_binomial(l, j) *
             binomial(1LL << (l - j), u);
    sum += (j % 2 == 0) ? term : -term;
  }
  check_nonnegative(sum, "count_generators_explicit");
  return sum;
}

Bigint count_generators(GeometryKind kind, int u, int l) {
  Bigint v = count_generators_explicit(kind, u, l);
  if (verify_mode()) {
    Bigint r = count_generators_recursive(kind, u, l);
    if (r != v)
      throw std::logic_error("count_generators: explicit formula and recursion disagree");
  }
  return v;
}

Bigint count_stopping_generators_recursive(GeometryKind kind, int u, int l) {
  if (l <= 0 || u <= l + 1) return 0;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_stopping_memo.find(make_key(kind, u, l));
    if (it != g_stopping_memo.end()) return it->second;
  }
  // B(u, l) = sum_{k=0}^{l-1} alpha(l, k) G(u-k, l-k), solved for the k=0 term
  Bigint total = count_generators_recursive(kind, u, l);
  for (int k = 1; k < l; ++k)
    total -= count_flat_extension_pairs(kind, l, k) *
             count_stopping_generators_recursive(kind, u - k, l - k);
  check_nonnegative(total, "count_stopping_generators_recursive");
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_stopping_memo.emplace(make_key(kind, u, l), total);
  return total;
}

Bigint count_stopping_generators_explicit(GeometryKind kind, int u, int l) {
  if (l <= 0 || u <= l + 1) return 0;
  Bigint sum = 0;
  for (int k = 0; k < l; ++k) {
    Bigint term = count_flat_extension_pairs(kind, l, k) *
                  count_generators_explicit(kind, u - k, l - k);
    sum += (k % 2 == 0) ? term : -term;
  }
  check_nonnegative(sum, "count_stopping_generators_explicit");
  return sum;
}

Bigint count_stopping_generators(GeometryKind kind, int u, int l) {
  Bigint v = count_stopping_generators_explicit(kind, u, l);
  if (verify_mode()) {
    Bigint r = count_stopping_generators_recursive(kind, u, l);
    if (r != v)
      throw std::logic_error(
          "count_stopping_generators: explicit formula and recursion disagree");
  }
  return v;
}

GeneratorCountTable tabulate_generator_counts(GeometryKind kind, int max_u, int max_l) {
  if (max_u < 0 || max_l < 0)
    throw std::invalid_argument("tabulate_generator_counts: negative bounds");
  GeneratorCountTable t;
  t.kind = kind;
  t.max_u = max_u;
  t.max_l = max_l;
  t.generators.assign(static_cast<size_t>(max_u) + 1,
                      std::vector<Bigint>(static_cast<size_t>(max_l) + 1));
  t.stopping_generators = t.generators;
  for (int u = 0; u <= max_u; ++u) {
    for (int l = 0; l <= max_l; ++l) {
      t.generators[static_cast<size_t>(u)][static_cast<size_t>(l)] = count_generators(kind, u, l);
      t.stopping_generators[static_cast<size_t>(u)][static_cast<size_t>(l)] =
          count_stopping_generators(kind, u, l);
    }
  }
  return t;
}

}  // namespace stopset
