#include "stopset/stopping.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "stopset/config.hpp"
#include "stopset/generator_counts.hpp"

namespace stopset {

namespace {

int floor_log2(int u) { return std::bit_width(static_cast<unsigned>(u)) - 1; }
int ceil_log2(int u) { return u <= 1 ? 0 : std::bit_width(static_cast<unsigned>(u - 1)); }

std::vector<int> checked_set(const std::vector<int>& s, int n) {
  std::vector<int> out = s;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int i : out)
    if (i < 1 || i > n) throw std::out_of_range("column index out of range");
  return out;
}

// one pass over the rows; subset given as a mask over <= 64 columns
bool mask_is_stopping(const std::vector<uint64_t>& rows, uint64_t mask) {
  for (uint64_t row : rows) {
    uint64_t hit = row & mask;
    if (hit != 0 && (hit & (hit - 1)) == 0) return false;
  }
  return true;
}

std::vector<Bigint> theorem_tail_counts(int n, int tail_from) {
  std::vector<Bigint> t(static_cast<size_t>(n) + 1, 0);
  for (int u = tail_from; u <= n; ++u) t[static_cast<size_t>(u)] = binomial(n, u);
  return t;
}

}  // namespace

std::string ssd_to_json(const StoppingSetDistribution& dist,
                        const std::optional<CodeFamily>& family, Construction construction) {
  nlohmann::json j;
  if (family) {
    j["family"] = family->name();
    j["m"] = family->m;
  } else {
    j["family"] = nullptr;
    j["m"] = nullptr;
  }
  j["construction"] = construction_name(construction);
  j["n"] = dist.n;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Bigint& t : dist.T) coeffs.push_back(t.str());
  j["T"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

bool is_stopping_set(const ParityCheckMatrix& h, const std::vector<int>& s) {
  std::vector<int> cols = checked_set(s, h.cols());
  if (cols.empty()) return true;
  BitVector mask = BitVector::from_support(h.cols(), cols);
  for (int r = 1; r <= h.rows(); ++r)
    if ((h.matrix.row(r) & mask).weight() == 1) return false;
  return true;
}

StoppingSetDistribution exhaustive_ssd(const ParityCheckMatrix& h, int threads, int max_n) {
  int n = h.cols();
  if (n > max_n || n > 40)
    throw std::invalid_argument("exhaustive_ssd: 2^n subsets exceed the enumeration cap");
  if (threads < 1) threads = 1;
  std::vector<uint64_t> rows = h.matrix.row_masks();
  uint64_t total = uint64_t(1) << n;

  int workers = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(threads), total));
  std::vector<std::vector<uint64_t>> counts(
      static_cast<size_t>(workers), std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));

  auto scan = [&rows, &counts](uint64_t begin, uint64_t end, int slot) {
    std::vector<uint64_t>& mine = counts[static_cast<size_t>(slot)];
    for (uint64_t mask = begin; mask < end; ++mask)
      if (mask_is_stopping(rows, mask)) ++mine[static_cast<size_t>(std::popcount(mask))];
  };

  if (workers == 1) {
    scan(0, total, 0);
  } else {
    std::vector<std::thread> pool;
    uint64_t chunk = total / static_cast<uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      uint64_t begin = chunk * static_cast<uint64_t>(w);
      uint64_t end = (w + 1 == workers) ? total : begin + chunk;
      pool.emplace_back(scan, begin, end, w);
    }
    for (std::thread& t : pool) t.join();
  }

  StoppingSetDistribution dist;
  dist.n = n;
  dist.T.assign(static_cast<size_t>(n) + 1, 0);
  for (const auto& part : counts)
    for (int i = 0; i <= n; ++i) dist.T[static_cast<size_t>(i)] += part[static_cast<size_t>(i)];
  return dist;
}

int stopping_distance(const ParityCheckMatrix& h, int max_n) {
  int n = h.cols();
  if (n > max_n || n > 40)
    throw std::invalid_argument("stopping_distance: matrix too wide for exhaustive search");
  std::vector<uint64_t> rows = h.matrix.row_masks();
  // subsets in increasing size: the first hit is the stopping distance
  for (int size = 1; size <= n; ++size) {
    // lexicographically walk all masks of the given popcount
    uint64_t mask = (uint64_t(1) << size) - 1;
    uint64_t limit = uint64_t(1) << n;
    while (mask < limit) {
      if (mask_is_stopping(rows, mask)) return size;
      uint64_t c = mask & (~mask + 1);
      uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  throw std::runtime_error("stopping_distance: no nonempty stopping set exists");
}

StoppingSetDistribution ssd_simplex(int m) {
  if (m < 2) throw std::invalid_argument("ssd_simplex: need m >= 2");
  int n = (1 << m) - 1;
  StoppingSetDistribution dist;
  dist.n = n;
  dist.T.assign(static_cast<size_t>(n) + 1, 0);
  dist.T[0] = 1;
  dist.T[static_cast<size_t>(n)] = 1;
  for (int mu = 0; mu <= m - 2; ++mu)
    dist.T[static_cast<size_t>((1 << m) - (1 << (mu + 1)))] =
        count_flats_in_flat(GeometryKind::PG, m - 1, mu);
  return dist;
}

StoppingSetDistribution ssd_hamming(int m) {
  if (m < 2) throw std::invalid_argument("ssd_hamming: need m >= 2");
  int n = (1 << m) - 1;
  StoppingSetDistribution dist;
  dist.n = n;
  dist.T = theorem_tail_counts(n, (1 << (m - 1)) + 1);
  dist.T[0] = 1;
  for (int u = 1; u <= (1 << (m - 1)); ++u) {
    // zero-gates inside G make the full sum equal the theorem's bounded sum
    Bigint t = 0;
    for (int l = 0; l <= m - 1; ++l)
      t += count_flats_in_flat(GeometryKind::PG, m - 1, l) *
           count_stopping_generators(GeometryKind::PG, u, l);
    if (verify_mode()) {
      Bigint bounded = 0;
      for (int l = floor_log2(u); l <= std::min(u - 2, m - 1); ++l)
        bounded += count_flats_in_flat(GeometryKind::PG, m - 1, l) *
                   count_stopping_generators(GeometryKind::PG, u, l);
      if (bounded != t)
        throw std::logic_error("ssd_hamming: bounded and guarded sums disagree");
    }
    dist.T[static_cast<size_t>(u)] = t;
  }
  return dist;
}

StoppingSetDistribution ssd_rm1(int m) {
  if (m < 2) throw std::invalid_argument("ssd_rm1: need m >= 2");
  int n = 1 << m;
  StoppingSetDistribution dist;
  dist.n = n;
  dist.T.assign(static_cast<size_t>(n) + 1, 0);
  dist.T[0] = 1;
  dist.T[static_cast<size_t>(n)] = 1;
  for (int mu = 0; mu <= m - 1; ++mu)
    dist.T[static_cast<size_t>((1 << m) - (1 << mu))] =
        count_flats_in_flat(GeometryKind::EG, m, mu);
  return dist;
}

StoppingSetDistribution ssd_exthamming(int m) {
  if (m < 2) throw std::invalid_argument("ssd_exthamming: need m >= 2");
  int n = 1 << m;
  StoppingSetDistribution dist;
  dist.n = n;
  dist.T = theorem_tail_counts(n, (1 << (m - 1)) + 2);
  dist.T[0] = 1;
  for (int u = 1; u <= (1 << (m - 1)) + 1; ++u) {
    Bigint t = 0;
    for (int l = 0; l <= m; ++l)
      t += count_flats_in_flat(GeometryKind::EG, m, l) *
           count_stopping_generators(GeometryKind::EG, u, l);
    if (verify_mode()) {
      Bigint bounded = 0;
      for (int l = ceil_log2(u); l <= std::min(u - 2, m); ++l)
        bounded += count_flats_in_flat(GeometryKind::EG, m, l) *
                   count_stopping_generators(GeometryKind::EG, u, l);
      if (bounded != t)
        throw std::logic_error("ssd_exthamming: bounded and guarded sums disagree");
    }
    dist.T[static_cast<size_t>(u)] = t;
  }
  return dist;
}

StoppingSetDistribution ssd_formula(const CodeFamily& family) {
  switch (family.tag) {
    case CodeFamilyTag::Simplex:
      return ssd_simplex(family.m);
    case CodeFamilyTag::Hamming:
      return ssd_hamming(family.m);
    case CodeFamilyTag::RM1:
      return ssd_rm1(family.m);
    case CodeFamilyTag::ExtHamming:
      return ssd_exthamming(family.m);
  }
  throw std::logic_error("unreachable");
}

Bigint t3_fullrank_hamming(int m) {
  if (m < 2) throw std::invalid_argument("t3_fullrank_hamming: need m >= 2");
  return exact_div(int_pow(5, m) - int_pow(3, m + 1) + int_pow(2, m + 1), 6);
}

Bigint a3_hamming(int m) {
  if (m < 2) throw std::invalid_argument("a3_hamming: need m >= 2");
  return exact_div((int_pow(2, m) - 1) * (int_pow(2, m - 1) - 1), 3);
}

bool support_closure_holds(const CodeFamily& family, const std::vector<int>& s, uint64_t cap) {
  std::vector<int> cols = checked_set(s, family.length());
  BitVector mask = BitVector::from_support(family.length(), cols);
  BitVector covered(family.length());
  for (const BitVector& word : generator_matrix(family).row_space(cap)) {
    if (word.is_zero() || !word.is_subset_of(mask)) continue;
    for (int c : word.support()) covered.set(c);
  }
  return covered == mask;
}

std::string bec_report_to_json(const BecOptimalityReport& report,
                               const std::optional<CodeFamily>& family,
                               Construction construction) {
  nlohmann::json j;
  if (family) {
    j["family"] = family->name();
    j["m"] = family->m;
  } else {
    j["family"] = nullptr;
    j["m"] = nullptr;
  }
  j["construction"] = construction_name(construction);
  auto coeffs = [](const StoppingSetDistribution& d) {
    nlohmann::json a = nlohmann::json::array();
    for (const Bigint& t : d.T) a.push_back(t.str());
    return a;
  };
  j["ssd_matrix"] = coeffs(report.ssd_matrix);
  j["ssd_star"] = coeffs(report.ssd_star);
  j["distributions_match"] = report.distributions_match;
  j["first_mismatch_size"] = report.first_mismatch_size;
  nlohmann::json missing = nlohmann::json::array();
  for (const BitVector& v : report.missing_minimum_dual_codewords)
    missing.push_back(v.to_string());
  j["missing_minimum_dual_codewords"] = std::move(missing);
  j["all_minimum_dual_rows_present"] = report.all_minimum_dual_rows_present;
  j["row_minimality_checked"] = report.row_minimality_checked;
  if (report.row_minimality_checked) {
    nlohmann::json rows = nlohmann::json::array();
    for (const RowDeletionVerdict& v : report.row_deletion)
      rows.push_back({{"row", v.row}, {"deletion_changes_ssd", v.deletion_changes_ssd}});
    j["row_deletion"] = std::move(rows);
    j["every_row_necessary"] = report.every_row_necessary;
  }
  j["optimal"] = report.optimal();
  return j.dump(2) + "\n";
}

BecOptimalityReport verify_bec_optimal(const ParityCheckMatrix& h, const CodeFamily& family,
                                       int threads) {
  if (h.cols() != family.length())
    throw std::invalid_argument("verify_bec_optimal: matrix width does not match the family");

  BecOptimalityReport report;
  report.ssd_matrix = exhaustive_ssd(h, threads);
  ParityCheckMatrix star = build_h_star(family);
  report.ssd_star = exhaustive_ssd(star, threads);

  report.distributions_match = report.ssd_matrix.T == report.ssd_star.T;
  report.first_mismatch_size = -1;
  if (!report.distributions_match) {
    for (int i = 0; i <= report.ssd_matrix.n; ++i) {
      if (report.ssd_matrix.T[static_cast<size_t>(i)] !=
          report.ssd_star.T[static_cast<size_t>(i)]) {
        report.first_mismatch_size = i;
        break;
      }
    }
  }

  // necessity: all minimum-weight dual codewords must appear among the rows
  std::set<std::string> row_words;
  for (int r = 1; r <= h.rows(); ++r) row_words.insert(h.matrix.row(r).to_string());
  int min_weight = h.cols() + 1;
  for (int r = 1; r <= star.rows(); ++r)
    min_weight = std::min(min_weight, star.matrix.row(r).weight());
  for (int r = 1; r <= star.rows(); ++r) {
    const BitVector& word = star.matrix.row(r);
    if (word.weight() == min_weight && row_words.count(word.to_string()) == 0)
      report.missing_minimum_dual_codewords.push_back(word);
  }
  report.all_minimum_dual_rows_present = report.missing_minimum_dual_codewords.empty();

  // row minimality at desk scale: deleting any single row must change the SSD
  if (h.cols() <= 16 && h.rows() <= 64) {
    report.row_minimality_checked = true;
    report.every_row_necessary = true;
    for (int r = 1; r <= h.rows(); ++r) {
      std::vector<BitVector> kept;
      for (int k = 1; k <= h.rows(); ++k)
        if (k != r) kept.push_back(h.matrix.row(k));
      ParityCheckMatrix reduced{BitMatrix::from_rows(std::move(kept)), h.family, h.construction,
                                h.geometry};
      // a deleted row widens or preserves the stopping-set collection
      bool changed = exhaustive_ssd(reduced, threads).T != report.ssd_matrix.T;
      report.row_deletion.push_back(RowDeletionVerdict{r, changed});
      if (!changed) report.every_row_necessary = false;
    }
  }
  return report;
}

}  // namespace stopset
