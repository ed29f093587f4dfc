#include "stopset/bec.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace stopset {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr long long kBlockTrials = 65536;

uint64_t splitmix64(uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// one uniform double in [0,1) from the top 53 bits
double to_unit(uint64_t u) { return static_cast<double>(u >> 11) * 0x1.0p-53; }

std::vector<int> sorted_positions(int n, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    throw std::invalid_argument("duplicate erased position");
  if (!positions.empty() && (positions.front() < 1 || positions.back() > n))
    throw std::invalid_argument("erased position out of range");
  return positions;
}

// fixpoint on bit masks, n <= 64: returns the residual erasure mask
uint64_t peel_mask(const std::vector<uint64_t>& rows, uint64_t erased) {
  bool progress = true;
  while (progress && erased) {
    progress = false;
    for (uint64_t row : rows) {
      uint64_t hit = row & erased;
      if (hit && (hit & (hit - 1)) == 0) {
        erased ^= hit;
        progress = true;
      }
    }
  }
  return erased;
}

int count_threads(int threads) {
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  return threads;
}

nlohmann::json matrix_identity_json(const ParityCheckMatrix& h) {
  nlohmann::json id;
  if (h.family) {
    id["family"] = h.family->name();
    id["m"] = h.family->m;
  } else {
    id["family"] = nullptr;
    id["m"] = nullptr;
  }
  id["construction"] = construction_name(h.construction);
  return id;
}

}  // namespace

ErasurePattern ErasurePattern::from_positions(int n, std::vector<int> positions) {
  if (n < 0) throw std::invalid_argument("negative block length");
  return ErasurePattern{n, sorted_positions(n, std::move(positions))};
}

ErasurePattern ErasurePattern::from_mask(int n, uint64_t mask) {
  if (n < 0 || n > 64) throw std::invalid_argument("mask form needs 0 <= n <= 64");
  if (n < 64 && (mask >> n)) throw std::invalid_argument("mask has bits beyond n");
  std::vector<int> positions;
  for (int j = 1; j <= n; ++j)
    if ((mask >> (j - 1)) & 1) positions.push_back(j);
  return ErasurePattern{n, std::move(positions)};
}

BitVector ErasurePattern::to_vector() const { return BitVector::from_support(n, erased); }

uint64_t ErasurePattern::to_mask() const {
  if (n > 64) throw std::invalid_argument("mask form needs n <= 64");
  uint64_t mask = 0;
  for (int j : erased) mask |= uint64_t(1) << (j - 1);
  return mask;
}

static DecodeOutcome peel_ordered(const ParityCheckMatrix& h, const BitVector& c,
                                  const ErasurePattern& e,
                                  const std::vector<int>& order) {
  int n = h.cols();
  if (c.length() != n || e.n != n)
    throw std::invalid_argument("codeword/pattern length does not match matrix");
  for (int r = 1; r <= h.rows(); ++r)
    if (dot(h.matrix.row(r), c))
      throw std::invalid_argument("word fails a parity check, not a codeword");

  BitVector word = c;
  BitVector erased = e.to_vector();
  for (int j : e.erased) word.set(j, 0);  // the receiver has no value here

  bool progress = true;
  while (progress && !erased.is_zero()) {
    progress = false;
    for (int r : order) {
      BitVector row = h.matrix.row(r);
      BitVector hit = row & erased;
      if (hit.weight() != 1) continue;
      int j = hit.support().front();
      // parity equation: the solved bit is the xor of the known ones
      word.set(j, 0);
      word.set(j, dot(row, word));
      erased.set(j, 0);
      progress = true;
    }
  }

  DecodeOutcome out;
  out.residual = erased.support();
  if (out.residual.empty()) {
    out.status = DecodeStatus::Recovered;
    out.resolved_word = word;
  } else {
    out.status = DecodeStatus::Failed;
  }
  return out;
}

DecodeOutcome peel(const ParityCheckMatrix& h, const BitVector& c,
                   const ErasurePattern& e) {
  std::vector<int> order(static_cast<size_t>(h.rows()));
  for (int r = 1; r <= h.rows(); ++r) order[static_cast<size_t>(r - 1)] = r;
  return peel_ordered(h, c, e, order);
}

DecodeOutcome peel_scheduled(const ParityCheckMatrix& h, const BitVector& c,
                             const ErasurePattern& e,
                             const std::vector<int>& row_order) {
  std::vector<int> seen = row_order;
  std::sort(seen.begin(), seen.end());
  bool ok = static_cast<int>(seen.size()) == h.rows();
  for (int r = 1; ok && r <= h.rows(); ++r)
    if (seen[static_cast<size_t>(r - 1)] != r) ok = false;
  if (!ok) throw std::invalid_argument("row_order must be a permutation of 1..rows");
  return peel_ordered(h, c, e, row_order);
}

bool is_incorrigible(const CodeFamily& family, const ErasurePattern& e,
                     uint64_t row_space_cap) {
  if (e.n != family.length())
    throw std::invalid_argument("pattern length does not match the code");

  BitVector erased = e.to_vector();
  bool by_codeword = false;
  for (const BitVector& c : generator_matrix(family).row_space(row_space_cap)) {
    if (c.is_zero()) continue;
    if (c.is_subset_of(erased)) {
      by_codeword = true;
      break;
    }
  }

  // the erased coordinates are recoverable iff the corresponding columns of a
  // dual basis are independent
  bool by_rank = false;
  if (!e.erased.empty()) {
    BitMatrix checks = generator_matrix(family.dual());
    by_rank = checks.restricted(e.erased).rank() < static_cast<int>(e.erased.size());
  }

  if (by_codeword != by_rank)
    throw std::logic_error("incorrigibility tests disagree");
  return by_codeword;
}

PatternAnalysis exhaustive_pattern_analysis(const ParityCheckMatrix& h,
                                            const CodeFamily& family, int threads,
                                            int max_n) {
  int n = h.cols();
  if (n != family.length())
    throw std::invalid_argument("matrix width does not match the family");
  if (n > max_n || n > 24)
    throw std::invalid_argument("pattern space too large for exhaustive analysis");
  threads = count_threads(threads);

  std::vector<uint64_t> rows = h.matrix.row_masks();
  uint64_t total = uint64_t(1) << n;

  // incorrigible = superset of some nonzero codeword support; mark the
  // supports, then propagate bit by bit (each pass closes under adding one
  // coordinate)
  std::vector<uint8_t> incorr(total, 0);
  for (const BitVector& c : generator_matrix(family).row_space()) {
    if (!c.is_zero()) incorr[c.to_u64()] = 1;
  }
  for (int b = 0; b < n; ++b) {
    uint64_t bit = uint64_t(1) << b;
    for (uint64_t mask = 0; mask < total; ++mask)
      if (mask & bit) incorr[mask] |= incorr[mask ^ bit];
  }

  std::vector<std::vector<uint64_t>> peel_cnt(
      static_cast<size_t>(threads), std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));
  std::vector<std::vector<uint64_t>> ml_cnt = peel_cnt;

  auto worker = [&](int t) {
    uint64_t begin = total * static_cast<uint64_t>(t) / static_cast<uint64_t>(threads);
    uint64_t end = total * static_cast<uint64_t>(t + 1) / static_cast<uint64_t>(threads);
    for (uint64_t mask = begin; mask < end; ++mask) {
      int w = std::popcount(mask);
      if (mask && peel_mask(rows, mask) != 0)
        ++peel_cnt[static_cast<size_t>(t)][static_cast<size_t>(w)];
      if (incorr[mask]) ++ml_cnt[static_cast<size_t>(t)][static_cast<size_t>(w)];
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& th : pool) th.join();
  }

  PatternAnalysis out;
  out.n = n;
  out.fail_peel.assign(static_cast<size_t>(n) + 1, 0);
  out.fail_ml.assign(static_cast<size_t>(n) + 1, 0);
  for (int t = 0; t < threads; ++t)
    for (int w = 0; w <= n; ++w) {
      out.fail_peel[static_cast<size_t>(w)] += peel_cnt[static_cast<size_t>(t)][static_cast<size_t>(w)];
      out.fail_ml[static_cast<size_t>(w)] += ml_cnt[static_cast<size_t>(t)][static_cast<size_t>(w)];
    }
  return out;
}

double exact_failure_rate(const std::vector<Bigint>& fail_by_weight, int n,
                          double epsilon) {
  if (static_cast<int>(fail_by_weight.size()) != n + 1)
    throw std::invalid_argument("weight table must have n+1 entries");
  double rate = 0.0;
  for (int w = 0; w <= n; ++w)
    rate += fail_by_weight[static_cast<size_t>(w)].convert_to<double>() *
            std::pow(epsilon, w) * std::pow(1.0 - epsilon, n - w);
  return rate;
}

double MonteCarloReport::fail_rate_peel() const {
  return trials ? static_cast<double>(fail_peel) / static_cast<double>(trials) : 0.0;
}

double MonteCarloReport::fail_rate_ml() const {
  if (!fail_ml) throw std::logic_error("report has no ML counts");
  return trials ? static_cast<double>(*fail_ml) / static_cast<double>(trials) : 0.0;
}

double MonteCarloReport::standard_error() const {
  double p = fail_rate_peel();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

MonteCarloReport monte_carlo(const ParityCheckMatrix& h, const ChannelConfig& cfg,
                             int threads, bool track_ml) {
  if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0))
    throw std::invalid_argument("epsilon must lie in [0,1]");
  if (cfg.trials <= 0) throw std::invalid_argument("trials must be positive");
  threads = count_threads(threads);

  int n = h.cols();
  bool mask_path = n <= 64;
  std::vector<uint64_t> rows;
  if (mask_path) rows = h.matrix.row_masks();

  long long blocks = (cfg.trials + kBlockTrials - 1) / kBlockTrials;
  std::atomic<long long> next_block{0};
  std::vector<uint64_t> peel_fails(static_cast<size_t>(threads), 0);
  std::vector<uint64_t> ml_fails(static_cast<size_t>(threads), 0);

  auto run_block = [&](long long b, uint64_t& peel_acc, uint64_t& ml_acc) {
    std::mt19937_64 rng(splitmix64(cfg.seed + static_cast<uint64_t>(b) * kGolden));
    long long begin = b * kBlockTrials;
    long long end = std::min(cfg.trials, begin + kBlockTrials);
    for (long long t = begin; t < end; ++t) {
      if (mask_path) {
        uint64_t erased = 0;
        for (int j = 0; j < n; ++j)
          if (to_unit(rng()) < cfg.epsilon) erased |= uint64_t(1) << j;
        uint64_t residual = erased ? peel_mask(rows, erased) : 0;
        if (residual == 0) continue;
        ++peel_acc;
        if (track_ml) {
          ErasurePattern e = ErasurePattern::from_mask(n, erased);
          if (h.matrix.restricted(e.erased).rank() <
              static_cast<int>(e.erased.size()))
            ++ml_acc;
        }
      } else {
        std::vector<int> positions;
        for (int j = 1; j <= n; ++j)
          if (to_unit(rng()) < cfg.epsilon) positions.push_back(j);
        if (positions.empty()) continue;
        ErasurePattern e{n, positions};
        DecodeOutcome out = peel(h, BitVector(n), e);
        if (out.recovered()) continue;
        ++peel_acc;
        if (track_ml &&
            h.matrix.restricted(positions).rank() < static_cast<int>(positions.size()))
          ++ml_acc;
      }
    }
  };

  auto worker = [&](int t) {
    for (;;) {
      long long b = next_block.fetch_add(1);
      if (b >= blocks) break;
      run_block(b, peel_fails[static_cast<size_t>(t)], ml_fails[static_cast<size_t>(t)]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& th : pool) th.join();
  }

  MonteCarloReport report;
  report.epsilon = cfg.epsilon;
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  report.generator = "mt19937_64 per 65536-trial block, block seed splitmix64(seed + block*0x9E3779B97F4A7C15)";
  for (uint64_t f : peel_fails) report.fail_peel += f;
  if (track_ml) {
    unsigned long long ml = 0;
    for (uint64_t f : ml_fails) ml += f;
    report.fail_ml = ml;
  }
  return report;
}

std::string mc_report_to_json(const MonteCarloReport& report,
                              const ParityCheckMatrix& h,
                              const std::optional<PatternAnalysis>& per_weight) {
  nlohmann::json j;
  j["matrix"] = matrix_identity_json(h);
  j["epsilon"] = report.epsilon;
  j["trials"] = std::to_string(report.trials);
  j["seed"] = std::to_string(report.seed);
  j["generator"] = report.generator;
  j["fail_peel"] = std::to_string(report.fail_peel);
  j["fail_rate_peel"] = report.fail_rate_peel();
  j["stderr"] = report.standard_error();
  if (report.fail_ml) {
    j["fail_ml"] = std::to_string(*report.fail_ml);
    j["fail_rate_ml"] = report.fail_rate_ml();
  }
  if (per_weight) {
    nlohmann::json table;
    for (int w = 0; w <= per_weight->n; ++w) {
      table["fail_peel"].push_back(per_weight->fail_peel[static_cast<size_t>(w)].str());
      table["fail_ml"].push_back(per_weight->fail_ml[static_cast<size_t>(w)].str());
    }
    j["per_weight"] = table;
  }
  return j.dump(2);
}

}  // namespace stopset
