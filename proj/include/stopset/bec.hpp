#pragma once

// Binary erasure channel: peeling decoder, ML (incorrigibility) analysis,
// exhaustive per-pattern tables, and seeded Monte-Carlo estimation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stopset/bigint.hpp"
#include "stopset/codes.hpp"

namespace stopset {

struct ErasurePattern {
  int n = 0;
  std::vector<int> erased;  // sorted, unique, 1-based

  // validates 1 <= p <= n, sorts, rejects duplicates
  static ErasurePattern from_positions(int n, std::vector<int> positions);
  static ErasurePattern from_mask(int n, uint64_t mask);  // n <= 64

  BitVector to_vector() const;
  uint64_t to_mask() const;  // n <= 64
};

enum class DecodeStatus { Recovered, Failed };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::Failed;
  std::vector<int> residual;               // empty iff Recovered
  std::optional<BitVector> resolved_word;  // present iff Recovered
  bool recovered() const { return status == DecodeStatus::Recovered; }
};

struct ChannelConfig {
  double epsilon = 0.0;
  long long trials = 0;
  uint64_t seed = 0;
};

// Iterative decoder: repeatedly take a row with exactly one erased position
// in its support and solve that position from the parity equation, until no
// such row remains.  c must satisfy every row of h (it is the transmitted
// codeword); the residual at the fixpoint does not depend on the order rows
// are tried, which peel_scheduled exposes for testing: it sweeps the rows in
// the given 1-based order instead of 1..rows.
DecodeOutcome peel(const ParityCheckMatrix& h, const BitVector& c,
                   const ErasurePattern& e);
DecodeOutcome peel_scheduled(const ParityCheckMatrix& h, const BitVector& c,
                             const ErasurePattern& e,
                             const std::vector<int>& row_order);

// True iff e contains the support of a nonzero codeword, i.e. even an optimal
// erasure decoder cannot pin down the transmitted word.  Computed two ways —
// codeword-support scan over the generator row space and a rank test on the
// erased columns of a dual basis — which must agree (logic_error otherwise).
// The row-space walk throws length_error when 2^k exceeds the cap.
bool is_incorrigible(const CodeFamily& family, const ErasurePattern& e,
                     uint64_t row_space_cap = BitMatrix::kDefaultRowSpaceCap);

struct PatternAnalysis {
  int n = 0;
  std::vector<Bigint> fail_peel;  // [w] = weight-w sets where peeling fails
  std::vector<Bigint> fail_ml;    // [w] = weight-w incorrigible sets
};

// Runs the peeling fixpoint on every erasure pattern (all-zero codeword; the
// failure structure is codeword-independent) and marks incorrigible patterns
// by superset-propagating the codeword supports of the family.
PatternAnalysis exhaustive_pattern_analysis(const ParityCheckMatrix& h,
                                            const CodeFamily& family,
                                            int threads = 1, int max_n = 24);

// sum_w fail[w] * eps^w * (1-eps)^(n-w)
double exact_failure_rate(const std::vector<Bigint>& fail_by_weight, int n,
                          double epsilon);

struct MonteCarloReport {
  double epsilon = 0.0;
  long long trials = 0;
  uint64_t seed = 0;
  std::string generator;  // PRNG scheme identifier, fixed per build
  unsigned long long fail_peel = 0;
  std::optional<unsigned long long> fail_ml;

  double fail_rate_peel() const;
  double fail_rate_ml() const;  // requires fail_ml
  double standard_error() const;
};

// Erases each position independently with probability cfg.epsilon.  Trials
// are split into fixed 65536-trial blocks, each driven by its own generator
// seeded from (cfg.seed, block index), so the report is bit-identical for a
// given (h, cfg) no matter how many threads run the blocks.  track_ml adds a
// rank test on the erased columns for every trial whose peeling failed
// (incorrigible patterns are always peeling failures).
MonteCarloReport monte_carlo(const ParityCheckMatrix& h,
                             const ChannelConfig& cfg, int threads = 1,
                             bool track_ml = false);

std::string mc_report_to_json(const MonteCarloReport& report,
                              const ParityCheckMatrix& h,
                              const std::optional<PatternAnalysis>& per_weight =
                                  std::nullopt);

}  // namespace stopset
