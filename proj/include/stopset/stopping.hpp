#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stopset/bigint.hpp"
#include "stopset/codes.hpp"

namespace stopset {

// A stopping set of a parity-check matrix H is a column subset S such that no
// row of H restricted to S has weight exactly one (the empty set counts).
// T[i] is the exact number of stopping sets of size i.
struct StoppingSetDistribution {
  int n = 0;
  std::vector<Bigint> T;  // indices 0..n

  bool operator==(const StoppingSetDistribution&) const = default;
};

// {family, m, construction, n, T: [decimal strings]}; family/m are null for
// external matrices
std::string ssd_to_json(const StoppingSetDistribution& dist,
                        const std::optional<CodeFamily>& family, Construction construction);

bool is_stopping_set(const ParityCheckMatrix& h, const std::vector<int>& s);

// Exact SSD by scanning all 2^n column subsets.  Partitioned across threads
// when asked; per-size counts from disjoint ranges add up.  Refuses n beyond
// max_n (the subset space doubles per column).
StoppingSetDistribution exhaustive_ssd(const ParityCheckMatrix& h, int threads = 1,
                                       int max_n = 28);

// Smallest size of a nonempty stopping set, found by searching subsets in
// increasing size.  Throws if none exists (possible only for row-free or
// contrived matrices).
int stopping_distance(const ParityCheckMatrix& h, int max_n = 28);

// Closed-form SSDs of the four families with their incidence parity-check
// matrices (H1-H4), which coincide with the SSDs under H*.  All entries are
// exact integers.
StoppingSetDistribution ssd_simplex(int m);
StoppingSetDistribution ssd_hamming(int m);
StoppingSetDistribution ssd_rm1(int m);
StoppingSetDistribution ssd_exthamming(int m);
StoppingSetDistribution ssd_formula(const CodeFamily& family);

// T_3 of the classical full-rank Hamming matrix F: (5^m - 3^{m+1} + 2^{m+1})/6.
// Strictly larger than a3_hamming(m) for every m >= 2, which is why F is not
// BEC-optimal.
Bigint t3_fullrank_hamming(int m);

// Number of weight-3 codewords of the Hamming code: (2^m-1)(2^{m-1}-1)/3.
// Equals T_3 under H2/H*.
Bigint a3_hamming(int m);

// True iff S equals the union of the supports of all codewords whose support
// lies inside S -- the sufficient condition for a stopping set of any
// parity-check matrix of the code to be a stopping set of H*.
bool support_closure_holds(const CodeFamily& family, const std::vector<int>& s,
                           uint64_t cap = BitMatrix::kDefaultRowSpaceCap);

struct RowDeletionVerdict {
  int row = 0;
  bool deletion_changes_ssd = false;
};

struct BecOptimalityReport {
  StoppingSetDistribution ssd_matrix;
  StoppingSetDistribution ssd_star;
  bool distributions_match = false;
  int first_mismatch_size = -1;  // -1 when the SSDs agree everywhere
  // minimum-weight dual codewords that do not appear among the rows of H;
  // must be empty for a BEC-optimal matrix
  std::vector<BitVector> missing_minimum_dual_codewords;
  bool all_minimum_dual_rows_present = false;
  // row-by-row necessity, only evaluated at desk scale (n <= 16, rows <= 64)
  bool row_minimality_checked = false;
  std::vector<RowDeletionVerdict> row_deletion;
  bool every_row_necessary = false;

  bool optimal() const { return distributions_match && all_minimum_dual_rows_present; }
};

std::string bec_report_to_json(const BecOptimalityReport& report,
                               const std::optional<CodeFamily>& family,
                               Construction construction);

BecOptimalityReport verify_bec_optimal(const ParityCheckMatrix& h, const CodeFamily& family,
                                       int threads = 1);

}  // namespace stopset
