#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stopset {

// Dense GF(2) vector, bit-packed into 64-bit words.  Coordinates are 1-based
// in every public signature (matching the 1-based point/column indexing used
// throughout the geometry and code layers); coordinate 1 lives in the least
// significant bit of the first word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int length);

  // support holds 1-based coordinates; duplicates are rejected
  static BitVector from_support(int length, const std::vector<int>& support);
  // "0110..." with character k (0-based) giving coordinate k+1
  static BitVector from_string(const std::string& bits);

  int length() const { return length_; }
  bool get(int i) const;
  void set(int i, bool value = true);

  int weight() const;
  bool is_zero() const;
  std::vector<int> support() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  BitVector operator&(const BitVector& other) const;

  bool operator==(const BitVector& other) const = default;

  bool is_subset_of(const BitVector& other) const;

  // value with coordinate 1 as bit 0; only valid for length <= 64
  uint64_t to_u64() const;
  std::string to_string() const;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  int length_ = 0;
  std::vector<uint64_t> words_;

  void check_index(int i) const;
  void clear_padding();

  friend class BitMatrix;
  friend bool lex_less(const BitVector& a, const BitVector& b);
  friend bool dot(const BitVector& a, const BitVector& b);
};

// strict lexicographic order treating coordinate 1 as most significant
bool lex_less(const BitVector& a, const BitVector& b);

// inner product over GF(2)
bool dot(const BitVector& a, const BitVector& b);

// Row-major GF(2) matrix on top of BitVector rows.  Row and column indices
// are 1-based.  Operations never mutate their input; anything that "changes"
// a matrix returns a new one.
class BitMatrix {
 public:
  // row_space() refuses to materialize more than this many vectors unless the
  // caller passes a larger cap explicitly.
  static constexpr uint64_t kDefaultRowSpaceCap = uint64_t(1) << 24;

  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  static BitMatrix from_rows(std::vector<BitVector> rows);
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix identity(int n);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  const BitVector& row(int r) const;
  bool get(int r, int c) const;
  void set(int r, int c, bool value = true);

  void append_row(const BitVector& v);

  int rank() const;

  // Every vector in the row space (2^rank of them, zero included), in the
  // Gray-code order the enumeration produces.  Throws if 2^rank exceeds cap.
  std::vector<BitVector> row_space(uint64_t cap = kDefaultRowSpaceCap) const;

  // reduced row-echelon basis of the row space (canonical for equal spans)
  std::vector<BitVector> row_basis() const;

  // Keep exactly the columns listed (1-based, any order, duplicates ignored);
  // kept columns stay in increasing original order.
  BitMatrix restricted(const std::vector<int>& columns) const;

  BitMatrix transposed() const;

  // rows form a basis of { x : M x = 0 }; canonical given the row space
  BitMatrix nullspace() const;

  // y = M x with y_r = <row r, x>
  BitVector multiply(const BitVector& x) const;

  bool operator==(const BitMatrix& other) const = default;

  // one mask per row, coordinate 1 = bit 0; requires cols <= 64
  std::vector<uint64_t> row_masks() const;

  std::vector<std::string> to_strings() const;

 private:
  int cols_ = 0;
  std::vector<BitVector> rows_;

  // forward-eliminated copy; returns reduced nonzero rows and pivot columns
  void rref(std::vector<BitVector>& out_rows, std::vector<int>& pivots) const;
};

}  // namespace stopset
