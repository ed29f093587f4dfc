#include "stopset/bits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stopset {

namespace {
constexpr int kWordBits = 64;

int word_count(int length) { return (length + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(int length) : length_(length) {
  if (length < 0) throw std::invalid_argument("BitVector: negative length");
  words_.assign(word_count(length), 0);
}

BitVector BitVector::from_support(int length, const std::vector<int>& support) {
  BitVector v(length);
  for (int i : support) {
    if (v.get(i)) throw std::invalid_argument("BitVector::from_support: duplicate coordinate");
    v.set(i);
  }
  return v;
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(static_cast<int>(bits.size()));
  for (int k = 0; k < static_cast<int>(bits.size()); ++k) {
    char c = bits[static_cast<size_t>(k)];
    if (c == '1')
      v.set(k + 1);
    else if (c != '0')
      throw std::invalid_argument("BitVector::from_string: expected only '0'/'1'");
  }
  return v;
}

void BitVector::check_index(int i) const {
  if (i < 1 || i > length_) throw std::out_of_range("BitVector: coordinate out of range");
}

void BitVector::clear_padding() {
  int used = length_ % kWordBits;
  if (used != 0 && !words_.empty()) words_.back() &= (uint64_t(1) << used) - 1;
}

bool BitVector::get(int i) const {
  check_index(i);
  int b = i - 1;
  return (words_[static_cast<size_t>(b / kWordBits)] >> (b % kWordBits)) & 1;
}

void BitVector::set(int i, bool value) {
  check_index(i);
  int b = i - 1;
  uint64_t mask = uint64_t(1) << (b % kWordBits);
  if (value)
    words_[static_cast<size_t>(b / kWordBits)] |= mask;
  else
    words_[static_cast<size_t>(b / kWordBits)] &= ~mask;
}

int BitVector::weight() const {
  int w = 0;
  for (uint64_t word : words_) w += std::popcount(word);
  return w;
}

bool BitVector::is_zero() const {
  for (uint64_t word : words_)
    if (word != 0) return false;
  return true;
}

std::vector<int> BitVector::support() const {
  std::vector<int> out;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t word = words_[w];
    while (word != 0) {
      int b = std::countr_zero(word);
      out.push_back(static_cast<int>(w) * kWordBits + b + 1);
      word &= word - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (length_ != other.length_) throw std::invalid_argument("BitVector: length mismatch in xor");
  for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector BitVector::operator&(const BitVector& other) const {
  if (length_ != other.length_) throw std::invalid_argument("BitVector: length mismatch in and");
  BitVector out(length_);
  for (size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
  return out;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  if (length_ != other.length_)
    throw std::invalid_argument("BitVector: length mismatch in is_subset_of");
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

uint64_t BitVector::to_u64() const {
  if (length_ > 64) throw std::logic_error("BitVector::to_u64: length exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
  std::string s(static_cast<size_t>(length_), '0');
  for (int i = 1; i <= length_; ++i)
    if (get(i)) s[static_cast<size_t>(i - 1)] = '1';
  return s;
}

bool lex_less(const BitVector& a, const BitVector& b) {
  if (a.length_ != b.length_) throw std::invalid_argument("lex_less: length mismatch");
  for (size_t w = 0; w < a.words_.size(); ++w) {
    uint64_t d = a.words_[w] ^ b.words_[w];
    if (d != 0) {
      // lowest differing bit is the earliest differing coordinate
      uint64_t low = d & (~d + 1);
      return (a.words_[w] & low) == 0;
    }
  }
  return false;
}

bool dot(const BitVector& a, const BitVector& b) {
  if (a.length_ != b.length_) throw std::invalid_argument("dot: length mismatch");
  uint64_t acc = 0;
  for (size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
  return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative shape");
  rows_.assign(static_cast<size_t>(rows), BitVector(cols));
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  BitMatrix m;
  if (rows.empty()) return m;
  m.cols_ = rows[0].length();
  for (const BitVector& r : rows)
    if (r.length() != m.cols_) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> rv;
  rv.reserve(rows.size());
  for (const std::string& s : rows) rv.push_back(BitVector::from_string(s));
  return from_rows(std::move(rv));
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.set(i, i);
  return m;
}

const BitVector& BitMatrix::row(int r) const {
  if (r < 1 || r > rows()) throw std::out_of_range("BitMatrix: row index out of range");
  return rows_[static_cast<size_t>(r - 1)];
}

bool BitMatrix::get(int r, int c) const { return row(r).get(c); }

void BitMatrix::set(int r, int c, bool value) {
  if (r < 1 || r > rows()) throw std::out_of_range("BitMatrix: row index out of range");
  rows_[static_cast<size_t>(r - 1)].set(c, value);
}

void BitMatrix::append_row(const BitVector& v) {
  if (rows_.empty() && cols_ == 0) cols_ = v.length();
  if (v.length() != cols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
  rows_.push_back(v);
}

void BitMatrix::rref(std::vector<BitVector>& out_rows, std::vector<int>& pivots) const {
  out_rows = rows_;
  pivots.clear();
  size_t next = 0;
  for (int c = 1; c <= cols_ && next < out_rows.size(); ++c) {
    size_t pivot = next;
    while (pivot < out_rows.size() && !out_rows[pivot].get(c)) ++pivot;
    if (pivot == out_rows.size()) continue;
    std::swap(out_rows[next], out_rows[pivot]);
    for (size_t r = 0; r < out_rows.size(); ++r)
      if (r != next && out_rows[r].get(c)) out_rows[r] ^= out_rows[next];
    pivots.push_back(c);
    ++next;
  }
  out_rows.resize(pivots.size());
}

int BitMatrix::rank() const {
  std::vector<BitVector> r;
  std::vector<int> p;
  rref(r, p);
  return static_cast<int>(p.size());
}

std::vector<BitVector> BitMatrix::row_basis() const {
  std::vector<BitVector> r;
  std::vector<int> p;
  rref(r, p);
  return r;
}

std::vector<BitVector> BitMatrix::row_space(uint64_t cap) const {
  std::vector<BitVector> basis = row_basis();
  size_t k = basis.size();
  if (k >= 64 || (uint64_t(1) << k) > cap)
    throw std::runtime_error("BitMatrix::row_space: 2^rank exceeds enumeration cap");
  std::vector<BitVector> out;
  out.reserve(size_t(1) << k);
  BitVector v(cols_);
  out.push_back(v);
  for (uint64_t i = 1; i < (uint64_t(1) << k); ++i) {
    // Gray code walk: flips exactly one basis element per step
    v ^= basis[static_cast<size_t>(std::countr_zero(i))];
    out.push_back(v);
  }
  return out;
}

BitMatrix BitMatrix::restricted(const std::vector<int>& columns) const {
  std::vector<int> keep = columns;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int c : keep)
    if (c < 1 || c > cols_) throw std::out_of_range("BitMatrix::restricted: column out of range");
  BitMatrix out(rows(), static_cast<int>(keep.size()));
  for (int r = 1; r <= rows(); ++r) {
    const BitVector& src = rows_[static_cast<size_t>(r - 1)];
    for (int j = 0; j < static_cast<int>(keep.size()); ++j)
      if (src.get(keep[static_cast<size_t>(j)])) out.set(r, j + 1);
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows());
  for (int r = 1; r <= rows(); ++r)
    for (int c : rows_[static_cast<size_t>(r - 1)].support()) out.set(c, r);
  return out;
}

BitMatrix BitMatrix::nullspace() const {
  std::vector<BitVector> r;
  std::vector<int> pivots;
  rref(r, pivots);
  std::vector<bool> is_pivot(static_cast<size_t>(cols_) + 1, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  BitMatrix out(0, cols_);
  for (int f = 1; f <= cols_; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    BitVector x(cols_);
    x.set(f);
    for (size_t i = 0; i < pivots.size(); ++i)
      if (r[i].get(f)) x.set(pivots[i]);
    out.append_row(x);
  }
  return out;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  if (x.length() != cols_) throw std::invalid_argument("BitMatrix::multiply: length mismatch");
  BitVector y(rows());
  for (int r = 1; r <= rows(); ++r)
    if (dot(rows_[static_cast<size_t>(r - 1)], x)) y.set(r);
  return y;
}

std::vector<uint64_t> BitMatrix::row_masks() const {
  if (cols_ > 64) throw std::logic_error("BitMatrix::row_masks: more than 64 columns");
  std::vector<uint64_t> out;
  out.reserve(rows_.size());
  for (const BitVector& r : rows_) out.push_back(r.to_u64());
  return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const BitVector& r : rows_) out.push_back(r.to_string());
  return out;
}

}  // namespace stopset
