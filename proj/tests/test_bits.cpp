#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "stopset/bits.hpp"
#include "support/oracles.hpp"

using namespace stopset;

namespace {

std::vector<std::vector<int>> to_int_matrix(const BitMatrix& m) {
  std::vector<std::vector<int>> out(static_cast<size_t>(m.rows()),
                                    std::vector<int>(static_cast<size_t>(m.cols()), 0));
  for (int r = 1; r <= m.rows(); ++r)
    for (int c = 1; c <= m.cols(); ++c)
      out[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = m.get(r, c) ? 1 : 0;
  return out;
}

BitMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  BitMatrix m(rows, cols);
  std::bernoulli_distribution bit(0.5);
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c)
      if (bit(rng)) m.set(r, c);
  return m;
}

}  // namespace

TEST_CASE("vector basics") {
  BitVector v(7);
  CHECK(v.length() == 7);
  CHECK(v.is_zero());
  CHECK(v.weight() == 0);

  v.set(1);
  v.set(7);
  CHECK(v.get(1));
  CHECK(!v.get(2));
  CHECK(v.get(7));
  CHECK(v.weight() == 2);
  CHECK(v.support() == std::vector<int>{1, 7});

  v.set(1, false);
  CHECK(!v.get(1));
  CHECK(v.weight() == 1);

  CHECK_THROWS(v.get(0));
  CHECK_THROWS(v.get(8));
  CHECK_THROWS(BitVector::from_support(5, {2, 2}));
}

TEST_CASE("vector string and u64 round trips") {
  BitVector v = BitVector::from_string("0101001");
  CHECK(v.support() == std::vector<int>{2, 4, 7});
  CHECK(v.to_string() == "0101001");
  // coordinate 1 is bit 0
  CHECK(v.to_u64() == 0b1001010);
  CHECK(BitVector::from_support(7, {2, 4, 7}) == v);
  CHECK_THROWS(BitVector::from_string("01x"));
}

TEST_CASE("xor / and / subset semantics") {
  BitVector a = BitVector::from_string("1100");
  BitVector b = BitVector::from_string("0110");
  CHECK((a ^ b).to_string() == "1010");
  CHECK((a & b).to_string() == "0100");
  CHECK(BitVector::from_string("0100").is_subset_of(a));
  CHECK(!a.is_subset_of(b));
  BitVector z(4);
  CHECK(z.is_subset_of(a));
  CHECK_THROWS(a ^ BitVector(5));
}

TEST_CASE("xor over word boundaries") {
  // lengths past 64 exercise multi-word storage
  BitVector a(130), b(130);
  a.set(1);
  a.set(64);
  a.set(65);
  a.set(130);
  b.set(65);
  b.set(2);
  BitVector c = a ^ b;
  CHECK(c.support() == std::vector<int>{1, 2, 64, 130});
  CHECK(c.weight() == 4);
}

TEST_CASE("lexicographic order puts coordinate 1 first") {
  // 1000 < 0100 is false: "1..." has the earlier coordinate set, and we order
  // by first difference with 0 < 1, so 0100 < 1000.
  CHECK(lex_less(BitVector::from_string("0100"), BitVector::from_string("1000")));
  CHECK(!lex_less(BitVector::from_string("1000"), BitVector::from_string("0100")));
  CHECK(lex_less(BitVector::from_string("1010"), BitVector::from_string("1001")) ==
        false);  // differ first at coordinate 3: left has 1
  CHECK(lex_less(BitVector::from_string("1001"), BitVector::from_string("1010")));
  CHECK(!lex_less(BitVector::from_string("0110"), BitVector::from_string("0110")));

  // must agree with string comparison on every pair of length-6 vectors
  for (uint64_t x = 0; x < 64; ++x) {
    for (uint64_t y = 0; y < 64; ++y) {
      BitVector a(6), b(6);
      for (int i = 0; i < 6; ++i) {
        if ((x >> i) & 1) a.set(i + 1);
        if ((y >> i) & 1) b.set(i + 1);
      }
      CHECK(lex_less(a, b) == (a.to_string() < b.to_string()));
    }
  }
}

TEST_CASE("dot product") {
  BitVector a = BitVector::from_string("1101");
  CHECK(dot(a, BitVector::from_string("1000")) == true);
  CHECK(dot(a, BitVector::from_string("1100")) == false);
  CHECK(dot(a, BitVector::from_string("0010")) == false);
}

TEST_CASE("matrix construction and access") {
  BitMatrix m = BitMatrix::from_strings({"101", "011"});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.get(1, 1));
  CHECK(!m.get(1, 2));
  CHECK(m.row(2).to_string() == "011");
  CHECK(m.to_strings() == std::vector<std::string>{"101", "011"});
  CHECK_THROWS(m.row(0));
  CHECK_THROWS(m.row(3));
  CHECK_THROWS(BitMatrix::from_strings({"101", "01"}));

  BitMatrix built(2, 3);
  built.set(1, 1);
  built.set(1, 3);
  built.set(2, 2);
  built.set(2, 3);
  CHECK(built == m);
}

TEST_CASE("rank: fixed cases") {
  CHECK(BitMatrix::identity(3).rank() == 3);
  CHECK(BitMatrix(4, 5).rank() == 0);
  // two equal rows
  CHECK(BitMatrix::from_strings({"110", "110"}).rank() == 1);
  // row 3 = row 1 + row 2
  CHECK(BitMatrix::from_strings({"110", "011", "101"}).rank() == 2);
}

TEST_CASE("rank of the 7x7 complement-of-hyperplane matrix is 3") {
  // Rows indexed by a = 1..7, columns by j = 1..7, entry = parity of
  // popcount(a & j).  Row a is then the evaluation of the linear form
  // x -> a.x at every nonzero point, i.e. a nonzero codeword of the m=3
  // simplex code, so the 7 rows span a 3-dimensional space.
  BitMatrix m(7, 7);
  for (int a = 1; a <= 7; ++a)
    for (int j = 1; j <= 7; ++j)
      if (std::popcount(unsigned(a) & unsigned(j)) & 1) m.set(a, j);
  CHECK(m.rank() == 3);
  CHECK(oracle::naive_rank(to_int_matrix(m)) == 3);
}

TEST_CASE("rank matches the naive oracle and transposition on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    BitMatrix m = random_matrix(rng, 1 + trial % 9, 1 + (trial * 7) % 11);
    int r = m.rank();
    CHECK(r == oracle::naive_rank(to_int_matrix(m)));
    CHECK(r == m.transposed().rank());
  }
}

TEST_CASE("row space of the m=3 simplex generator") {
  // columns are the binary expansions of 1..7; the row space is the simplex
  // code: 8 words, every nonzero one of weight exactly 4
  BitMatrix g(3, 7);
  for (int j = 1; j <= 7; ++j)
    for (int i = 0; i < 3; ++i)
      if ((j >> i) & 1) g.set(i + 1, j);

  std::vector<BitVector> space = g.row_space();
  CHECK(space.size() == 8);
  int nonzero = 0;
  for (const BitVector& v : space) {
    if (v.is_zero()) continue;
    ++nonzero;
    CHECK(v.weight() == 4);
  }
  CHECK(nonzero == 7);

  // cross-check the whole set against the brute-force span oracle
  std::set<std::vector<int>> expect = oracle::naive_span(to_int_matrix(g), 7);
  std::set<std::vector<int>> got;
  for (const BitVector& v : space) {
    std::vector<int> iv(7, 0);
    for (int c : v.support()) iv[static_cast<size_t>(c - 1)] = 1;
    got.insert(iv);
  }
  CHECK(got == expect);
}

TEST_CASE("row space size is 2^rank; dependent rows add nothing") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 30; ++trial) {
    BitMatrix m = random_matrix(rng, 2 + trial % 6, 3 + trial % 5);
    std::vector<BitVector> space = m.row_space();
    CHECK(space.size() == (size_t(1) << m.rank()));
    // all distinct
    std::set<std::string> seen;
    for (const BitVector& v : space) seen.insert(v.to_string());
    CHECK(seen.size() == space.size());
  }

  CHECK(BitMatrix(3, 4).row_space().size() == 1);  // zero matrix: just 0
}

TEST_CASE("row space respects the cap") {
  // 25 independent rows would need 2^25 vectors; default cap is 2^24
  BitMatrix big = BitMatrix::identity(25);
  CHECK_THROWS(big.row_space());
  CHECK_NOTHROW(big.row_space(uint64_t(1) << 25));
  CHECK_THROWS(BitMatrix::identity(5).row_space(16));  // explicit small cap
}

TEST_CASE("restricted keeps listed columns in original order") {
  BitMatrix m = BitMatrix::from_strings({"10110", "01011"});
  BitMatrix s = m.restricted({1, 3, 5});
  CHECK(s.to_strings() == std::vector<std::string>{"110", "001"});
  // order and duplicates in the request don't matter: it's a column set
  CHECK(m.restricted({5, 3, 1, 3}) == s);
  CHECK(m.restricted({1, 2, 3, 4, 5}) == m);
  CHECK(m.restricted({}).cols() == 0);
  CHECK(m.restricted({}).rows() == 2);
  CHECK_THROWS(m.restricted({6}));
  CHECK_THROWS(m.restricted({0}));

  // restricting twice composes: positions {1,3} of columns {1,3,5} = {1,5}
  CHECK(s.restricted({1, 3}) == m.restricted({1, 5}));
}

TEST_CASE("transpose round trip") {
  std::mt19937 rng(7);
  BitMatrix m = random_matrix(rng, 5, 9);
  CHECK(m.transposed().transposed() == m);
  CHECK(m.transposed().rows() == 9);
  CHECK(m.transposed().cols() == 5);
}

TEST_CASE("nullspace vectors are kernel vectors and count matches rank") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    BitMatrix m = random_matrix(rng, 1 + trial % 7, 2 + trial % 8);
    BitMatrix ns = m.nullspace();
    CHECK(ns.rows() == m.cols() - m.rank());
    if (ns.rows() > 0) CHECK(ns.rank() == ns.rows());  // basis is independent
    for (int r = 1; r <= ns.rows(); ++r) CHECK(m.multiply(ns.row(r)).is_zero());
  }
  // kernel of identity is trivial
  CHECK(BitMatrix::identity(4).nullspace().rows() == 0);
}

TEST_CASE("multiply agrees with per-entry dot products") {
  BitMatrix m = BitMatrix::from_strings({"110", "011", "111"});
  BitVector x = BitVector::from_string("101");
  BitVector y = m.multiply(x);
  CHECK(y.length() == 3);
  for (int r = 1; r <= 3; ++r) CHECK(y.get(r) == dot(m.row(r), x));
  CHECK(y.to_string() == "110");
}

TEST_CASE("row_masks matches to_u64 per row") {
  BitMatrix m = BitMatrix::from_strings({"101", "010"});
  std::vector<uint64_t> masks = m.row_masks();
  CHECK(masks == std::vector<uint64_t>{0b101, 0b010});
  BitMatrix wide(1, 70);
  CHECK_THROWS(wide.row_masks());
}

TEST_CASE("row_basis spans the same space in reduced form") {
  BitMatrix m = BitMatrix::from_strings({"1100", "0110", "1010", "0001"});
  std::vector<BitVector> basis = m.row_basis();
  CHECK(basis.size() == 3);
  // reduced: each pivot column has a single 1
  BitMatrix b = BitMatrix::from_rows(basis);
  CHECK(b.rank() == 3);
  std::set<std::string> full, reduced;
  for (const BitVector& v : m.row_space()) full.insert(v.to_string());
  for (const BitVector& v : b.row_space()) reduced.insert(v.to_string());
  CHECK(full == reduced);
}
