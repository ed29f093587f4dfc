#pragma once

#include <optional>
#include <string>

#include "stopset/bits.hpp"
#include "stopset/geometry.hpp"

namespace stopset {

// The four code families under study, each determined by a single parameter
// m >= 2:
//   Simplex      [2^m-1, m,         2^{m-1}]
//   Hamming      [2^m-1, 2^m-m-1,   3]
//   RM1          [2^m,   m+1,       2^{m-1}]   (first-order Reed-Muller)
//   ExtHamming   [2^m,   2^m-m-1,   4]
// Simplex and Hamming are dual to each other, as are RM1 and ExtHamming.
enum class CodeFamilyTag { Simplex, Hamming, RM1, ExtHamming };

struct CodeFamily {
  CodeFamilyTag tag;
  int m;

  static CodeFamily make(CodeFamilyTag tag, int m);
  static CodeFamily simplex(int m) { return make(CodeFamilyTag::Simplex, m); }
  static CodeFamily hamming(int m) { return make(CodeFamilyTag::Hamming, m); }
  static CodeFamily rm1(int m) { return make(CodeFamilyTag::RM1, m); }
  static CodeFamily ext_hamming(int m) { return make(CodeFamilyTag::ExtHamming, m); }

  int length() const;
  int dimension() const;
  int min_distance() const;
  CodeFamily dual() const;
  // the geometry whose points index the coordinates: PG(m-1,2) for the
  // length 2^m-1 families, EG(m,2) for the length 2^m families
  Geometry geometry() const;
  std::string name() const;

  bool operator==(const CodeFamily&) const = default;
};

CodeFamily parse_code_family(const std::string& name, int m);

// How a parity-check matrix came to be.  H1-H4 are the incidence
// constructions (lines of PG, hyperplane complements of PG, planes of EG,
// hyperplanes of EG); HStar stacks every nonzero dual codeword; FullRank is
// the classical m-row Hamming matrix; External marks imported matrices.
enum class Construction { H1, H2, H3, H4, HStar, FullRank, External };

std::string construction_name(Construction c);
Construction parse_construction(const std::string& name);

struct ParityCheckMatrix {
  BitMatrix matrix;
  std::optional<CodeFamily> family;  // unknown for imported matrices
  Construction construction = Construction::External;
  std::optional<Geometry> geometry;  // set for the incidence constructions

  int rows() const { return matrix.rows(); }
  int cols() const { return matrix.cols(); }
};

// Incidence constructions.  Row order is the enumerate_flats order of the
// underlying flats (lexicographic by point list).
ParityCheckMatrix build_h1(int m);  // lines of PG(m-1,2); Simplex code
ParityCheckMatrix build_h2(int m);  // hyperplane complements in PG(m-1,2); Hamming
ParityCheckMatrix build_h3(int m);  // planes of EG(m,2); RM(m,1)
ParityCheckMatrix build_h4(int m);  // hyperplanes of EG(m,2); extended Hamming

// All 2^{k*}-1 nonzero dual codewords as rows, sorted by weight then
// lexicographically.  Refuses dual dimensions whose row space exceeds cap.
ParityCheckMatrix build_h_star(const CodeFamily& family,
                               uint64_t cap = BitMatrix::kDefaultRowSpaceCap);

// The classical full-rank Hamming parity-check matrix: m rows, column j is
// the binary expansion of j (coordinate 1 = least significant bit).
ParityCheckMatrix build_full_rank_hamming(int m);

// The construction that canonically realizes each family.
Construction canonical_construction(CodeFamilyTag tag);

// Build by (family, construction) pair; throws when the pair is incompatible
// (e.g. h1 only builds Simplex matrices, fullrank only Hamming).
ParityCheckMatrix build_matrix(const CodeFamily& family, Construction construction);

// Full-row-rank generator matrix: Simplex from its defining columns, RM1 from
// the affine-function evaluations, Hamming/ExtHamming as null-space bases of
// F / H4.
BitMatrix generator_matrix(const CodeFamily& family);

enum class ExportFormat { Alist, DenseText, Json };
ExportFormat parse_export_format(const std::string& name);
std::string export_format_name(ExportFormat f);

std::string export_matrix(const ParityCheckMatrix& pcm, ExportFormat format);

// Imports produce construction External with no family attached.
ParityCheckMatrix import_alist(const std::string& text);
ParityCheckMatrix import_dense_text(const std::string& text);

}  // namespace stopset
