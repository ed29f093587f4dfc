#include "stopset/codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stopset {

namespace {

// incidence constructions enumerate flats; keep memory sane
constexpr int kMaxConstructionM = 11;

void check_m(int m) {
  if (m < 2) throw std::invalid_argument("code constructions need m >= 2");
  if (m > kMaxConstructionM)
    throw std::invalid_argument("construction refused: m too large to materialize");
}

BitVector incidence_vector(int n, const std::vector<int>& points) {
  return BitVector::from_support(n, points);
}

BitVector complement_vector(int n, const std::vector<int>& points) {
  BitVector v(n);
  size_t at = 0;
  for (int c = 1; c <= n; ++c) {
    if (at < points.size() && points[at] == c) {
      ++at;
      continue;
    }
    v.set(c);
  }
  return v;
}

BitMatrix incidence_matrix(const Geometry& g, int mu, bool complement) {
  BitMatrix out(0, g.num_points());
  for (const Flat& f : enumerate_flats(g, mu, kMaxConstructionM))
    out.append_row(complement ? complement_vector(g.num_points(), f.points)
                              : incidence_vector(g.num_points(), f.points));
  return out;
}

}  // namespace

CodeFamily CodeFamily::make(CodeFamilyTag tag, int m) {
  if (m < 2) throw std::invalid_argument("CodeFamily: need m >= 2");
  if (m > 30) throw std::invalid_argument("CodeFamily: m too large");
  return CodeFamily{tag, m};
}

int CodeFamily::length() const {
  switch (tag) {
    case CodeFamilyTag::Simplex:
    case CodeFamilyTag::Hamming:
      return (1 << m) - 1;
    default:
      return 1 << m;
  }
}

int CodeFamily::dimension() const {
  switch (tag) {
    case CodeFamilyTag::Simplex:
      return m;
    case CodeFamilyTag::Hamming:
      return (1 << m) - m - 1;
    case CodeFamilyTag::RM1:
      return m + 1;
    case CodeFamilyTag::ExtHamming:
      return (1 << m) - m - 1;
  }
  throw std::logic_error("unreachable");
}

int CodeFamily::min_distance() const {
  switch (tag) {
    case CodeFamilyTag::Simplex:
      return 1 << (m - 1);
    case CodeFamilyTag::Hamming:
      return 3;
    case CodeFamilyTag::RM1:
      return 1 << (m - 1);
    case CodeFamilyTag::ExtHamming:
      return 4;
  }
  throw std::logic_error("unreachable");
}

CodeFamily CodeFamily::dual() const {
  switch (tag) {
    case CodeFamilyTag::Simplex:
      return CodeFamily{CodeFamilyTag::Hamming, m};
    case CodeFamilyTag::Hamming:
      return CodeFamily{CodeFamilyTag::Simplex, m};
    case CodeFamilyTag::RM1:
      return CodeFamily{CodeFamilyTag::ExtHamming, m};
    case CodeFamilyTag::ExtHamming:
      return CodeFamily{CodeFamilyTag::RM1, m};
  }
  throw std::logic_error("unreachable");
}

Geometry CodeFamily::geometry() const {
  switch (tag) {
    case CodeFamilyTag::Simplex:
    case CodeFamilyTag::Hamming:
      return Geometry::pg(m);
    default:
      return Geometry::eg(m);
  }
}

std::string CodeFamily::name() const {
  switch (tag) {
    case CodeFamilyTag::Simplex:
      return "simplex";
    case CodeFamilyTag::Hamming:
      return "hamming";
    case CodeFamilyTag::RM1:
      return "rm1";
    case CodeFamilyTag::ExtHamming:
      return "exthamming";
  }
  throw std::logic_error("unreachable");
}

CodeFamily parse_code_family(const std::string& name, int m) {
  if (name == "simplex") return CodeFamily::simplex(m);
  if (name == "hamming") return CodeFamily::hamming(m);
  if (name == "rm1") return CodeFamily::rm1(m);
  if (name == "exthamming") return CodeFamily::ext_hamming(m);
  throw std::invalid_argument("unknown code family: " + name);
}

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::H1:
      return "h1";
    case Construction::H2:
      return "h2";
    case Construction::H3:
      return "h3";
    case Construction::H4:
      return "h4";
    case Construction::HStar:
      return "hstar";
    case Construction::FullRank:
      return "fullrank";
    case Construction::External:
      return "external";
  }
  throw std::logic_error("unreachable");
}

Construction parse_construction(const std::string& name) {
  if (name == "h1") return Construction::H1;
  if (name == "h2") return Construction::H2;
  if (name == "h3") return Construction::H3;
  if (name == "h4") return Construction::H4;
  if (name == "hstar") return Construction::HStar;
  if (name == "fullrank") return Construction::FullRank;
  if (name == "external") return Construction::External;
  throw std::invalid_argument("unknown construction: " + name);
}

ParityCheckMatrix build_h1(int m) {
  check_m(m);
  Geometry g = Geometry::pg(m);
  return ParityCheckMatrix{incidence_matrix(g, 1, false), CodeFamily::simplex(m),
                           Construction::H1, g};
}

ParityCheckMatrix build_h2(int m) {
  check_m(m);
  Geometry g = Geometry::pg(m);
  // rows are the complements of the hyperplanes (the (m-2)-flats)
  return ParityCheckMatrix{incidence_matrix(g, m - 2, true), CodeFamily::hamming(m),
                           Construction::H2, g};
}

ParityCheckMatrix build_h3(int m) {
  check_m(m);
  Geometry g = Geometry::eg(m);
  return ParityCheckMatrix{incidence_matrix(g, 2, false), CodeFamily::rm1(m),
                           Construction::H3, g};
}

ParityCheckMatrix build_h4(int m) {
  check_m(m);
  Geometry g = Geometry::eg(m);
  return ParityCheckMatrix{incidence_matrix(g, m - 1, false), CodeFamily::ext_hamming(m),
                           Construction::H4, g};
}

ParityCheckMatrix build_h_star(const CodeFamily& family, uint64_t cap) {
  BitMatrix dual_gen = generator_matrix(family.dual());
  std::vector<BitVector> words = BitMatrix::from_rows(dual_gen.row_basis()).row_space(cap);
  std::vector<BitVector> rows;
  rows.reserve(words.size());
  for (BitVector& w : words)
    if (!w.is_zero()) rows.push_back(std::move(w));
  std::sort(rows.begin(), rows.end(), [](const BitVector& a, const BitVector& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return lex_less(a, b);
  });
  return ParityCheckMatrix{BitMatrix::from_rows(std::move(rows)), family, Construction::HStar,
                           std::nullopt};
}

ParityCheckMatrix build_full_rank_hamming(int m) {
  check_m(m);
  int n = (1 << m) - 1;
  BitMatrix f(m, n);
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < m; ++i)
      if ((j >> i) & 1) f.set(i + 1, j);
  return ParityCheckMatrix{std::move(f), CodeFamily::hamming(m), Construction::FullRank,
                           std::nullopt};
}

Construction canonical_construction(CodeFamilyTag tag) {
  switch (tag) {
    case CodeFamilyTag::Simplex:
      return Construction::H1;
    case CodeFamilyTag::Hamming:
      return Construction::H2;
    case CodeFamilyTag::RM1:
      return Construction::H3;
    case CodeFamilyTag::ExtHamming:
      return Construction::H4;
  }
  throw std::logic_error("unreachable");
}

ParityCheckMatrix build_matrix(const CodeFamily& family, Construction construction) {
  switch (construction) {
    case Construction::H1:
      if (family.tag != CodeFamilyTag::Simplex)
        throw std::invalid_argument("h1 is a Simplex construction");
      return build_h1(family.m);
    case Construction::H2:
      if (family.tag != CodeFamilyTag::Hamming)
        throw std::invalid_argument("h2 is a Hamming construction");
      return build_h2(family.m);
    case Construction::H3:
      if (family.tag != CodeFamilyTag::RM1)
        throw std::invalid_argument("h3 is an RM(m,1) construction");
      return build_h3(family.m);
    case Construction::H4:
      if (family.tag != CodeFamilyTag::ExtHamming)
        throw std::invalid_argument("h4 is an extended Hamming construction");
      return build_h4(family.m);
    case Construction::HStar:
      return build_h_star(family);
    case Construction::FullRank:
      if (family.tag != CodeFamilyTag::Hamming)
        throw std::invalid_argument("fullrank is the Hamming construction F");
      return build_full_rank_hamming(family.m);
    case Construction::External:
      throw std::invalid_argument("external matrices come from import, not build");
  }
  throw std::logic_error("unreachable");
}

BitMatrix generator_matrix(const CodeFamily& family) {
  int m = family.m;
  switch (family.tag) {
    case CodeFamilyTag::Simplex:
      return build_full_rank_hamming(m).matrix;
    case CodeFamilyTag::Hamming:
      return build_full_rank_hamming(m).matrix.nullspace();
    case CodeFamilyTag::RM1: {
      // evaluations of the affine functions 1, x_1, ..., x_m at all points
      int n = 1 << m;
      BitMatrix g(m + 1, n);
      for (int j = 1; j <= n; ++j) {
        g.set(1, j);
        for (int i = 0; i < m; ++i)
          if (((j - 1) >> i) & 1) g.set(i + 2, j);
      }
      return g;
    }
    case CodeFamilyTag::ExtHamming:
      return build_h4(m).matrix.nullspace();
  }
  throw std::logic_error("unreachable");
}

ExportFormat parse_export_format(const std::string& name) {
  if (name == "alist") return ExportFormat::Alist;
  if (name == "dense-text" || name == "dense") return ExportFormat::DenseText;
  if (name == "json") return ExportFormat::Json;
  throw std::invalid_argument("unknown export format: " + name);
}

std::string export_format_name(ExportFormat f) {
  switch (f) {
    case ExportFormat::Alist:
      return "alist";
    case ExportFormat::DenseText:
      return "dense-text";
    case ExportFormat::Json:
      return "json";
  }
  throw std::logic_error("unreachable");
}

namespace {

std::string export_alist(const BitMatrix& h) {
  // the usual alist layout: "n m", max degrees, per-column and per-row
  // degrees, then 1-based neighbor lists padded with 0 to the max degree
  int rows = h.rows(), cols = h.cols();
  std::vector<std::vector<int>> col_nbrs(static_cast<size_t>(cols));
  std::vector<std::vector<int>> row_nbrs(static_cast<size_t>(rows));
  for (int r = 1; r <= rows; ++r) {
    for (int c : h.row(r).support()) {
      col_nbrs[static_cast<size_t>(c - 1)].push_back(r);
      row_nbrs[static_cast<size_t>(r - 1)].push_back(c);
    }
  }
  size_t max_col = 0, max_row = 0;
  for (const auto& v : col_nbrs) max_col = std::max(max_col, v.size());
  for (const auto& v : row_nbrs) max_row = std::max(max_row, v.size());

  std::ostringstream out;
  out << cols << ' ' << rows << '\n';
  out << max_col << ' ' << max_row << '\n';
  for (int c = 0; c < cols; ++c) out << col_nbrs[static_cast<size_t>(c)].size() << (c + 1 < cols ? ' ' : '\n');
  for (int r = 0; r < rows; ++r) out << row_nbrs[static_cast<size_t>(r)].size() << (r + 1 < rows ? ' ' : '\n');
  auto emit_padded = [&out](const std::vector<int>& nbrs, size_t width) {
    for (size_t i = 0; i < width; ++i) out << (i < nbrs.size() ? nbrs[i] : 0) << (i + 1 < width ? ' ' : '\n');
  };
  for (const auto& v : col_nbrs) emit_padded(v, max_col);
  for (const auto& v : row_nbrs) emit_padded(v, max_row);
  return out.str();
}

std::string export_dense(const BitMatrix& h) {
  std::string out;
  for (const std::string& row : h.to_strings()) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string export_json(const ParityCheckMatrix& pcm) {
  nlohmann::json j;
  if (pcm.family) {
    j["family"] = pcm.family->name();
    j["m"] = pcm.family->m;
  } else {
    j["family"] = nullptr;
    j["m"] = nullptr;
  }
  j["construction"] = construction_name(pcm.construction);
  j["rows"] = pcm.rows();
  j["cols"] = pcm.cols();
  nlohmann::json supports = nlohmann::json::array();
  for (int r = 1; r <= pcm.rows(); ++r) supports.push_back(pcm.matrix.row(r).support());
  j["row_supports"] = std::move(supports);
  return j.dump(2) + "\n";
}

}  // namespace

std::string export_matrix(const ParityCheckMatrix& pcm, ExportFormat format) {
  switch (format) {
    case ExportFormat::Alist:
      return export_alist(pcm.matrix);
    case ExportFormat::DenseText:
      return export_dense(pcm.matrix);
    case ExportFormat::Json:
      return export_json(pcm);
  }
  throw std::invalid_argument("unsupported export format");
}

ParityCheckMatrix import_alist(const std::string& text) {
  std::istringstream in(text);
  long long cols = 0, rows = 0, max_col = 0, max_row = 0;
  if (!(in >> cols >> rows)) throw std::invalid_argument("alist: missing size header");
  if (!(in >> max_col >> max_row)) throw std::invalid_argument("alist: missing degree header");
  if (cols <= 0 || rows <= 0 || max_col < 0 || max_row < 0 || cols > (1 << 26) ||
      rows > (1 << 26))
    throw std::invalid_argument("alist: implausible dimensions");

  auto read_degrees = [&in](long long count, long long max_deg, const char* what) {
    std::vector<int> degs(static_cast<size_t>(count));
    for (auto& d : degs) {
      if (!(in >> d)) throw std::invalid_argument(std::string("alist: truncated ") + what);
      if (d < 0 || d > max_deg) throw std::invalid_argument(std::string("alist: bad ") + what);
    }
    return degs;
  };
  std::vector<int> col_degs = read_degrees(cols, max_col, "column degree list");
  std::vector<int> row_degs = read_degrees(rows, max_row, "row degree list");

  auto read_neighbors = [&in](const std::vector<int>& degs, long long width, long long limit,
                              const char* what) {
    std::vector<std::vector<int>> nbrs(degs.size());
    for (size_t i = 0; i < degs.size(); ++i) {
      for (long long k = 0; k < width; ++k) {
        long long v;
        if (!(in >> v)) throw std::invalid_argument(std::string("alist: truncated ") + what);
        if (k < degs[i]) {
          if (v < 1 || v > limit)
            throw std::invalid_argument(std::string("alist: index out of range in ") + what);
          nbrs[i].push_back(static_cast<int>(v));
        } else if (v != 0) {
          throw std::invalid_argument(std::string("alist: nonzero padding in ") + what);
        }
      }
    }
    return nbrs;
  };
  std::vector<std::vector<int>> col_nbrs =
      read_neighbors(col_degs, max_col, rows, "column lists");
  std::vector<std::vector<int>> row_nbrs = read_neighbors(row_degs, max_row, cols, "row lists");

  BitMatrix h(static_cast<int>(rows), static_cast<int>(cols));
  for (int r = 1; r <= rows; ++r)
    for (int c : row_nbrs[static_cast<size_t>(r - 1)]) h.set(r, c);
  // the column lists carry the same incidence; make sure they agree
  for (int c = 1; c <= cols; ++c)
    for (int r : col_nbrs[static_cast<size_t>(c - 1)])
      if (!h.get(r, c))
        throw std::invalid_argument("alist: row and column lists are inconsistent");
  long long ones = 0;
  for (int d : row_degs) ones += d;
  long long ones_cols = 0;
  for (int d : col_degs) ones_cols += d;
  if (ones != ones_cols)
    throw std::invalid_argument("alist: row and column degree totals differ");

  return ParityCheckMatrix{std::move(h), std::nullopt, Construction::External, std::nullopt};
}

ParityCheckMatrix import_dense_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("dense-text: no rows");
  return ParityCheckMatrix{BitMatrix::from_strings(lines), std::nullopt, Construction::External,
                           std::nullopt};
}

}  // namespace stopset
