// stopset: build/analyze parity-check matrices of the four geometry families
// and exercise them over the binary erasure channel.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stopset/bec.hpp"
#include "stopset/config.hpp"
#include "stopset/generator_counts.hpp"
#include "stopset/stopping.hpp"

using namespace stopset;

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::string weight_profile(const BitMatrix& m, bool by_rows) {
  std::map<int, int> hist;
  if (by_rows) {
    for (int r = 1; r <= m.rows(); ++r) ++hist[m.row(r).weight()];
  } else {
    for (int c = 1; c <= m.cols(); ++c) {
      int w = 0;
      for (int r = 1; r <= m.rows(); ++r) w += m.get(r, c);
      ++hist[w];
    }
  }
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [w, count] : hist) {
    if (!first) os << ", ";
    os << w << ": " << count;
    first = false;
  }
  os << "}";
  return os.str();
}

Construction pick_construction(const std::string& flag, const CodeFamily& family) {
  if (flag.empty()) return canonical_construction(family.tag);
  return parse_construction(flag);
}

int first_nonzero_size(const StoppingSetDistribution& d) {
  for (int i = 1; i <= d.n; ++i)
    if (d.T[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

int cmd_build(const CodeFamily& family, const std::string& construction_flag,
              const std::string& format_flag, const std::string& out_path) {
  ParityCheckMatrix pcm = build_matrix(family, pick_construction(construction_flag, family));
  std::string text = export_matrix(pcm, parse_export_format(format_flag));

  std::ostringstream summary;
  summary << family.name() << " m=" << family.m << " " << construction_name(pcm.construction)
          << ": " << pcm.rows() << " x " << pcm.cols()
          << ", row weights " << weight_profile(pcm.matrix, true)
          << ", column weights " << weight_profile(pcm.matrix, false) << "\n";

  if (out_path.empty()) {
    std::cout << text;  // the matrix is the machine output
    std::cerr << summary.str();
  } else {
    write_text(text, out_path);
    std::cout << summary.str();
  }
  return 0;
}

int cmd_ssd(const CodeFamily& family, const std::string& construction_flag,
            const std::string& method, const std::string& out_path, int threads,
            int max_n) {
  Construction construction = pick_construction(construction_flag, family);

  if (method == "formula") {
    write_text(ssd_to_json(ssd_formula(family), family, construction), out_path);
    return 0;
  }
  if (method == "exhaustive") {
    ParityCheckMatrix h = build_matrix(family, construction);
    write_text(ssd_to_json(exhaustive_ssd(h, threads, max_n), family, construction),
               out_path);
    return 0;
  }
  if (method != "both") throw std::invalid_argument("unknown method: " + method);

  StoppingSetDistribution from_formula = ssd_formula(family);
  ParityCheckMatrix h = build_matrix(family, construction);
  StoppingSetDistribution from_scan = exhaustive_ssd(h, threads, max_n);
  write_text(ssd_to_json(from_formula, family, construction), out_path);
  if (from_formula == from_scan) {
    std::cout << "MATCH\n";
    return 0;
  }
  int where = 0;
  while (where <= from_formula.n &&
         from_formula.T[static_cast<size_t>(where)] == from_scan.T[static_cast<size_t>(where)])
    ++where;
  std::cout << "MISMATCH at size " << where << ": formula "
            << from_formula.T[static_cast<size_t>(where)].str() << ", exhaustive "
            << from_scan.T[static_cast<size_t>(where)].str() << "\n";
  return 1;
}

bool identity_suite(int max_m, std::ostream& diag) {
  bool ok = true;
  auto fail = [&](const std::string& what) {
    diag << "identity failed: " << what << "\n";
    ok = false;
  };

  for (int m = 0; m <= 2 * max_m; ++m)
    if (!alternating_binomial_identity_holds(m))
      fail("alternating Gaussian-binomial sum, m=" + std::to_string(m));

  // Gaussian binomial symmetry and the q-Pascal recursion
  for (int n = 0; n <= 2 * max_m; ++n)
    for (int k = 0; k <= n; ++k) {
      if (gaussian_binomial(n, k) != gaussian_binomial(n, n - k))
        fail("Gaussian symmetry at (" + std::to_string(n) + "," + std::to_string(k) + ")");
      if (n > 0 && k > 0 &&
          gaussian_binomial(n, k) != gaussian_binomial(n - 1, k - 1) +
                                         int_pow(2, k) * gaussian_binomial(n - 1, k))
        fail("q-Pascal at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }

  for (GeometryKind kind : {GeometryKind::PG, GeometryKind::EG}) {
    std::string tag = geometry_kind_name(kind);
    int lmax = std::min(max_m, 5);

    // flat-count closed forms against the Gaussian binomial
    for (int mu2 = 0; mu2 <= max_m; ++mu2)
      for (int mu1 = 0; mu1 <= mu2; ++mu1) {
        Bigint n = count_flats_in_flat(kind, mu2, mu1);
        Bigint expect = kind == GeometryKind::PG
                            ? gaussian_binomial(mu2 + 1, mu1 + 1)
                            : int_pow(2, mu2 - mu1) * gaussian_binomial(mu2, mu1);
        if (n != expect)
          fail("flat count " + tag + "(" + std::to_string(mu2) + "," + std::to_string(mu1) + ")");
      }

    // explicit formulas against the defining recursions
    for (int l = 0; l <= lmax; ++l)
      for (int u = 0; u <= 18; ++u) {
        if (count_generators_explicit(kind, u, l) != count_generators_recursive(kind, u, l))
          fail("B " + tag + "(" + std::to_string(u) + "," + std::to_string(l) + ")");
        if (count_stopping_generators_explicit(kind, u, l) !=
            count_stopping_generators_recursive(kind, u, l))
          fail("G " + tag + "(" + std::to_string(u) + "," + std::to_string(l) + ")");
      }

    // every nonempty u-subset of an l-flat spans exactly one flat
    for (int l = 0; l <= lmax; ++l)
      for (int u = 1; u <= 12; ++u) {
        Bigint total = 0;
        for (int i = 0; i <= l; ++i)
          total += count_flats_in_flat(kind, l, i) * count_generators(kind, u, i);
        if (total != binomial(flat_point_count(kind, l).convert_to<long long>(), u))
          fail("spanning partition " + tag + " l=" + std::to_string(l) + " u=" + std::to_string(u));
      }

    // B decomposes through the extension pairs once u >= l + 2
    for (int l = 1; l <= lmax; ++l)
      for (int u = l + 2; u <= 14; ++u) {
        Bigint sum = 0;
        for (int k = 0; k <= l - 1; ++k)
          sum += count_flat_extension_pairs(kind, l, k) *
                 count_stopping_generators(kind, u - k, l - k);
        if (sum != count_generators(kind, u, l))
          fail("extension decomposition " + tag + "(" + std::to_string(u) + "," +
               std::to_string(l) + ")");
      }
  }
  return ok;
}

int cmd_verify(const CodeFamily& family, const std::string& construction_flag,
               int threads, bool as_json) {
  Construction construction = pick_construction(construction_flag, family);
  ParityCheckMatrix h = build_matrix(family, construction);
  BecOptimalityReport rep = verify_bec_optimal(h, family, threads);

  if (as_json) {
    std::cout << bec_report_to_json(rep, family, construction) << "\n";
  } else {
    std::cout << family.name() << " m=" << family.m << ", matrix "
              << construction_name(construction) << " (" << h.rows() << " x " << h.cols()
              << ")\n";
    if (rep.distributions_match) {
      std::cout << "stopping-set distribution matches the all-dual-codeword matrix\n";
    } else {
      int k = rep.first_mismatch_size;
      std::cout << "stopping-set distributions differ first at size " << k << " ("
                << rep.ssd_matrix.T[static_cast<size_t>(k)].str() << " vs "
                << rep.ssd_star.T[static_cast<size_t>(k)].str() << ")\n";
    }
    std::cout << "minimum-weight dual codewords present as rows: "
              << (rep.all_minimum_dual_rows_present ? "yes" : "no");
    if (!rep.missing_minimum_dual_codewords.empty())
      std::cout << " (missing " << rep.missing_minimum_dual_codewords.size() << ")";
    std::cout << "\n";
    if (rep.row_minimality_checked)
      std::cout << "every single-row deletion changes the distribution: "
                << (rep.every_row_necessary ? "yes" : "no") << "\n";
  }
  bool pass = rep.distributions_match && rep.all_minimum_dual_rows_present;
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_simulate(const CodeFamily& family, const std::string& construction_flag,
                 const std::vector<double>& epsilons, long long trials, uint64_t seed,
                 int threads, bool track_ml, bool exact, const std::string& out_path,
                 const std::string& json_path) {
  ParityCheckMatrix h = build_matrix(family, pick_construction(construction_flag, family));

  std::optional<PatternAnalysis> table;
  if (exact) table = exhaustive_pattern_analysis(h, family, threads);

  std::ostringstream csv;
  csv << "epsilon,fail_rate,stderr,trials,seed";
  if (track_ml) csv << ",fail_rate_ml";
  if (exact) csv << ",exact_rate,z";
  csv << "\n";

  nlohmann::json reports = nlohmann::json::array();
  bool within_tolerance = true;
  for (double eps : epsilons) {
    MonteCarloReport r = monte_carlo(h, ChannelConfig{eps, trials, seed}, threads, track_ml);
    csv << fmt_double(eps) << "," << fmt_double(r.fail_rate_peel()) << ","
        << fmt_double(r.standard_error()) << "," << trials << "," << seed;
    if (track_ml) csv << "," << fmt_double(r.fail_rate_ml());
    if (exact) {
      double exact_rate = exact_failure_rate(table->fail_peel, table->n, eps);
      double sigma = std::sqrt(exact_rate * (1.0 - exact_rate) / static_cast<double>(trials));
      double z = sigma > 0.0 ? (r.fail_rate_peel() - exact_rate) / sigma
                             : (r.fail_rate_peel() == exact_rate ? 0.0 : HUGE_VAL);
      if (std::abs(z) > 4.0) within_tolerance = false;
      csv << "," << fmt_double(exact_rate) << "," << fmt_double(z);
    }
    csv << "\n";
    if (!json_path.empty())
      reports.push_back(nlohmann::json::parse(mc_report_to_json(r, h, table)));
  }

  write_text(csv.str(), out_path);
  if (!json_path.empty()) write_text(reports.dump(2), json_path);
  if (!within_tolerance)
    std::cerr << "empirical rate outside 4 standard errors of the exact rate\n";
  return within_tolerance ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stopping-set analysis of finite-geometry parity-check matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 1;
  bool verify_flag = false;
  app.add_option("--threads", threads, "worker threads for enumeration and simulation")
      ->envname("STOPSET_THREADS")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verify-mode", verify_flag,
               "cross-check closed forms against their recursions at extra cost");

  std::string family_name, construction_flag;
  int m = 0;

  auto add_family_opts = [&](CLI::App* sub, bool with_construction) {
    sub->add_option("--family", family_name, "simplex | hamming | rm1 | exthamming")
        ->required();
    sub->add_option("--m", m, "geometry size parameter")->required();
    if (with_construction)
      sub->add_option("--construction", construction_flag,
                      "h1 | h2 | h3 | h4 | hstar | fullrank (default: the family's own)");
  };

  // build
  CLI::App* build = app.add_subcommand("build", "construct and export a matrix");
  std::string format_flag = "alist", out_path;
  add_family_opts(build, true);
  build->add_option("--format", format_flag, "alist | dense | json");
  build->add_option("--out", out_path, "write the export here instead of standard output");

  // ssd
  CLI::App* ssd = app.add_subcommand("ssd", "stopping-set distribution");
  std::string method = "formula";
  int max_n = 28;
  add_family_opts(ssd, true);
  ssd->add_option("--method", method, "formula | exhaustive | both");
  ssd->add_option("--max-n", max_n, "largest block length exhaustive scans accept");
  ssd->add_option("--out", out_path, "write the JSON here instead of standard output");

  // counts
  CLI::App* counts = app.add_subcommand("counts", "spanning-subset counts and identities");
  std::string kind_name = "pg";
  std::vector<int> b_args, g_args, alpha_args, gauss_args;
  bool identities = false;
  int ident_max = 6;
  counts->add_option("--kind", kind_name, "pg | eg");
  counts->add_option("--B", b_args, "u l: subsets of an l-flat spanning it")->expected(2);
  counts->add_option("--G", g_args, "u l: spanning subsets no single removal breaks")
      ->expected(2);
  counts->add_option("--alpha", alpha_args, "l k: flat chain multiplicities")->expected(2);
  counts->add_option("--gauss", gauss_args, "n m: Gaussian binomial")->expected(2);
  counts->add_flag("--identities", identities, "run the identity suite");
  counts->add_option("--max", ident_max, "identity suite size bound");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "check a matrix is BEC-optimal");
  std::string matrix_flag;
  bool verify_json = false;
  add_family_opts(verify, false);
  verify->add_option("--matrix", matrix_flag, "construction to verify (default: canonical)");
  verify->add_flag("--json", verify_json, "emit the full report as JSON");

  // simulate
  CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo erasure decoding");
  std::vector<double> epsilons;
  long long trials = 100000;
  uint64_t seed = 0;
  bool track_ml = false, exact = false;
  std::string json_path;
  add_family_opts(simulate, true);
  simulate->add_option("--epsilon", epsilons, "erasure probabilities to sweep")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--trials", trials, "trials per epsilon");
  simulate->add_option("--seed", seed, "base seed for the block generators");
  simulate->add_flag("--ml", track_ml, "also count optimal-decoder failures");
  simulate->add_flag("--exact", exact,
                     "compare against exact per-weight rates (exhaustive, n <= 24)");
  simulate->add_option("--out", out_path, "write the CSV here instead of standard output");
  simulate->add_option("--json", json_path, "also write one JSON report per epsilon");

  CLI11_PARSE(app, argc, argv);
  set_verify_mode(verify_flag);

  try {
    if (build->parsed())
      return cmd_build(parse_code_family(family_name, m), construction_flag, format_flag,
                       out_path);
    if (ssd->parsed())
      return cmd_ssd(parse_code_family(family_name, m), construction_flag, method, out_path,
                     threads, max_n);
    if (counts->parsed()) {
      GeometryKind kind = parse_geometry_kind(kind_name);
      if (!b_args.empty())
        std::cout << count_generators(kind, b_args[0], b_args[1]).str() << "\n";
      if (!g_args.empty())
        std::cout << count_stopping_generators(kind, g_args[0], g_args[1]).str() << "\n";
      if (!alpha_args.empty())
        std::cout << count_flat_extension_pairs(kind, alpha_args[0], alpha_args[1]).str()
                  << "\n";
      if (!gauss_args.empty())
        std::cout << gaussian_binomial(gauss_args[0], gauss_args[1]).str() << "\n";
      if (identities) {
        if (!identity_suite(ident_max, std::cerr)) return 1;
        std::cout << "ALL OK\n";
      }
      if (b_args.empty() && g_args.empty() && alpha_args.empty() && gauss_args.empty() &&
          !identities)
        throw std::invalid_argument("nothing to do: pass --B/--G/--alpha/--gauss or --identities");
      return 0;
    }
    if (verify->parsed())
      return cmd_verify(parse_code_family(family_name, m), matrix_flag, threads, verify_json);
    if (simulate->parsed())
      return cmd_simulate(parse_code_family(family_name, m), construction_flag, epsilons,
                          trials, seed, threads, track_ml, exact, out_path, json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
