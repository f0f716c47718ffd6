#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weyres/report.hpp"

namespace {

constexpr unsigned long long kDefaultSeed = 20250810ULL;

struct CommonOptions {
  std::string format = "json";
};

void add_format_option(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "output format: json, tsv, pretty")
      ->envname("WEYRES_FORMAT")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}));
}

void emit(const weyres::Document& doc, const CommonOptions& opts) {
  std::cout << weyres::render(doc, weyres::parse_format(opts.format));
}

void check_mnj(int m, int n, int j) {
  if (!(2 <= n && n <= m))
    throw CLI::ValidationError("--m/--n", "need 2 <= n <= m");
  if (!(0 <= j && j <= m - n + 1))
    throw CLI::ValidationError("--j", "need 0 <= j <= m - n + 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weyres: equivariant resolutions on maximal-minor determinantal loci,\n"
      "with an exact linear-algebra verification oracle"};
  app.require_subcommand(1);
  int exit_status = 0;

  CommonOptions opts;
  int m = 3, n = 2, j = 1, l = -1, d_max = 3, trials = 10, ann_dmax = 2,
      threads = 0;
  long long prime = 2147483647;
  bool exact = false;
  unsigned long long seed = kDefaultSeed;
  std::vector<int> avec, bvec, upart, qpart, lambda, alpha;
  int bbw_r = 1, bbw_m = 2, pieri_j = 1;

  auto* resolve = app.add_subcommand(
      "resolve", "build the equivariant resolution; optionally specialize to "
                 "split bundles (+)O(a_i) -> (+)O(b_k) on P^l");
  resolve->add_option("--m", m, "rows of the generic matrix")->required();
  resolve->add_option("--n", n, "columns of the generic matrix")->required();
  resolve->add_option("--j", j, "exterior power index")->required();
  resolve->add_option("--a", avec, "source twists a_1..a_n");
  resolve->add_option("--b", bvec, "target twists b_1..b_m");
  resolve->add_option("--l", l, "ambient projective dimension");
  add_format_option(resolve, opts);
  resolve->callback([&] {
    check_mnj(m, n, j);
    const auto cx = weyres::build_universal_complex(m, n, j);
    if (avec.empty() && bvec.empty()) {
      emit(weyres::resolve_document(cx), opts);
      return;
    }
    if (l < 0) throw CLI::ValidationError("--l", "required with --a/--b");
    const auto rel = weyres::relativize_split(m, n, j, avec, bvec, l);
    const auto acm = weyres::acm_certificate(rel.betti, m - n + 1);
    emit(weyres::resolve_document(cx, rel, acm, avec, bvec, l), opts);
  });

  auto* bbw = app.add_subcommand(
      "bbw", "cohomology of the homogeneous bundle [u-part; q-part] on Gr(r,m)");
  bbw->add_option("--r", bbw_r, "rank of the tautological subbundle")->required();
  bbw->add_option("--m", bbw_m, "ambient dimension")->required();
  bbw->add_option("--upart", upart, "first block, length r")->required();
  bbw->add_option("--qpart", qpart, "second block, length m-r")->required();
  add_format_option(bbw, opts);
  bbw->callback([&] {
    const weyres::GrassmannianBundleWeight w{
        weyres::Weight{upart}, weyres::Weight{qpart}, bbw_r, bbw_m};
    emit(weyres::bbw_document(w, weyres::bbw_cohomology(w)), opts);
  });

  auto* pieri = app.add_subcommand(
      "pieri", "expansion of S^lambda (x) wedge^j as a sum of S^mu");
  pieri->add_option("--lambda", lambda, "weakly decreasing weight")->required();
  pieri->add_option("--j", pieri_j, "exterior power index")->required();
  add_format_option(pieri, opts);
  pieri->callback([&] {
    const weyres::Weight lw{lambda};
    emit(weyres::pieri_document(lw, pieri_j,
                                weyres::pieri_exterior_terms(lw, pieri_j)),
         opts);
  });

  auto* kostka = app.add_subcommand(
      "kostka", "multiplicity of the weight alpha in the irreducible S^lambda");
  kostka->add_option("--lambda", lambda, "highest weight")->required();
  kostka->add_option("--alpha", alpha, "weight to count")->required();
  add_format_option(kostka, opts);
  kostka->callback([&] {
    const weyres::Weight lw{lambda};
    emit(weyres::kostka_document(lw, alpha,
                                 weyres::weight_multiplicity(lw, alpha)),
         opts);
  });

  auto* ulrich = app.add_subcommand(
      "ulrich", "certificate for the linear determinantal case on P^l");
  ulrich->add_option("--m", m, "rows")->required();
  ulrich->add_option("--n", n, "columns")->required();
  ulrich->add_option("--j", j, "exterior power index")->required();
  ulrich->add_option("--l", l, "ambient projective dimension")->required();
  add_format_option(ulrich, opts);
  ulrich->callback([&] {
    check_mnj(m, n, j);
    const auto cert = weyres::ulrich_certificate(m, n, j, l);
    emit(weyres::ulrich_document(cert), opts);
    if (!cert.is_ulrich) exit_status = 1;
  });

  auto* verify = app.add_subcommand(
      "verify", "independent oracle: Hilbert functions by exact elimination, "
                "fiber ranks at random points, annihilator containment");
  verify->add_option("--m", m, "rows")->required();
  verify->add_option("--n", n, "columns")->required();
  verify->add_option("--j", j, "exterior power index")->required();
  verify->add_option("--dmax", d_max, "top degree for the Hilbert comparison")
      ->envname("WEYRES_DMAX");
  verify->add_option("--prime", prime, "modulus (> 2^30, prime)")
      ->envname("WEYRES_PRIME");
  verify->add_flag("--exact", exact, "use exact rational arithmetic");
  verify->add_option("--trials", trials, "random fiber points")
      ->envname("WEYRES_TRIALS");
  verify->add_option("--seed", seed, "random seed")->envname("WEYRES_SEED");
  verify->add_option("--ann-dmax", ann_dmax,
                     "top degree for the annihilator containment");
  verify->add_option("--threads", threads, "0 = hardware concurrency")
      ->envname("WEYRES_THREADS");
  add_format_option(verify, opts);
  verify->callback([&] {
    check_mnj(m, n, j);
    if (d_max < 0) throw CLI::ValidationError("--dmax", "need dmax >= 0");
    const weyres::FieldSpec field{exact, prime};
    field.validate();
    std::fprintf(stderr, "seed %llu, base %s\n", seed,
                 exact ? "QQ" : std::to_string(prime).c_str());
    const auto report = weyres::run_verify(m, n, j, d_max, field, seed, trials,
                                           ann_dmax, threads);
    emit(weyres::verify_document(report), opts);
    if (!report.verified) exit_status = 1;
  });

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "diff the closed-form enumeration against the "
                    "cohomological construction (empty diff on success)");
  crosscheck->add_option("--m", m, "rows")->required();
  crosscheck->add_option("--n", n, "columns")->required();
  crosscheck->add_option("--j", j, "exterior power index")->required();
  add_format_option(crosscheck, opts);
  crosscheck->callback([&] {
    check_mnj(m, n, j);
    const auto a = weyres::build_universal_complex(m, n, j);
    const auto b = weyres::build_complex_via_bbw(m, n, j);
    emit(weyres::crosscheck_document(a, b), opts);
    if (!(a == b)) exit_status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_status;
}
