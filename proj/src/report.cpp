#include "weyres/report.hpp"

#include <sstream>
#include <stdexcept>

namespace weyres {

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_lls(const std::vector<long long>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

nlohmann::json terms_json(const EquivariantComplex& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [u, ts] : c.terms)
    for (const ComplexTerm& t : ts)
      terms.push_back({{"u", u},
                       {"twist", t.twist},
                       {"gl_n", weight_to_json(t.gl_n)},
                       {"gl_m", weight_to_json(t.gl_m)},
                       {"dim", t.dim},
                       {"mult", t.mult}});
  return terms;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "tsv") return OutputFormat::tsv;
  if (name == "pretty") return OutputFormat::pretty;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string render(const Document& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return doc.body.dump(2) + "\n";
    case OutputFormat::tsv:
      return doc.tsv;
    case OutputFormat::pretty:
      return doc.pretty;
  }
  return {};
}

nlohmann::json weight_to_json(const Weight& w) {
  return nlohmann::json(w.entries());
}

nlohmann::json complex_to_json(const EquivariantComplex& c) {
  nlohmann::json betti = nlohmann::json::array();
  for (const auto& [u, ts] : c.terms)
    if (!ts.empty())
      betti.push_back(
          {{"u", u}, {"deg", c.twist_at(u)}, {"rank", c.total_dim(u)}});
  return {{"m", c.m},          {"n", c.n},
          {"j", c.j},          {"det_power", c.det_power},
          {"terms", terms_json(c)}, {"betti", betti}};
}

nlohmann::json betti_to_json(const GradedBettiTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, rank] : table.entries)
    out.push_back({{"u", key.first}, {"deg", key.second}, {"rank", rank}});
  return out;
}

namespace {

std::string complex_tsv(const EquivariantComplex& c) {
  std::ostringstream os;
  os << "term\tu\ttwist\tgl_n\tgl_m\tdim\tmult\n";
  for (const auto& [u, ts] : c.terms)
    for (const ComplexTerm& t : ts)
      os << "term\t" << u << '\t' << t.twist << '\t'
         << join_ints(t.gl_n.entries()) << '\t' << join_ints(t.gl_m.entries())
         << '\t' << t.dim << '\t' << t.mult << '\n';
  for (const auto& [u, ts] : c.terms)
    if (!ts.empty())
      os << "betti\t" << u << '\t' << c.twist_at(u) << '\t' << c.total_dim(u)
         << '\n';
  return os.str();
}

std::string complex_pretty(const EquivariantComplex& c) {
  std::ostringstream os;
  os << "resolution for m=" << c.m << " n=" << c.n << " j=" << c.j
     << "  (det factor exponent " << c.det_power << ")\n";
  for (const auto& [u, ts] : c.terms) {
    if (ts.empty()) continue;
    os << "  u=" << u << "  O(" << c.twist_at(u) << ")  total dim "
       << c.total_dim(u) << "\n";
    for (const ComplexTerm& t : ts)
      os << "    S^" << t.gl_n.str() << " C^" << c.n << " (x) S^"
         << t.gl_m.str() << " (C^" << c.m << ")*  dim " << t.dim << "  mult "
         << t.mult << "\n";
  }
  return os.str();
}

}  // namespace

Document resolve_document(const EquivariantComplex& c) {
  Document doc;
  doc.body = complex_to_json(c);
  doc.tsv = complex_tsv(c);
  doc.pretty = complex_pretty(c);
  return doc;
}

Document resolve_document(const EquivariantComplex& c,
                          const RelativizedResolution& rel,
                          const AcmCertificate& acm,
                          const std::vector<int>& a, const std::vector<int>& b,
                          int l) {
  Document doc;
  doc.body = complex_to_json(c);
  doc.body["a"] = a;
  doc.body["b"] = b;
  doc.body["l"] = l;
  doc.body["betti"] = betti_to_json(rel.betti);
  doc.body["expected_codimension"] = rel.expected_codimension;
  if (!rel.expected_codimension)
    doc.body["note"] = "not expected codimension";
  doc.body["acm"] = {{"is_acm", acm.is_acm},
                     {"length", acm.length},
                     {"codim", acm.codim},
                     {"reason", acm.reason}};
  std::ostringstream tsv;
  tsv << "term\tu\ttwist\tgl_n\tgl_m\tdim\tmult\n";
  for (const auto& [u, ts] : c.terms)
    for (const ComplexTerm& t : ts)
      tsv << "term\t" << u << '\t' << t.twist << '\t'
          << join_ints(t.gl_n.entries()) << '\t' << join_ints(t.gl_m.entries())
          << '\t' << t.dim << '\t' << t.mult << '\n';
  for (const auto& [key, rank] : rel.betti.entries)
    tsv << "betti\t" << key.first << '\t' << key.second << '\t' << rank << '\n';
  tsv << "acm\t" << (acm.is_acm ? "true" : "false") << '\t' << acm.length
      << '\t' << acm.codim << '\n';
  if (!rel.expected_codimension) tsv << "note\tnot expected codimension\n";
  doc.tsv = tsv.str();
  std::ostringstream pretty;
  pretty << complex_pretty(c) << "twisted to P^" << l << " with a=("
         << join_ints(a) << ") b=(" << join_ints(b) << ")\n";
  for (const auto& [key, rank] : rel.betti.entries)
    pretty << "  u=" << key.first << "  O(" << key.second << ")^" << rank
           << "\n";
  pretty << (acm.is_acm ? "aCM shape: yes" : "aCM shape: NO (" + acm.reason + ")")
         << (rel.expected_codimension ? "" : "  [not expected codimension]")
         << "\n";
  doc.pretty = pretty.str();
  return doc;
}

Document bbw_document(const GrassmannianBundleWeight& w,
                      const CohomologyResult& h) {
  Document doc;
  doc.body = {{"r", w.r},
              {"m", w.m},
              {"u_part", weight_to_json(w.u_part)},
              {"q_part", weight_to_json(w.q_part)},
              {"acyclic", h.acyclic}};
  std::ostringstream tsv, pretty;
  if (h.acyclic) {
    tsv << "acyclic\n";
    pretty << "[" << w.u_part.str() << "; " << w.q_part.str() << "] on Gr("
           << w.r << "," << w.m << "): no cohomology\n";
  } else {
    doc.body["degree"] = h.degree;
    doc.body["weight"] = weight_to_json(h.weight);
    doc.body["dimension"] = h.dimension;
    tsv << "degree\tweight\tdimension\n"
        << h.degree << '\t' << join_ints(h.weight.entries()) << '\t'
        << h.dimension << '\n';
    pretty << "[" << w.u_part.str() << "; " << w.q_part.str() << "] on Gr("
           << w.r << "," << w.m << "): H^" << h.degree << " = S^"
           << h.weight.str() << " (C^" << w.m << ")*, dim " << h.dimension
           << "\n";
  }
  doc.tsv = tsv.str();
  doc.pretty = pretty.str();
  return doc;
}

Document pieri_document(const Weight& lambda, int j,
                        const std::vector<SchurTerm>& strips) {
  Document doc;
  nlohmann::json arr = nlohmann::json::array();
  for (const SchurTerm& t : strips)
    arr.push_back({{"mu", weight_to_json(t.weight)}, {"dim", t.dimension}});
  doc.body = {{"lambda", weight_to_json(lambda)}, {"j", j}, {"strips", arr}};
  std::ostringstream tsv, pretty;
  tsv << "mu\tdim\n";
  for (const SchurTerm& t : strips)
    tsv << join_ints(t.weight.entries()) << '\t' << t.dimension << '\n';
  pretty << "S^" << lambda.str() << " (x) wedge^" << j << ":";
  for (const SchurTerm& t : strips)
    pretty << " " << t.weight.str() << "[" << t.dimension << "]";
  pretty << "\n";
  doc.tsv = tsv.str();
  doc.pretty = pretty.str();
  return doc;
}

Document kostka_document(const Weight& lambda, const std::vector<int>& alpha,
                         long long multiplicity) {
  Document doc;
  doc.body = {{"lambda", weight_to_json(lambda)},
              {"alpha", alpha},
              {"multiplicity", multiplicity}};
  doc.tsv = "multiplicity\n" + std::to_string(multiplicity) + "\n";
  doc.pretty = "multiplicity of " + join_ints(alpha) + " in S^" + lambda.str() +
               " = " + std::to_string(multiplicity) + "\n";
  return doc;
}

Document ulrich_document(const UlrichCertificate& cert) {
  Document doc;
  doc.body = {{"m", cert.m},
              {"n", cert.n},
              {"j", cert.j},
              {"l", cert.l},
              {"initializing_twist", cert.initializing_twist},
              {"uniform_twist", cert.uniform_twist},
              {"twist_agrees_uniform", cert.twist_agrees_uniform},
              {"ranks", cert.ranks},
              {"rank_sheaf", cert.rank_sheaf},
              {"degree_locus", cert.degree_locus},
              {"h0", cert.h0},
              {"is_linear", cert.is_linear},
              {"is_ulrich", cert.is_ulrich}};
  std::ostringstream tsv;
  tsv << "key\tvalue\n"
      << "initializing_twist\t" << cert.initializing_twist << '\n'
      << "uniform_twist\t" << cert.uniform_twist << '\n'
      << "ranks\t" << join_lls(cert.ranks) << '\n'
      << "rank_sheaf\t" << cert.rank_sheaf << '\n'
      << "degree_locus\t" << cert.degree_locus << '\n'
      << "h0\t" << cert.h0 << '\n'
      << "is_linear\t" << (cert.is_linear ? "true" : "false") << '\n'
      << "is_ulrich\t" << (cert.is_ulrich ? "true" : "false") << '\n';
  doc.tsv = tsv.str();
  std::ostringstream pretty;
  pretty << "m=" << cert.m << " n=" << cert.n << " j=" << cert.j
         << " on P^" << cert.l << ": twist " << cert.initializing_twist
         << " (uniform value " << cert.uniform_twist
         << (cert.twist_agrees_uniform ? ", agrees" : ", differs") << ")\n"
         << "ranks (" << join_lls(cert.ranks) << "), rank " << cert.rank_sheaf
         << ", deg " << cert.degree_locus << ", h0 " << cert.h0 << "\n"
         << (cert.is_ulrich ? "ULRICH" : "not Ulrich")
         << (cert.is_linear ? " (linear resolution)" : " (resolution not linear)")
         << "\n";
  doc.pretty = pretty.str();
  return doc;
}

Document crosscheck_document(const EquivariantComplex& universal,
                             const EquivariantComplex& via_bbw) {
  Document doc;
  const bool equal = universal == via_bbw;
  nlohmann::json missing = nlohmann::json::array();
  nlohmann::json extra = nlohmann::json::array();
  auto diff = [](const EquivariantComplex& left, const EquivariantComplex& right,
                 nlohmann::json& out) {
    for (const auto& [u, ts] : left.terms) {
      auto it = right.terms.find(u);
      for (const ComplexTerm& t : ts) {
        const bool found =
            it != right.terms.end() &&
            std::find(it->second.begin(), it->second.end(), t) != it->second.end();
        if (!found)
          out.push_back({{"u", u},
                         {"twist", t.twist},
                         {"gl_n", weight_to_json(t.gl_n)},
                         {"gl_m", weight_to_json(t.gl_m)},
                         {"dim", t.dim},
                         {"mult", t.mult}});
      }
    }
  };
  diff(universal, via_bbw, missing);
  diff(via_bbw, universal, extra);
  doc.body = {{"m", universal.m},
              {"n", universal.n},
              {"j", universal.j},
              {"equal", equal},
              {"only_in_closed_form", missing},
              {"only_in_bbw_path", extra}};
  doc.tsv = std::string("equal\n") + (equal ? "true" : "false") + "\n";
  doc.pretty = equal ? "paths agree: complexes identical\n"
                     : "paths DISAGREE; see JSON diff\n";
  return doc;
}

Document verify_document(const VerifyReport& report) {
  Document doc;
  nlohmann::json fibers = nlohmann::json::array();
  for (const FiberTrial& t : report.fiber_trials) {
    nlohmann::json f = {{"point", t.point},
                        {"fiber_dim", t.fiber_dim},
                        {"expected", t.expected},
                        {"ok", t.ok}};
    if (t.j1) {
      f["coker_dim"] = t.j1->coker_dim;
      f["hom_dim"] = t.j1->hom_dim;
    }
    fibers.push_back(f);
  }
  doc.body = {{"m", report.m},
              {"n", report.n},
              {"j", report.j},
              {"dmax", report.d_max},
              {"base", report.field.exact
                           ? nlohmann::json("exact")
                           : nlohmann::json(report.field.prime)},
              {"seed", report.seed},
              {"shift", report.shift},
              {"predicted", report.predicted},
              {"computed", report.computed},
              {"match", report.match},
              {"fiber_checks", fibers},
              {"fibers_ok", report.fibers_ok},
              {"annihilator", report.annihilator},
              {"annihilator_dmax", report.annihilator_d_max},
              {"negative_control_witness",
               report.negative_control_witness
                   ? nlohmann::json(*report.negative_control_witness)
                   : nlohmann::json()},
              {"verified", report.verified}};
  std::ostringstream tsv;
  tsv << "h\td\tpredicted\tcomputed\n";
  for (std::size_t d = 0; d < report.computed.size(); ++d)
    tsv << "h\t" << d << '\t' << report.predicted[d] << '\t'
        << report.computed[d] << '\n';
  for (std::size_t i = 0; i < report.fiber_trials.size(); ++i)
    tsv << "fiber\t" << i << '\t' << report.fiber_trials[i].fiber_dim << '\t'
        << report.fiber_trials[i].expected << '\t'
        << (report.fiber_trials[i].ok ? "true" : "false") << '\n';
  tsv << "annihilator\t" << (report.annihilator ? "true" : "false") << '\n';
  tsv << "verified\t" << (report.verified ? "true" : "false") << '\n';
  doc.tsv = tsv.str();
  std::ostringstream pretty;
  pretty << "m=" << report.m << " n=" << report.n << " j=" << report.j
         << "  dmax=" << report.d_max << "  seed=" << report.seed << "\n"
         << "predicted h = (" << join_lls(report.predicted) << ")\n"
         << "computed  h = (" << join_lls(report.computed) << ")\n"
         << "hilbert match: " << (report.match ? "yes" : "NO") << "\n"
         << "fiber checks: " << (report.fibers_ok ? "all ok" : "FAILED")
         << "  (" << report.fiber_trials.size() << " trials)\n"
         << "annihilator (dmax " << report.annihilator_d_max
         << "): " << (report.annihilator ? "ok" : "FAILED") << "\n"
         << (report.verified ? "VERIFIED" : "NOT VERIFIED") << "\n";
  doc.pretty = pretty.str();
  return doc;
}

VerifyReport run_verify(int m, int n, int j, int d_max, const FieldSpec& field,
                        unsigned long long seed, int trials,
                        int annihilator_d_max, int threads) {
  VerifyReport report;
  report.m = m;
  report.n = n;
  report.j = j;
  report.d_max = d_max;
  report.field = field;
  report.seed = seed;
  const int r = n - 1;
  const int c = m - r;
  report.shift = r * (c - j);

  const EquivariantComplex cx = build_universal_complex(m, n, j);
  const std::vector<long long> full =
      hilbert_prediction(cx, m * n, d_max + report.shift);
  report.predicted.assign(full.begin() + report.shift, full.end());

  const GradedPresentation p = presentation_sym_k_ext_coker(m, n, j);
  report.computed = hilbert_function(p, d_max, field, threads);
  report.match = report.predicted == report.computed;

  std::mt19937_64 rng(seed);
  const long long expected_fiber = [&] {
    long long out = 1;
    for (long long i = 1; i <= j; ++i) out = out * (c - j + i) / i;
    return out;
  }();
  report.fibers_ok = true;
  for (int t = 0; t < trials; ++t) {
    FiberTrial trial;
    trial.point = random_corank_one_matrix(m, n, rng);
    trial.fiber_dim = fiber_dim(p, trial.point, field);
    trial.expected = expected_fiber;
    trial.ok = trial.fiber_dim == trial.expected;
    if (j == 1) {
      trial.j1 = fiber_check_j1(m, n, trial.point, field);
      trial.ok = trial.ok && trial.j1->coker_dim == trial.j1->hom_dim;
    }
    report.fibers_ok = report.fibers_ok && trial.ok;
    report.fiber_trials.push_back(std::move(trial));
  }

  report.annihilator_d_max = annihilator_d_max;
  report.annihilator = annihilator_check(m, n, j, annihilator_d_max, field);
  // x_{0,0}^n: every monomial of a maximal minor is multilinear in distinct
  // rows, so a pure power lies outside the minor ideal in degree n.
  Polynomial control;
  {
    Monomial mono(static_cast<std::size_t>(m * n), 0);
    mono[0] = n;
    control.terms[mono] = 1;
  }
  report.negative_control_witness =
      multiplication_witness(p, control, annihilator_d_max, field);

  report.verified = report.match && report.fibers_ok && report.annihilator &&
                    report.negative_control_witness.has_value();
  return report;
}

}  // namespace weyres
