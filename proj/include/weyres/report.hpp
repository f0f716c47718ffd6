#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weyres/bbw.hpp"
#include "weyres/oracle.hpp"
#include "weyres/resolution.hpp"
#include "weyres/verification.hpp"

namespace weyres {

enum class OutputFormat { json, tsv, pretty };

OutputFormat parse_format(const std::string& name);

// Every emitted document carries all three renderings; the JSON one is
// canonical (sorted keys, sorted term lists) and byte-stable across runs.
struct Document {
  nlohmann::json body;
  std::string tsv;
  std::string pretty;
};

std::string render(const Document& doc, OutputFormat format);

nlohmann::json weight_to_json(const Weight& w);
nlohmann::json complex_to_json(const EquivariantComplex& c);
nlohmann::json betti_to_json(const GradedBettiTable& table);

Document resolve_document(const EquivariantComplex& c);
Document resolve_document(const EquivariantComplex& c,
                          const RelativizedResolution& rel,
                          const AcmCertificate& acm,
                          const std::vector<int>& a, const std::vector<int>& b,
                          int l);
Document bbw_document(const GrassmannianBundleWeight& w,
                      const CohomologyResult& h);
Document pieri_document(const Weight& lambda, int j,
                        const std::vector<SchurTerm>& strips);
Document kostka_document(const Weight& lambda, const std::vector<int>& alpha,
                         long long multiplicity);
Document ulrich_document(const UlrichCertificate& cert);
Document crosscheck_document(const EquivariantComplex& universal,
                             const EquivariantComplex& via_bbw);

struct FiberTrial {
  IntMatrix point;
  long long fiber_dim = 0;
  long long expected = 0;
  std::optional<FiberCheckJ1> j1;
  bool ok = false;
};

struct VerifyReport {
  int m = 0, n = 0, j = 0, d_max = 0;
  FieldSpec field;
  unsigned long long seed = 0;
  int shift = 0;  // oracle degree d corresponds to predicted degree d + shift
  std::vector<long long> predicted;  // at oracle degrees 0..d_max
  std::vector<long long> computed;
  bool match = false;
  std::vector<FiberTrial> fiber_trials;
  bool fibers_ok = false;
  int annihilator_d_max = 0;
  bool annihilator = false;
  std::optional<int> negative_control_witness;
  bool verified = false;
};

Document verify_document(const VerifyReport& report);

// Full oracle run for one (m, n, j): Hilbert comparison at the documented
// shift, fiber checks at seeded random points of the rank-(n-1) locus, the
// annihilator containment for every maximal minor, and the negative control
// (a degree-n form outside the minor ideal must fail the containment).
VerifyReport run_verify(int m, int n, int j, int d_max, const FieldSpec& field,
                        unsigned long long seed, int trials,
                        int annihilator_d_max, int threads = 0);

}  // namespace weyres
