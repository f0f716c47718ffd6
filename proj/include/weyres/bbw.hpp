#pragma once

#include "weyres/weight.hpp"

namespace weyres {

// Irreducible homogeneous bundle on Gr(r, m), written as the pair of blocks
// [u_part; q_part] (length r and m - r). Each block is weakly decreasing;
// the concatenation need not be.
struct GrassmannianBundleWeight {
  Weight u_part;
  Weight q_part;
  int r = 0;
  int m = 0;
};

// A bundle either has no cohomology at all, or a single group
// H^degree = S^weight (C^m)^dual of the stated dimension. Results live on
// the DUAL of C^m; callers that need the undualized side perform that
// bookkeeping themselves, exactly once.
struct CohomologyResult {
  bool acyclic = true;
  int degree = 0;
  Weight weight;  // length m when non-acyclic
  long long dimension = 0;
};

// Add the staircase [m, m-1, ..., 1] to the concatenated blocks; a repeated
// value means no cohomology, otherwise the inversion count of the sequence
// is the cohomological degree and the strictly sorted sequence minus the
// staircase is the resulting weight.
CohomologyResult bbw_cohomology(const GrassmannianBundleWeight& w);

}  // namespace weyres
