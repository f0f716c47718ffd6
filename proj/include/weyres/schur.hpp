#pragma once

#include <utility>
#include <vector>

#include "weyres/weight.hpp"

namespace weyres {

// One irreducible summand S^weight, with multiplicity and the dimension it
// has on the ambient space it was computed for.
struct SchurTerm {
  Weight weight;
  long long multiplicity = 1;
  long long dimension = 0;

  friend auto operator<=>(const SchurTerm&, const SchurTerm&) = default;
};

// Weyl dimension formula for GL(k): prod_{i<j} (l_i - l_j + j - i)/(j - i),
// in exact big-integer arithmetic. lambda must have length exactly k;
// entries may be negative. Returns 1 for k = 0 and 0 for weights that
// vanish on a k-dimensional space (never happens for length-k input).
long long dim_schur(const Weight& lambda, int k);

// Multiplicity of the weight alpha in the irreducible with highest weight
// lambda (a Kostka number after the shift making lambda a partition).
// Requires |alpha| = |lambda|; that mismatch is a caller bug, not a zero.
long long weight_multiplicity(const Weight& lambda,
                              const std::vector<int>& alpha);

// All weights of S^lambda(C^k) with their multiplicities. The sum of the
// multiplicities is dim_schur(lambda, k).
std::vector<std::pair<std::vector<int>, long long>> weight_contents(
    const Weight& lambda, int k);

struct ExteriorPair {
  Weight mu;
  Weight mu_t;

  friend auto operator<=>(const ExteriorPair&, const ExteriorPair&) = default;
};

// Index set of the decomposition of the p-th exterior power of a tensor
// product: partitions mu with |mu| = p, at most dim_a parts, parts <= dim_b,
// paired with their conjugates. Every pair occurs with multiplicity one.
std::vector<ExteriorPair> exterior_power_tensor(int p, int dim_a, int dim_b);

// Vertical-strip rule for tensoring with the j-th exterior power: all mu of
// the same length with mu_i - lambda_i in {0, 1} per entry, sum of the
// increments equal to j, mu weakly decreasing. Works verbatim for negative
// entries (the characterization is shift-invariant). Returned in descending
// lexicographic order.
std::vector<Weight> pieri_exterior(const Weight& lambda, int j);

// The same expansion with each strip carrying its dimension on C^k
// (k = length of lambda); every coefficient in this rule is one.
std::vector<SchurTerm> pieri_exterior_terms(const Weight& lambda, int j);

// 1 iff mu appears in pieri_exterior(lambda, j) and min(mu) >= 0, else 0.
int c_tilde(const Weight& lambda, int j, const Weight& mu);

}  // namespace weyres
