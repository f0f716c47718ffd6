#pragma once

#include <array>
#include <map>
#include <vector>

#include "weyres/schur.hpp"
#include "weyres/weight.hpp"

namespace weyres {

// One equivariant summand S^{gl_n} C^n (x) S^{gl_m} (C^m)^dual (x) O(twist).
// Weights are stored at fixed lengths n and m; dimensions are never zero
// (vanishing summands are dropped at construction).
struct ComplexTerm {
  Weight gl_n;
  Weight gl_m;
  int twist = 0;
  long long dim = 0;
  long long mult = 1;

  friend auto operator<=>(const ComplexTerm&, const ComplexTerm&) = default;
};

// Terms of the resolution indexed by homological degree u in [0, m - r],
// u = 0 being the end the resolved module sits at. The global
// det(C^n)^{det_power} factor is metadata on the whole complex, not folded
// into the weights; within each u all terms share one twist.
struct EquivariantComplex {
  int m = 0, n = 0, r = 0, j = 0;
  int det_power = 0;
  std::map<int, std::vector<ComplexTerm>> terms;

  long long total_dim(int u) const;
  int max_u() const;
  // The unique twist at homological degree u; throws if terms disagree.
  int twist_at(int u) const;

  friend bool operator==(const EquivariantComplex&,
                         const EquivariantComplex&) = default;
};

// Closed-form construction: for each u, enumerate index-set weights of norm
// u + r(m-r-j) - j, expand each by the vertical-strip rule, keep strips with
// nonnegative minimum, and emit (transpose(strip), lambda_tilde, twist
// -u - r(m-r-j)). Requires 2 <= n <= m, r = n-1, 0 <= j <= m-r.
EquivariantComplex build_universal_complex(int m, int n, int j);

// Independent second path through the Koszul complex of the collapsing:
// expand each exterior power of C^n (x) Q^dual, tensor the Q^dual side with
// the j-th exterior power of Q, and push every summand through
// bbw_cohomology; a term surviving in degree l at exterior power p lands in
// homological degree p - l with twist -p. Must agree with
// build_universal_complex term for term.
EquivariantComplex build_complex_via_bbw(int m, int n, int j);

// Dimension data for the first two terms, evaluated from their closed
// forms (symmetric/exterior power Hom spaces) rather than the enumeration.
struct FirstTermsClosedForm {
  long long f0_dim = 0;
  std::array<long long, 3> f1_summands{0, 0, 0};
  long long f1_dim = 0;
  int f0_twist = 0;
  int f1_twist = 0;
};
FirstTermsClosedForm closed_form_first_terms(int m, int n, int j);

// The j = 1 complex assembled from its three explicit weight families;
// families with non-dominant weights or vanishing dimension are dropped.
// Agrees with build_universal_complex(m, n, 1).
EquivariantComplex j1_closed_form(int m, int n);

// Graded Betti numbers: (homological degree u, twist e) -> rank of the
// summand O(e)^rank. The generator degree in the usual table convention
// is -e.
struct GradedBettiTable {
  std::map<std::pair<int, int>, long long> entries;

  int length() const;  // largest u with an entry
  friend bool operator==(const GradedBettiTable&,
                         const GradedBettiTable&) = default;
};

struct RelativizedResolution {
  GradedBettiTable betti;
  int codim = 0;
  int l = 0;
  // l >= codim and every matrix entry of the defining morphism has positive
  // degree; recorded, not verified against an actual section.
  bool expected_codimension = true;
};

// Specialize the universal complex to split bundles (+)O(a_i) -> (+)O(b_k)
// on P^l: each term expands over the weights of its two Schur functors,
// accumulating rank at twist <alpha, a> - <beta, b>. For the linear case
// a = (-1,...), b = (0,...) the twists reproduce -u - r(m-r-j).
RelativizedResolution relativize_split(int m, int n, int j,
                                       const std::vector<int>& a,
                                       const std::vector<int>& b, int l);

// Shape check at j = m - r: every gl_n weight a single row (a symmetric
// power) and a single twist per u, consecutive twists one apart.
bool has_eagon_northcott_shape(const EquivariantComplex& c);

}  // namespace weyres
