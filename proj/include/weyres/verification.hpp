#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyres/resolution.hpp"

namespace weyres {

// Laurent polynomial in one variable t, zero coefficients absent.
struct KPolynomial {
  std::map<int, long long> coeff;

  long long at_one() const;
  bool zero() const { return coeff.empty(); }

  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;
};

// Alternating sum over homological degrees of dim * t^(generator degree),
// generator degree = -twist.
KPolynomial k_polynomial(const EquivariantComplex& c);
KPolynomial k_polynomial(const GradedBettiTable& table);

// Quotient by (1 - t); empty when the division is not exact.
std::optional<KPolynomial> divide_by_one_minus_t(const KPolynomial& k);
// Multiplicity of the root t = 1, capped at max_order.
int vanishing_order_at_one(const KPolynomial& k, int max_order);

// Coefficients 0..d_max of k(t) / (1-t)^num_vars.
std::vector<long long> hilbert_series_values(const KPolynomial& k,
                                             int num_vars, int d_max);
// Predicted Hilbert function of the resolved module, in the grading where
// generators sit in degree r(m-r-j): an oracle that presents the module
// with generators in degree 0 matches after h(d) = prediction(d + r(m-r-j)).
std::vector<long long> hilbert_prediction(const EquivariantComplex& c,
                                          int num_vars, int d_max);

struct AcmCertificate {
  bool is_acm = false;
  int length = 0;
  int codim = 0;
  std::string reason;  // empty when is_acm
};

// Every term of a relativized table is a line-bundle twist by construction
// (asserted); the certificate reduces to homological length == codim.
AcmCertificate acm_certificate(const GradedBettiTable& table, int codim);

struct UlrichCertificate {
  int m = 0, n = 0, j = 0, l = 0;
  // Twist making the u = 0 generators sit in degree 0: r(m-r-j), computed
  // from the table rather than assumed.
  int initializing_twist = 0;
  // The single j-independent value (n-1)(m-n) sometimes quoted for every j;
  // coincides with the computed twist exactly at j = 1.
  int uniform_twist = 0;
  bool twist_agrees_uniform = false;
  std::vector<long long> ranks;  // a_u, u = 0..codim
  long long rank_sheaf = 0;      // binomial(m-r, j)
  long long degree_locus = 0;
  long long h0 = 0;
  bool is_linear = false;
  bool is_ulrich = false;
};

// Certificate for the linear determinantal case (a_i = -1, b_k = 0) on P^l.
// is_linear: internal degree u at homological degree u after the
// initializing twist; degree_locus: from the table's own numerator,
// K/(1-t)^codim evaluated at 1, divided by the sheaf rank; is_ulrich:
// is_linear and h0 = degree_locus * rank_sheaf. Throws when l < m - r.
UlrichCertificate ulrich_certificate(int m, int n, int j, int l);

}  // namespace weyres
