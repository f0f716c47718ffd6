#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace weyres {

// Exponent vector over the ring's variables.
using Monomial = std::vector<int>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
long long monomial_count(int vars, int degree);
// Monomials of the given total degree, in the fixed enumeration order that
// monomial_index ranks. Cached; safe for concurrent readers.
const std::vector<Monomial>& monomials_of_degree(int vars, int degree);
long long monomial_index(const Monomial& mono);

struct Polynomial {
  std::map<Monomial, long long> terms;

  bool zero() const { return terms.empty(); }
  // Common total degree of the terms; -1 for the zero polynomial.
  int degree() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial poly_variable(int vars, int index);
Polynomial poly_scale(const Polynomial& p, long long c);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
long long poly_eval(const Polynomial& p, const std::vector<long long>& x);

// Coefficient base for the linear-algebra backend: integers modulo a prime
// larger than 2^30, or exact rationals.
struct FieldSpec {
  bool exact = false;
  long long prime = 2147483647;  // 2^31 - 1

  void validate() const;
};

// Standard-graded polynomial ring, every variable of degree 1.
struct GradedRing {
  int num_vars = 0;

  friend bool operator==(const GradedRing&, const GradedRing&) = default;
};

// Map of graded free modules (+)R(-s_j) -> (+)R(-t_i) presenting its
// cokernel. Every nonzero entry is homogeneous of degree s_j - t_i.
struct GradedPresentation {
  GradedRing ring;
  std::vector<int> target_degrees;
  std::vector<int> source_degrees;
  std::map<std::pair<int, int>, Polynomial> entries;

  int target_rank() const { return static_cast<int>(target_degrees.size()); }
  int source_rank() const { return static_cast<int>(source_degrees.size()); }
  const Polynomial* entry(int i, int j) const;
  void validate() const;
};

// The m x n matrix of the ring's own variables: entry (k, i) is x_{k,i}
// (variable index k*n + i), target degrees 0, source degrees 1. Restricted
// to a point f of the matrix space it is the numeric matrix f itself.
GradedPresentation tautological_matrix(int m, int n);
// Cokernel presentations of the tautological map and of its transpose.
GradedPresentation presentation_coker(int m, int n);
GradedPresentation presentation_K(int m, int n);
// Free module R(-degree)^rank (no relations).
GradedPresentation presentation_free(const GradedRing& ring, int rank = 1,
                                     int degree = 0);

// Presentations of Sym^k / wedge^k of the presented cokernel, target the
// corresponding power of the target module, source the (k-1)-st power
// tensored with the source. k >= 1; k = 1 returns the input unchanged.
GradedPresentation presentation_sym(const GradedPresentation& p, int k);
GradedPresentation presentation_ext(const GradedPresentation& p, int k);
// Presentation of coker(P) (x) coker(Q) over the same ring.
GradedPresentation presentation_tensor(const GradedPresentation& p,
                                       const GradedPresentation& q);
// Sym^{m-r-j}(K) (x) wedge^j(coKer) with r = n - 1; the module the
// universal complex resolves, generated in degree 0.
GradedPresentation presentation_sym_k_ext_coker(int m, int n, int j);

// h(d) = dim(target degree-d piece) - rank(degree-d block) for d <= d_max.
// Degree blocks are independent and computed in parallel unless threads = 1.
std::vector<long long> hilbert_function(const GradedPresentation& p, int d_max,
                                        const FieldSpec& field,
                                        int threads = 0);

using IntMatrix = std::vector<std::vector<long long>>;

long long int_matrix_rank(const IntMatrix& m, const FieldSpec& field);
// Dimension of the cokernel of the presentation evaluated at the point f.
long long fiber_dim(const GradedPresentation& p, const IntMatrix& f,
                    const FieldSpec& field);

// Product of random m x (n-1) and (n-1) x n integer matrices, retried until
// the rank is exactly n - 1; lands in the rank <= n-1 locus by construction.
IntMatrix random_corank_one_matrix(int m, int n, std::mt19937_64& rng);

// The first differential of the j = 1 complex restricted to the fibre at f:
// (a, b) -> f o a + b (.) f on Hom(Sym^{m-n} C^n, C^n) (+)
// Hom(Sym^{m-n-1} C^n, sl(C^m)), where (b (.) f) multiplies the polynomial
// parts and evaluates the traceless endomorphisms on the columns of f.
// Returns the cokernel dimension inside Hom(Sym^{m-n} C^n, C^m) and,
// independently, dim Hom(Sym^{m-n} ker f, coker f); the two must agree.
struct FiberCheckJ1 {
  long long coker_dim = 0;
  long long hom_dim = 0;
};
FiberCheckJ1 fiber_check_j1(int m, int n, const IntMatrix& f,
                            const FieldSpec& field);

// All n x n minors of the tautological matrix (degree-n forms).
std::vector<Polynomial> maximal_minors(int m, int n);
// Smallest d <= d_max where multiplication by g fails to map the degree-d
// part of the presented module into the image of the presentation; empty
// when containment holds through d_max.
std::optional<int> multiplication_witness(const GradedPresentation& p,
                                          const Polynomial& g, int d_max,
                                          const FieldSpec& field);
// True iff every maximal minor multiplies the module into the image of the
// presentation in all degrees d <= d_max.
bool annihilator_check(int m, int n, int j, int d_max, const FieldSpec& field);

}  // namespace weyres
