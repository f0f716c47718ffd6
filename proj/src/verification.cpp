#include "weyres/verification.hpp"

#include <stdexcept>

namespace weyres {

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void set_coeff(KPolynomial& k, int d, long long v) {
  if (v == 0)
    k.coeff.erase(d);
  else
    k.coeff[d] = v;
}

}  // namespace

long long KPolynomial::at_one() const {
  long long s = 0;
  for (const auto& [d, c] : coeff) s += c;
  return s;
}

KPolynomial k_polynomial(const EquivariantComplex& c) {
  KPolynomial k;
  for (const auto& [u, terms] : c.terms) {
    const long long sign = u % 2 == 0 ? 1 : -1;
    for (const ComplexTerm& t : terms)
      set_coeff(k, -t.twist, k.coeff[-t.twist] + sign * t.dim * t.mult);
  }
  return k;
}

KPolynomial k_polynomial(const GradedBettiTable& table) {
  KPolynomial k;
  for (const auto& [key, rank] : table.entries) {
    const auto& [u, twist] = key;
    const long long sign = u % 2 == 0 ? 1 : -1;
    set_coeff(k, -twist, k.coeff[-twist] + sign * rank);
  }
  return k;
}

std::optional<KPolynomial> divide_by_one_minus_t(const KPolynomial& k) {
  if (k.zero()) return KPolynomial{};
  // K(t) = (1 - t) G(t)  <=>  G_d = sum_{e <= d} K_e, with total sum zero.
  const int lo = k.coeff.begin()->first;
  const int hi = k.coeff.rbegin()->first;
  KPolynomial g;
  long long acc = 0;
  for (int d = lo; d < hi; ++d) {
    auto it = k.coeff.find(d);
    if (it != k.coeff.end()) acc += it->second;
    set_coeff(g, d, acc);
  }
  acc += k.coeff.rbegin()->second;
  if (acc != 0) return std::nullopt;
  return g;
}

int vanishing_order_at_one(const KPolynomial& k, int max_order) {
  KPolynomial cur = k;
  int order = 0;
  while (order < max_order) {
    auto next = divide_by_one_minus_t(cur);
    if (!next) break;
    cur = *next;
    ++order;
    if (cur.zero()) break;
  }
  return order;
}

std::vector<long long> hilbert_series_values(const KPolynomial& k,
                                             int num_vars, int d_max) {
  std::vector<long long> h(static_cast<std::size_t>(d_max) + 1, 0);
  for (const auto& [e, coef] : k.coeff)
    for (int d = std::max(e, 0); d <= d_max; ++d)
      h[static_cast<std::size_t>(d)] +=
          coef * binomial(d - e + num_vars - 1, num_vars - 1);
  return h;
}

std::vector<long long> hilbert_prediction(const EquivariantComplex& c,
                                          int num_vars, int d_max) {
  return hilbert_series_values(k_polynomial(c), num_vars, d_max);
}

AcmCertificate acm_certificate(const GradedBettiTable& table, int codim) {
  AcmCertificate cert;
  cert.codim = codim;
  cert.length = table.length();
  // Entries are (twist, rank) pairs, i.e. line-bundle twists, by the type's
  // construction; nothing further to inspect per term.
  if (cert.length != codim) {
    cert.reason = "length mismatch: resolution length " +
                  std::to_string(cert.length) + " != codim " +
                  std::to_string(codim);
    return cert;
  }
  cert.is_acm = true;
  return cert;
}

UlrichCertificate ulrich_certificate(int m, int n, int j, int l) {
  const int r = n - 1;
  const int c = m - r;
  if (l < c)
    throw std::invalid_argument("ulrich_certificate: not expected codimension (l < m - r)");
  const std::vector<int> a(static_cast<std::size_t>(n), -1);
  const std::vector<int> b(static_cast<std::size_t>(m), 0);
  const RelativizedResolution rel = relativize_split(m, n, j, a, b, l);

  UlrichCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.j = j;
  cert.l = l;
  cert.uniform_twist = (n - 1) * (m - n);
  cert.rank_sheaf = binomial(c, j);

  // The twist making u = 0 sit in internal degree zero.
  int t0 = 0;
  for (const auto& [key, rank] : rel.betti.entries)
    if (key.first == 0) t0 = -key.second;
  cert.initializing_twist = t0;
  cert.twist_agrees_uniform = t0 == cert.uniform_twist;

  cert.ranks.assign(static_cast<std::size_t>(rel.betti.length()) + 1, 0);
  cert.is_linear = true;
  for (const auto& [key, rank] : rel.betti.entries) {
    const auto& [u, twist] = key;
    cert.ranks[static_cast<std::size_t>(u)] += rank;
    // Internal degree of O(twist + t0) must be u.
    if (-(twist + t0) != u) cert.is_linear = false;
  }
  cert.h0 = cert.ranks.empty() ? 0 : cert.ranks.front();

  KPolynomial k = k_polynomial(rel.betti);
  for (int step = 0; step < c; ++step) {
    auto g = divide_by_one_minus_t(k);
    if (!g)
      throw std::logic_error("ulrich_certificate: numerator does not vanish to order codim at t = 1");
    k = *g;
  }
  const long long multiplicity = k.at_one();  // deg(locus) * rank(sheaf)
  if (cert.rank_sheaf == 0 || multiplicity % cert.rank_sheaf != 0)
    throw std::logic_error("ulrich_certificate: multiplicity not divisible by sheaf rank");
  cert.degree_locus = multiplicity / cert.rank_sheaf;
  cert.is_ulrich =
      cert.is_linear && cert.h0 == cert.degree_locus * cert.rank_sheaf;
  return cert;
}

}  // namespace weyres
