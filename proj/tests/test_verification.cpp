#include "weyres/verification.hpp"

#include "doctest.h"

using weyres::KPolynomial;

namespace {

// Independent series oracle: dividing by (1-t) is running prefix sums, so
// k(t)/(1-t)^v is v-fold prefix summation of the coefficient stream.
std::vector<long long> series_by_prefix_sums(const KPolynomial& k, int v,
                                             int d_max) {
  std::vector<long long> vals(static_cast<std::size_t>(d_max) + 1, 0);
  for (const auto& [d, c] : k.coeff)
    if (0 <= d && d <= d_max) vals[static_cast<std::size_t>(d)] += c;
  for (int pass = 0; pass < v; ++pass)
    for (int d = 1; d <= d_max; ++d)
      vals[static_cast<std::size_t>(d)] += vals[static_cast<std::size_t>(d) - 1];
  return vals;
}

}  // namespace

TEST_CASE("k polynomials of the small complexes") {
  const auto k221 = weyres::k_polynomial(weyres::build_universal_complex(2, 2, 1));
  CHECK(k221.coeff == std::map<int, long long>{{0, 2}, {1, -2}});
  const auto k321 = weyres::k_polynomial(weyres::build_universal_complex(3, 2, 1));
  CHECK(k321.coeff == std::map<int, long long>{{1, 6}, {2, -12}, {3, 6}});
  CHECK(k221.at_one() == 0);
  CHECK(k321.at_one() == 0);
}

TEST_CASE("vanishing order at t = 1 equals the codimension") {
  for (int n = 2; n <= 5; ++n)
    for (int m = n; m <= 5; ++m)
      for (int j = 0; j <= m - n + 1; ++j) {
        const auto k =
            weyres::k_polynomial(weyres::build_universal_complex(m, n, j));
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(j);
        CHECK(weyres::vanishing_order_at_one(k, 10) == m - n + 1);
      }
}

TEST_CASE("series expansion matches the prefix-sum oracle") {
  const auto c = weyres::build_universal_complex(3, 2, 1);
  const auto k = weyres::k_polynomial(c);
  CHECK(weyres::hilbert_prediction(c, 6, 8) == series_by_prefix_sums(k, 6, 8));
}

TEST_CASE("frozen hilbert predictions") {
  const auto h221 =
      weyres::hilbert_prediction(weyres::build_universal_complex(2, 2, 1), 4, 2);
  CHECK(h221 == std::vector<long long>{2, 6, 12});
  const auto h322 =
      weyres::hilbert_prediction(weyres::build_universal_complex(3, 2, 2), 6, 1);
  CHECK(h322 == std::vector<long long>{3, 12});
}

TEST_CASE("acm certificates") {
  const auto lin = weyres::relativize_split(3, 2, 1, {-1, -1}, {0, 0, 0}, 4);
  CHECK(weyres::acm_certificate(lin.betti, 2).is_acm);
  const auto c430 = weyres::relativize_split(4, 3, 0, {-1, -1, -1},
                                             {0, 0, 0, 0}, 5);
  CHECK(weyres::acm_certificate(c430.betti, 2).is_acm);
  // Claiming a larger codimension than the table length fails with a reason.
  const auto bad = weyres::acm_certificate(lin.betti, 3);
  CHECK_FALSE(bad.is_acm);
  CHECK(bad.reason.find("length mismatch") != std::string::npos);
  const auto standard = weyres::relativize_split(3, 2, 1, {-1, -2}, {0, 0, 1}, 4);
  CHECK(weyres::acm_certificate(standard.betti, 2).is_acm);
}

TEST_CASE("ulrich certificate 3x2 linear, j = 1") {
  const auto cert = weyres::ulrich_certificate(3, 2, 1, 4);
  CHECK(cert.initializing_twist == 1);
  CHECK(cert.uniform_twist == 1);
  CHECK(cert.twist_agrees_uniform);
  CHECK(cert.ranks == std::vector<long long>{6, 12, 6});
  CHECK(cert.rank_sheaf == 2);
  CHECK(cert.degree_locus == 3);
  CHECK(cert.h0 == 6);
  CHECK(cert.is_linear);
  CHECK(cert.is_ulrich);
}

TEST_CASE("ulrich certificate 3x2 linear, j = 0: twist differs from the uniform value") {
  const auto cert = weyres::ulrich_certificate(3, 2, 0, 4);
  CHECK(cert.initializing_twist == 2);
  CHECK(cert.uniform_twist == 1);
  CHECK_FALSE(cert.twist_agrees_uniform);
  CHECK(cert.ranks == std::vector<long long>{3, 6, 3});
  CHECK(cert.rank_sheaf == 1);
  CHECK(cert.degree_locus == 3);
  CHECK(cert.h0 == 3);
  CHECK(cert.is_ulrich);
}

TEST_CASE("ulrich certificate for the determinantal hypersurface") {
  const auto cert = weyres::ulrich_certificate(2, 2, 1, 3);
  CHECK(cert.initializing_twist == 0);
  CHECK(cert.ranks == std::vector<long long>{2, 2});
  CHECK(cert.degree_locus == 2);
  CHECK(cert.rank_sheaf == 1);
  CHECK(cert.h0 == 2);
  CHECK(cert.is_ulrich);
}

TEST_CASE("ulrich certificate rejects too-small ambient space") {
  CHECK_THROWS(weyres::ulrich_certificate(3, 2, 1, 1));
}
