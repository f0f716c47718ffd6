#include "weyres/oracle.hpp"

#include <array>
#include <numeric>
#include <random>
#include <utility>

#include "doctest.h"

#include "weyres/resolution.hpp"
#include "weyres/verification.hpp"

using weyres::FieldSpec;
using weyres::GradedPresentation;
using weyres::IntMatrix;
using weyres::Monomial;
using weyres::Polynomial;

namespace {

const FieldSpec kMod{false, 2147483647};
const FieldSpec kMod2{false, 2147483629};
const FieldSpec kExact{true, 0};

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<long long> prediction_at_oracle_degrees(int m, int n, int j,
                                                    int d_max) {
  const int shift = (n - 1) * (m - n + 1 - j);
  const auto full = weyres::hilbert_prediction(
      weyres::build_universal_complex(m, n, j), m * n, d_max + shift);
  return {full.begin() + shift, full.end()};
}

}  // namespace

TEST_CASE("monomial enumeration and ranking agree") {
  for (int v : {1, 2, 3, 5})
    for (int d = 0; d <= 4; ++d) {
      const auto& monos = weyres::monomials_of_degree(v, d);
      CHECK(static_cast<long long>(monos.size()) == weyres::monomial_count(v, d));
      for (std::size_t i = 0; i < monos.size(); ++i)
        CHECK(weyres::monomial_index(monos[i]) == static_cast<long long>(i));
    }
}

TEST_CASE("tautological matrix") {
  const auto t = weyres::tautological_matrix(3, 2);
  CHECK(t.target_rank() == 3);
  CHECK(t.source_rank() == 2);
  t.validate();
  // Entry (k, i) is the single variable x_{k,i}, of degree one.
  int vars_seen = 0;
  for (const auto& [key, poly] : t.entries) {
    CHECK(poly.terms.size() == 1);
    CHECK(poly.degree() == 1);
    ++vars_seen;
  }
  CHECK(vars_seen == 6);
  // Restriction to a point is the point itself.
  const IntMatrix f{{1, 2}, {3, 4}, {5, 6}};
  IntMatrix eval(3, std::vector<long long>(2, 0));
  std::vector<long long> x{1, 2, 3, 4, 5, 6};
  for (const auto& [key, poly] : t.entries)
    eval[static_cast<std::size_t>(key.first)]
        [static_cast<std::size_t>(key.second)] = weyres::poly_eval(poly, x);
  CHECK(eval == f);
}

TEST_CASE("free modules have binomial hilbert functions") {
  const weyres::GradedRing ring{4};
  for (int a : {0, 1, 2}) {
    const auto p = weyres::presentation_free(ring, 3, a);
    const auto h = weyres::hilbert_function(p, 5, kMod, 1);
    for (int d = 0; d <= 5; ++d)
      CHECK(h[static_cast<std::size_t>(d)] == 3 * binomial(d - a + 3, 3));
  }
}

TEST_CASE("sym and ext presentation shapes") {
  const auto k32 = weyres::presentation_K(3, 2);
  CHECK(k32.target_rank() == 2);
  CHECK(k32.source_rank() == 3);
  const auto sym2 = weyres::presentation_sym(k32, 2);
  CHECK(sym2.target_rank() == 3);  // Sym^2 of a rank-2 module
  CHECK(sym2.source_rank() == 2 * 3);
  sym2.validate();
  CHECK(weyres::presentation_sym(k32, 1).entries == k32.entries);

  const auto coker32 = weyres::presentation_coker(3, 2);
  CHECK(weyres::presentation_ext(coker32, 1).entries == coker32.entries);
  const auto ext2 = weyres::presentation_ext(coker32, 2);
  CHECK(ext2.target_rank() == 3);  // wedge^2 of rank 3
  CHECK(ext2.source_rank() == 3 * 2);
  ext2.validate();
  CHECK_THROWS(weyres::presentation_sym(coker32, 0));
  CHECK_THROWS(weyres::presentation_ext(coker32, 0));
}

TEST_CASE("tensoring with the free rank-one presentation changes nothing") {
  const auto coker = weyres::presentation_coker(2, 2);
  const auto free1 = weyres::presentation_free(coker.ring);
  const auto t = weyres::presentation_tensor(coker, free1);
  t.validate();
  CHECK(weyres::hilbert_function(t, 3, kMod, 1) ==
        weyres::hilbert_function(coker, 3, kMod, 1));
  const auto t2 = weyres::presentation_tensor(free1, coker);
  CHECK(weyres::hilbert_function(t2, 3, kMod, 1) ==
        weyres::hilbert_function(coker, 3, kMod, 1));
}

TEST_CASE("hilbert function of the smallest cokernel") {
  const auto h = weyres::hilbert_function(weyres::presentation_coker(2, 2), 3,
                                          kMod, 1);
  CHECK(h == std::vector<long long>{2, 6, 12, 20});
}

TEST_CASE("oracle matches the prediction after the degree shift") {
  for (auto [m, n, j] : std::vector<std::array<int, 3>>{
           {2, 2, 0}, {2, 2, 1}, {3, 2, 0}, {3, 2, 1}, {3, 2, 2}}) {
    CAPTURE(m);
    CAPTURE(n);
    CAPTURE(j);
    const auto p = weyres::presentation_sym_k_ext_coker(m, n, j);
    CHECK(weyres::hilbert_function(p, 3, kMod) ==
          prediction_at_oracle_degrees(m, n, j, 3));
  }
}

TEST_CASE("modular ranks agree across two primes and with exact arithmetic") {
  const auto p = weyres::presentation_sym_k_ext_coker(3, 2, 1);
  const auto h1 = weyres::hilbert_function(p, 2, kMod, 1);
  const auto h2 = weyres::hilbert_function(p, 2, kMod2, 1);
  const auto hq = weyres::hilbert_function(p, 2, kExact, 1);
  CHECK(h1 == h2);
  CHECK(h1 == hq);
}

TEST_CASE("field spec validation") {
  CHECK_THROWS(FieldSpec{false, 1000003}.validate());       // too small
  CHECK_THROWS(FieldSpec{false, 2147483646}.validate());    // composite
  CHECK_NOTHROW(FieldSpec{false, 2147483647}.validate());
  CHECK_NOTHROW(kExact.validate());
}

TEST_CASE("generic fibers of the building blocks") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f32 = weyres::random_corank_one_matrix(3, 2, rng);
    CHECK(weyres::fiber_dim(weyres::presentation_coker(3, 2), f32, kMod) == 2);
    CHECK(weyres::fiber_dim(weyres::presentation_K(3, 2), f32, kMod) == 1);
    CHECK(weyres::fiber_dim(
              weyres::presentation_ext(weyres::presentation_coker(3, 2), 2),
              f32, kMod) == 1);
    const auto f22 = weyres::random_corank_one_matrix(2, 2, rng);
    CHECK(weyres::fiber_dim(weyres::presentation_K(2, 2), f22, kMod) == 1);
  }
}

TEST_CASE("generic fiber of the resolved module is binomial(c, j)") {
  std::mt19937_64 rng(7);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 3}})
    for (int j = 0; j <= m - n + 1; ++j) {
      const auto p = weyres::presentation_sym_k_ext_coker(m, n, j);
      for (int trial = 0; trial < 3; ++trial) {
        const auto f = weyres::random_corank_one_matrix(m, n, rng);
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(j);
        CHECK(weyres::fiber_dim(p, f, kMod) == binomial(m - n + 1, j));
      }
    }
}

TEST_CASE("fiber check for j = 1") {
  std::mt19937_64 rng(99);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}}) {
    const auto f = weyres::random_corank_one_matrix(m, n, rng);
    const auto result = weyres::fiber_check_j1(m, n, f, kMod);
    CAPTURE(m);
    CAPTURE(n);
    CHECK(result.coker_dim == m - n + 1);
    CHECK(result.hom_dim == m - n + 1);
  }
  // Full-rank input is rejected.
  CHECK_THROWS(weyres::fiber_check_j1(2, 2, IntMatrix{{1, 0}, {0, 1}}, kMod));
}

TEST_CASE("maximal minors annihilate the module, a random quadric does not") {
  CHECK(weyres::annihilator_check(2, 2, 1, 2, kMod));
  const auto p221 = weyres::presentation_sym_k_ext_coker(2, 2, 1);
  Polynomial control;
  control.terms[Monomial{2, 0, 0, 0}] = 1;  // x00^2
  const auto witness = weyres::multiplication_witness(p221, control, 2, kMod);
  REQUIRE(witness.has_value());
  CHECK(*witness == 0);
  // A two-term quadric outside the minor ideal also fails.
  Polynomial q;
  q.terms[Monomial{2, 0, 0, 0}] = 1;
  q.terms[Monomial{0, 2, 0, 0}] = 3;
  CHECK(weyres::multiplication_witness(p221, q, 2, kMod).has_value());
  // The determinant itself passes.
  const auto minors = weyres::maximal_minors(2, 2);
  REQUIRE(minors.size() == 1);
  CHECK_FALSE(weyres::multiplication_witness(p221, minors[0], 2, kMod));
}

TEST_CASE("minor count and degree") {
  const auto minors = weyres::maximal_minors(4, 2);
  CHECK(minors.size() == 6);
  for (const auto& g : minors) CHECK(g.degree() == 2);
}
