#include "weyres/schur.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace weyres {

long long dim_schur(const Weight& lambda, int k) {
  if (lambda.length() != k)
    throw std::invalid_argument("dim_schur: weight length != k");
  if (k == 0) return 1;
  mpz_class num = 1;
  std::vector<unsigned long> den;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den.push_back(static_cast<unsigned long>(j - i));
    }
  // Each denominator factor divides the full product of the remaining
  // quotient, so stepwise division stays exact.
  for (unsigned long f : den) {
    if (!mpz_divisible_ui_p(num.get_mpz_t(), f))
      throw std::logic_error("dim_schur: non-integral intermediate");
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), f);
  }
  if (!num.fits_slong_p())
    throw std::overflow_error("dim_schur: dimension exceeds long long");
  return num.get_si();
}

namespace {

using ShapeContent = std::pair<std::vector<int>, std::vector<int>>;

std::map<ShapeContent, long long> kostka_memo;          // NOLINT
std::shared_mutex kostka_mutex;                         // NOLINT

// Number of semistandard tableaux of the given partition shape and content,
// by peeling the horizontal strip occupied by the largest entry.
long long kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  long long total_shape = 0, total_content = 0;
  for (int x : shape) total_shape += x;
  for (int x : content) total_content += x;
  if (total_shape != total_content) return 0;
  if (content.empty()) return total_shape == 0 ? 1 : 0;

  const ShapeContent key{shape, content};
  {
    std::shared_lock lock(kostka_mutex);
    auto it = kostka_memo.find(key);
    if (it != kostka_memo.end()) return it->second;
  }

  const int strip = content.back();
  const std::vector<int> rest(content.begin(), content.end() - 1);
  long long count = 0;
  std::vector<int> mu(shape.size());
  // mu_i in [shape_{i+1}, shape_i] with |shape| - |mu| = strip.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == shape.size()) {
      if (remaining == 0) {
        std::vector<int> trimmed;
        for (int x : mu)
          if (x > 0) trimmed.push_back(x);
        count += kostka(trimmed, rest);
      }
      return;
    }
    const int lo = i + 1 < shape.size() ? shape[i + 1] : 0;
    for (int v = lo; v <= shape[i]; ++v) {
      const int removed = shape[i] - v;
      if (removed > remaining) continue;
      mu[i] = v;
      self(self, i + 1, remaining - removed);
    }
  };
  rec(rec, 0, strip);

  std::unique_lock lock(kostka_mutex);
  kostka_memo.emplace(key, count);
  return count;
}

}  // namespace

long long weight_multiplicity(const Weight& lambda,
                              const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != lambda.length())
    throw std::invalid_argument("weight_multiplicity: length mismatch");
  long long na = 0;
  for (int x : alpha) na += x;
  if (na != lambda.norm())
    throw std::invalid_argument("weight_multiplicity: norm mismatch");
  int shift = 0;
  shift = std::min(shift, lambda.min_entry());
  for (int x : alpha) shift = std::min(shift, x);
  std::vector<int> shape;
  for (int i = 0; i < lambda.length(); ++i) {
    const int v = lambda[i] - shift;
    if (v > 0) shape.push_back(v);
  }
  std::vector<int> content;
  content.reserve(alpha.size());
  for (int x : alpha) content.push_back(x - shift);
  return kostka(shape, content);
}

std::vector<std::pair<std::vector<int>, long long>> weight_contents(
    const Weight& lambda, int k) {
  if (lambda.length() != k)
    throw std::invalid_argument("weight_contents: weight length != k");
  std::vector<std::pair<std::vector<int>, long long>> out;
  if (k == 0) {
    out.push_back({{}, 1});
    return out;
  }
  // Weights of the irreducible lie in the box [min lambda, max lambda]^k.
  const int lo = lambda.min_entry(), hi = lambda.max_entry();
  const long long target = lambda.norm();
  std::vector<int> alpha(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int p, long long acc) -> void {
    if (p == k) {
      if (acc != target) return;
      const long long mult = weight_multiplicity(lambda, alpha);
      if (mult > 0) out.push_back({alpha, mult});
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      alpha[static_cast<std::size_t>(p)] = v;
      self(self, p + 1, acc + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<ExteriorPair> exterior_power_tensor(int p, int dim_a, int dim_b) {
  std::vector<ExteriorPair> out;
  if (p < 0 || p > dim_a * dim_b) return out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      Weight mu{parts};
      out.push_back({mu, transpose(mu)});
      return;
    }
    if (static_cast<int>(parts.size()) == dim_a) return;
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      parts.push_back(v);
      self(self, remaining - v, v);
      parts.pop_back();
    }
  };
  rec(rec, p, dim_b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> pieri_exterior(const Weight& lambda, int j) {
  const int k = lambda.length();
  if (j < 0 || j > k) return {};
  std::vector<Weight> out;
  std::vector<int> mu(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int p, int added) -> void {
    if (added > j) return;
    if (p == k) {
      if (added == j) out.emplace_back(mu);
      return;
    }
    for (int inc = 1; inc >= 0; --inc) {
      const int v = lambda[p] + inc;
      if (p > 0 && v > mu[p - 1]) continue;
      mu[static_cast<std::size_t>(p)] = v;
      self(self, p + 1, added + inc);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<SchurTerm> pieri_exterior_terms(const Weight& lambda, int j) {
  std::vector<SchurTerm> out;
  for (const Weight& mu : pieri_exterior(lambda, j))
    out.push_back(SchurTerm{mu, 1, dim_schur(mu, lambda.length())});
  return out;
}

int c_tilde(const Weight& lambda, int j, const Weight& mu) {
  if (mu.length() != lambda.length()) return 0;
  if (!mu.empty() && mu.min_entry() < 0) return 0;
  int added = 0;
  for (int i = 0; i < mu.length(); ++i) {
    const int inc = mu[i] - lambda[i];
    if (inc != 0 && inc != 1) return 0;
    added += inc;
  }
  return added == j ? 1 : 0;
}

}  // namespace weyres
