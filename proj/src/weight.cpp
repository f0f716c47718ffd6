#include "weyres/weight.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weyres {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

}  // namespace

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!weakly_decreasing(entries_))
    throw std::invalid_argument("Weight: entries not weakly decreasing");
}

Weight Weight::zeros(int k) {
  return Weight(std::vector<int>(static_cast<std::size_t>(k), 0));
}

long long Weight::norm() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

int Weight::min_entry() const { return entries_.empty() ? 0 : entries_.back(); }

int Weight::max_entry() const { return entries_.empty() ? 0 : entries_.front(); }

Weight Weight::stripped() const {
  if (!is_partition())
    throw std::invalid_argument("Weight::stripped: negative entry");
  std::vector<int> e = entries_;
  while (!e.empty() && e.back() == 0) e.pop_back();
  return Weight(std::move(e));
}

Weight Weight::padded(int k) const {
  if (k < length())
    throw std::invalid_argument("Weight::padded: target length too small");
  if (k > length() && min_entry() < 0)
    throw std::invalid_argument("Weight::padded: negative tail");
  std::vector<int> e = entries_;
  e.resize(static_cast<std::size_t>(k), 0);
  return Weight(std::move(e));
}

Weight Weight::shifted(int c) const {
  std::vector<int> e = entries_;
  for (int& x : e) x += c;
  return Weight(std::move(e));
}

bool Weight::is_partition() const { return min_entry() >= 0; }

std::string Weight::str() const {
  std::string s = "(";
  for (int i = 0; i < length(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

Weight transpose(const Weight& mu) {
  if (!mu.is_partition())
    throw std::invalid_argument("transpose: negative entry");
  std::vector<int> cols;
  for (int c = 0; c < mu.max_entry(); ++c) {
    int h = 0;
    for (int i = 0; i < mu.length(); ++i)
      if (mu[i] > c) ++h;
    cols.push_back(h);
  }
  return Weight(std::move(cols));
}

bool is_in_index_set(const Weight& lambda, int n, int m, int r, int j) {
  const int k = m - r;
  if (lambda.length() != k)
    throw std::invalid_argument("is_in_index_set: weight length != m - r");
  if (j < 0 || j > k)
    throw std::invalid_argument("is_in_index_set: j out of range");
  for (int p = 0; p < k - j; ++p)
    if (lambda[p] < r || lambda[p] > n) return false;
  for (int p = k - j; p < k; ++p)
    if (lambda[p] < -1 || lambda[p] > 0) return false;
  return true;
}

Weight lambda_tilde(const Weight& lambda, int r, int j) {
  const int k = lambda.length();
  if (j < 0 || j > k)
    throw std::invalid_argument("lambda_tilde: j out of range");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k + r));
  for (int p = 0; p < k - j; ++p) out.push_back(lambda[p] - r);
  for (int p = 0; p < r; ++p) out.push_back(0);
  for (int p = k - j; p < k; ++p) out.push_back(lambda[p]);
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i - 1] < out[i])
      throw std::invalid_argument(
          "lambda_tilde: input outside the index set (result not monotone)");
  return Weight(std::move(out));
}

std::vector<Weight> enumerate_index_set(int n, int m, int r, int j,
                                        long long target_norm) {
  const int k = m - r;
  if (k < 0 || j < 0 || j > k)
    throw std::invalid_argument("enumerate_index_set: bad parameters");
  std::vector<Weight> result;
  std::vector<int> cur(static_cast<std::size_t>(k));
  // Position p ranges over [r, n] for p < k - j and [-1, 0] afterwards;
  // r >= 1 keeps the concatenation weakly decreasing across the split.
  auto rec = [&](auto&& self, int p, long long acc) -> void {
    if (p == k) {
      if (acc == target_norm) result.emplace_back(cur);
      return;
    }
    const int lo = p < k - j ? r : -1;
    const int hi = p < k - j ? n : 0;
    for (int v = lo; v <= hi; ++v) {
      if (p > 0 && v > cur[p - 1]) continue;
      cur[static_cast<std::size_t>(p)] = v;
      self(self, p + 1, acc + v);
    }
  };
  rec(rec, 0, 0);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace weyres
