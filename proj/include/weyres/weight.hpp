#pragma once

#include <compare>
#include <string>
#include <vector>

namespace weyres {

// Weakly decreasing integer sequence, largest entry first.
//
// Bracket notation elsewhere in this library writes subscripts descending
// left to right ([w_k >= ... >= w_1]); stored position p therefore carries
// bracket subscript (k - p). This is the single canonical order; no ascending
// representation exists anywhere.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<int> entries);

  static Weight zeros(int k);

  int length() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  long long norm() const;
  int min_entry() const;  // 0 for the empty weight
  int max_entry() const;  // 0 for the empty weight

  // Partition form: trailing zeros removed. Requires all entries >= 0.
  Weight stripped() const;
  // Fixed-length GL(k) form: extended with zeros. Requires k >= length and,
  // when the weight has negative entries, that they are not followed by
  // padding (padding a weight with min_entry < 0 would break monotonicity).
  Weight padded(int k) const;
  Weight shifted(int c) const;

  bool is_partition() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string str() const;

private:
  std::vector<int> entries_;
};

// Conjugate partition (column lengths of the Young diagram). Rejects
// negative entries.
Weight transpose(const Weight& mu);

// Membership in the index set for the pushforward enumeration: with
// k = m - r = length(lambda), the first k - j stored entries must lie in
// [r, n] and the last j in [-1, 0]. Conditions on nonexistent subscripts
// (j = 0 or j = k) are vacuous.
bool is_in_index_set(const Weight& lambda, int n, int m, int r, int j);

// [first k-j entries minus r, 0^r, last j entries]; length k + r. Rejects
// input whose image would not be weakly decreasing.
Weight lambda_tilde(const Weight& lambda, int r, int j);

// All lambda in the index set with |lambda| = target_norm, each once, in
// lexicographic order on the stored entries. Empty when unreachable.
std::vector<Weight> enumerate_index_set(int n, int m, int r, int j,
                                        long long target_norm);

}  // namespace weyres
