#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace weyres {

// Z/p for a prime p < 2^31, so products fit in long long.
class ModField {
public:
  using Elem = long long;

  explicit ModField(long long p) : p_(p) {
    if (p < 2 || p >= (1LL << 31))
      throw std::invalid_argument("ModField: prime out of range");
  }

  long long prime() const { return p_; }
  Elem from_int(long long v) const {
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a - b + p_) % p_; }
  Elem mul(Elem a, Elem b) const { return a * b % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    Elem result = 1, base = a;
    long long e = p_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  bool is_zero(Elem a) const { return a == 0; }

private:
  long long p_;
};

struct RationalField {
  using Elem = mpq_class;

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  bool is_zero(const Elem& a) const { return a == 0; }
};

// Sparse matrix held by rows (sorted column/value pairs). Built column-wise
// or row-wise from integer entries, reduced through the field.
template <class F>
class SparseMatrix {
public:
  using Elem = typename F::Elem;
  using Row = std::vector<std::pair<int, Elem>>;

  SparseMatrix(const F& field, int rows, int cols)
      : field_(field), rows_(static_cast<std::size_t>(rows)), cols_(cols) {}

  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return cols_; }

  void add_entry(int r, int c, long long v) {
    const Elem e = field_.from_int(v);
    if (field_.is_zero(e)) return;
    rows_[static_cast<std::size_t>(r)].push_back({c, e});
  }

  long long nonzeros() const {
    long long nnz = 0;
    for (const auto& row : rows_) nnz += static_cast<long long>(row.size());
    return nnz;
  }

  // Rank by right-looking elimination with Markowitz-style pivoting: pick
  // the column of least count, within it the shortest row. Destructive.
  int rank() && {
    normalize_rows();
    std::vector<std::set<int>> col_rows(static_cast<std::size_t>(cols_));
    for (int r = 0; r < row_count(); ++r)
      for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)])
        col_rows[static_cast<std::size_t>(c)].insert(r);

    std::set<std::pair<std::size_t, int>> queue;  // (count, col), count >= 1
    for (int c = 0; c < cols_; ++c)
      if (!col_rows[static_cast<std::size_t>(c)].empty())
        queue.insert({col_rows[static_cast<std::size_t>(c)].size(), c});

    int rank = 0;
    while (!queue.empty()) {
      const auto [count, pc] = *queue.begin();
      auto& rows_in_col = col_rows[static_cast<std::size_t>(pc)];
      // Pivot row: fewest entries, ties to the lowest index.
      int pr = -1;
      std::size_t best = 0;
      for (int r : rows_in_col) {
        const std::size_t len = rows_[static_cast<std::size_t>(r)].size();
        if (pr < 0 || len < best) {
          pr = r;
          best = len;
        }
      }
      ++rank;
      const Row pivot_row = std::move(rows_[static_cast<std::size_t>(pr)]);
      rows_[static_cast<std::size_t>(pr)].clear();
      detach_row(pr, pivot_row, col_rows, queue);
      const Elem pivot_inv = field_.inv(value_at(pivot_row, pc));

      const std::vector<int> targets(rows_in_col.begin(), rows_in_col.end());
      for (int r : targets) {
        Row& row = rows_[static_cast<std::size_t>(r)];
        const Elem factor = field_.mul(value_at(row, pc), pivot_inv);
        detach_row(r, row, col_rows, queue);
        row = axpy(row, pivot_row, field_.neg(factor));
        attach_row(r, row, col_rows, queue);
      }
    }
    return rank;
  }

private:
  static Elem value_at(const Row& row, int c) {
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const std::pair<int, Elem>& a, int b) { return a.first < b; });
    return it->second;
  }

  // row + factor * other, sparse merge.
  Row axpy(const Row& row, const Row& other, const Elem& factor) const {
    Row out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, k = 0;
    while (i < row.size() || k < other.size()) {
      if (k == other.size() ||
          (i < row.size() && row[i].first < other[k].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || other[k].first < row[i].first) {
        out.push_back({other[k].first, field_.mul(factor, other[k].second)});
        ++k;
      } else {
        const Elem v =
            field_.add(row[i].second, field_.mul(factor, other[k].second));
        if (!field_.is_zero(v)) out.push_back({row[i].first, v});
        ++i;
        ++k;
      }
    }
    return out;
  }

  void normalize_rows() {
    for (auto& row : rows_) {
      std::sort(row.begin(), row.end());
      Row merged;
      for (const auto& [c, v] : row) {
        if (!merged.empty() && merged.back().first == c)
          merged.back().second = field_.add(merged.back().second, v);
        else
          merged.push_back({c, v});
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(),
                                  [&](const auto& e) {
                                    return field_.is_zero(e.second);
                                  }),
                   merged.end());
      row = std::move(merged);
    }
  }

  void detach_row(int r, const Row& row, std::vector<std::set<int>>& col_rows,
                  std::set<std::pair<std::size_t, int>>& queue) const {
    for (const auto& [c, v] : row) {
      auto& s = col_rows[static_cast<std::size_t>(c)];
      queue.erase({s.size(), c});
      s.erase(r);
      if (!s.empty()) queue.insert({s.size(), c});
    }
  }

  void attach_row(int r, const Row& row, std::vector<std::set<int>>& col_rows,
                  std::set<std::pair<std::size_t, int>>& queue) const {
    for (const auto& [c, v] : row) {
      auto& s = col_rows[static_cast<std::size_t>(c)];
      if (!s.empty()) queue.erase({s.size(), c});
      s.insert(r);
      queue.insert({s.size(), c});
    }
  }

  F field_;
  std::vector<Row> rows_;
  int cols_;
};

// Rank of a small dense integer matrix over the field.
template <class F>
int dense_rank(const F& field, const std::vector<std::vector<long long>>& m) {
  using Elem = typename F::Elem;
  if (m.empty()) return 0;
  std::vector<std::vector<Elem>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Elem> r;
    r.reserve(row.size());
    for (long long v : row) r.push_back(field.from_int(v));
    a.push_back(std::move(r));
  }
  const std::size_t nr = a.size(), nc = a[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < nc && static_cast<std::size_t>(rank) < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t r = static_cast<std::size_t>(rank); r < nr; ++r)
      if (!field.is_zero(a[r][c])) {
        piv = r;
        break;
      }
    if (piv == nr) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[piv]);
    const Elem inv = field.inv(a[static_cast<std::size_t>(rank)][c]);
    for (std::size_t cc = c; cc < nc; ++cc)
      a[static_cast<std::size_t>(rank)][cc] =
          field.mul(a[static_cast<std::size_t>(rank)][cc], inv);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == static_cast<std::size_t>(rank) || field.is_zero(a[r][c]))
        continue;
      const Elem f = a[r][c];
      for (std::size_t cc = c; cc < nc; ++cc)
        a[r][cc] = field.sub(a[r][cc], field.mul(f, a[static_cast<std::size_t>(rank)][cc]));
    }
    ++rank;
  }
  return rank;
}

bool is_prime(long long p);

}  // namespace weyres
