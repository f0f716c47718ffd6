#include "weyres/weight.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using weyres::Weight;

namespace {

// Independent oracle: draw the Young diagram as a boolean grid and read off
// column heights.
Weight transpose_via_diagram(const Weight& mu) {
  std::vector<int> cols;
  for (int c = 0; c < mu.max_entry(); ++c) {
    int height = 0;
    for (int row = 0; row < mu.length(); ++row)
      if (c < mu[row]) ++height;
    cols.push_back(height);
  }
  return Weight{cols};
}

// Full box scan: all weakly decreasing sequences over [-1, n]^(m-r).
std::vector<Weight> index_set_brute_force(int n, int m, int r, int j,
                                          long long target) {
  std::vector<Weight> out;
  const int k = m - r;
  std::vector<int> cur(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int p) -> void {
    if (p == k) {
      Weight w{cur};
      if (w.norm() == target && weyres::is_in_index_set(w, n, m, r, j))
        out.push_back(w);
      return;
    }
    const int hi = p == 0 ? n : cur[static_cast<std::size_t>(p) - 1];
    for (int v = -1; v <= hi; ++v) {
      cur[static_cast<std::size_t>(p)] = v;
      self(self, p + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("weight construction and accessors") {
  CHECK_THROWS(Weight{{1, 2}});
  const Weight w{{3, 1, 0, -2}};
  CHECK(w.length() == 4);
  CHECK(w.norm() == 2);
  CHECK(w.min_entry() == -2);
  CHECK(w.max_entry() == 3);
  CHECK(Weight{}.norm() == 0);
  CHECK(Weight{{1, -1}}.norm() == 0);
  CHECK(Weight{{2, 2, 1}}.norm() == 5);
}

TEST_CASE("stripped and padded forms") {
  CHECK(Weight{{2, 1, 0, 0}}.stripped() == Weight{{2, 1}});
  CHECK(Weight{{2, 1}}.padded(4) == Weight{{2, 1, 0, 0}});
  CHECK(Weight{}.padded(2) == Weight{{0, 0}});
  CHECK_THROWS(Weight{{1, -1}}.padded(3));
  CHECK_THROWS(Weight{{1, -1}}.stripped());
}

TEST_CASE("transpose of a partition") {
  CHECK(weyres::transpose(Weight{{2, 1}}) == Weight{{2, 1}});
  CHECK(weyres::transpose(Weight{{3}}) == Weight{{1, 1, 1}});
  CHECK(weyres::transpose(Weight{{2, 2, 1}}) == transpose_via_diagram(Weight{{2, 2, 1}}));
  CHECK(weyres::transpose(Weight{{2, 2, 1}}) == Weight{{3, 2}});
  CHECK(weyres::transpose(Weight{}) == Weight{});
  CHECK_THROWS(weyres::transpose(Weight{{1, -1}}));
}

TEST_CASE("transpose is an involution preserving the norm") {
  std::vector<Weight> shapes;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) shapes.push_back(Weight{{a, b, c}});
  for (const Weight& mu : shapes) {
    const Weight p = mu.stripped();
    CHECK(weyres::transpose(weyres::transpose(p)) == p);
    CHECK(weyres::transpose(p).norm() == p.norm());
    CHECK(weyres::transpose(p) == transpose_via_diagram(p));
  }
}

TEST_CASE("index set membership") {
  CHECK(weyres::is_in_index_set(Weight{{1, -1}}, 2, 3, 1, 1));
  CHECK_FALSE(weyres::is_in_index_set(Weight{{2, 0}}, 2, 3, 1, 0));
  CHECK(weyres::is_in_index_set(Weight{{-1, -1}}, 2, 3, 1, 2));
  CHECK_THROWS(weyres::is_in_index_set(Weight{{1}}, 2, 3, 1, 1));
}

TEST_CASE("lambda_tilde") {
  CHECK(weyres::lambda_tilde(Weight{{1, -1}}, 1, 1) == Weight{{0, 0, -1}});
  CHECK(weyres::lambda_tilde(Weight{{1, 1}}, 1, 0) == Weight{{0, 0, 0}});
  CHECK(weyres::lambda_tilde(Weight{{-1, -1}}, 1, 2) == Weight{{0, -1, -1}});
  // (0, 1) after subtracting r from the head would not be monotone.
  CHECK_THROWS(weyres::lambda_tilde(Weight{{0, 0}}, 1, 1));
}

TEST_CASE("enumerate_index_set examples") {
  CHECK(weyres::enumerate_index_set(2, 3, 1, 1, 1) ==
        std::vector<Weight>{Weight{{1, 0}}, Weight{{2, -1}}});
  CHECK(weyres::enumerate_index_set(2, 2, 1, 1, -1) ==
        std::vector<Weight>{Weight{{-1}}});
  CHECK(weyres::enumerate_index_set(2, 3, 1, 0, 4) ==
        std::vector<Weight>{Weight{{2, 2}}});
  CHECK(weyres::enumerate_index_set(2, 3, 1, 1, 99).empty());
}

TEST_CASE("lambda_tilde is monotone on the whole index set") {
  for (int n = 2; n <= 5; ++n)
    for (int m = n; m <= 5; ++m) {
      const int r = n - 1;
      for (int j = 0; j <= m - r; ++j)
        for (long long t = -(m - r); t <= 3LL * (m - r); ++t)
          for (const Weight& lam : weyres::enumerate_index_set(n, m, r, j, t)) {
            const Weight lt = weyres::lambda_tilde(lam, r, j);
            CHECK(lt.length() == m);
            for (int i = 1; i < lt.length(); ++i) CHECK(lt[i - 1] >= lt[i]);
          }
    }
}

TEST_CASE("enumerate_index_set agrees with the box scan") {
  for (int n = 2; n <= 6; ++n)
    for (int m = n; m <= 6; ++m) {
      const int r = n - 1;
      for (int j = 0; j <= m - r; ++j)
        for (long long t = -4; t <= 4 + 6LL * (m - r); ++t) {
          const auto fast = weyres::enumerate_index_set(n, m, r, j, t);
          const auto slow = index_set_brute_force(n, m, r, j, t);
          CHECK(fast == slow);
          const std::set<Weight> unique(fast.begin(), fast.end());
          CHECK(unique.size() == fast.size());
        }
    }
}
