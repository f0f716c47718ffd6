#include "weyres/bbw.hpp"

#include <algorithm>
#include <stdexcept>

#include "weyres/schur.hpp"

namespace weyres {

CohomologyResult bbw_cohomology(const GrassmannianBundleWeight& w) {
  if (w.u_part.length() != w.r || w.q_part.length() != w.m - w.r)
    throw std::invalid_argument("bbw_cohomology: block lengths do not match (r, m)");
  const int m = w.m;
  std::vector<int> x;
  x.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < w.u_part.length(); ++i) x.push_back(w.u_part[i]);
  for (int i = 0; i < w.q_part.length(); ++i) x.push_back(w.q_part[i]);
  // delta_i = m - i.
  for (int i = 0; i < m; ++i) x[static_cast<std::size_t>(i)] += m - i;

  int inversions = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)])
        return CohomologyResult{};  // acyclic
      if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(j)])
        ++inversions;
    }

  std::sort(x.begin(), x.end(), std::greater<>());
  for (int i = 0; i < m; ++i) x[static_cast<std::size_t>(i)] -= m - i;
  Weight result{x};
  return CohomologyResult{false, inversions, result, dim_schur(result, m)};
}

}  // namespace weyres
