#include "weyres/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "weyres/bbw.hpp"

namespace weyres {

namespace {

void check_parameters(int m, int n, int j) {
  const int r = n - 1;
  if (n < 2 || m < n)
    throw std::invalid_argument("complex: need 2 <= n <= m");
  if (j < 0 || j > m - r)
    throw std::invalid_argument("complex: need 0 <= j <= m - r");
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

long long dim_sym(int k, int n) {
  return k < 0 ? 0 : binomial(k + n - 1, n - 1);
}

// Accumulates labelled terms, then emits them sorted with multiplicities.
class TermCollector {
public:
  void add(int u, Weight gl_n, Weight gl_m, int twist, long long dim) {
    auto& slot = acc_[u][std::tuple{std::move(gl_n), std::move(gl_m), twist}];
    slot.first = dim;
    slot.second += 1;
  }

  std::map<int, std::vector<ComplexTerm>> take() {
    std::map<int, std::vector<ComplexTerm>> out;
    for (auto& [u, bucket] : acc_) {
      auto& terms = out[u];
      for (auto& [key, dm] : bucket)
        terms.push_back(ComplexTerm{std::get<0>(key), std::get<1>(key),
                                    std::get<2>(key), dm.first, dm.second});
      std::sort(terms.begin(), terms.end());
    }
    return out;
  }

private:
  std::map<int,
           std::map<std::tuple<Weight, Weight, int>, std::pair<long long, long long>>>
      acc_;
};

}  // namespace

long long EquivariantComplex::total_dim(int u) const {
  auto it = terms.find(u);
  if (it == terms.end()) return 0;
  long long total = 0;
  for (const auto& t : it->second) total += t.dim * t.mult;
  return total;
}

int EquivariantComplex::max_u() const {
  int best = -1;
  for (const auto& [u, ts] : terms)
    if (!ts.empty()) best = std::max(best, u);
  return best;
}

int EquivariantComplex::twist_at(int u) const {
  auto it = terms.find(u);
  if (it == terms.end() || it->second.empty())
    throw std::out_of_range("twist_at: no terms at this degree");
  const int tw = it->second.front().twist;
  for (const auto& t : it->second)
    if (t.twist != tw) throw std::logic_error("twist_at: mixed twists");
  return tw;
}

EquivariantComplex build_universal_complex(int m, int n, int j) {
  check_parameters(m, n, j);
  const int r = n - 1;
  const int c = m - r;
  TermCollector collector;
  for (int u = 0; u <= c; ++u) {
    const long long target = u + static_cast<long long>(r) * (c - j) - j;
    const int twist = -u - r * (c - j);
    for (const Weight& lambda : enumerate_index_set(n, m, r, j, target)) {
      const Weight tilde = lambda_tilde(lambda, r, j);
      const long long dim_m = dim_schur(tilde, m);
      if (dim_m == 0) continue;
      for (const Weight& mu : pieri_exterior(lambda, j)) {
        if (c_tilde(lambda, j, mu) == 0) continue;
        const Weight mu_t = transpose(mu);
        if (mu_t.length() > n) continue;  // S^{mu^t} C^n = 0
        const Weight gl_n = mu_t.padded(n);
        const long long dim = dim_schur(gl_n, n) * dim_m;
        if (dim == 0) continue;
        collector.add(u, gl_n, tilde, twist, dim);
      }
    }
  }
  EquivariantComplex cx{m, n, r, j, c - j, collector.take()};
  return cx;
}

EquivariantComplex build_complex_via_bbw(int m, int n, int j) {
  check_parameters(m, n, j);
  const int r = n - 1;
  const int c = m - r;
  TermCollector collector;
  const Weight u_block = Weight::zeros(r).shifted(-(c - j));
  for (int p = 0; p <= n * c; ++p) {
    for (const auto& [alpha, alpha_t] : exterior_power_tensor(p, n, c)) {
      const Weight nu = alpha_t.padded(c);  // Q^dual side
      // S^nu Q^dual (x) wedge^j Q: subtract a vertical strip of j boxes.
      std::vector<int> lam(static_cast<std::size_t>(c));
      auto rec = [&](auto&& self, int pos, int removed) -> void {
        if (removed > j) return;
        if (pos == c) {
          if (removed != j) return;
          const GrassmannianBundleWeight w{u_block, Weight{lam}, r, m};
          const CohomologyResult h = bbw_cohomology(w);
          if (h.acyclic) return;
          const int u = p - h.degree;
          const Weight gl_n = alpha.padded(n);
          const long long dim = dim_schur(gl_n, n) * h.dimension;
          if (dim == 0) return;
          collector.add(u, gl_n, h.weight, -p, dim);
          return;
        }
        for (int dec = 0; dec <= 1; ++dec) {
          const int v = nu[pos] - dec;
          if (pos > 0 && v > lam[static_cast<std::size_t>(pos) - 1]) continue;
          lam[static_cast<std::size_t>(pos)] = v;
          self(self, pos + 1, removed + dec);
        }
      };
      rec(rec, 0, 0);
    }
  }
  EquivariantComplex cx{m, n, r, j, c - j, collector.take()};
  return cx;
}

FirstTermsClosedForm closed_form_first_terms(int m, int n, int j) {
  check_parameters(m, n, j);
  const int r = n - 1;
  const int c = m - r;
  FirstTermsClosedForm out;
  out.f0_twist = -r * (c - j);
  out.f1_twist = out.f0_twist - 1;
  out.f0_dim = dim_sym(c - j, n) * binomial(m, j);

  // Hom(Sym^{c-j-1} C^n, wedge^{j-1} C^m)
  out.f1_summands[0] = dim_sym(c - j - 1, n) * binomial(m, j - 1);
  // Hom(S^{(c-j, 0^{n-2}, -1)} C^n, wedge^{j-1} C^m)
  {
    std::vector<int> w{c - j};
    w.insert(w.end(), static_cast<std::size_t>(n - 2), 0);
    w.push_back(-1);
    out.f1_summands[1] = dim_schur(Weight{w}, n) * binomial(m, j - 1);
  }
  // Hom(Sym^{c-j-1} C^n, S^{(1^j, 0^{m-j-1}, -1)} C^m)
  if (j <= m - 1) {
    std::vector<int> w(static_cast<std::size_t>(j), 1);
    w.insert(w.end(), static_cast<std::size_t>(m - j - 1), 0);
    w.push_back(-1);
    out.f1_summands[2] = dim_sym(c - j - 1, n) * dim_schur(Weight{w}, m);
  }
  out.f1_dim = out.f1_summands[0] + out.f1_summands[1] + out.f1_summands[2];
  return out;
}

EquivariantComplex j1_closed_form(int m, int n) {
  check_parameters(m, n, 1);
  const int r = n - 1;
  const int c = m - r;
  TermCollector collector;
  auto try_add = [&](int u, std::vector<int> gn, std::vector<int> gm,
                     int twist) {
    for (std::size_t i = 1; i < gn.size(); ++i)
      if (gn[i - 1] < gn[i]) return;  // non-dominant family member: zero
    for (std::size_t i = 1; i < gm.size(); ++i)
      if (gm[i - 1] < gm[i]) return;
    const Weight wn{gn}, wm{gm};
    const long long dim = dim_schur(wn, n) * dim_schur(wm, m);
    if (dim == 0) return;
    collector.add(u, wn, wm, twist, dim);
  };
  for (int u = 0; u <= c; ++u) {
    const int twist = -r * (c - 1) - u;
    std::vector<int> gn1(static_cast<std::size_t>(n - 1), c - 1);
    gn1.push_back(u);
    {
      std::vector<int> gm1(static_cast<std::size_t>(u), 1);
      gm1.insert(gm1.end(), static_cast<std::size_t>(m - u - 1), 0);
      gm1.push_back(-1);
      try_add(u, gn1, gm1, twist);
    }
    if (u >= 1) {
      std::vector<int> gm2(static_cast<std::size_t>(u - 1), 1);
      gm2.insert(gm2.end(), static_cast<std::size_t>(m - u + 1), 0);
      try_add(u, gn1, gm2, twist);
      std::vector<int> gn3{c};
      gn3.insert(gn3.end(), static_cast<std::size_t>(n - 2), c - 1);
      gn3.push_back(u - 1);
      try_add(u, gn3, gm2, twist);
    }
  }
  EquivariantComplex cx{m, n, r, 1, c - 1, collector.take()};
  return cx;
}

int GradedBettiTable::length() const {
  int best = 0;
  for (const auto& [key, rank] : entries)
    if (rank > 0) best = std::max(best, key.first);
  return best;
}

RelativizedResolution relativize_split(int m, int n, int j,
                                       const std::vector<int>& a,
                                       const std::vector<int>& b, int l) {
  check_parameters(m, n, j);
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != m)
    throw std::invalid_argument("relativize_split: degree vector lengths");
  const EquivariantComplex cx = build_universal_complex(m, n, j);
  RelativizedResolution out;
  out.codim = m - n + 1;
  out.l = l;
  out.expected_codimension = l >= out.codim;
  for (int bk : b)
    for (int ai : a)
      if (bk - ai <= 0) out.expected_codimension = false;

  for (const auto& [u, terms] : cx.terms) {
    for (const ComplexTerm& t : terms) {
      const auto n_contents = weight_contents(t.gl_n, n);
      const auto m_contents = weight_contents(t.gl_m, m);
      for (const auto& [alpha, ka] : n_contents) {
        long long ta = 0;
        for (int i = 0; i < n; ++i) ta += static_cast<long long>(alpha[i]) * a[i];
        for (const auto& [beta, kb] : m_contents) {
          long long tb = 0;
          for (int k = 0; k < m; ++k) tb += static_cast<long long>(beta[k]) * b[k];
          const int twist = static_cast<int>(ta - tb);
          out.betti.entries[{u, twist}] += ka * kb * t.mult;
        }
      }
    }
  }
  return out;
}

bool has_eagon_northcott_shape(const EquivariantComplex& c) {
  int prev_twist = 0;
  bool first = true;
  for (const auto& [u, terms] : c.terms) {
    if (terms.empty()) continue;
    const int tw = terms.front().twist;
    for (const ComplexTerm& t : terms) {
      if (t.twist != tw) return false;
      const Weight s = t.gl_n.stripped();
      if (s.length() > 1) return false;  // not a symmetric power
    }
    if (!first && tw != prev_twist - 1) return false;
    prev_twist = tw;
    first = false;
  }
  return true;
}

}  // namespace weyres
