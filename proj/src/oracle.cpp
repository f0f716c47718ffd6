#include "weyres/oracle.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <thread>

#include "weyres/linalg.hpp"

namespace weyres {

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::map<std::pair<int, int>, std::vector<Monomial>> mono_cache;  // NOLINT
std::shared_mutex mono_cache_mutex;                               // NOLINT

void enumerate_monomials(int vars, int degree, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (vars == 0) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  if (vars == 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    cur.push_back(e);
    enumerate_monomials(vars - 1, degree - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mono_mul: variable count mismatch");
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

long long monomial_count(int vars, int degree) {
  if (degree < 0) return 0;
  if (vars == 0) return degree == 0 ? 1 : 0;
  return binomial(degree + vars - 1, vars - 1);
}

const std::vector<Monomial>& monomials_of_degree(int vars, int degree) {
  const std::pair<int, int> key{vars, degree};
  {
    std::shared_lock lock(mono_cache_mutex);
    auto it = mono_cache.find(key);
    if (it != mono_cache.end()) return it->second;
  }
  std::vector<Monomial> out;
  Monomial cur;
  enumerate_monomials(vars, degree, cur, out);
  std::unique_lock lock(mono_cache_mutex);
  return mono_cache.emplace(key, std::move(out)).first->second;
}

long long monomial_index(const Monomial& mono) {
  // Rank within the enumeration of its (vars, degree) class: exponents of
  // earlier variables increase outermost.
  int d = std::accumulate(mono.begin(), mono.end(), 0);
  long long rank = 0;
  const int v = static_cast<int>(mono.size());
  for (int i = 0; i < v; ++i) {
    for (int x = 0; x < mono[static_cast<std::size_t>(i)]; ++x)
      rank += monomial_count(v - i - 1, d - x);
    d -= mono[static_cast<std::size_t>(i)];
  }
  return rank;
}

int Polynomial::degree() const {
  if (terms.empty()) return -1;
  int deg = -1;
  for (const auto& [mono, coef] : terms) {
    const int d = std::accumulate(mono.begin(), mono.end(), 0);
    if (deg == -1) deg = d;
    if (d != deg) throw std::logic_error("Polynomial::degree: inhomogeneous");
  }
  return deg;
}

Polynomial poly_variable(int vars, int index) {
  Monomial mono(static_cast<std::size_t>(vars), 0);
  mono[static_cast<std::size_t>(index)] = 1;
  return Polynomial{{{mono, 1}}};
}

Polynomial poly_scale(const Polynomial& p, long long c) {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mono, coef] : p.terms) out.terms[mono] = coef * c;
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [mono, coef] : b.terms) {
    auto [it, inserted] = out.terms.emplace(mono, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      const Monomial m = mono_mul(ma, mb);
      auto [it, inserted] = out.terms.emplace(m, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

long long poly_eval(const Polynomial& p, const std::vector<long long>& x) {
  long long total = 0;
  for (const auto& [mono, coef] : p.terms) {
    long long v = coef;
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (int e = 0; e < mono[i]; ++e) v *= x[i];
    total += v;
  }
  return total;
}

void FieldSpec::validate() const {
  if (exact) return;
  if (prime <= (1LL << 30))
    throw std::invalid_argument("FieldSpec: modular prime must exceed 2^30");
  if (!is_prime(prime))
    throw std::invalid_argument("FieldSpec: modulus is not prime");
}

const Polynomial* GradedPresentation::entry(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? nullptr : &it->second;
}

void GradedPresentation::validate() const {
  for (const auto& [key, poly] : entries) {
    const auto& [i, j] = key;
    if (i < 0 || i >= target_rank() || j < 0 || j >= source_rank())
      throw std::logic_error("GradedPresentation: entry out of bounds");
    if (poly.zero()) continue;
    const int want = source_degrees[static_cast<std::size_t>(j)] -
                     target_degrees[static_cast<std::size_t>(i)];
    if (poly.degree() != want)
      throw std::logic_error("GradedPresentation: inhomogeneous entry");
  }
}

GradedPresentation tautological_matrix(int m, int n) {
  GradedPresentation p;
  p.ring = GradedRing{m * n};
  p.target_degrees.assign(static_cast<std::size_t>(m), 0);
  p.source_degrees.assign(static_cast<std::size_t>(n), 1);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i)
      p.entries[{k, i}] = poly_variable(m * n, k * n + i);
  return p;
}

GradedPresentation presentation_coker(int m, int n) {
  return tautological_matrix(m, n);
}

GradedPresentation presentation_K(int m, int n) {
  GradedPresentation p;
  p.ring = GradedRing{m * n};
  p.target_degrees.assign(static_cast<std::size_t>(n), 0);
  p.source_degrees.assign(static_cast<std::size_t>(m), 1);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k)
      p.entries[{i, k}] = poly_variable(m * n, k * n + i);
  return p;
}

GradedPresentation presentation_free(const GradedRing& ring, int rank,
                                     int degree) {
  GradedPresentation p;
  p.ring = ring;
  p.target_degrees.assign(static_cast<std::size_t>(rank), degree);
  return p;
}

GradedPresentation presentation_sym(const GradedPresentation& p, int k) {
  if (k < 1) throw std::invalid_argument("presentation_sym: k >= 1 required");
  if (k == 1) return p;
  const int t = p.target_rank();
  // Multisets of target slots encoded as exponent vectors over t "letters".
  const auto& target_basis = monomials_of_degree(t, k);
  const auto& source_basis = monomials_of_degree(t, k - 1);
  GradedPresentation out;
  out.ring = p.ring;
  auto multiset_degree = [&](const Monomial& ms) {
    int d = 0;
    for (int i = 0; i < t; ++i)
      d += ms[static_cast<std::size_t>(i)] *
           p.target_degrees[static_cast<std::size_t>(i)];
    return d;
  };
  for (const auto& ms : target_basis)
    out.target_degrees.push_back(multiset_degree(ms));
  int col = 0;
  for (const auto& ms : source_basis) {
    const int base = multiset_degree(ms);
    for (int j = 0; j < p.source_rank(); ++j, ++col) {
      out.source_degrees.push_back(
          base + p.source_degrees[static_cast<std::size_t>(j)]);
      for (int i = 0; i < t; ++i) {
        const Polynomial* e = p.entry(i, j);
        if (!e) continue;
        Monomial bumped = ms;
        bumped[static_cast<std::size_t>(i)] += 1;
        const int row = static_cast<int>(monomial_index(bumped));
        auto& slot = out.entries[{row, col}];
        slot = poly_add(slot, *e);
      }
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

GradedPresentation presentation_ext(const GradedPresentation& p, int k) {
  if (k < 1) throw std::invalid_argument("presentation_ext: k >= 1 required");
  if (k == 1) return p;
  const int t = p.target_rank();
  const auto target_basis = subsets_of(t, k);
  const auto source_basis = subsets_of(t, k - 1);
  std::map<std::vector<int>, int> target_index;
  for (std::size_t i = 0; i < target_basis.size(); ++i)
    target_index[target_basis[i]] = static_cast<int>(i);

  GradedPresentation out;
  out.ring = p.ring;
  auto subset_degree = [&](const std::vector<int>& s) {
    int d = 0;
    for (int i : s) d += p.target_degrees[static_cast<std::size_t>(i)];
    return d;
  };
  for (const auto& s : target_basis) out.target_degrees.push_back(subset_degree(s));
  int col = 0;
  for (const auto& s : source_basis) {
    const int base = subset_degree(s);
    for (int j = 0; j < p.source_rank(); ++j, ++col) {
      out.source_degrees.push_back(
          base + p.source_degrees[static_cast<std::size_t>(j)]);
      for (int i = 0; i < t; ++i) {
        if (std::find(s.begin(), s.end(), i) != s.end()) continue;
        const Polynomial* e = p.entry(i, j);
        if (!e) continue;
        std::vector<int> merged = s;
        merged.push_back(i);
        std::sort(merged.begin(), merged.end());
        // e_s ^ e_i, sign from moving i past the larger elements of s.
        const long long bigger = static_cast<long long>(
            std::count_if(s.begin(), s.end(), [&](int x) { return x > i; }));
        const long long sign = bigger % 2 == 0 ? 1 : -1;
        const int row = target_index.at(merged);
        auto& slot = out.entries[{row, col}];
        slot = poly_add(slot, poly_scale(*e, sign));
      }
    }
  }
  return out;
}

GradedPresentation presentation_tensor(const GradedPresentation& p,
                                       const GradedPresentation& q) {
  if (!(p.ring == q.ring))
    throw std::invalid_argument("presentation_tensor: ring mismatch");
  GradedPresentation out;
  out.ring = p.ring;
  const int tp = p.target_rank(), tq = q.target_rank();
  for (int i = 0; i < tp; ++i)
    for (int k = 0; k < tq; ++k)
      out.target_degrees.push_back(
          p.target_degrees[static_cast<std::size_t>(i)] +
          q.target_degrees[static_cast<std::size_t>(k)]);
  int col = 0;
  // Source block M_P (x) N_Q.
  for (int j = 0; j < p.source_rank(); ++j)
    for (int k = 0; k < tq; ++k, ++col) {
      out.source_degrees.push_back(
          p.source_degrees[static_cast<std::size_t>(j)] +
          q.target_degrees[static_cast<std::size_t>(k)]);
      for (int i = 0; i < tp; ++i)
        if (const Polynomial* e = p.entry(i, j))
          out.entries[{i * tq + k, col}] = *e;
    }
  // Source block N_P (x) M_Q.
  for (int i = 0; i < tp; ++i)
    for (int j = 0; j < q.source_rank(); ++j, ++col) {
      out.source_degrees.push_back(
          p.target_degrees[static_cast<std::size_t>(i)] +
          q.source_degrees[static_cast<std::size_t>(j)]);
      for (int k = 0; k < tq; ++k)
        if (const Polynomial* e = q.entry(k, j))
          out.entries[{i * tq + k, col}] = *e;
    }
  return out;
}

GradedPresentation presentation_sym_k_ext_coker(int m, int n, int j) {
  const int r = n - 1;
  const int c = m - r;
  if (n < 2 || m < n || j < 0 || j > c)
    throw std::invalid_argument("presentation_sym_k_ext_coker: bad parameters");
  const GradedRing ring{m * n};
  const GradedPresentation sym_part =
      c - j == 0 ? presentation_free(ring)
                 : presentation_sym(presentation_K(m, n), c - j);
  const GradedPresentation ext_part =
      j == 0 ? presentation_free(ring)
             : presentation_ext(presentation_coker(m, n), j);
  return presentation_tensor(sym_part, ext_part);
}

namespace {

template <class F>
long long degree_block_rank(const GradedPresentation& p, int d, const F& field) {
  const int v = p.ring.num_vars;
  std::vector<long long> row_offset(static_cast<std::size_t>(p.target_rank()) + 1, 0);
  for (int i = 0; i < p.target_rank(); ++i)
    row_offset[static_cast<std::size_t>(i) + 1] =
        row_offset[static_cast<std::size_t>(i)] +
        monomial_count(v, d - p.target_degrees[static_cast<std::size_t>(i)]);
  const long long nrows = row_offset.back();

  long long ncols = 0;
  for (int j = 0; j < p.source_rank(); ++j)
    ncols += monomial_count(v, d - p.source_degrees[static_cast<std::size_t>(j)]);
  if (nrows == 0 || ncols == 0) return 0;

  SparseMatrix<F> mat(field, static_cast<int>(nrows), static_cast<int>(ncols));
  int col = 0;
  for (int j = 0; j < p.source_rank(); ++j) {
    const int dd = d - p.source_degrees[static_cast<std::size_t>(j)];
    if (dd < 0) continue;
    for (const Monomial& ms : monomials_of_degree(v, dd)) {
      for (int i = 0; i < p.target_rank(); ++i) {
        const Polynomial* e = p.entry(i, j);
        if (!e) continue;
        for (const auto& [mono, coef] : e->terms) {
          const long long row = row_offset[static_cast<std::size_t>(i)] +
                                monomial_index(mono_mul(ms, mono));
          mat.add_entry(static_cast<int>(row), col, coef);
        }
      }
      ++col;
    }
  }
  return std::move(mat).rank();
}

long long target_dimension(const GradedPresentation& p, int d) {
  long long total = 0;
  for (int i = 0; i < p.target_rank(); ++i)
    total += monomial_count(p.ring.num_vars,
                            d - p.target_degrees[static_cast<std::size_t>(i)]);
  return total;
}

long long block_rank_dispatch(const GradedPresentation& p, int d,
                              const FieldSpec& field) {
  if (field.exact) return degree_block_rank(p, d, RationalField{});
  return degree_block_rank(p, d, ModField{field.prime});
}

void prebuild_monomial_caches(const GradedPresentation& p, int d_max) {
  for (int d = 0; d <= d_max; ++d) monomials_of_degree(p.ring.num_vars, d);
}

}  // namespace

std::vector<long long> hilbert_function(const GradedPresentation& p, int d_max,
                                        const FieldSpec& field, int threads) {
  if (d_max < 0) throw std::invalid_argument("hilbert_function: d_max < 0");
  field.validate();
  p.validate();
  prebuild_monomial_caches(p, d_max);
  std::vector<long long> h(static_cast<std::size_t>(d_max) + 1, 0);
  if (threads == 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1) {
    for (int d = 0; d <= d_max; ++d)
      h[static_cast<std::size_t>(d)] =
          target_dimension(p, d) - block_rank_dispatch(p, d, field);
    return h;
  }
  std::vector<std::future<long long>> futures;
  futures.reserve(static_cast<std::size_t>(d_max) + 1);
  for (int d = 0; d <= d_max; ++d)
    futures.push_back(std::async(std::launch::async, [&p, d, &field] {
      return target_dimension(p, d) - block_rank_dispatch(p, d, field);
    }));
  for (int d = 0; d <= d_max; ++d)
    h[static_cast<std::size_t>(d)] = futures[static_cast<std::size_t>(d)].get();
  return h;
}

long long int_matrix_rank(const IntMatrix& m, const FieldSpec& field) {
  if (field.exact) return dense_rank(RationalField{}, m);
  return dense_rank(ModField{field.prime}, m);
}

long long fiber_dim(const GradedPresentation& p, const IntMatrix& f,
                    const FieldSpec& field) {
  std::vector<long long> x;
  x.reserve(f.size() * (f.empty() ? 0 : f[0].size()));
  for (const auto& row : f)
    for (long long v : row) x.push_back(v);
  if (static_cast<int>(x.size()) != p.ring.num_vars)
    throw std::invalid_argument("fiber_dim: point has wrong shape");
  IntMatrix evaluated(static_cast<std::size_t>(p.target_rank()),
                      std::vector<long long>(
                          static_cast<std::size_t>(p.source_rank()), 0));
  for (const auto& [key, poly] : p.entries)
    evaluated[static_cast<std::size_t>(key.first)]
             [static_cast<std::size_t>(key.second)] = poly_eval(poly, x);
  if (p.source_rank() == 0) return p.target_rank();
  return p.target_rank() - int_matrix_rank(evaluated, field);
}

IntMatrix random_corank_one_matrix(int m, int n, std::mt19937_64& rng) {
  const FieldSpec field{};
  auto small = [&rng]() {
    return static_cast<long long>(rng() % 7) - 3;  // [-3, 3]
  };
  while (true) {
    IntMatrix a(static_cast<std::size_t>(m),
                std::vector<long long>(static_cast<std::size_t>(n - 1)));
    IntMatrix b(static_cast<std::size_t>(n - 1),
                std::vector<long long>(static_cast<std::size_t>(n)));
    for (auto& row : a)
      for (auto& v : row) v = small();
    for (auto& row : b)
      for (auto& v : row) v = small();
    IntMatrix f(static_cast<std::size_t>(m),
                std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < n; ++i)
        for (int z = 0; z < n - 1; ++z)
          f[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] +=
              a[static_cast<std::size_t>(k)][static_cast<std::size_t>(z)] *
              b[static_cast<std::size_t>(z)][static_cast<std::size_t>(i)];
    // Entries are tiny relative to the modulus, so the modular rank is the
    // rational rank here.
    if (int_matrix_rank(f, field) == n - 1) return f;
  }
}

FiberCheckJ1 fiber_check_j1(int m, int n, const IntMatrix& f,
                            const FieldSpec& field) {
  field.validate();
  const long long rank_f = int_matrix_rank(f, field);
  if (rank_f != n - 1)
    throw std::invalid_argument("fiber_check_j1: rank(f) != n - 1");
  const int sym_deg = m - n;
  const auto& dom = monomials_of_degree(n, sym_deg);
  const long long ncols_a = static_cast<long long>(dom.size()) * n;

  // Traceless endomorphism basis of C^m: off-diagonal units, then
  // consecutive diagonal differences.
  std::vector<IntMatrix> sl_basis;
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      if (k != l) {
        IntMatrix g(static_cast<std::size_t>(m),
                    std::vector<long long>(static_cast<std::size_t>(m), 0));
        g[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = 1;
        sl_basis.push_back(std::move(g));
      }
  for (int k = 0; k + 1 < m; ++k) {
    IntMatrix g(static_cast<std::size_t>(m),
                std::vector<long long>(static_cast<std::size_t>(m), 0));
    g[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
    g[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(k) + 1] = -1;
    sl_basis.push_back(std::move(g));
  }

  static const std::vector<Monomial> kEmpty{};
  const std::vector<Monomial>& prev =
      sym_deg >= 1 ? monomials_of_degree(n, sym_deg - 1) : kEmpty;

  const long long nrows = static_cast<long long>(m) * static_cast<long long>(dom.size());
  const long long ncols = ncols_a + static_cast<long long>(prev.size()) *
                                        static_cast<long long>(sl_basis.size());
  IntMatrix mat(static_cast<std::size_t>(nrows),
                std::vector<long long>(static_cast<std::size_t>(ncols), 0));
  auto row_of = [&](std::size_t mono_idx, int w) {
    return static_cast<std::size_t>(w) * dom.size() + mono_idx;
  };
  // a-part: column (beta, i) hits rows (beta, w) with f[w][i].
  long long col = 0;
  for (std::size_t bi = 0; bi < dom.size(); ++bi)
    for (int i = 0; i < n; ++i, ++col)
      for (int w = 0; w < m; ++w)
        mat[row_of(bi, w)][static_cast<std::size_t>(col)] =
            f[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)];
  // b-part: column (gamma, g) hits rows (gamma + e_t, w) with (g f e_t)_w.
  for (const Monomial& gamma : prev) {
    for (const IntMatrix& g : sl_basis) {
      for (int t = 0; t < n; ++t) {
        Monomial bumped = gamma;
        bumped[static_cast<std::size_t>(t)] += 1;
        const std::size_t ai = static_cast<std::size_t>(monomial_index(bumped));
        for (int w = 0; w < m; ++w) {
          long long val = 0;
          for (int z = 0; z < m; ++z)
            val += g[static_cast<std::size_t>(w)][static_cast<std::size_t>(z)] *
                   f[static_cast<std::size_t>(z)][static_cast<std::size_t>(t)];
          mat[row_of(ai, w)][static_cast<std::size_t>(col)] += val;
        }
      }
      ++col;
    }
  }
  FiberCheckJ1 out;
  out.coker_dim = nrows - int_matrix_rank(mat, field);
  // ker(f) is one-dimensional, so Sym^{m-n} ker(f) is too; coker(f) has
  // dimension m - rank(f).
  out.hom_dim = m - rank_f;
  return out;
}

std::vector<Polynomial> maximal_minors(int m, int n) {
  std::vector<Polynomial> out;
  const int vars = m * n;
  std::vector<int> rows;
  auto det_of = [&](const std::vector<int>& row_set) {
    Polynomial det;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sign = 1;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) sign = -sign;
      Monomial mono(static_cast<std::size_t>(vars), 0);
      for (int z = 0; z < n; ++z)
        mono[static_cast<std::size_t>(
            row_set[static_cast<std::size_t>(z)] * n +
            perm[static_cast<std::size_t>(z)])] += 1;
      det = poly_add(det, Polynomial{{{mono, sign}}});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
  };
  for (const auto& row_set : subsets_of(m, n)) out.push_back(det_of(row_set));
  return out;
}

namespace {

template <class F>
std::optional<int> multiplication_witness_impl(const GradedPresentation& p,
                                               const Polynomial& g, int d_max,
                                               const F& field) {
  const int gdeg = g.degree();
  if (gdeg < 0) return std::nullopt;  // zero multiplies into anything
  const int v = p.ring.num_vars;
  for (int d = 0; d <= d_max; ++d) {
    const int target_deg = d + gdeg;
    std::vector<long long> row_offset(
        static_cast<std::size_t>(p.target_rank()) + 1, 0);
    for (int i = 0; i < p.target_rank(); ++i)
      row_offset[static_cast<std::size_t>(i) + 1] =
          row_offset[static_cast<std::size_t>(i)] +
          monomial_count(v, target_deg -
                                p.target_degrees[static_cast<std::size_t>(i)]);
    const long long nrows = row_offset.back();

    auto build_image_columns = [&](SparseMatrix<F>& mat, int& col) {
      for (int j = 0; j < p.source_rank(); ++j) {
        const int dd = target_deg - p.source_degrees[static_cast<std::size_t>(j)];
        if (dd < 0) continue;
        for (const Monomial& ms : monomials_of_degree(v, dd)) {
          for (int i = 0; i < p.target_rank(); ++i) {
            const Polynomial* e = p.entry(i, j);
            if (!e) continue;
            for (const auto& [mono, coef] : e->terms)
              mat.add_entry(
                  static_cast<int>(row_offset[static_cast<std::size_t>(i)] +
                                   monomial_index(mono_mul(ms, mono))),
                  col, coef);
          }
          ++col;
        }
      }
    };

    long long image_cols = 0;
    for (int j = 0; j < p.source_rank(); ++j)
      image_cols += monomial_count(
          v, target_deg - p.source_degrees[static_cast<std::size_t>(j)]);
    long long extra_cols = 0;
    for (int i = 0; i < p.target_rank(); ++i)
      extra_cols +=
          monomial_count(v, d - p.target_degrees[static_cast<std::size_t>(i)]);
    if (extra_cols == 0) continue;

    SparseMatrix<F> image(field, static_cast<int>(nrows),
                          static_cast<int>(image_cols));
    int col = 0;
    build_image_columns(image, col);
    const int image_rank = std::move(image).rank();

    SparseMatrix<F> augmented(field, static_cast<int>(nrows),
                              static_cast<int>(image_cols + extra_cols));
    col = 0;
    build_image_columns(augmented, col);
    for (int i = 0; i < p.target_rank(); ++i) {
      const int dd = d - p.target_degrees[static_cast<std::size_t>(i)];
      if (dd < 0) continue;
      for (const Monomial& ms : monomials_of_degree(v, dd)) {
        for (const auto& [mono, coef] : g.terms)
          augmented.add_entry(
              static_cast<int>(row_offset[static_cast<std::size_t>(i)] +
                               monomial_index(mono_mul(ms, mono))),
              col, coef);
        ++col;
      }
    }
    if (std::move(augmented).rank() != image_rank) return d;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> multiplication_witness(const GradedPresentation& p,
                                          const Polynomial& g, int d_max,
                                          const FieldSpec& field) {
  field.validate();
  if (field.exact) return multiplication_witness_impl(p, g, d_max, RationalField{});
  return multiplication_witness_impl(p, g, d_max, ModField{field.prime});
}

bool annihilator_check(int m, int n, int j, int d_max, const FieldSpec& field) {
  const GradedPresentation p = presentation_sym_k_ext_coker(m, n, j);
  for (const Polynomial& minor : maximal_minors(m, n))
    if (multiplication_witness(p, minor, d_max, field)) return false;
  return true;
}

}  // namespace weyres
