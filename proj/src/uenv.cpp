#include "rlie/uenv.hpp"

#include <algorithm>
#include <cmath>

namespace rlie::uenv {

using gfp::fp_add;
using gfp::fp_mul;
using gfp::fp_neg;
using gfp::is_zero;
using gfp::next_tuple;
using gfp::vec_add_scaled;

namespace {
constexpr long kCacheLimit = 512;  // full product table below this size
}

EnvAlgebra::EnvAlgebra(const rla::LieAlgebra& L, const Caps& caps) : lie_(L) {
  rla::require_valid(lie_);
  dim_env_ = 1;
  for (int i = 0; i < lie_.dim; ++i) {
    dim_env_ *= lie_.p;
    if (dim_env_ > caps.max_env_dim)
      throw CapExceeded("enveloping algebra cap exceeded: p^dim = " + std::to_string(lie_.p) +
                        "^" + std::to_string(lie_.dim) + " > " +
                        std::to_string(caps.max_env_dim));
  }
  gen_index_.resize(lie_.dim);
  for (int i = 0; i < lie_.dim; ++i) {
    std::vector<uint8_t> e(lie_.dim, 0);
    e[i] = 1;
    gen_index_[i] = static_cast<int>(mono_index(e));
  }
  cache_full_ = dim_env_ <= kCacheLimit;
  if (cache_full_) {
    table_.assign(dim_env_, std::vector<SparseElem>(dim_env_));
    for (long i = 0; i < dim_env_; ++i)
      for (long j = 0; j < dim_env_; ++j) table_[i][j] = compute_mono_product(i, j);
  }
}

long EnvAlgebra::mono_index(const std::vector<uint8_t>& exps) const {
  long idx = 0;
  for (int i = 0; i < lie_.dim; ++i) idx = idx * lie_.p + exps[i];
  return idx;
}

std::vector<uint8_t> EnvAlgebra::mono_exps(long idx) const {
  std::vector<uint8_t> exps(lie_.dim, 0);
  for (int i = lie_.dim - 1; i >= 0; --i) {
    exps[i] = static_cast<uint8_t>(idx % lie_.p);
    idx /= lie_.p;
  }
  return exps;
}

Vec EnvAlgebra::straighten(const std::vector<int>& word) const {
  Vec out(dim_env_, 0);
  const int p = lie_.p;
  std::vector<std::pair<uint8_t, std::vector<int>>> work{{1, word}};
  while (!work.empty()) {
    auto [coeff, w] = std::move(work.back());
    work.pop_back();
    if (coeff == 0) continue;
    // Leftmost inversion first.
    size_t inv = w.size();
    for (size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] > w[k + 1]) {
        inv = k;
        break;
      }
    if (inv < w.size()) {
      const int g = w[inv], h = w[inv + 1];
      // x_g x_h = x_h x_g + [x_g, x_h]
      std::vector<int> swapped = w;
      std::swap(swapped[inv], swapped[inv + 1]);
      work.emplace_back(coeff, std::move(swapped));
      const Vec& br = lie_.bracket[g][h];
      for (int m = 0; m < lie_.dim; ++m) {
        if (br[m] == 0) continue;
        std::vector<int> contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + inv);
        contracted.push_back(m);
        contracted.insert(contracted.end(), w.begin() + inv + 2, w.end());
        work.emplace_back(fp_mul(p, coeff, br[m]), std::move(contracted));
      }
      continue;
    }
    // Sorted: collapse the first run of p equal letters via x^p = x^{[p]}.
    size_t run_start = w.size();
    for (size_t k = 0; k + p <= w.size(); ++k) {
      bool run = true;
      for (int d = 1; d < p; ++d)
        if (w[k + d] != w[k]) {
          run = false;
          break;
        }
      if (run) {
        run_start = k;
        break;
      }
    }
    if (run_start < w.size()) {
      const int g = w[run_start];
      const Vec& pw = lie_.pmap[g];
      for (int m = 0; m < lie_.dim; ++m) {
        if (pw[m] == 0) continue;
        std::vector<int> reduced;
        reduced.reserve(w.size() - p + 1);
        reduced.insert(reduced.end(), w.begin(), w.begin() + run_start);
        reduced.push_back(m);
        reduced.insert(reduced.end(), w.begin() + run_start + p, w.end());
        work.emplace_back(fp_mul(p, coeff, pw[m]), std::move(reduced));
      }
      continue;  // pmap[g] = 0 kills the term
    }
    // Normal form: sorted word with all exponents < p.
    std::vector<uint8_t> exps(lie_.dim, 0);
    for (int g : w) ++exps[g];
    long idx = mono_index(exps);
    out[idx] = fp_add(p, out[idx], coeff);
  }
  return out;
}

SparseElem EnvAlgebra::compute_mono_product(long i, long j) const {
  std::vector<uint8_t> ei = mono_exps(i), ej = mono_exps(j);
  std::vector<int> word;
  for (int g = 0; g < lie_.dim; ++g)
    for (int r = 0; r < ei[g]; ++r) word.push_back(g);
  for (int g = 0; g < lie_.dim; ++g)
    for (int r = 0; r < ej[g]; ++r) word.push_back(g);
  Vec dense = straighten(word);
  SparseElem s;
  for (long k = 0; k < dim_env_; ++k)
    if (dense[k] != 0) s.emplace_back(static_cast<int>(k), dense[k]);
  return s;
}

const SparseElem& EnvAlgebra::mono_product(long i, long j) const {
  if (cache_full_) return table_[i][j];
  const long key = i * dim_env_ + j;
  std::lock_guard<std::mutex> lock(spill_mu_);
  auto it = spill_.find(key);
  if (it == spill_.end()) it = spill_.emplace(key, compute_mono_product(i, j)).first;
  return it->second;
}

Vec EnvAlgebra::one() const {
  Vec v(dim_env_, 0);
  v[0] = 1;
  return v;
}

Vec EnvAlgebra::embed_lie(const Vec& x) const {
  Vec v(dim_env_, 0);
  for (int i = 0; i < lie_.dim; ++i) v[gen_index_[i]] = x[i];
  return v;
}

Vec EnvAlgebra::multiply(const Vec& u, const Vec& v) const {
  if (static_cast<long>(u.size()) != dim_env_ || static_cast<long>(v.size()) != dim_env_)
    throw std::invalid_argument("multiply: element has wrong parent dimension");
  Vec out(dim_env_, 0);
  const int p = lie_.p;
  for (long i = 0; i < dim_env_; ++i) {
    if (u[i] == 0) continue;
    for (long j = 0; j < dim_env_; ++j) {
      if (v[j] == 0) continue;
      uint8_t c = fp_mul(p, u[i], v[j]);
      for (const auto& [k, ck] : mono_product(i, j)) out[k] = fp_add(p, out[k], fp_mul(p, c, ck));
    }
  }
  return out;
}

Mat EnvAlgebra::left_mult_matrix(const Vec& u) const {
  Mat m(static_cast<int>(dim_env_), static_cast<int>(dim_env_));
  const int p = lie_.p;
  for (long i = 0; i < dim_env_; ++i) {
    if (u[i] == 0) continue;
    for (long j = 0; j < dim_env_; ++j)
      for (const auto& [k, ck] : mono_product(i, j))
        m.at(k, static_cast<int>(j)) = fp_add(p, m.at(k, static_cast<int>(j)), fp_mul(p, u[i], ck));
  }
  return m;
}

Mat EnvAlgebra::right_mult_matrix(const Vec& u) const {
  Mat m(static_cast<int>(dim_env_), static_cast<int>(dim_env_));
  const int p = lie_.p;
  for (long j = 0; j < dim_env_; ++j) {
    if (u[j] == 0) continue;
    for (long i = 0; i < dim_env_; ++i)
      for (const auto& [k, ck] : mono_product(i, j))
        m.at(k, static_cast<int>(i)) = fp_add(p, m.at(k, static_cast<int>(i)), fp_mul(p, u[j], ck));
  }
  return m;
}

Subspace omega(const EnvAlgebra& A) {
  std::vector<Vec> rows;
  for (long m = 1; m < A.dim_env(); ++m) {
    Vec v(A.dim_env(), 0);
    v[m] = 1;
    rows.push_back(std::move(v));
  }
  return gfp::rref(A.p(), rows, static_cast<int>(A.dim_env()));
}

Subspace omega_power(const EnvAlgebra& A, int n) {
  if (n < 1) throw std::invalid_argument("omega_power: n must be >= 1");
  Subspace w = omega(A);
  Subspace acc = w;
  for (int k = 1; k < n; ++k) {
    if (acc.dim() == 0) break;
    std::vector<Vec> rows;
    rows.reserve(acc.basis.size() * w.basis.size());
    for (const Vec& a : acc.basis)
      for (const Vec& b : w.basis) rows.push_back(A.multiply(a, b));
    Subspace next = gfp::rref(A.p(), rows, static_cast<int>(A.dim_env()));
    if (next == acc) break;  // stabilized
    acc = std::move(next);
  }
  return acc;
}

Subspace intersect_with_lie(const EnvAlgebra& A, const Subspace& S) {
  std::vector<Vec> deg1;
  for (int i = 0; i < A.lie_dim(); ++i) {
    Vec v(A.dim_env(), 0);
    v[A.gen_index(i)] = 1;
    deg1.push_back(std::move(v));
  }
  Subspace lie_span = gfp::rref(A.p(), deg1, static_cast<int>(A.dim_env()));
  Subspace inter = gfp::intersect(A.p(), S, lie_span);
  std::vector<Vec> rows;
  for (const Vec& r : inter.basis) {
    Vec x(A.lie_dim(), 0);
    for (int i = 0; i < A.lie_dim(); ++i) x[i] = r[A.gen_index(i)];
    rows.push_back(std::move(x));
  }
  return gfp::rref(A.p(), rows, A.lie_dim());
}

namespace {

// Joint kernel of multiplication by each of gens, on the given side.
Subspace stacked_annihilator(const EnvAlgebra& A, const std::vector<Vec>& gens, bool left_mult) {
  const int n = static_cast<int>(A.dim_env());
  if (gens.empty()) return Subspace::full(n);
  Mat stacked(static_cast<int>(gens.size()) * n, n);
  int row0 = 0;
  for (const Vec& g : gens) {
    Mat m = left_mult ? A.left_mult_matrix(g) : A.right_mult_matrix(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) stacked.at(row0 + i, j) = m.at(i, j);
    row0 += n;
  }
  return gfp::kernel(A.p(), stacked);
}

}  // namespace

IntegralSpace integrals(const EnvAlgebra& A) {
  // Generators have epsilon = 0 and generate omega, so x_i * t = 0 for all i
  // characterizes left integrals.
  std::vector<Vec> gens;
  for (int i = 0; i < A.lie_dim(); ++i) {
    Vec g(A.dim_env(), 0);
    g[A.gen_index(i)] = 1;
    gens.push_back(std::move(g));
  }
  IntegralSpace s;
  s.left = stacked_annihilator(A, gens, /*left_mult=*/true);
  s.right = stacked_annihilator(A, gens, /*left_mult=*/false);
  if (s.left.dim() != 1 || s.right.dim() != 1)
    throw InternalError("integral space is not 1-dimensional (multiplication bug?)");
  return s;
}

Subspace right_annihilator(const EnvAlgebra& A, const std::vector<Vec>& gens) {
  return stacked_annihilator(A, gens, /*left_mult=*/true);
}

Subspace env_subalgebra_span(const EnvAlgebra& A, const Subspace& H) {
  if (!rla::is_restricted_subalgebra(A.lie(), H))
    throw ValidationError("env_subalgebra_span: H is not a restricted subalgebra");
  std::vector<Vec> hgens;
  for (const Vec& row : H.basis) hgens.push_back(A.embed_lie(row));
  Subspace span = gfp::rref(A.p(), {A.one()}, static_cast<int>(A.dim_env()));
  for (;;) {
    std::vector<Vec> rows = span.basis;
    for (const Vec& u : span.basis)
      for (const Vec& h : hgens) rows.push_back(A.multiply(u, h));
    Subspace next = gfp::rref(A.p(), rows, static_cast<int>(A.dim_env()));
    if (next.dim() == span.dim()) return span;
    span = std::move(next);
  }
}

FreeModuleResult free_module_check(const EnvAlgebra& A, const Subspace& H) {
  Subspace uh = env_subalgebra_span(A, H);
  long expected_uh = 1;
  for (int i = 0; i < H.dim(); ++i) expected_uh *= A.p();
  if (uh.dim() != expected_uh)
    throw InternalError("embedded u(H) has unexpected dimension");

  std::vector<int> pv = H.pivots();
  std::vector<bool> is_piv(A.lie_dim(), false);
  for (int c : pv) is_piv[c] = true;
  std::vector<int> complement;
  for (int i = 0; i < A.lie_dim(); ++i)
    if (!is_piv[i]) complement.push_back(i);

  long rank = 1;
  for (size_t i = 0; i < complement.size(); ++i) rank *= A.p();

  // All PBW monomials w supported on the complement.
  std::vector<Vec> rows;
  std::vector<uint8_t> t(complement.size(), 0);
  do {
    std::vector<uint8_t> exps(A.lie_dim(), 0);
    for (size_t k = 0; k < complement.size(); ++k) exps[complement[k]] = t[k];
    Vec w(A.dim_env(), 0);
    w[A.mono_index(exps)] = 1;
    for (const Vec& u : uh.basis) rows.push_back(A.multiply(u, w));
  } while (next_tuple(t, A.p()));

  Subspace joint = gfp::rref(A.p(), rows, static_cast<int>(A.dim_env()));
  FreeModuleResult r;
  r.free = joint.dim() == A.dim_env();
  r.rank = rank;
  return r;
}

bool is_commutative(const EnvAlgebra& A) {
  for (int i = 0; i < A.lie_dim(); ++i)
    for (int j = i + 1; j < A.lie_dim(); ++j)
      if (!is_zero(A.lie().bracket[i][j])) return false;
  return true;
}

Subspace commutative_radical(const EnvAlgebra& A) {
  if (!is_commutative(A)) throw std::invalid_argument("commutative_radical: non-commutative input");
  const int n = static_cast<int>(A.dim_env());
  // Frobenius v -> v^p is linear here; the nilradical is the stabilized
  // kernel of its iterates.
  std::vector<Vec> cols;
  for (long m = 0; m < n; ++m) {
    Vec b(A.dim_env(), 0);
    b[m] = 1;
    Vec pw = b;
    for (int k = 1; k < A.p(); ++k) pw = A.multiply(pw, b);
    cols.push_back(std::move(pw));
  }
  Mat frob = Mat::from_columns(cols, n);
  int iters = 1;
  long power = A.p();
  while (power < n) {
    power *= A.p();
    ++iters;
  }
  Mat fk = frob.pow(A.p(), iters + 1);
  return gfp::kernel(A.p(), fk);
}

}  // namespace rlie::uenv
