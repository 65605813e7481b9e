#include "rlie/rla.hpp"

#include <algorithm>
#include <unordered_set>

namespace rlie::rla {

using gfp::fp_add;
using gfp::fp_inv;
using gfp::fp_mul;
using gfp::fp_neg;
using gfp::is_zero;
using gfp::next_tuple;
using gfp::vec_add;
using gfp::vec_add_scaled;
using gfp::vec_scale;

LieAlgebra LieAlgebra::make(int p, std::vector<std::string> names,
                            const std::vector<std::vector<Vec>>& upper,
                            std::vector<Vec> pmap) {
  LieAlgebra L;
  L.p = p;
  L.dim = static_cast<int>(names.size());
  L.names = std::move(names);
  L.pmap = std::move(pmap);
  L.bracket.assign(L.dim, std::vector<Vec>(L.dim, Vec(L.dim, 0)));
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      const Vec& v = upper[i][j];
      L.bracket[i][j] = v;
      L.bracket[j][i] = vec_scale(p, fp_neg(p, 1), v);
    }
  return L;
}

Vec LieAlgebra::basis_vec(int i) const {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

Vec LieAlgebra::bracket_of(const Vec& x, const Vec& y) const {
  Vec r(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0 || i == j) continue;
      vec_add_scaled(p, r, fp_mul(p, x[i], y[j]), bracket[i][j]);
    }
  }
  return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = bracket_of(x, basis_vec(j));
    for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!is_zero(bracket[i][j])) return false;
  return true;
}

Mat LieAlgebra::pmap_matrix() const { return Mat::from_columns(pmap, dim); }

ValidationReport validate(const LieAlgebra& L) {
  ValidationReport rep;
  const int n = L.dim;
  if (static_cast<int>(L.names.size()) != n) rep.malformed.push_back("names/dim mismatch");
  if (static_cast<int>(L.bracket.size()) != n)
    rep.malformed.push_back("bracket table has wrong row count");
  else
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(L.bracket[i].size()) != n) {
        rep.malformed.push_back("bracket row " + std::to_string(i) + " has wrong length");
        continue;
      }
      for (int j = 0; j < n; ++j)
        if (static_cast<int>(L.bracket[i][j].size()) != n)
          rep.malformed.push_back("bracket[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] has wrong length");
    }
  if (static_cast<int>(L.pmap.size()) != n)
    rep.malformed.push_back("pmap table has wrong length");
  else
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(L.pmap[i].size()) != n)
        rep.malformed.push_back("pmap[" + std::to_string(i) + "] has wrong length");
  if (!rep.malformed.empty()) {
    rep.ok = false;
    return rep;
  }

  auto name = [&](int i) { return L.names[i]; };
  // Jacobi on basis triples.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec s = L.bracket_of(L.bracket[i][j], L.basis_vec(k));
        s = vec_add(L.p, s, L.bracket_of(L.bracket[j][k], L.basis_vec(i)));
        s = vec_add(L.p, s, L.bracket_of(L.bracket[k][i], L.basis_vec(j)));
        if (!is_zero(s))
          rep.violations.push_back("jacobi(" + name(i) + "," + name(j) + "," + name(k) + ")");
      }
  // ad(e_i^{[p]}) = (ad e_i)^p.
  for (int i = 0; i < n; ++i) {
    Mat lhs = L.ad(L.pmap[i]);
    Mat rhs = L.ad(L.basis_vec(i)).pow(L.p, L.p);
    if (!(lhs == rhs)) rep.violations.push_back("restriction(" + name(i) + ")");
  }
  rep.ok = rep.violations.empty();
  return rep;
}

void require_valid(const LieAlgebra& L) {
  ValidationReport rep = validate(L);
  if (rep.ok) return;
  std::string msg = "invalid restricted Lie algebra:";
  for (const auto& m : rep.malformed) msg += " [" + m + "]";
  for (const auto& v : rep.violations) msg += " [" + v + "]";
  throw ValidationError(msg);
}

namespace {

// Sum of the Jacobson correction terms s_i(x, y): i*s_i is the coefficient
// of t^{i-1} in ad(tx+y)^{p-1}(x).
Vec jacobson_terms(const LieAlgebra& L, const Vec& x, const Vec& y) {
  std::vector<Vec> poly{x};  // vector-valued polynomial in t
  for (int step = 0; step < L.p - 1; ++step) {
    std::vector<Vec> next(poly.size() + 1, L.zero());
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k] = vec_add(L.p, next[k], L.bracket_of(y, poly[k]));
      next[k + 1] = vec_add(L.p, next[k + 1], L.bracket_of(x, poly[k]));
    }
    poly = std::move(next);
  }
  Vec s = L.zero();
  for (int i = 1; i <= L.p - 1; ++i) {
    if (static_cast<size_t>(i - 1) >= poly.size()) break;
    uint8_t inv_i = fp_inv(L.p, static_cast<uint8_t>(i % L.p));
    vec_add_scaled(L.p, s, inv_i, poly[i - 1]);
  }
  return s;
}

}  // namespace

Vec pth_power(const LieAlgebra& L, const Vec& x) {
  Vec acc_sum = L.zero();
  Vec acc_p = L.zero();
  bool first = true;
  for (int i = 0; i < L.dim; ++i) {
    if (x[i] == 0) continue;
    Vec term = vec_scale(L.p, x[i], L.basis_vec(i));
    // (a e_i)^{[p]} = a^p e_i^{[p]} = a e_i^{[p]} over F_p.
    Vec term_p = vec_scale(L.p, x[i], L.pmap[i]);
    if (first) {
      acc_p = term_p;
      first = false;
    } else {
      acc_p = vec_add(L.p, vec_add(L.p, acc_p, term_p), jacobson_terms(L, term, acc_sum));
    }
    acc_sum = vec_add(L.p, acc_sum, term);
  }
  return acc_p;
}

Vec pth_power_iter(const LieAlgebra& L, Vec x, int n) {
  for (int k = 0; k < n; ++k) x = pth_power(L, x);
  return x;
}

bool is_p_nilpotent_element(const LieAlgebra& L, const Vec& x) {
  Vec v = x;
  for (int k = 0; k <= L.dim; ++k) {
    if (is_zero(v)) return true;
    v = pth_power(L, v);
  }
  return is_zero(v);
}

SubalgebraReport restricted_closure(const LieAlgebra& L, const std::vector<Vec>& gens) {
  Subspace s = gfp::rref(L.p, gens, L.dim);
  for (;;) {
    std::vector<Vec> rows = s.basis;
    for (size_t a = 0; a < s.basis.size(); ++a) {
      for (size_t b = a + 1; b < s.basis.size(); ++b)
        rows.push_back(L.bracket_of(s.basis[a], s.basis[b]));
      rows.push_back(pth_power(L, s.basis[a]));
    }
    Subspace next = gfp::rref(L.p, rows, L.dim);
    if (next.dim() == s.dim()) break;
    s = std::move(next);
  }
  SubalgebraReport rep;
  rep.carrier = s;
  rep.is_restricted = true;
  rep.is_ideal = is_restricted_ideal(L, s);
  return rep;
}

bool is_restricted_subalgebra(const LieAlgebra& L, const Subspace& S) {
  for (size_t a = 0; a < S.basis.size(); ++a) {
    if (!S.contains(L.p, pth_power(L, S.basis[a]))) return false;
    for (size_t b = a + 1; b < S.basis.size(); ++b)
      if (!S.contains(L.p, L.bracket_of(S.basis[a], S.basis[b]))) return false;
  }
  return true;
}

bool is_restricted_ideal(const LieAlgebra& L, const Subspace& S, Vec* witness) {
  for (const Vec& row : S.basis) {
    for (int j = 0; j < L.dim; ++j) {
      Vec br = L.bracket_of(row, L.basis_vec(j));
      if (!S.contains(L.p, br)) {
        if (witness) *witness = br;
        return false;
      }
    }
    Vec pw = pth_power(L, row);
    if (!S.contains(L.p, pw)) {
      if (witness) *witness = pw;
      return false;
    }
  }
  return true;
}

Subspace gamma(const LieAlgebra& L, int i) {
  if (i < 1) throw std::invalid_argument("gamma: i must be >= 1");
  Subspace g = Subspace::full(L.dim);
  for (int step = 1; step < i; ++step) {
    std::vector<Vec> rows;
    for (const Vec& a : g.basis)
      for (int j = 0; j < L.dim; ++j) rows.push_back(L.bracket_of(a, L.basis_vec(j)));
    Subspace next = gfp::rref(L.p, rows, L.dim);
    if (next == g) break;  // stabilized
    g = std::move(next);
  }
  return g;
}

Subspace pth_subalgebra(const LieAlgebra& L, const Subspace& S, int n, long budget) {
  if (n == 0) return restricted_closure(L, S.basis).carrier;
  // Is the p-map linear on span(S)? Yes when the span is abelian.
  bool span_abelian = true;
  for (size_t a = 0; a < S.basis.size() && span_abelian; ++a)
    for (size_t b = a + 1; b < S.basis.size(); ++b)
      if (!is_zero(L.bracket_of(S.basis[a], S.basis[b]))) {
        span_abelian = false;
        break;
      }
  std::vector<Vec> images;
  if (span_abelian) {
    for (const Vec& row : S.basis) images.push_back(pth_power_iter(L, row, n));
  } else {
    for (const Vec& v : gfp::elements(L.p, S, budget))
      images.push_back(pth_power_iter(L, v, n));
  }
  return restricted_closure(L, images).carrier;
}

Subspace dn(const LieAlgebra& L, int n, long budget) {
  if (n < 1) throw std::invalid_argument("dn: n must be >= 1");
  if (n == 1) return Subspace::full(L.dim);
  long pj = 1;
  int jmax = 0;
  while (pj <= static_cast<long>(L.p) * n) {
    pj *= L.p;
    ++jmax;
  }
  Subspace acc = Subspace::zero(L.dim);
  for (int i = 1; i <= L.dim + 1; ++i) {
    Subspace gi = gamma(L, i);
    if (gi.dim() == 0) break;
    long pw = 1;
    for (int j = 0; j <= jmax; ++j) {
      // gamma stabilizes at i = dim+1; that term stands in for all larger i,
      // for which i*p^j >= n always holds.
      bool include = (static_cast<long>(i) * pw >= n) || (i == L.dim + 1);
      if (include) acc = gfp::sum(L.p, acc, pth_subalgebra(L, gi, j, budget));
      pw *= L.p;
    }
  }
  return acc;
}

Subspace center(const LieAlgebra& L) {
  if (L.dim == 0) return Subspace::zero(0);
  // Stack the maps x -> [x, e_j] over all j; center is the joint kernel.
  Mat m(L.dim * L.dim, L.dim);
  for (int j = 0; j < L.dim; ++j)
    for (int i = 0; i < L.dim; ++i) {
      const Vec& col = L.bracket[i][j];  // [e_i, e_j]
      for (int r = 0; r < L.dim; ++r) m.at(j * L.dim + r, i) = col[r];
    }
  return gfp::kernel(L.p, m);
}

Subspace centralizer(const LieAlgebra& L, const Vec& x) {
  if (L.dim == 0) return Subspace::zero(0);
  Mat m(L.dim, L.dim);
  for (int i = 0; i < L.dim; ++i) {
    Vec col = L.bracket_of(L.basis_vec(i), x);
    for (int r = 0; r < L.dim; ++r) m.at(r, i) = col[r];
  }
  return gfp::kernel(L.p, m);
}

Subspace derived(const LieAlgebra& L) { return gamma(L, 2); }

Subspace frattini(const LieAlgebra& L) { return dn(L, 2); }

Fitting fitting(const LieAlgebra& L) {
  if (!L.is_abelian())
    throw ValidationError("fitting: non-abelian input (p-map is not linear)");
  Mat pk = L.pmap_matrix().pow(L.p, std::max(1, L.dim));
  Fitting f;
  f.torus_part = gfp::image(L.p, pk);
  f.nil_part = gfp::kernel(L.p, pk);
  return f;
}

bool is_torus(const LieAlgebra& L) {
  if (L.dim == 0) return true;
  if (!L.is_abelian()) return false;
  return gfp::rank(L.p, L.pmap_matrix()) == L.dim;
}

bool is_torus(const LieAlgebra& L, const Subspace& S) {
  // Abelian?
  for (size_t a = 0; a < S.basis.size(); ++a)
    for (size_t b = a + 1; b < S.basis.size(); ++b)
      if (!is_zero(L.bracket_of(S.basis[a], S.basis[b]))) return false;
  // p-map stays in S and is bijective there.
  std::vector<Vec> image_rows;
  for (const Vec& row : S.basis) {
    Vec pw = pth_power(L, row);
    if (!S.contains(L.p, pw)) return false;
    image_rows.push_back(std::move(pw));
  }
  return gfp::rref(L.p, image_rows, S.ambient).dim() == S.dim();
}

int min_poly_degree(int p, const Mat& m) {
  if (m.rows == 0) return 0;
  const int n = m.rows;
  // Smallest d with I, M, ..., M^d dependent, via flattened powers.
  std::vector<Vec> flat;
  Mat power = Mat::identity(n);
  for (int d = 0;; ++d) {
    Vec v(power.a.begin(), power.a.end());
    flat.push_back(std::move(v));
    Subspace span = gfp::rref(p, flat, n * n);
    if (span.dim() < static_cast<int>(flat.size())) return d;
    power = power.mul(p, m);
  }
}

namespace {

long pow_checked(int p, int e, long budget) {
  long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= p;
    if (r > budget)
      throw CapExceeded("element scan budget exceeded: p^" + std::to_string(e) + " > " +
                        std::to_string(budget));
  }
  return r;
}

// Krylov span of x under m.
int krylov_dim(int p, const Mat& m, const Vec& x) {
  std::vector<Vec> rows;
  Vec v = x;
  for (int k = 0; k <= m.rows; ++k) {
    rows.push_back(v);
    v = m.apply(p, v);
  }
  return gfp::rref(p, rows, m.rows).dim();
}

}  // namespace

CyclicResult is_cyclic(const LieAlgebra& L, long budget) {
  if (L.dim == 0) return CyclicResult{true, L.zero()};
  if (L.is_abelian()) {
    Mat P = L.pmap_matrix();
    if (min_poly_degree(L.p, P) != L.dim) return CyclicResult{false, std::nullopt};
    pow_checked(L.p, L.dim, budget);
    std::vector<uint8_t> t(L.dim, 0);
    while (next_tuple(t, L.p)) {
      Vec x(t.begin(), t.end());
      if (krylov_dim(L.p, P, x) == L.dim) return CyclicResult{true, x};
    }
    throw InternalError("cyclic p-map without a cyclic vector");
  }
  pow_checked(L.p, L.dim, budget);
  std::vector<uint8_t> t(L.dim, 0);
  while (next_tuple(t, L.p)) {
    Vec x(t.begin(), t.end());
    if (restricted_closure(L, {x}).carrier.dim() == L.dim) return CyclicResult{true, x};
  }
  return CyclicResult{false, std::nullopt};
}

CyclicResult is_nilcyclic(const LieAlgebra& L, long budget) {
  if (L.dim == 0) return CyclicResult{true, L.zero()};
  if (L.is_abelian()) {
    Mat P = L.pmap_matrix();
    Mat pk = P.pow(L.p, L.dim);
    bool nilpotent = std::all_of(pk.a.begin(), pk.a.end(), [](uint8_t x) { return x == 0; });
    if (!nilpotent) return CyclicResult{false, std::nullopt};
    return is_cyclic(L, budget);
  }
  pow_checked(L.p, L.dim, budget);
  std::vector<uint8_t> t(L.dim, 0);
  while (next_tuple(t, L.p)) {
    Vec x(t.begin(), t.end());
    if (is_p_nilpotent_element(L, x) && restricted_closure(L, {x}).carrier.dim() == L.dim)
      return CyclicResult{true, x};
  }
  return CyclicResult{false, std::nullopt};
}

Quotient quotient(const LieAlgebra& L, const Subspace& ideal) {
  Vec witness;
  if (!is_restricted_ideal(L, ideal, &witness))
    throw ValidationError("quotient: not a restricted ideal");
  Quotient q;
  q.ideal = ideal;
  std::vector<int> pv = ideal.pivots();
  std::vector<bool> is_piv(L.dim, false);
  for (int c : pv) is_piv[c] = true;
  for (int i = 0; i < L.dim; ++i)
    if (!is_piv[i]) q.complement.push_back(i);

  const int qd = static_cast<int>(q.complement.size());
  auto project = [&](const Vec& v) {
    Vec r = ideal.reduce(L.p, v);
    Vec out(qd);
    for (int a = 0; a < qd; ++a) out[a] = r[q.complement[a]];
    return out;
  };

  std::vector<std::string> names;
  for (int c : q.complement) names.push_back(L.names[c]);
  std::vector<std::vector<Vec>> upper(qd, std::vector<Vec>(qd, Vec(qd, 0)));
  std::vector<Vec> pm(qd);
  for (int a = 0; a < qd; ++a) {
    for (int b = a + 1; b < qd; ++b)
      upper[a][b] = project(L.bracket[q.complement[a]][q.complement[b]]);
    pm[a] = project(pth_power(L, L.basis_vec(q.complement[a])));
  }
  q.alg = LieAlgebra::make(L.p, std::move(names), upper, std::move(pm));
  require_valid(q.alg);
  return q;
}

Vec Quotient::project(const LieAlgebra& parent, const Vec& v) const {
  Vec r = ideal.reduce(parent.p, v);
  Vec out(complement.size());
  for (size_t a = 0; a < complement.size(); ++a) out[a] = r[complement[a]];
  return out;
}

Vec Quotient::lift(const Vec& v) const {
  Vec out(ideal.ambient, 0);
  for (size_t a = 0; a < complement.size(); ++a) out[complement[a]] = v[a];
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.p != b.p) throw std::invalid_argument("direct_sum: different fields");
  const int n = a.dim + b.dim;
  std::vector<std::string> names = a.names;
  for (const std::string& nm : b.names) names.push_back(nm);
  auto embed_a = [&](const Vec& v) {
    Vec w(n, 0);
    std::copy(v.begin(), v.end(), w.begin());
    return w;
  };
  auto embed_b = [&](const Vec& v) {
    Vec w(n, 0);
    std::copy(v.begin(), v.end(), w.begin() + a.dim);
    return w;
  };
  std::vector<std::vector<Vec>> upper(n, std::vector<Vec>(n, Vec(n, 0)));
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) upper[i][j] = embed_a(a.bracket[i][j]);
  for (int i = 0; i < b.dim; ++i)
    for (int j = i + 1; j < b.dim; ++j)
      upper[a.dim + i][a.dim + j] = embed_b(b.bracket[i][j]);
  std::vector<Vec> pm(n);
  for (int i = 0; i < a.dim; ++i) pm[i] = embed_a(a.pmap[i]);
  for (int i = 0; i < b.dim; ++i) pm[a.dim + i] = embed_b(b.pmap[i]);
  LieAlgebra s = LieAlgebra::make(a.p, std::move(names), upper, std::move(pm));
  require_valid(s);
  return s;
}

std::vector<Subspace> all_subspaces(int p, int dim, long budget) {
  pow_checked(p, dim * dim, budget);
  std::vector<Subspace> out;
  std::unordered_set<std::string> seen;
  std::vector<uint8_t> t(static_cast<size_t>(dim) * dim, 0);
  do {
    std::vector<Vec> rows;
    for (int r = 0; r < dim; ++r)
      rows.emplace_back(t.begin() + static_cast<size_t>(r) * dim,
                        t.begin() + static_cast<size_t>(r + 1) * dim);
    Subspace s = gfp::rref(p, rows, dim);
    if (seen.insert(s.key()).second) out.push_back(std::move(s));
  } while (next_tuple(t, p));
  std::sort(out.begin(), out.end(),
            [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });
  return out;
}

std::vector<Subspace> all_restricted_subalgebras(const LieAlgebra& L, long budget) {
  std::vector<Subspace> out;
  for (Subspace& s : all_subspaces(L.p, L.dim, budget))
    if (is_restricted_subalgebra(L, s)) out.push_back(std::move(s));
  return out;
}

}  // namespace rlie::rla
