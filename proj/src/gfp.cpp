#include "rlie/gfp.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlie::gfp {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_field(int p, const Caps& caps) {
  if (!is_prime(p)) throw ParseError("p = " + std::to_string(p) + " is not prime");
  if (p > caps.max_p)
    throw CapExceeded("p = " + std::to_string(p) + " exceeds the field bound " +
                      std::to_string(caps.max_p));
}

uint8_t fp_inv(int p, uint8_t a) {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return static_cast<uint8_t>(x);
  throw std::invalid_argument("no inverse; p not prime?");
}

Vec vec_add(int p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_add(p, a[i], b[i]);
  return r;
}

Vec vec_scale(int p, uint8_t c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(p, c, a[i]);
  return r;
}

void vec_add_scaled(int p, Vec& acc, uint8_t c, const Vec& a) {
  if (acc.size() != a.size()) throw std::invalid_argument("vector length mismatch");
  for (size_t i = 0; i < a.size(); ++i) acc[i] = fp_add(p, acc[i], fp_mul(p, c, a[i]));
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](uint8_t x) { return x == 0; });
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols_in, int nrows) {
  Mat m(nrows, static_cast<int>(cols_in.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cols_in[j].size()) != nrows)
      throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < nrows; ++i) m.at(i, j) = cols_in[j][i];
  }
  return m;
}

Mat Mat::mul(int p, const Mat& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      uint8_t c = at(i, k);
      if (c == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        r.at(i, j) = fp_add(p, r.at(i, j), fp_mul(p, c, o.at(k, j)));
    }
  return r;
}

Mat Mat::pow(int p, long e) const {
  if (rows != cols) throw std::invalid_argument("pow of non-square matrix");
  Mat r = Mat::identity(rows);
  Mat b = *this;
  while (e > 0) {
    if (e & 1) r = r.mul(p, b);
    b = b.mul(p, b);
    e >>= 1;
  }
  return r;
}

Vec Mat::apply(int p, const Vec& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("matrix/vector mismatch");
  Vec r(rows, 0);
  for (int i = 0; i < rows; ++i) {
    int acc = 0;
    for (int j = 0; j < cols; ++j) acc += at(i, j) * v[j];
    r[i] = static_cast<uint8_t>(acc % p);
  }
  return r;
}

std::string Subspace::key() const {
  std::string k;
  k.reserve(basis.size() * ambient + 8);
  k.push_back(static_cast<char>(ambient & 0xff));
  k.push_back(static_cast<char>((ambient >> 8) & 0xff));
  for (const Vec& row : basis) k.append(row.begin(), row.end());
  return k;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> pv;
  pv.reserve(basis.size());
  for (const Vec& row : basis) {
    int c = 0;
    while (c < ambient && row[c] == 0) ++c;
    pv.push_back(c);
  }
  return pv;
}

Vec Subspace::reduce(int p, Vec v) const {
  if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("ambient mismatch");
  std::vector<int> pv = pivots();
  for (size_t r = 0; r < basis.size(); ++r) {
    uint8_t c = v[pv[r]];
    if (c != 0) vec_add_scaled(p, v, fp_neg(p, c), basis[r]);
  }
  return v;
}

bool Subspace::contains(int p, const Vec& v) const { return is_zero(reduce(p, v)); }

Vec Subspace::coordinates(int p, const Vec& v) const {
  // RREF basis: the coordinate along row r is v at that row's pivot column.
  std::vector<int> pv = pivots();
  Vec c(basis.size());
  for (size_t r = 0; r < basis.size(); ++r) c[r] = v[pv[r]];
  if (!contains(p, v)) throw std::invalid_argument("vector not in subspace");
  return c;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient = ambient;
  for (int i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    s.basis.push_back(std::move(e));
  }
  return s;
}

Subspace rref(int p, const std::vector<Vec>& rows_in, int ambient) {
  std::vector<Vec> rows;
  rows.reserve(rows_in.size());
  for (const Vec& r : rows_in) {
    if (static_cast<int>(r.size()) != ambient)
      throw std::invalid_argument("rref: row length differs from ambient dimension");
    rows.push_back(r);
  }
  int nrows = static_cast<int>(rows.size());
  int lead = 0;
  int rank_sofar = 0;
  for (int col = 0; col < ambient && rank_sofar < nrows; ++col) {
    int piv = -1;
    for (int r = rank_sofar; r < nrows; ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank_sofar], rows[piv]);
    uint8_t inv = fp_inv(p, rows[rank_sofar][col]);
    for (int c = col; c < ambient; ++c)
      rows[rank_sofar][c] = fp_mul(p, inv, rows[rank_sofar][c]);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank_sofar) continue;
      uint8_t f = rows[r][col];
      if (f != 0) vec_add_scaled(p, rows[r], fp_neg(p, f), rows[rank_sofar]);
    }
    ++rank_sofar;
    (void)lead;
  }
  rows.resize(rank_sofar);
  Subspace s;
  s.ambient = ambient;
  s.basis = std::move(rows);
  return s;
}

Subspace sum(int p, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<Vec> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return rref(p, rows, a.ambient);
}

Subspace intersect(int p, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
  const int n = a.ambient;
  // Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
  // intersection in their right half.
  std::vector<Vec> rows;
  for (const Vec& r : a.basis) {
    Vec w(2 * n, 0);
    std::copy(r.begin(), r.end(), w.begin());
    std::copy(r.begin(), r.end(), w.begin() + n);
    rows.push_back(std::move(w));
  }
  for (const Vec& r : b.basis) {
    Vec w(2 * n, 0);
    std::copy(r.begin(), r.end(), w.begin());
    rows.push_back(std::move(w));
  }
  Subspace big = rref(p, rows, 2 * n);
  std::vector<Vec> inter;
  for (const Vec& r : big.basis) {
    bool left_zero = std::all_of(r.begin(), r.begin() + n, [](uint8_t x) { return x == 0; });
    if (left_zero) inter.emplace_back(r.begin() + n, r.end());
  }
  return rref(p, inter, n);
}

Subspace kernel(int p, const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows);
  for (int i = 0; i < m.rows; ++i)
    rows.emplace_back(m.a.begin() + static_cast<size_t>(i) * m.cols,
                      m.a.begin() + static_cast<size_t>(i + 1) * m.cols);
  Subspace r = rref(p, rows, m.cols);
  std::vector<int> pv = r.pivots();
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pv) is_pivot[c] = true;
  std::vector<Vec> null_basis;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols, 0);
    v[free_col] = 1;
    for (size_t rr = 0; rr < r.basis.size(); ++rr)
      v[pv[rr]] = fp_neg(p, r.basis[rr][free_col]);
    null_basis.push_back(std::move(v));
  }
  return rref(p, null_basis, m.cols);
}

Subspace image(int p, const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols);
  for (int j = 0; j < m.cols; ++j) {
    Vec c(m.rows);
    for (int i = 0; i < m.rows; ++i) c[i] = m.at(i, j);
    cols.push_back(std::move(c));
  }
  return rref(p, cols, m.rows);
}

int rank(int p, const Mat& m) { return image(p, m).dim(); }

bool next_tuple(std::vector<uint8_t>& t, int p) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (++t[i] < p) return true;
    t[i] = 0;
  }
  return false;
}

std::vector<Vec> elements(int p, const Subspace& s, long budget) {
  long count = 1;
  for (int i = 0; i < s.dim(); ++i) {
    count *= p;
    if (count > budget)
      throw CapExceeded("subspace element enumeration budget exceeded: p^" +
                        std::to_string(s.dim()) + " > " + std::to_string(budget));
  }
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<uint8_t> t(s.dim(), 0);
  do {
    Vec v(s.ambient, 0);
    for (int r = 0; r < s.dim(); ++r)
      if (t[r] != 0) vec_add_scaled(p, v, t[r], s.basis[r]);
    out.push_back(std::move(v));
  } while (next_tuple(t, p));
  return out;
}

}  // namespace rlie::gfp
