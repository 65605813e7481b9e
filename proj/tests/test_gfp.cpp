#include <doctest.h>

#include <random>
#include <set>

#include "rlie/gfp.hpp"

using namespace rlie;
using gfp::Mat;
using gfp::Subspace;
using gfp::Vec;

namespace {

// Independent span oracle: the set of all F_p-combinations of the rows.
std::set<Vec> span_set(int p, const std::vector<Vec>& rows, int ambient) {
  std::set<Vec> out;
  std::vector<uint8_t> t(rows.size(), 0);
  do {
    Vec v(ambient, 0);
    for (size_t r = 0; r < rows.size(); ++r)
      if (t[r] != 0) gfp::vec_add_scaled(p, v, t[r], rows[r]);
    out.insert(std::move(v));
  } while (gfp::next_tuple(t, p));
  return out;
}

Vec random_vec(std::mt19937_64& rng, int p, int n) {
  Vec v(n);
  for (auto& x : v) x = static_cast<uint8_t>(rng() % p);
  return v;
}

Subspace random_subspace(std::mt19937_64& rng, int p, int n, int gens) {
  std::vector<Vec> rows;
  for (int i = 0; i < gens; ++i) rows.push_back(random_vec(rng, p, n));
  return gfp::rref(p, rows, n);
}

}  // namespace

TEST_CASE("rref examples") {
  Subspace s = gfp::rref(2, {Vec{1, 1}, Vec{0, 1}}, 2);
  CHECK(s == Subspace::full(2));

  CHECK(gfp::rref(3, {}, 3) == Subspace::zero(3));

  // (1,2,0) = 2*(2,1,0) over F_3, so the span is a line.
  Subspace t = gfp::rref(3, {Vec{2, 1, 0}, Vec{1, 2, 0}}, 3);
  CHECK(t.dim() == 1);
  CHECK(span_set(3, t.basis, 3) == span_set(3, {Vec{2, 1, 0}, Vec{1, 2, 0}}, 3));
}

TEST_CASE("rref rejects mismatched rows") {
  CHECK_THROWS_AS(gfp::rref(2, {Vec{1, 0}, Vec{1}}, 2), std::invalid_argument);
}

TEST_CASE("rref is idempotent and canonical") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int p = trial % 2 == 0 ? 2 : 3;
    int n = 2 + static_cast<int>(rng() % 5);
    Subspace s = random_subspace(rng, p, n, 1 + static_cast<int>(rng() % 5));
    CHECK(gfp::rref(p, s.basis, n) == s);
    // A second generating set with equal span must canonicalize identically.
    std::vector<Vec> gens;
    for (int g = 0; g < 2 * s.dim() + 1; ++g) {
      Vec v(n, 0);
      for (const Vec& row : s.basis) gfp::vec_add_scaled(p, v, static_cast<uint8_t>(rng() % p), row);
      gens.push_back(std::move(v));
    }
    Subspace t = gfp::rref(p, gens, n);
    if (t.dim() == s.dim()) CHECK(t == s);
  }
}

TEST_CASE("sum examples") {
  std::mt19937_64 rng(11);
  Subspace s = random_subspace(rng, 2, 4, 2);
  CHECK(gfp::sum(2, s, Subspace::zero(4)) == s);
  CHECK(gfp::sum(2, s, s) == s);

  Subspace a = gfp::rref(2, {Vec{1, 0, 0}}, 3);
  Subspace b = gfp::rref(2, {Vec{0, 1, 0}}, 3);
  Subspace c = gfp::sum(2, a, b);
  CHECK(c.dim() == 2);
  // Element enumeration: membership over all 8 ambient vectors.
  std::vector<uint8_t> t(3, 0);
  do {
    Vec v(t.begin(), t.end());
    bool in_sum_oracle = (v[2] == 0);
    CHECK(c.contains(2, v) == in_sum_oracle);
  } while (gfp::next_tuple(t, 2));
}

TEST_CASE("intersect examples") {
  std::mt19937_64 rng(13);
  Subspace s = random_subspace(rng, 3, 4, 2);
  CHECK(gfp::intersect(3, s, Subspace::full(4)) == s);
  CHECK(gfp::intersect(2, gfp::rref(2, {Vec{1, 0}}, 2), gfp::rref(2, {Vec{0, 1}}, 2)) ==
        Subspace::zero(2));
}

TEST_CASE("intersect agrees with membership enumeration") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Subspace a = random_subspace(rng, 2, 6, 3);
    Subspace b = random_subspace(rng, 2, 6, 3);
    Subspace c = gfp::intersect(2, a, b);
    for (const Vec& v : gfp::elements(2, a, 1024))
      CHECK(c.contains(2, v) == b.contains(2, v));
    for (const Vec& v : gfp::elements(2, c, 1024)) {
      CHECK(a.contains(2, v));
      CHECK(b.contains(2, v));
    }
  }
}

TEST_CASE("kernel examples") {
  CHECK(gfp::kernel(2, Mat::identity(3)) == Subspace::zero(3));
  CHECK(gfp::kernel(2, Mat(4, 4)) == Subspace::full(4));

  // Nilpotent single Jordan block over F_3.
  Mat j(3, 3);
  j.at(0, 1) = 1;
  j.at(1, 2) = 1;
  Subspace k = gfp::kernel(3, j);
  CHECK(k.dim() == 1);
  CHECK(k.contains(3, Vec{1, 0, 0}));
}

TEST_CASE("dimension formula and rank-nullity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    int p = trial % 2 == 0 ? 2 : 3;
    int n = 2 + static_cast<int>(rng() % 8);
    Subspace a = random_subspace(rng, p, n, 1 + static_cast<int>(rng() % n));
    Subspace b = random_subspace(rng, p, n, 1 + static_cast<int>(rng() % n));
    CHECK(gfp::sum(p, a, b).dim() + gfp::intersect(p, a, b).dim() == a.dim() + b.dim());

    Mat m(n, n);
    for (auto& x : m.a) x = static_cast<uint8_t>(rng() % p);
    CHECK(gfp::rank(p, m) + gfp::kernel(p, m).dim() == n);
  }
}

TEST_CASE("modular law on random triples with A inside C") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    int p = trial % 2 == 0 ? 2 : 3;
    int n = 3 + static_cast<int>(rng() % 4);
    Subspace c = random_subspace(rng, p, n, 1 + static_cast<int>(rng() % n));
    // Pick A spanned by a few elements of C.
    std::vector<Vec> arows;
    for (int g = 0; g < 2; ++g) {
      Vec v(n, 0);
      for (const Vec& row : c.basis) gfp::vec_add_scaled(p, v, static_cast<uint8_t>(rng() % p), row);
      arows.push_back(std::move(v));
    }
    Subspace a = gfp::rref(p, arows, n);
    Subspace b = random_subspace(rng, p, n, 1 + static_cast<int>(rng() % n));
    CHECK(gfp::sum(p, a, gfp::intersect(p, b, c)) ==
          gfp::intersect(p, gfp::sum(p, a, b), c));
  }
}

TEST_CASE("field bound") {
  CHECK_THROWS_AS(gfp::check_field(4), ParseError);
  CHECK_THROWS_AS(gfp::check_field(11), CapExceeded);
  CHECK_NOTHROW(gfp::check_field(7));
}
