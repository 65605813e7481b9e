#pragma once

// Exact linear algebra over the prime field F_p: vectors, matrices and
// canonical (reduced-row-echelon) subspaces. Everything here is a pure value
// type; subspace equality is bit-for-bit equality of the canonical basis.

#include <cstdint>
#include <string>
#include <vector>

#include "rlie/errors.hpp"

namespace rlie::gfp {

bool is_prime(int p);

/// Throws ParseError if p is not prime, CapExceeded if p exceeds the cap.
void check_field(int p, const Caps& caps = Caps{});

inline uint8_t fp_add(int p, uint8_t a, uint8_t b) { return static_cast<uint8_t>((a + b) % p); }
inline uint8_t fp_sub(int p, uint8_t a, uint8_t b) { return static_cast<uint8_t>((a + p - b) % p); }
inline uint8_t fp_neg(int p, uint8_t a) { return static_cast<uint8_t>((p - a) % p); }
inline uint8_t fp_mul(int p, uint8_t a, uint8_t b) { return static_cast<uint8_t>((a * b) % p); }
uint8_t fp_inv(int p, uint8_t a);

/// Coordinate vector with entries in [0, p).
using Vec = std::vector<uint8_t>;

Vec vec_add(int p, const Vec& a, const Vec& b);
Vec vec_scale(int p, uint8_t c, const Vec& a);
void vec_add_scaled(int p, Vec& acc, uint8_t c, const Vec& a);
bool is_zero(const Vec& a);

/// Dense row-major matrix over F_p.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  /// Matrix whose column j is cols_in[j].
  static Mat from_columns(const std::vector<Vec>& cols_in, int nrows);

  Mat mul(int p, const Mat& o) const;
  Mat pow(int p, long e) const;
  Vec apply(int p, const Vec& v) const;
  bool operator==(const Mat&) const = default;
};

/// Canonical subspace of F_p^ambient: basis rows in reduced row echelon form
/// with strictly increasing pivots and no zero rows. Two Subspace values are
/// equal as sets iff they are equal field-for-field.
struct Subspace {
  int ambient = 0;
  std::vector<Vec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Subspace&) const = default;

  /// Byte key for hashing; injective on canonical subspaces of one ambient.
  std::string key() const;

  std::vector<int> pivots() const;
  /// v reduced modulo the subspace (pivot coordinates eliminated).
  Vec reduce(int p, Vec v) const;
  bool contains(int p, const Vec& v) const;
  /// Coordinates of v in the basis rows; precondition: contains(p, v).
  Vec coordinates(int p, const Vec& v) const;

  static Subspace zero(int ambient) { return Subspace{ambient, {}}; }
  static Subspace full(int ambient);
};

/// Canonical span of the given rows. Throws on length mismatch.
Subspace rref(int p, const std::vector<Vec>& rows, int ambient);

Subspace sum(int p, const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace intersect(int p, const Subspace& a, const Subspace& b);
/// Nullspace {v : Mv = 0} in canonical form.
Subspace kernel(int p, const Mat& m);
/// Column space of m as a canonical subspace of F_p^rows.
Subspace image(int p, const Mat& m);
int rank(int p, const Mat& m);

/// Advance a base-p odometer; returns false after wrapping past the last tuple.
bool next_tuple(std::vector<uint8_t>& t, int p);

/// All p^dim elements of the subspace, in odometer order over the basis.
/// Throws CapExceeded past the budget.
std::vector<Vec> elements(int p, const Subspace& s, long budget);

}  // namespace rlie::gfp
