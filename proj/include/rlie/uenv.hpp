#pragma once

// The restricted enveloping algebra u(L): PBW monomial basis, straightening
// multiplication, augmentation machinery, omega-powers, integrals,
// annihilators and the free-module decomposition over restricted subalgebras.

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "rlie/errors.hpp"
#include "rlie/gfp.hpp"
#include "rlie/rla.hpp"

namespace rlie::uenv {

using gfp::Mat;
using gfp::Subspace;
using gfp::Vec;

/// Sparse product of two basis monomials.
using SparseElem = std::vector<std::pair<int, uint8_t>>;

class EnvAlgebra {
 public:
  /// Throws CapExceeded when p^dim exceeds caps.max_env_dim.
  explicit EnvAlgebra(const rla::LieAlgebra& L, const Caps& caps = Caps{});

  const rla::LieAlgebra& lie() const { return lie_; }
  int p() const { return lie_.p; }
  int lie_dim() const { return lie_.dim; }
  long dim_env() const { return dim_env_; }

  /// Lexicographic index of an exponent tuple (first coordinate most
  /// significant); the identity monomial has index 0.
  long mono_index(const std::vector<uint8_t>& exps) const;
  std::vector<uint8_t> mono_exps(long idx) const;
  /// Index of the degree-one monomial of Lie generator i.
  long gen_index(int i) const { return gen_index_[i]; }

  /// Normal form of a product of generators, as a dense coefficient vector.
  Vec straighten(const std::vector<int>& word) const;
  /// Product of basis monomials (cached for dim_env <= 512).
  const SparseElem& mono_product(long i, long j) const;

  Vec one() const;
  /// Image of a Lie element as a degree-one element of u(L).
  Vec embed_lie(const Vec& x) const;
  uint8_t epsilon(const Vec& u) const { return u.empty() ? 0 : u[0]; }

  Vec multiply(const Vec& u, const Vec& v) const;
  /// Matrix of v -> u*v.
  Mat left_mult_matrix(const Vec& u) const;
  /// Matrix of v -> v*u.
  Mat right_mult_matrix(const Vec& u) const;

 private:
  rla::LieAlgebra lie_;
  long dim_env_ = 1;
  std::vector<int> gen_index_;
  bool cache_full_ = false;
  mutable std::vector<std::vector<SparseElem>> table_;
  mutable std::unordered_map<long, SparseElem> spill_;
  mutable std::mutex spill_mu_;

  SparseElem compute_mono_product(long i, long j) const;
};

/// Augmentation ideal: kernel of the counit.
Subspace omega(const EnvAlgebra& A);
/// n-th power of the augmentation ideal, computed iteratively.
Subspace omega_power(const EnvAlgebra& A, int n);
/// Pull back S ∩ (span of degree-one monomials) to L-coordinates.
Subspace intersect_with_lie(const EnvAlgebra& A, const Subspace& S);

struct IntegralSpace {
  Subspace left;
  Subspace right;
};
/// Left/right integral subspaces; asserts both are 1-dimensional.
IntegralSpace integrals(const EnvAlgebra& A);

/// {v : s*v = 0 for all s in gens}.
Subspace right_annihilator(const EnvAlgebra& A, const std::vector<Vec>& gens);

/// Span of the embedded subalgebra u(H) inside u(L); H must be a restricted
/// subalgebra of L.
Subspace env_subalgebra_span(const EnvAlgebra& A, const Subspace& H);

struct FreeModuleResult {
  bool free = false;
  long rank = 0;
};
/// Verify u(L) = ⊕ u(H)·w over the PBW monomials w in a complement of H.
FreeModuleResult free_module_check(const EnvAlgebra& A, const Subspace& H);

/// Nilradical of a commutative u(L) via iterated p-th power maps.
Subspace commutative_radical(const EnvAlgebra& A);

bool is_commutative(const EnvAlgebra& A);

}  // namespace rlie::uenv
