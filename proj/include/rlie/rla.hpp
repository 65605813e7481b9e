#pragma once

// Restricted Lie algebras over F_p given by structure constants and a basis
// p-map. Covers axiom validation, the Jacobson formula, characteristic
// series, torus/cyclic/nilcyclic tests, Fitting decomposition, quotients
// and direct sums.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlie/errors.hpp"
#include "rlie/gfp.hpp"

namespace rlie::rla {

using gfp::Mat;
using gfp::Subspace;
using gfp::Vec;

struct LieAlgebra {
  int p = 2;
  int dim = 0;
  std::vector<std::string> names;
  /// Full antisymmetric table: bracket[i][j] = coordinates of [e_i, e_j].
  std::vector<std::vector<Vec>> bracket;
  /// pmap[i] = coordinates of e_i^{[p]}.
  std::vector<Vec> pmap;

  /// Assemble from the upper-triangular entries (i < j); the rest is filled
  /// by antisymmetry.
  static LieAlgebra make(int p, std::vector<std::string> names,
                         const std::vector<std::vector<Vec>>& upper,
                         std::vector<Vec> pmap);

  Vec zero() const { return Vec(dim, 0); }
  Vec basis_vec(int i) const;
  Vec bracket_of(const Vec& x, const Vec& y) const;
  /// Matrix of ad(x): v -> [x, v].
  Mat ad(const Vec& x) const;
  bool is_abelian() const;
  /// Matrix with columns pmap[i]; the p-map as a linear map (abelian case).
  Mat pmap_matrix() const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> malformed;   // table shape problems
  std::vector<std::string> violations;  // named axiom failures
};

ValidationReport validate(const LieAlgebra& L);
/// Throws ValidationError listing the report if not ok.
void require_valid(const LieAlgebra& L);

/// x^{[p]} by expanding over the basis and folding the Jacobson formula.
Vec pth_power(const LieAlgebra& L, const Vec& x);
/// x^{[p]^n}.
Vec pth_power_iter(const LieAlgebra& L, Vec x, int n);
/// True iff x^{[p]^m} = 0 for some m <= dim.
bool is_p_nilpotent_element(const LieAlgebra& L, const Vec& x);

struct SubalgebraReport {
  Subspace carrier;
  bool is_ideal = false;
  bool is_restricted = false;
};

/// Smallest subspace containing the generators closed under bracket and p-map.
SubalgebraReport restricted_closure(const LieAlgebra& L, const std::vector<Vec>& gens);

/// Bracket- and p-map-closed?
bool is_restricted_subalgebra(const LieAlgebra& L, const Subspace& S);
/// Restricted ideal test; on failure *witness (if given) holds an offending vector.
bool is_restricted_ideal(const LieAlgebra& L, const Subspace& S, Vec* witness = nullptr);

/// gamma(1) = L, gamma(i+1) = [gamma(i), L].
Subspace gamma(const LieAlgebra& L, int i);

/// Restricted subalgebra generated by all x^{[p]^n}, x in S. Non-abelian
/// spans enumerate S elementwise under the budget.
Subspace pth_subalgebra(const LieAlgebra& L, const Subspace& S, int n,
                        long budget = Caps{}.max_elements);

/// Dimension subalgebra via the closed-form sum of gamma_i(L)^{[p]^j} over
/// i*p^j >= n.
Subspace dn(const LieAlgebra& L, int n, long budget = Caps{}.max_elements);

Subspace center(const LieAlgebra& L);
Subspace centralizer(const LieAlgebra& L, const Vec& x);
Subspace derived(const LieAlgebra& L);
Subspace frattini(const LieAlgebra& L);

struct Fitting {
  Subspace torus_part;
  Subspace nil_part;
};
/// Fitting decomposition of the (linear) p-map; abelian input only.
Fitting fitting(const LieAlgebra& L);

bool is_torus(const LieAlgebra& L);
/// S must be a restricted subalgebra.
bool is_torus(const LieAlgebra& L, const Subspace& S);

struct CyclicResult {
  bool cyclic = false;
  std::optional<Vec> generator;
};

CyclicResult is_cyclic(const LieAlgebra& L, long budget = Caps{}.max_elements);
CyclicResult is_nilcyclic(const LieAlgebra& L, long budget = Caps{}.max_elements);

/// Quotient together with the complement section used to lift elements back.
struct Quotient {
  LieAlgebra alg;
  Subspace ideal;
  std::vector<int> complement;  // parent basis indices forming the section

  Vec project(const LieAlgebra& parent, const Vec& v) const;
  Vec lift(const Vec& v) const;  // complement embedding
};

Quotient quotient(const LieAlgebra& L, const Subspace& ideal);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Degree of the minimal polynomial of a square matrix.
int min_poly_degree(int p, const Mat& m);

/// All subspaces of F_p^dim (odometer over generating matrices; dedup).
std::vector<Subspace> all_subspaces(int p, int dim, long budget = Caps{}.max_elements);
/// All restricted subalgebras of L.
std::vector<Subspace> all_restricted_subalgebras(const LieAlgebra& L,
                                                 long budget = Caps{}.max_elements);

}  // namespace rlie::rla
