#pragma once

// Decision procedures for the principal-ideal-ring property of u(L): the
// structural torus-by-nilcyclic criterion, the brute-force cross-check, the
// exhaustive/sampled audit of their agreement, and the trivial decider for
// ordinary enveloping algebras.

#include <cstdint>
#include <vector>

#include "rlie/errors.hpp"
#include "rlie/ideals.hpp"
#include "rlie/rla.hpp"

namespace rlie::criterion {

using ideals::PirVerdict;

/// Structural decision: no for non-abelian L; otherwise yes iff the Fitting
/// nil part is nilcyclic. Certificate: torus ideal + lifted generator.
PirVerdict structural_decision(const rla::LieAlgebra& L, const Caps& caps = Caps{});

/// Build u(L), decide pri and pli by lattice enumeration, assert agreement.
PirVerdict brute_decision(const rla::LieAlgebra& L, const Caps& caps = Caps{});

/// Every valid (bracket, p-map) table pair, in deterministic odometer order.
std::vector<rla::LieAlgebra> enumerate_algebras(int p, int dim, const Caps& caps = Caps{});

/// Uniformly sampled valid tables with a seeded generator.
std::vector<rla::LieAlgebra> sample_algebras(int p, int dim, int count, uint64_t seed,
                                             const Caps& caps = Caps{});

struct AuditReport {
  int p = 0;
  int dim = 0;
  bool exhaustive = false;
  int sample_size = 0;
  uint64_t seed = 0;
  long count = 0;
  long agreements = 0;
  std::vector<rla::LieAlgebra> disagreements;
  double elapsed_s = 0.0;
  bool passed() const { return disagreements.empty(); }
};

AuditReport audit(int p, int dim, bool exhaustive, int sample_size, uint64_t seed,
                  const Caps& caps = Caps{});

/// U(L) for ordinary Lie algebras is a principal ideal ring iff dim <= 1.
inline bool ordinary_env_decision(long dim_L) { return dim_L <= 1; }

}  // namespace rlie::criterion
