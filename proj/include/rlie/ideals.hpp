#pragma once

// Brute-force oracle: enumerate the complete lattice of one-sided ideals of
// a built enveloping algebra and decide principality of each member.

#include <optional>
#include <string>
#include <vector>

#include "rlie/errors.hpp"
#include "rlie/gfp.hpp"
#include "rlie/uenv.hpp"

namespace rlie::ideals {

using gfp::Subspace;
using gfp::Vec;

enum class Side { right, left };

struct SidedIdeal {
  Subspace carrier;
  std::optional<Vec> principal_witness;
};

struct IdealLattice {
  std::vector<SidedIdeal> ideals;  // sorted by carrier key; deterministic
  /// True when the element-level seeding ran exhaustively; only then does a
  /// missing witness certify non-principality.
  bool complete = false;
};

struct PirVerdict {
  bool is_pir = false;
  std::string method;  // "structural" or "brute"
  std::string reason;  // short no-explanations for structural verdicts
  std::optional<Subspace> torus_ideal;       // yes-structural certificate
  std::optional<Vec> cyclic_generator;       // yes-structural certificate (in L)
  std::optional<Subspace> witness_ideal;     // no-brute certificate
  long ideal_count = 0;
  long principal_count = 0;
  bool complete = true;
  double elapsed_s = 0.0;
};

SidedIdeal cyclic_ideal(const uenv::EnvAlgebra& A, const Vec& x, Side side);
bool is_sided_ideal(const uenv::EnvAlgebra& A, const Subspace& S, Side side);

IdealLattice enumerate_ideals(const uenv::EnvAlgebra& A, Side side, const Caps& caps = Caps{});

/// Deterministic scan over the carrier's elements for a generator.
std::optional<Vec> principal_witness(const uenv::EnvAlgebra& A, const Subspace& carrier,
                                     Side side, const Caps& caps = Caps{});

PirVerdict decide_pri(const uenv::EnvAlgebra& A, const Caps& caps = Caps{});
PirVerdict decide_pli(const uenv::EnvAlgebra& A, const Caps& caps = Caps{});

}  // namespace rlie::ideals
