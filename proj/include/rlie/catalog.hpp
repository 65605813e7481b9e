#pragma once

// Deterministic constructors for the named algebra families used throughout
// tests, examples and docs.

#include <string>
#include <vector>

#include "rlie/rla.hpp"

namespace rlie::catalog {

/// torus(d): abelian, e_i^{[p]} = e_i.
rla::LieAlgebra torus(int p, int d);
/// nilcyclic(d): abelian, e_i^{[p]} = e_{i+1}, e_d^{[p]} = 0 (Jordan block at 0).
rla::LieAlgebra nilcyclic(int p, int d);
/// strongly_abelian(d): abelian, zero p-map; u(L) is a truncated polynomial ring.
rla::LieAlgebra strongly_abelian(int p, int d);
/// [x,y] = y, x^{[p]} = x, y^{[p]} = 0.
rla::LieAlgebra nonabelian2(int p);
/// [x,y] = z central, zero p-map.
rla::LieAlgebra heisenberg(int p);
/// torus(a) ⊕ nilcyclic(b).
rla::LieAlgebra mixed(int p, int a, int b);

std::vector<std::string> kinds();
/// Dispatch by kind name; dim is d for the one-parameter families, (a, b)
/// for mixed. Throws std::invalid_argument on unknown kinds or bad params.
rla::LieAlgebra make(const std::string& kind, int p, int dim, int a = 0, int b = 0);

}  // namespace rlie::catalog
