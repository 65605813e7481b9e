#include "rlie/ideals.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace rlie::ideals {

using gfp::Mat;
using gfp::next_tuple;

namespace {

// Multiplication-by-basis-monomial matrices for the given side: for right
// ideals the cyclic ideal of x is span{x * m_j} = span{R_j x} with R_j the
// right-multiplication matrix of m_j.
std::vector<Mat> side_matrices(const uenv::EnvAlgebra& A, Side side) {
  std::vector<Mat> ms;
  ms.reserve(A.dim_env());
  for (long j = 0; j < A.dim_env(); ++j) {
    Vec m(A.dim_env(), 0);
    m[j] = 1;
    ms.push_back(side == Side::right ? A.right_mult_matrix(m) : A.left_mult_matrix(m));
  }
  return ms;
}

Subspace cyclic_carrier(const uenv::EnvAlgebra& A, const std::vector<Mat>& ms, const Vec& x) {
  std::vector<Vec> rows;
  rows.reserve(ms.size());
  for (const Mat& m : ms) rows.push_back(m.apply(A.p(), x));
  return gfp::rref(A.p(), rows, static_cast<int>(A.dim_env()));
}

long pow_or_cap(long base, long exp, long cap) {
  long r = 1;
  for (long i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

SidedIdeal cyclic_ideal(const uenv::EnvAlgebra& A, const Vec& x, Side side) {
  SidedIdeal I;
  I.carrier = cyclic_carrier(A, side_matrices(A, side), x);
  I.principal_witness = x;
  return I;
}

bool is_sided_ideal(const uenv::EnvAlgebra& A, const Subspace& S, Side side) {
  // Closure under multiplication by every Lie generator suffices: the
  // generators and the identity generate the algebra.
  for (const Vec& s : S.basis)
    for (int i = 0; i < A.lie_dim(); ++i) {
      Vec g(A.dim_env(), 0);
      g[A.gen_index(i)] = 1;
      Vec prod = side == Side::right ? A.multiply(s, g) : A.multiply(g, s);
      if (!S.contains(A.p(), prod)) return false;
    }
  return true;
}

IdealLattice enumerate_ideals(const uenv::EnvAlgebra& A, Side side, const Caps& caps) {
  const int n = static_cast<int>(A.dim_env());
  std::vector<Mat> ms = side_matrices(A, side);

  std::unordered_map<std::string, SidedIdeal> found;
  auto insert = [&](SidedIdeal ideal) {
    std::string k = ideal.carrier.key();
    auto it = found.find(k);
    if (it == found.end()) {
      found.emplace(std::move(k), std::move(ideal));
      if (static_cast<long>(found.size()) > caps.max_lattice)
        throw CapExceeded("ideal lattice cap exceeded (" + std::to_string(caps.max_lattice) + ")");
      return true;
    }
    if (!it->second.principal_witness && ideal.principal_witness)
      it->second.principal_witness = ideal.principal_witness;
    return false;
  };

  const long total = pow_or_cap(A.p(), n, caps.max_elements);
  const bool exhaustive = total <= caps.max_elements;
  insert(SidedIdeal{Subspace::zero(n), Vec(n, 0)});
  if (exhaustive) {
    // Cyclic ideal of every element of the algebra, in odometer order; the
    // first element reaching a carrier becomes its witness.
    std::vector<uint8_t> t(n, 0);
    while (next_tuple(t, A.p())) {
      Vec x(t.begin(), t.end());
      insert(SidedIdeal{cyclic_carrier(A, ms, x), std::move(x)});
    }
  } else {
    // Spanning-family seeding: cyclic ideals of the basis monomials, then of
    // the elements of already-found small ideals.
    for (long j = 0; j < A.dim_env(); ++j) {
      Vec x(A.dim_env(), 0);
      x[j] = 1;
      insert(SidedIdeal{cyclic_carrier(A, ms, x), std::move(x)});
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Subspace> carriers;
      carriers.reserve(found.size());
      for (const auto& [k, v] : found) carriers.push_back(v.carrier);
      for (const Subspace& c : carriers) {
        if (pow_or_cap(A.p(), c.dim(), caps.max_elements) > caps.max_elements) continue;
        for (const Vec& x : gfp::elements(A.p(), c, caps.max_elements))
          grew |= insert(SidedIdeal{cyclic_carrier(A, ms, x), x});
      }
    }
  }

  // Close under pairwise sums to a fixpoint.
  std::vector<Subspace> worklist;
  worklist.reserve(found.size());
  for (const auto& [k, v] : found) worklist.push_back(v.carrier);
  while (!worklist.empty()) {
    Subspace cur = std::move(worklist.back());
    worklist.pop_back();
    std::vector<Subspace> snapshot;
    snapshot.reserve(found.size());
    for (const auto& [k, v] : found) snapshot.push_back(v.carrier);
    for (const Subspace& other : snapshot) {
      SidedIdeal s{gfp::sum(A.p(), cur, other), std::nullopt};
      Subspace carrier = s.carrier;
      if (insert(std::move(s))) worklist.push_back(std::move(carrier));
    }
  }

  IdealLattice lat;
  lat.complete = exhaustive;
  lat.ideals.reserve(found.size());
  for (auto& [k, v] : found) {
    if (!is_sided_ideal(A, v.carrier, side))
      throw InternalError("enumerated carrier fails the ideal check");
    lat.ideals.push_back(std::move(v));
  }
  std::sort(lat.ideals.begin(), lat.ideals.end(),
            [](const SidedIdeal& a, const SidedIdeal& b) {
              return a.carrier.key() < b.carrier.key();
            });
  return lat;
}

std::optional<Vec> principal_witness(const uenv::EnvAlgebra& A, const Subspace& carrier,
                                     Side side, const Caps& caps) {
  if (carrier.dim() == 0) return Vec(A.dim_env(), 0);
  if (pow_or_cap(A.p(), carrier.dim(), caps.max_elements) > caps.max_elements)
    throw CapExceeded("principality scan budget exceeded: p^" +
                      std::to_string(carrier.dim()) + " elements");
  std::vector<Mat> ms = side_matrices(A, side);
  for (const Vec& x : gfp::elements(A.p(), carrier, caps.max_elements)) {
    if (gfp::is_zero(x)) continue;
    if (cyclic_carrier(A, ms, x) == carrier) return x;
  }
  return std::nullopt;
}

namespace {

PirVerdict decide_side(const uenv::EnvAlgebra& A, Side side, const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  IdealLattice lat = enumerate_ideals(A, side, caps);
  PirVerdict v;
  v.method = "brute";
  v.complete = lat.complete;
  v.ideal_count = static_cast<long>(lat.ideals.size());
  v.is_pir = true;
  for (const SidedIdeal& ideal : lat.ideals) {
    bool principal;
    if (ideal.principal_witness) {
      principal = true;
    } else if (lat.complete) {
      principal = false;  // exhaustive seeding saw every cyclic ideal
    } else {
      principal = principal_witness(A, ideal.carrier, side, caps).has_value();
    }
    if (principal) {
      ++v.principal_count;
    } else if (v.is_pir) {
      v.is_pir = false;
      v.witness_ideal = ideal.carrier;
    }
  }
  v.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

}  // namespace

PirVerdict decide_pri(const uenv::EnvAlgebra& A, const Caps& caps) {
  return decide_side(A, Side::right, caps);
}

PirVerdict decide_pli(const uenv::EnvAlgebra& A, const Caps& caps) {
  return decide_side(A, Side::left, caps);
}

}  // namespace rlie::ideals
