#include "rlie/criterion.hpp"

#include <chrono>
#include <random>

#include "rlie/uenv.hpp"

namespace rlie::criterion {

using gfp::Vec;
using rla::LieAlgebra;

PirVerdict structural_decision(const LieAlgebra& L, const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  PirVerdict v;
  v.method = "structural";
  if (!L.is_abelian()) {
    v.is_pir = false;
    v.reason = "non-abelian";
  } else {
    // L = T + N (Fitting of the p-map); L/T is isomorphic to N, so u(L) is a
    // principal ideal ring iff N is nilcyclic. Audited against the brute
    // oracle rather than trusted.
    rla::Fitting f = rla::fitting(L);
    rla::Quotient q = rla::quotient(L, f.torus_part);
    rla::CyclicResult nc = rla::is_nilcyclic(q.alg, caps.max_elements);
    v.is_pir = nc.cyclic;
    if (nc.cyclic) {
      v.torus_ideal = f.torus_part;
      v.cyclic_generator = q.lift(*nc.generator);
    } else {
      v.reason = "Fitting nil part is not nilcyclic";
    }
  }
  v.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

PirVerdict brute_decision(const LieAlgebra& L, const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  uenv::EnvAlgebra A(L, caps);
  PirVerdict right = ideals::decide_pri(A, caps);
  PirVerdict left = ideals::decide_pli(A, caps);
  if (right.is_pir != left.is_pir)
    throw InternalError("pri/pli verdicts disagree on u(L); the two must coincide");
  PirVerdict v = right;
  v.method = "brute";
  v.complete = right.complete && left.complete;
  v.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

namespace {

// Structure-constant degrees of freedom: one vector per basis pair (i < j)
// plus one per basis element for the p-map.
struct TableShape {
  int p, dim;
  int pair_count;    // dim*(dim-1)/2
  long entry_count;  // (pair_count + dim) * dim residues

  explicit TableShape(int p_, int dim_)
      : p(p_), dim(dim_), pair_count(dim_ * (dim_ - 1) / 2),
        entry_count(static_cast<long>(pair_count + dim_) * dim_) {}

  LieAlgebra assemble(const std::vector<uint8_t>& entries) const {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    std::vector<std::vector<Vec>> upper(dim, std::vector<Vec>(dim, Vec(dim, 0)));
    size_t pos = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        upper[i][j].assign(entries.begin() + pos, entries.begin() + pos + dim);
        pos += dim;
      }
    std::vector<Vec> pmap(dim);
    for (int i = 0; i < dim; ++i) {
      pmap[i].assign(entries.begin() + pos, entries.begin() + pos + dim);
      pos += dim;
    }
    return LieAlgebra::make(p, std::move(names), upper, std::move(pmap));
  }
};

constexpr long kExhaustiveCandidateCap = 1L << 22;

}  // namespace

std::vector<LieAlgebra> enumerate_algebras(int p, int dim, const Caps& caps) {
  gfp::check_field(p, caps);
  TableShape shape(p, dim);
  long candidates = 1;
  for (long i = 0; i < shape.entry_count; ++i) {
    candidates *= p;
    if (candidates > kExhaustiveCandidateCap)
      throw CapExceeded("exhaustive enumeration budget exceeded: p^" +
                        std::to_string(shape.entry_count) + " candidate tables");
  }
  std::vector<LieAlgebra> out;
  std::vector<uint8_t> entries(shape.entry_count, 0);
  do {
    LieAlgebra L = shape.assemble(entries);
    if (rla::validate(L).ok) out.push_back(std::move(L));
  } while (gfp::next_tuple(entries, p));
  return out;
}

std::vector<LieAlgebra> sample_algebras(int p, int dim, int count, uint64_t seed,
                                        const Caps& caps) {
  gfp::check_field(p, caps);
  TableShape shape(p, dim);
  std::mt19937_64 rng(seed);
  std::vector<LieAlgebra> out;
  long draws = 0;
  const long max_draws = static_cast<long>(count) * 1000000L;
  while (static_cast<int>(out.size()) < count) {
    if (++draws > max_draws)
      throw CapExceeded("sampling draw budget exceeded; too few valid tables");
    std::vector<uint8_t> entries(shape.entry_count);
    for (auto& e : entries) e = static_cast<uint8_t>(rng() % p);
    LieAlgebra L = shape.assemble(entries);
    if (rla::validate(L).ok) out.push_back(std::move(L));
  }
  return out;
}

AuditReport audit(int p, int dim, bool exhaustive, int sample_size, uint64_t seed,
                  const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  AuditReport rep;
  rep.p = p;
  rep.dim = dim;
  rep.exhaustive = exhaustive;
  rep.sample_size = sample_size;
  rep.seed = seed;
  std::vector<LieAlgebra> family = exhaustive
                                       ? enumerate_algebras(p, dim, caps)
                                       : sample_algebras(p, dim, sample_size, seed, caps);
  for (const LieAlgebra& L : family) {
    PirVerdict s = structural_decision(L, caps);
    PirVerdict b = brute_decision(L, caps);
    ++rep.count;
    if (s.is_pir == b.is_pir)
      ++rep.agreements;
    else
      rep.disagreements.push_back(L);
  }
  rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace rlie::criterion
