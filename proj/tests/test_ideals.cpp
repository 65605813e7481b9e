#include <doctest.h>

#include "rlie/catalog.hpp"
#include "rlie/ideals.hpp"

using namespace rlie;
using gfp::Subspace;
using gfp::Vec;
using ideals::Side;
using uenv::EnvAlgebra;

TEST_CASE("cyclic ideals of F_2[x]/(x^2)") {
  EnvAlgebra A(catalog::strongly_abelian(2, 1));
  CHECK(ideals::cyclic_ideal(A, Vec{0, 0}, Side::right).carrier == Subspace::zero(2));
  CHECK(ideals::cyclic_ideal(A, Vec{0, 1}, Side::right).carrier ==
        gfp::rref(2, {Vec{0, 1}}, 2));
  CHECK(ideals::cyclic_ideal(A, Vec{1, 1}, Side::right).carrier == Subspace::full(2));
}

TEST_CASE("is_sided_ideal") {
  EnvAlgebra A(catalog::nonabelian2(2));
  // Right multiples of the embedded y span a right ideal.
  Subspace ry = ideals::cyclic_ideal(A, A.embed_lie(Vec{0, 1}), Side::right).carrier;
  CHECK(ideals::is_sided_ideal(A, ry, Side::right));
  // The augmentation ideal is two-sided.
  Subspace w = uenv::omega(A);
  CHECK(ideals::is_sided_ideal(A, w, Side::right));
  CHECK(ideals::is_sided_ideal(A, w, Side::left));
  // A random line through 1 is not an ideal.
  CHECK_FALSE(ideals::is_sided_ideal(A, gfp::rref(2, {Vec{1, 0, 0, 0}}, 4), Side::right));
}

TEST_CASE("hand-counted lattices") {
  // u = F_2: just 0 and the whole ring.
  EnvAlgebra Z(catalog::strongly_abelian(2, 0));
  ideals::IdealLattice lz = ideals::enumerate_ideals(Z, Side::right);
  CHECK(lz.complete);
  CHECK(lz.ideals.size() == 2);

  // u = F_2[x]/(x^2): 0, (x), u.
  EnvAlgebra S(catalog::strongly_abelian(2, 1));
  ideals::IdealLattice ls = ideals::enumerate_ideals(S, Side::right);
  CHECK(ls.complete);
  CHECK(ls.ideals.size() == 3);

  // u = F_2[x]/(x^2 + x) = F_2 x F_2: 0, two factors, u.
  EnvAlgebra T(catalog::torus(2, 1));
  ideals::IdealLattice lt = ideals::enumerate_ideals(T, Side::right);
  CHECK(lt.complete);
  CHECK(lt.ideals.size() == 4);
}

TEST_CASE("lattice members verify and witnesses regenerate their carriers") {
  for (const auto& L : {catalog::strongly_abelian(2, 2), catalog::nonabelian2(2),
                        catalog::torus(2, 2), catalog::nilcyclic(3, 1)}) {
    EnvAlgebra A(L);
    for (Side side : {Side::right, Side::left}) {
      ideals::IdealLattice lat = ideals::enumerate_ideals(A, side);
      CHECK(lat.complete);
      for (const ideals::SidedIdeal& id : lat.ideals) {
        CHECK(ideals::is_sided_ideal(A, id.carrier, side));
        if (id.principal_witness)
          CHECK(ideals::cyclic_ideal(A, *id.principal_witness, side).carrier == id.carrier);
      }
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  EnvAlgebra A(catalog::nonabelian2(2));
  ideals::IdealLattice a = ideals::enumerate_ideals(A, Side::right);
  ideals::IdealLattice b = ideals::enumerate_ideals(A, Side::right);
  REQUIRE(a.ideals.size() == b.ideals.size());
  for (size_t i = 0; i < a.ideals.size(); ++i) {
    CHECK(a.ideals[i].carrier == b.ideals[i].carrier);
    CHECK(a.ideals[i].principal_witness == b.ideals[i].principal_witness);
  }
}

TEST_CASE("truncated polynomial ring in two variables is not principal") {
  // u = F_2[x,y]/(x^2, y^2): the augmentation ideal needs two generators.
  EnvAlgebra A(catalog::strongly_abelian(2, 2));
  ideals::PirVerdict v = ideals::decide_pri(A);
  CHECK_FALSE(v.is_pir);
  CHECK(v.complete);
  REQUIRE(v.witness_ideal.has_value());
  CHECK(ideals::is_sided_ideal(A, *v.witness_ideal, Side::right));
  CHECK_FALSE(ideals::principal_witness(A, *v.witness_ideal, Side::right).has_value());
  CHECK(v.principal_count < v.ideal_count);
}

TEST_CASE("principal verdicts on the small principal examples") {
  for (const auto& L : {catalog::torus(2, 1), catalog::torus(2, 2),
                        catalog::nilcyclic(2, 2), catalog::mixed(2, 1, 1),
                        catalog::strongly_abelian(3, 1)}) {
    EnvAlgebra A(L);
    ideals::PirVerdict r = ideals::decide_pri(A);
    ideals::PirVerdict l = ideals::decide_pli(A);
    CHECK(r.is_pir);
    CHECK(l.is_pir);
    CHECK(r.principal_count == r.ideal_count);
  }
}

TEST_CASE("right and left verdicts agree on a noncommutative example") {
  EnvAlgebra A(catalog::nonabelian2(2));
  CHECK(ideals::decide_pri(A).is_pir == ideals::decide_pli(A).is_pir);
}

TEST_CASE("lattice cap raises instead of truncating") {
  Caps tight;
  tight.max_lattice = 2;
  EnvAlgebra A(catalog::torus(2, 1));
  CHECK_THROWS_AS(ideals::enumerate_ideals(A, Side::right, tight), CapExceeded);
}
