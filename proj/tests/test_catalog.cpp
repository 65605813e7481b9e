#include <doctest.h>

#include "rlie/catalog.hpp"

using namespace rlie;
using gfp::Vec;
using rla::LieAlgebra;

TEST_CASE("families validate across small parameters") {
  for (int p : {2, 3, 5}) {
    for (int d = 0; d <= 3; ++d) {
      CHECK(rla::validate(catalog::torus(p, d)).ok);
      CHECK(rla::validate(catalog::nilcyclic(p, d)).ok);
      CHECK(rla::validate(catalog::strongly_abelian(p, d)).ok);
    }
    CHECK(rla::validate(catalog::nonabelian2(p)).ok);
    CHECK(rla::validate(catalog::heisenberg(p)).ok);
    CHECK(rla::validate(catalog::mixed(p, 2, 1)).ok);
  }
}

TEST_CASE("family shapes") {
  LieAlgebra t = catalog::torus(3, 2);
  CHECK(t.is_abelian());
  CHECK(t.pmap_matrix() == gfp::Mat::identity(2));
  CHECK(rla::is_torus(t));

  LieAlgebra n = catalog::nilcyclic(2, 3);
  CHECK(n.pmap[0] == Vec{0, 1, 0});
  CHECK(n.pmap[1] == Vec{0, 0, 1});
  CHECK(n.pmap[2] == Vec{0, 0, 0});
  CHECK(rla::is_nilcyclic(n).cyclic);

  LieAlgebra s = catalog::strongly_abelian(5, 2);
  CHECK(s.is_abelian());
  CHECK(gfp::is_zero(s.pmap[0]));

  LieAlgebra a = catalog::nonabelian2(3);
  CHECK(a.bracket_of(Vec{1, 0}, Vec{0, 1}) == Vec{0, 1});
  CHECK_FALSE(a.is_abelian());

  LieAlgebra h = catalog::heisenberg(2);
  CHECK(h.bracket_of(Vec{1, 0, 0}, Vec{0, 1, 0}) == Vec{0, 0, 1});
  CHECK(rla::center(h).contains(2, Vec{0, 0, 1}));

  LieAlgebra m = catalog::mixed(2, 1, 2);
  CHECK(m.dim == 3);
  rla::Fitting f = rla::fitting(m);
  CHECK(f.torus_part.dim() == 1);
  CHECK(f.nil_part.dim() == 2);
}

TEST_CASE("make dispatches by kind and rejects junk") {
  auto names = catalog::kinds();
  CHECK_FALSE(names.empty());
  for (const auto& k : names) CHECK_NOTHROW(catalog::make(k, 2, 1, 1, 1));

  LieAlgebra via = catalog::make("torus", 3, 2);
  CHECK(via.pmap == catalog::torus(3, 2).pmap);

  CHECK_THROWS_AS(catalog::make("nosuch", 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(catalog::make("torus", 2, -1), std::invalid_argument);
}
