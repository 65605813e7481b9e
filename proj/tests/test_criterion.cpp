#include <doctest.h>

#include "rlie/catalog.hpp"
#include "rlie/criterion.hpp"

using namespace rlie;
using gfp::Subspace;
using gfp::Vec;
using ideals::PirVerdict;

TEST_CASE("structural yes-verdicts carry usable certificates") {
  for (const auto& L : {catalog::torus(2, 2), catalog::nilcyclic(2, 3), catalog::mixed(2, 1, 2),
                        catalog::torus(3, 1), catalog::nilcyclic(3, 2),
                        catalog::strongly_abelian(2, 0)}) {
    PirVerdict v = criterion::structural_decision(L);
    CHECK(v.is_pir);
    CHECK(v.method == "structural");
    REQUIRE(v.torus_ideal.has_value());
    REQUIRE(v.cyclic_generator.has_value());
    CHECK(rla::is_torus(L, *v.torus_ideal));
    // The certificate generator must generate L together with the torus part.
    std::vector<Vec> gens = v.torus_ideal->basis;
    gens.push_back(*v.cyclic_generator);
    CHECK(rla::restricted_closure(L, gens).carrier == Subspace::full(L.dim));
  }
}

TEST_CASE("structural no-verdicts name the obstruction") {
  PirVerdict v = criterion::structural_decision(catalog::nonabelian2(2));
  CHECK_FALSE(v.is_pir);
  CHECK(v.reason == "non-abelian");

  v = criterion::structural_decision(catalog::strongly_abelian(2, 2));
  CHECK_FALSE(v.is_pir);
  CHECK(v.reason.find("nilcyclic") != std::string::npos);

  CHECK_FALSE(criterion::structural_decision(catalog::heisenberg(3)).is_pir);
}

TEST_CASE("brute agrees with structural on the catalog") {
  for (const auto& L : {catalog::torus(2, 1), catalog::nilcyclic(2, 2),
                        catalog::strongly_abelian(2, 2), catalog::mixed(2, 1, 1),
                        catalog::nonabelian2(2), catalog::heisenberg(2),
                        catalog::strongly_abelian(3, 1), catalog::torus(3, 1)}) {
    PirVerdict b = criterion::brute_decision(L);
    CHECK(b.method == "brute");
    CHECK(b.complete);
    CHECK(b.is_pir == criterion::structural_decision(L).is_pir);
  }
}

TEST_CASE("enumerate_algebras: p = 2 dims 1 and 2") {
  auto d1 = criterion::enumerate_algebras(2, 1);
  CHECK(d1.size() == 2);  // e1^{[2]} = 0 or e1

  auto d2 = criterion::enumerate_algebras(2, 2);
  // 16 abelian p-maps plus 3 rigid nonabelian tables; regression constant.
  CHECK(d2.size() == 19);
  for (const auto& L : d2) CHECK(rla::validate(L).ok);
}

TEST_CASE("sample_algebras is seeded and valid") {
  auto a = criterion::sample_algebras(2, 3, 10, 42);
  auto b = criterion::sample_algebras(2, 3, 10, 42);
  REQUIRE(a.size() == 10);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(rla::validate(a[i]).ok);
    CHECK(a[i].bracket == b[i].bracket);
    CHECK(a[i].pmap == b[i].pmap);
  }
  auto c = criterion::sample_algebras(2, 3, 10, 43);
  bool all_equal = true;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].bracket != c[i].bracket || a[i].pmap != c[i].pmap) all_equal = false;
  CHECK_FALSE(all_equal);
}

TEST_CASE("audit: exhaustive at p = 2, small dims") {
  criterion::AuditReport r1 = criterion::audit(2, 1, true, 0, 0);
  CHECK(r1.passed());
  CHECK(r1.count == 2);
  CHECK(r1.agreements == r1.count);

  criterion::AuditReport r2 = criterion::audit(2, 2, true, 0, 0);
  CHECK(r2.passed());
  CHECK(r2.count == 19);
}

TEST_CASE("audit: sampled at p = 2 dim 3") {
  criterion::AuditReport r = criterion::audit(2, 3, false, 8, 42);
  CHECK(r.passed());
  CHECK(r.count == 8);
  CHECK_FALSE(r.exhaustive);
}

TEST_CASE("ordinary enveloping algebras") {
  CHECK(criterion::ordinary_env_decision(0));
  CHECK(criterion::ordinary_env_decision(1));
  CHECK_FALSE(criterion::ordinary_env_decision(2));
  CHECK_FALSE(criterion::ordinary_env_decision(100));
}
