#include <doctest.h>

#include "rlie/catalog.hpp"
#include "rlie/io.hpp"

using namespace rlie;
using gfp::Vec;
using io::json;
using rla::LieAlgebra;

TEST_CASE("parse the documented example") {
  json doc = json::parse(R"({
    "schema_version": 1,
    "p": 2,
    "basis": ["x", "y"],
    "bracket": [{"left": "x", "right": "y", "value": {"y": 1}}],
    "pmap": {"x": {"x": 1}}
  })");
  LieAlgebra L = io::parse(doc);
  CHECK(L.p == 2);
  CHECK(L.names == std::vector<std::string>{"x", "y"});
  CHECK(L.bracket_of(Vec{1, 0}, Vec{0, 1}) == Vec{0, 1});
  CHECK(L.pmap[0] == Vec{1, 0});
  CHECK(gfp::is_zero(L.pmap[1]));
}

TEST_CASE("omitted entries mean zero; integers reduce mod p") {
  json doc = {{"p", 3}, {"basis", {"a", "b"}}, {"pmap", {{"a", {{"b", 7}}}}}};
  LieAlgebra L = io::parse(doc);
  CHECK(L.is_abelian());
  CHECK(L.pmap[0] == Vec{0, 1});  // 7 mod 3
  CHECK(gfp::is_zero(L.pmap[1]));

  json neg = {{"p", 3}, {"basis", {"a"}}, {"pmap", {{"a", {{"a", -1}}}}}};
  CHECK(io::parse(neg).pmap[0] == Vec{2});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(io::parse(json{{"p", 2}}), ParseError);  // no basis
  CHECK_THROWS_AS(io::parse(json{{"p", 4}, {"basis", {"x"}}}), ParseError);
  CHECK_THROWS_AS(io::parse(json{{"p", 13}, {"basis", {"x"}}}), CapExceeded);
  CHECK_THROWS_AS(io::parse(json{{"p", 2}, {"basis", {"x", "x"}}}), ParseError);
  CHECK_THROWS_AS(io::parse(json{{"schema_version", 2}, {"p", 2}, {"basis", {"x"}}}), ParseError);
  // Undeclared name in a value map.
  json doc = {{"p", 2}, {"basis", {"x"}}, {"pmap", {{"x", {{"z", 1}}}}}};
  CHECK_THROWS_AS(io::parse(doc), ParseError);
  // Bracket pairs must be listed left-before-right in basis order.
  json rev = {{"p", 2},
              {"basis", {"x", "y"}},
              {"bracket", {{{"left", "y"}, {"right", "x"}, {"value", {{"y", 1}}}}}}};
  CHECK_THROWS_AS(io::parse(rev), ParseError);
  CHECK_THROWS_AS(io::parse_text("{nope"), ParseError);
}

TEST_CASE("parse rejects tables violating the axioms") {
  json doc = {{"p", 2},
              {"basis", {"x", "y"}},
              {"bracket", {{{"left", "x"}, {"right", "y"}, {"value", {{"y", 1}}}}}},
              {"pmap", {{"x", {{"x", 1}}}, {"y", {{"x", 1}}}}}};
  CHECK_THROWS_AS(io::parse(doc), ValidationError);
}

TEST_CASE("emit/parse round trip over the catalog") {
  for (const auto& L : {catalog::torus(3, 2), catalog::nilcyclic(2, 3),
                        catalog::strongly_abelian(2, 2), catalog::nonabelian2(2),
                        catalog::heisenberg(3), catalog::mixed(2, 1, 2)}) {
    LieAlgebra back = io::parse(io::emit(L));
    CHECK(back.p == L.p);
    CHECK(back.names == L.names);
    CHECK(back.bracket == L.bracket);
    CHECK(back.pmap == L.pmap);
    // Emission is stable: a second trip produces identical text.
    CHECK(io::emit(back).dump() == io::emit(L).dump());
  }
}

TEST_CASE("report helpers") {
  gfp::Subspace s = gfp::rref(2, {Vec{1, 0, 1}}, 3);
  json j = io::subspace_json(s);
  CHECK(j["ambient_dim"] == 3);
  CHECK(j["dim"] == 1);
  CHECK(j["basis"][0] == json::array({1, 0, 1}));
  CHECK(io::vec_json(Vec{2, 0, 1}) == json::array({2, 0, 1}));
}
