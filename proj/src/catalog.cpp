#include "rlie/catalog.hpp"

#include <stdexcept>

namespace rlie::catalog {

using gfp::Vec;
using rla::LieAlgebra;

namespace {

std::vector<std::string> numbered_names(const std::string& stem, int d) {
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

LieAlgebra abelian_with_pmap(int p, int d, std::vector<Vec> pmap, const std::string& stem) {
  std::vector<std::vector<Vec>> upper(d, std::vector<Vec>(d, Vec(d, 0)));
  LieAlgebra L = LieAlgebra::make(p, numbered_names(stem, d), upper, std::move(pmap));
  rla::require_valid(L);
  return L;
}

void check_params(int p, int d) {
  gfp::check_field(p);
  if (d < 0) throw std::invalid_argument("catalog: dimension must be >= 0");
}

}  // namespace

LieAlgebra torus(int p, int d) {
  check_params(p, d);
  std::vector<Vec> pmap(d, Vec(d, 0));
  for (int i = 0; i < d; ++i) pmap[i][i] = 1;
  return abelian_with_pmap(p, d, std::move(pmap), "t");
}

LieAlgebra nilcyclic(int p, int d) {
  check_params(p, d);
  std::vector<Vec> pmap(d, Vec(d, 0));
  for (int i = 0; i + 1 < d; ++i) pmap[i][i + 1] = 1;
  return abelian_with_pmap(p, d, std::move(pmap), "n");
}

LieAlgebra strongly_abelian(int p, int d) {
  check_params(p, d);
  return abelian_with_pmap(p, d, std::vector<Vec>(d, Vec(d, 0)), "a");
}

LieAlgebra nonabelian2(int p) {
  gfp::check_field(p);
  std::vector<std::vector<Vec>> upper(2, std::vector<Vec>(2, Vec(2, 0)));
  upper[0][1] = Vec{0, 1};  // [x, y] = y
  std::vector<Vec> pmap{Vec{1, 0}, Vec{0, 0}};
  LieAlgebra L = LieAlgebra::make(p, {"x", "y"}, upper, std::move(pmap));
  rla::require_valid(L);
  return L;
}

LieAlgebra heisenberg(int p) {
  gfp::check_field(p);
  std::vector<std::vector<Vec>> upper(3, std::vector<Vec>(3, Vec(3, 0)));
  upper[0][1] = Vec{0, 0, 1};  // [x, y] = z
  std::vector<Vec> pmap(3, Vec(3, 0));
  LieAlgebra L = LieAlgebra::make(p, {"x", "y", "z"}, upper, std::move(pmap));
  rla::require_valid(L);
  return L;
}

LieAlgebra mixed(int p, int a, int b) {
  check_params(p, a);
  check_params(p, b);
  return rla::direct_sum(torus(p, a), nilcyclic(p, b));
}

std::vector<std::string> kinds() {
  return {"torus", "nilcyclic", "strongly_abelian", "nonabelian2", "heisenberg", "mixed"};
}

LieAlgebra make(const std::string& kind, int p, int dim, int a, int b) {
  if (kind == "torus") return torus(p, dim);
  if (kind == "nilcyclic") return nilcyclic(p, dim);
  if (kind == "strongly_abelian") return strongly_abelian(p, dim);
  if (kind == "nonabelian2") return nonabelian2(p);
  if (kind == "heisenberg") return heisenberg(p);
  if (kind == "mixed") return mixed(p, a, b);
  throw std::invalid_argument("catalog: unknown kind '" + kind + "'");
}

}  // namespace rlie::catalog
