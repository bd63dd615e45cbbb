#include <doctest.h>

#include "chevtori/torus.hpp"

using namespace chevtori;

TEST_CASE("polynomial parsing and evaluation") {
  Poly p = parse_factor_string("(q^2-1)^2\\times(q+1)");
  CHECK(p.degree() == 5);
  CHECK(p.eval(3) == 64 * 4);
  CHECK(parse_factor_string("q^2+q+1").eval(2) == 7);
  CHECK_THROWS(parse_factor_string("(q+1"));
}

TEST_CASE("cyclic structure strings") {
  auto fs = parse_cyclic_structure("(q-1)^2\\times(q^2+1)");
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].copies == 2);
  CHECK(fs[0].order.eval(5) == 4);
  CHECK(fs[1].order.eval(5) == 26);
}

TEST_CASE("split and anisotropic tori") {
  const RootSystem &rs = RootSystem::get(Kind::E7);
  WeylElement one(rs);
  CHECK(twisted_order_polynomial(one) == parse_factor_string("(q-1)^7"));
  WeylElement minus(rs, IMat::identity(7).scaled(-1));
  CHECK(twisted_order_polynomial(minus) == parse_factor_string("(q+1)^7"));
  TwistedTorusStructure t = twisted_structure(one, 5);
  CHECK(t.order == 16384);
  CHECK(t.invariant_factors == BigVec(7, 4));
}

TEST_CASE("Coxeter torus of E8") {
  const RootSystem &rs = RootSystem::get(Kind::E8);
  WeylElement c = WeylElement::from_word(rs, {1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(c.order() == 30);
  CHECK(twisted_order_polynomial(c) == parse_factor_string("q^8+q^7-q^5-q^4-q^3+q+1"));
}

TEST_CASE("abelian group comparison") {
  CHECK(same_abelian_group({6}, {2, 3}));
  CHECK_FALSE(same_abelian_group({4}, {2, 2}));
  CHECK(same_abelian_group({12, 2}, {4, 6}));
}

TEST_CASE("worked example matrices") {
  const RootSystem &rs = RootSystem::get(Kind::E7);
  TitsGroup g(Kind::E7);
  WeylElement w = WeylElement::from_word(rs, {1, 2, 3});
  CHECK(conj_matrix(w) == w.matrix());
  PowerExponents p = power_exponents(g, g.parse("n_1n_2n_3"), 6);
  CHECK(g.equal(p.power, g.parse("h_2")));
}

TEST_CASE("concrete normalizer over F_{q^2}") {
  TitsGroup g(Kind::E7);
  ConcreteNormalizer C(g, 5);
  CHECK(C.modulus() == 24);
  int64_t i = C.root_of(2, true); // i^2 = -1
  CHECK((2 * i) % 24 == 12);
  ConcreteElement t = C.torus(IVec{i, 0, 0, 0, 0, 0, 0});
  CHECK(C.is_identity(C.pow(t, 4)));
  CHECK_FALSE(C.is_identity(C.pow(t, 2)));
  // sigma is the q-th power on the torus
  CHECK(C.equal(C.sigma(t), C.pow(t, 5)));
  CHECK(C.coordinate("-1", {}) == 12);
  CHECK(C.coordinate("alpha^2", {{"alpha", 3}}) == 6);
}
