#include <doctest.h>

#include "chevtori/permgroup.hpp"

using namespace chevtori;

TEST_CASE("Schreier-Sims on symmetric groups") {
  Perm cyc{1, 2, 3, 4, 0}, tr{1, 0, 2, 3, 4};
  PermGroup s5(5, {cyc, tr});
  CHECK(s5.order() == 120);
  PermGroup c5(5, {cyc});
  CHECK(c5.order() == 5);
  CHECK_FALSE(c5.contains(tr));
  CHECK(c5.contains(perm_mul(cyc, cyc)));
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group(RootSystem::get(Kind::E6)).order() == 51840);
  CHECK(weyl_group(RootSystem::get(Kind::E7)).order() == 2903040);
}

TEST_CASE("centralizers agree across methods") {
  const RootSystem &rs = RootSystem::get(Kind::E7);
  for (auto word : std::vector<std::vector<int>>{{1, 2, 3}, {1}, {1, 4, 3, 2}, {1, 2, 3, 4, 5, 6, 7}}) {
    WeylElement w = WeylElement::from_word(rs, word);
    auto a = centralizer_order(w, 1u << 22);
    auto b = centralizer_order_search(w, 1u << 20);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*a == *b);
  }
  CHECK(centralizer_order_exact(WeylElement::from_word(rs, {1, 2, 3, 4, 5, 6, 7})) == 18);
}

TEST_CASE("E6 centralizers exclude the diagram automorphism") {
  const RootSystem &rs = RootSystem::get(Kind::E6);
  WeylElement c = WeylElement::from_word(rs, {1, 2, 3, 4, 5, 6});
  CHECK(centralizer_order_exact(c) == 12);
  CHECK(centralizer_order_exact(WeylElement(rs)) == 51840);
}

TEST_CASE("conjugacy witnesses") {
  const RootSystem &rs = RootSystem::get(Kind::E8);
  WeylElement a = WeylElement::from_word(rs, {2, 5}), b = WeylElement::from_word(rs, {1, 2});
  ConjugacyResult r = conjugacy_witness(a, b, 10, 1);
  REQUIRE(r.verdict == ConjugacyResult::Verdict::Witness);
  CHECK(*r.witness * a * r.witness->inverse() == b);
  WeylElement c = WeylElement::from_word(rs, {1, 2, 3});
  CHECK(conjugacy_witness(a, c, 10, 1).verdict == ConjugacyResult::Verdict::Distinct);
}

TEST_CASE("E7: w and ww0 are never conjugate") {
  const RootSystem &rs = RootSystem::get(Kind::E7);
  WeylElement w = WeylElement::from_word(rs, {1});
  WeylElement w0(rs, IMat::identity(7).scaled(-1));
  CHECK(conjugacy_witness(w, w * w0, 10, 1).verdict == ConjugacyResult::Verdict::Distinct);
}

TEST_CASE("centralizer image") {
  const RootSystem &rs = RootSystem::get(Kind::E7);
  WeylElement w = WeylElement::from_word(rs, {1});
  CentralizerImage ci = centralizer_image_order(w, {w, WeylElement::from_word(rs, {3})});
  CHECK_FALSE(ci.all_centralize);
  CHECK(ci.offenders == std::vector<int>{1});
}
