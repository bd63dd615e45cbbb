#include <doctest.h>

#include "chevtori/rootsys.hpp"

using namespace chevtori;

TEST_CASE("positive root counts and highest roots") {
  CHECK(RootSystem::get(Kind::E6).num_positive() == 36);
  CHECK(RootSystem::get(Kind::E7).num_positive() == 63);
  CHECK(RootSystem::get(Kind::E8).num_positive() == 120);
  CHECK(RootSystem::get(Kind::E8).coords(120) == IVec{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(RootSystem::get(Kind::E7).coords(63) == IVec{2, 2, 3, 4, 3, 2, 1});
  CHECK(RootSystem::get(Kind::E6).coords(36) == IVec{1, 2, 2, 3, 2, 1});
}

TEST_CASE("roots are ordered by height") {
  for (auto k : {Kind::E6, Kind::E7, Kind::E8}) {
    const RootSystem &rs = RootSystem::get(k);
    for (int r = 2; r <= rs.num_positive(); ++r)
      CHECK(rs.height(r - 1) <= rs.height(r));
    for (int i = 1; i <= rs.rank(); ++i)
      CHECK(rs.height(i) == 1);
  }
}

TEST_CASE("index lookup and signed roots") {
  const RootSystem &rs = RootSystem::get(Kind::E7);
  for (int r = 1; r <= rs.num_positive(); ++r) {
    CHECK(rs.index_of(rs.coords(r)) == r);
    CHECK(rs.pairing(r, r) == 2);
    CHECK(rs.pairing(r, -r) == -2);
    CHECK(rs.root_at(rs.pos(r)) == r);
    CHECK(rs.root_at(rs.pos(-r)) == -r);
  }
  CHECK(rs.index_of(IVec{1, 1, 0, 0, 0, 0, 0}) == 0);
  CHECK(rs.sum(1, 3) != 0);
  CHECK(rs.sum(1, 2) == 0);
}

TEST_CASE("simple reflections are involutions satisfying braid relations") {
  const RootSystem &rs = RootSystem::get(Kind::E8);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      WeylElement a = WeylElement::simple(rs, i), b = WeylElement::simple(rs, j);
      int m = i == j ? 1 : rs.adjacent(i, j) ? 3 : 2;
      CHECK((a * b).order() == m);
    }
}

TEST_CASE("lengths, reduced words and the longest element") {
  const RootSystem &rs = RootSystem::get(Kind::E7);
  WeylElement w = WeylElement::from_word(rs, {1, 2, 3});
  CHECK(w.length() == 3);
  CHECK(WeylElement::from_word(rs, w.reduced_word()) == w);
  CHECK((w * w.inverse()).is_identity());
  WeylElement r = WeylElement::from_word(rs, {63});
  CHECK(r.order() == 2);
  CHECK(r.apply(63) == -63);
  // -1 lies in W(E7); its length is the number of positive roots
  WeylElement minus(rs, IMat::identity(7).scaled(-1));
  CHECK(minus.length() == 63);
}

TEST_CASE("kind names round-trip") {
  for (auto k : {Kind::E6, Kind::E7, Kind::E8})
    CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS(parse_kind("F4"));
}
