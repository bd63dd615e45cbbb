#include <doctest.h>

#include <random>

#include "chevtori/chevalley.hpp"
#include "chevtori/tits.hpp"

using namespace chevtori;

namespace {

bool g_is_central(const TitsGroup &g) {
  for (int i = 1; i <= g.system().rank(); ++i)
    if (!g.is_identity(g.comm(g.n0(), g.n(i))))
      return false;
  return true;
}

} // namespace

TEST_CASE("n_i^2 = h_i and n_i has order 4") {
  for (auto k : {Kind::E6, Kind::E7, Kind::E8}) {
    TitsGroup g(k);
    for (int i = 1; i <= g.system().rank(); ++i) {
      CHECK(g.equal(g.pow(g.n(i), 2), g.h(1u << (i - 1))));
      CHECK(g.order(g.n(i)) == 4);
    }
  }
}

TEST_CASE("braid relations hold for the lifts") {
  TitsGroup g(Kind::E8);
  const RootSystem &rs = g.system();
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      TitsElement a = g.n(i), b = g.n(j);
      if (rs.adjacent(i, j))
        CHECK(g.equal(g.mul(g.mul(a, b), a), g.mul(g.mul(b, a), b)));
      else
        CHECK(g.equal(g.mul(a, b), g.mul(b, a)));
    }
}

TEST_CASE("central lift n_0") {
  TitsGroup e7(Kind::E7), e8(Kind::E8);
  CHECK(g_is_central(e7));
  CHECK(g_is_central(e8));
  CHECK(e7.equal(e7.pow(e7.n0(), 2), e7.parse("h_2h_5h_7")));
  CHECK(e8.is_identity(e8.pow(e8.n0(), 2)));
  CHECK_FALSE(TitsGroup(Kind::E6).has_n0());
}

TEST_CASE("parse and format agree") {
  TitsGroup g(Kind::E7);
  TitsElement a = g.parse("h_4n_1n_2n_3");
  CHECK(g.equal(g.parse(g.format(a)), a));
  CHECK(g.equal(g.mul(a, g.inv(a)), g.identity()));
  CHECK(g.equal(g.comm(a, a), g.identity()));
}

TEST_CASE("adjoint quotient kills the center") {
  TitsGroup sc(Kind::E7, Isogeny::SC), ad(Kind::E7, Isogeny::AD);
  CHECK_FALSE(sc.is_identity(sc.parse("h_2h_5h_7")));
  CHECK(ad.is_identity(ad.parse("h_2h_5h_7")));
  CHECK(ad.order(ad.n0()) == 2);
  CHECK(sc.order(sc.n0()) == 4);
}

TEST_CASE("normal form matches the adjoint representation on random words") {
  for (auto k : {Kind::E6, Kind::E7}) {
    TitsGroup g(k);
    const AdjointRep &adj = AdjointRep::get(k);
    std::mt19937 rng(7);
    int l = g.system().rank();
    for (int t = 0; t < 50; ++t) {
      TitsElement x = g.identity();
      SparseMat m = SparseMat::identity(adj.dim());
      for (int s = 0; s < 8; ++s) {
        int i = 1 + static_cast<int>(rng() % l);
        x = g.mul(x, g.n(i));
        m = m * adj.n(i);
      }
      CHECK(g.to_adjoint(x) == m);
    }
  }
}

TEST_CASE("lifts of non-simple roots") {
  TitsGroup g(Kind::E7);
  for (int r = 1; r <= 63; ++r) {
    TitsElement n = g.n(r);
    CHECK(n.w == WeylElement::from_word(g.system(), {r}));
    CHECK(g.equal(g.pow(n, 2), g.h_root(r)));
    CHECK(g.equal(g.inv(n), g.n(-r)));
  }
}
