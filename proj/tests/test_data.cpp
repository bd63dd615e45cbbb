#include <doctest.h>

#include "chevtori/data.hpp"
#include "chevtori/verify.hpp"

using namespace chevtori;

TEST_CASE("embedded tables load") {
  DataSet d = DataSet::load(DataSource::embedded());
  CHECK(d.e7_lifts.rows.size() == 30);
  CHECK(d.e7_tori.rows.size() == 30);
  CHECK(d.e8_tori.rows.size() == 67);
  CHECK(d.e7_nonsplit.rows.size() == 10);
  CHECK(d.e8_nonsplit.rows.size() == 25);
  CHECK(d.e8_nonsplit.special.size() == 4);
  CHECK(d.main.size() == 67);
  CHECK(d.fixtures.A.rows() == 7);
}

TEST_CASE("weyl words") {
  CHECK(parse_weyl_word("w_1w_{53}w_2") == std::vector<int>{1, 53, 2});
  CHECK(parse_weyl_word("1").empty());
  CHECK(format_weyl_word({1, 53, 2}) == "w_1w_{53}w_2");
  CHECK_THROWS_AS(parse_weyl_word("w_"), DataError);
}

TEST_CASE("malformed tables are rejected with context") {
  DataSource src = DataSource::embedded();
  std::string t = src.text("e7_lifts.toml");
  src.set_text("e7_lifts.toml", t + "\n[[row]\n");
  CHECK_THROWS_AS(DataSet::load(src), DataError);

  src = DataSource::embedded();
  std::string s = src.text("e7_tori.toml");
  auto at = s.find("schema = 1");
  REQUIRE(at != std::string::npos);
  s.replace(at, 10, "schema = 9");
  src.set_text("e7_tori.toml", s);
  CHECK_THROWS_AS(DataSet::load(src), DataError);
}

TEST_CASE("greek words") {
  DataSet d = DataSet::load(DataSource::embedded());
  const RootSystem &e8 = RootSystem::get(Kind::E8);
  CHECK(greek_word("\\gamma\\beta\\delta\\rho", d.fixtures, e8) == std::vector<int>{3, 2, 4, 18});
  CHECK(greek_word("\\lambda", d.fixtures, e8) == std::vector<int>{120});
}

TEST_CASE("structure orders") {
  CHECK(*structure_order("\\mathbb{Z}_2\\times \\mathbb{Z}_2\\times \\mathbb{Z}_6\\times S_4") == 576);
  CHECK(*structure_order("a group of order 2^{11}\\cdot 3^2") == 18432);
  CHECK(*structure_order("(\\mathbb{Z}_2^4 : \\mathbb{Z}_3)") == 48);
  CHECK(*structure_order("\\Oo_7(2)") == 1451520);
  CHECK_FALSE(structure_order("mystery"));
}
