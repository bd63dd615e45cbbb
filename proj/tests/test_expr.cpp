#include <doctest.h>

#include "chevtori/expr.hpp"

using namespace chevtori;

TEST_CASE("words in the table notation") {
  ExprPtr e = parse_expr("h_4n_1n_{53}n_0");
  REQUIRE(e->op == Expr::Op::Product);
  REQUIRE(e->args.size() == 4);
  CHECK(e->args[0]->op == Expr::Op::H);
  CHECK(e->args[0]->index == 4);
  CHECK(e->args[2]->index == 53);
  CHECK(e->args[3]->op == Expr::Op::N);
  CHECK(e->args[3]->index == 0);
}

TEST_CASE("powers, inverses and commutators") {
  ExprPtr e = parse_expr("(N1N2)^{-3}");
  CHECK(e->op == Expr::Op::Power);
  CHECK(e->exponent == -3);
  ExprPtr c = parse_expr("[n,h_2n_{15}]");
  CHECK(c->op == Expr::Op::Comm);
  CHECK(parse_expr("a^6")->exponent == 6);
}

TEST_CASE("relation chains and definitions") {
  auto sides = parse_relation_chain("a^2=b^2=[a,b]=1");
  CHECK(sides.size() == 4);
  CHECK(sides.back()->op == Expr::Op::One);
  Definition d = parse_definition("a=x=h_4n");
  CHECK(d.names == std::vector<std::string>{"a", "x"});
  CHECK(d.value->op == Expr::Op::Product);
}

TEST_CASE("evaluation in the integers mod 12") {
  ExprEval<int> ev;
  ev.one = [] { return 0; };
  ev.h = [](int r) { return r; };
  ev.n = [](int r) { return 2 * r; };
  ev.name = [](const std::string &) { return 5; };
  ev.mul = [](int a, int b) { return (a + b) % 12; };
  ev.inv = [](int a) { return (12 - a) % 12; };
  CHECK(ev(*parse_expr("h_1n_2")) == 5);
  CHECK(ev(*parse_expr("x^{-1}")) == 7);
  CHECK(ev(*parse_expr("[x,h_3]")) == 0);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_expr("h_"), ParseError);
  CHECK_THROWS_AS(parse_expr("(n_1"), ParseError);
  CHECK_THROWS_AS(parse_expr("[n_1]"), ParseError);
  CHECK_THROWS_AS(parse_definition("h_1=n_2"), ParseError);
}
