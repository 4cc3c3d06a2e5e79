#include "k3lat/expr.hpp"

#include "k3lat/error.hpp"

#include <doctest.h>

using namespace k3lat;

TEST_CASE("parse sums, scaled blocks and repeats") {
  Expr e = parse_expr("U + U(3) + A2*2");
  REQUIRE(e.kind == Expr::Kind::Sum);
  REQUIRE(e.children.size() == 3);
  CHECK(e.children[0] == make_block("U"));
  CHECK(e.children[1] == make_block("U", {3}));
  CHECK(e.children[2] == make_repeat(make_block("A", {2}), 2));
}

TEST_CASE("parse rank-suffix sugar and functional form agree") {
  CHECK(parse_expr("A2") == parse_expr("A(2)"));
  CHECK(parse_expr("E8(2)") == make_block("E", {8, 2}));
  CHECK(parse_expr("A2(-1)") == make_block("A", {2, -1}));
  CHECK(parse_expr("<2>") == make_block("<>", {2}));
  CHECK(parse_expr("S(10,6,0)") == make_block("S", {10, 6, 0}));
}

TEST_CASE("parse Gram literal") {
  Expr e = parse_expr("[ -4 1 ; 1 -2 ]");
  REQUIRE(e.kind == Expr::Kind::Gram);
  REQUIRE(e.gram.rows() == 2);
  CHECK(e.gram.at(0, 0) == -4);
  CHECK(e.gram.at(0, 1) == 1);
  CHECK(e.gram.at(1, 1) == -2);
}

TEST_CASE("syntax errors carry byte positions") {
  auto pos_of = [](const std::string& src) {
    try {
      parse_expr(src);
    } catch (const Error& e) {
      REQUIRE(e.code() == "SyntaxError");
      return e.position();
    }
    return -2L;
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("U + ") == 4);
  CHECK(pos_of("<2") == 2);
  CHECK(pos_of("A2*0") >= 3);
  CHECK(pos_of("[ 0 1 ; 2 0 ]") >= 0);   // asymmetric literal
  CHECK(pos_of("[ 1 2 ; 3 ]") >= 0);     // ragged literal
  CHECK(pos_of("U U") == 2);             // missing operator
}

TEST_CASE("pretty print round-trips") {
  const char* samples[] = {
      "U",
      "U(3)",
      "U + U(3) + A2*2",
      "<2> + E8(2)",
      "A2(-1)",
      "U + U(5)*2",
      "S(10,6,0)",
      "OmegaPerp(3)",
      "N + H5 + K7",
      "U + E8*2 + A2",
      "D4*3",
      "[ -4 1 ; 1 -2 ]",
      "<-2>*8",
  };
  for (const char* s : samples) {
    Expr e = parse_expr(s);
    Expr back = parse_expr(pretty_print(e));
    CHECK(back == e);
  }
}
