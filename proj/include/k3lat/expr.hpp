#pragma once

#include "k3lat/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace k3lat {

// Lattice expression AST.
//
//   expr  := term ('+' term)*
//   term  := block ('*' INT)?
//   block := NAME ('(' INT (',' INT)* ')')? | '<' INT '>' | '[' rows ']'
//
// Names with a trailing number in {A,D,E} are sugar for the parametrised
// block ("A2" == "A(2)"); "<k>" is the rank-one lattice with Gram [k].
struct Expr {
  enum class Kind { Block, Gram, Sum, Repeat };

  Kind kind = Kind::Block;

  // Block: base name plus integer parameters. "<k>" uses base "<>".
  std::string base;
  std::vector<long> params;

  // Gram literal
  IntMat gram;

  // Sum terms / single Repeat child
  std::vector<Expr> children;
  long count = 0;  // Repeat multiplicity

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.base == b.base && a.params == b.params && a.gram == b.gram &&
           a.children == b.children && a.count == b.count;
  }
};

Expr make_block(std::string base, std::vector<long> params = {});
Expr make_sum(std::vector<Expr> terms);
Expr make_repeat(Expr block, long count);

// Throws Error("SyntaxError", ..., byte_offset) on malformed input.
Expr parse_expr(std::string_view src);

std::string pretty_print(const Expr& e);

}  // namespace k3lat
