#pragma once

#include "k3lat/expr.hpp"
#include "k3lat/lattice.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace k3lat {

// Evaluate a lattice expression to a concrete lattice. Throws UnknownName
// for names outside the catalog and UnrealizableInvariants for S(r,a,d)
// triples without a catalog representative.
Lattice eval_expr(const Expr& e);

// parse + eval in one step.
Lattice make_named(const std::string& src);

// Expression string for a catalog S(r,a,delta) representative, if any.
std::optional<std::string> s_lattice_expression(long r, long a, int delta);

// All (r,a,delta) triples with a catalog representative.
std::vector<std::array<long, 3>> s_lattice_catalog();

// Multiset of atomic catalog blocks of an expression (macro names such as
// S(...) and OmegaPerp(...) are expanded). Throws NotExpression when the
// tree contains a Gram literal.
std::map<std::string, long> block_multiset(const Expr& e);

}  // namespace k3lat
