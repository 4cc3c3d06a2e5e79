#include "k3lat/catalog.hpp"

#include "k3lat/error.hpp"

#include <array>
#include <sstream>

namespace k3lat {

namespace {

IntMat gram_u() {
  return IntMat{{Int(0), Int(1)}, {Int(1), Int(0)}};
}

// Negated Cartan matrix of A_n (paper convention: root lattices are
// negative definite).
IntMat gram_a(long n) {
  if (n < 1) throw Error("UnknownName", "A(n) needs n >= 1");
  IntMat g(n, n);
  for (long i = 0; i < n; ++i) {
    g.at(i, i) = -2;
    if (i + 1 < n) {
      g.at(i, i + 1) = 1;
      g.at(i + 1, i) = 1;
    }
  }
  return g;
}

IntMat gram_d(long n) {
  if (n < 3) throw Error("UnknownName", "D(n) needs n >= 3");
  IntMat g(n, n);
  for (long i = 0; i < n; ++i) g.at(i, i) = -2;
  for (long i = 0; i + 1 < n - 1; ++i) {
    g.at(i, i + 1) = 1;
    g.at(i + 1, i) = 1;
  }
  // fork: last node attaches to node n-3 (0-based)
  g.at(n - 3, n - 1) = 1;
  g.at(n - 1, n - 3) = 1;
  return g;
}

IntMat gram_e(long n) {
  if (n < 6 || n > 8) throw Error("UnknownName", "E(n) needs n in {6,7,8}");
  IntMat g(n, n);
  for (long i = 0; i < n; ++i) g.at(i, i) = -2;
  for (long i = 0; i + 1 < n - 1; ++i) {
    g.at(i, i + 1) = 1;
    g.at(i + 1, i) = 1;
  }
  // last node attaches third from the end of the chain
  g.at(n - 4, n - 1) = 1;
  g.at(n - 1, n - 4) = 1;
  return g;
}

// Nikulin lattice: index-2 overlattice of <-2>^8 generated additionally by
// half the sum of the basis vectors. Basis e_1..e_7, v = (e_1+...+e_8)/2.
IntMat gram_nikulin() {
  IntMat g(8, 8);
  for (long i = 0; i < 7; ++i) g.at(i, i) = -2;
  for (long i = 0; i < 7; ++i) {
    g.at(i, 7) = -1;
    g.at(7, i) = -1;
  }
  g.at(7, 7) = -4;
  return g;
}

IntMat gram_h5() {
  return IntMat{{Int(2), Int(1)}, {Int(1), Int(-2)}};
}

IntMat gram_k7() {
  return IntMat{{Int(-4), Int(1)}, {Int(1), Int(-2)}};
}

struct SCatalogEntry {
  long r, a;
  int delta;
  const char* expr;
};

// Block-sum representatives of the S(r,a,delta) lattices used in the
// classification; verified against their invariants at construction.
constexpr SCatalogEntry kSCatalog[] = {
    {1, 1, 1, "<2>"},
    {2, 0, 0, "U"},
    {2, 2, 0, "U(2)"},
    {9, 9, 1, "<2> + E8(2)"},
    {10, 10, 0, "U(2) + E8(2)"},
    {10, 8, 0, "U + E8(2)"},
    {10, 6, 0, "U + N"},
    {14, 4, 0, "U(2) + E8 + D4"},
    {14, 6, 0, "U + D4*3"},
    {18, 0, 0, "U + E8*2"},
    {18, 2, 0, "U(2) + E8*2"},
    {18, 4, 0, "U + E8 + D4*2"},
};

Lattice eval_block(const Expr& e) {
  const std::string& base = e.base;
  const auto& p = e.params;
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi)
      throw Error("UnknownName", "wrong number of arguments for " + base);
  };

  if (base == "<>") {
    need(1, 1);
    IntMat g(1, 1);
    g.at(0, 0) = p[0];
    return Lattice(std::move(g));
  }
  if (base == "U") {
    need(0, 1);
    IntMat g = gram_u();
    if (p.size() == 1) g.scale(Int(p[0]));
    return Lattice(std::move(g));
  }
  if (base == "A" || base == "D" || base == "E") {
    need(1, 2);
    IntMat g = base == "A" ? gram_a(p[0]) : base == "D" ? gram_d(p[0]) : gram_e(p[0]);
    if (p.size() == 2) g.scale(Int(p[1]));
    return Lattice(std::move(g));
  }
  if (base == "N") {
    need(0, 0);
    return Lattice(gram_nikulin());
  }
  if (base == "H5") {
    need(0, 0);
    return Lattice(gram_h5());
  }
  if (base == "K7") {
    need(0, 0);
    return Lattice(gram_k7());
  }
  if (base == "S") {
    need(3, 3);
    auto expr = s_lattice_expression(p[0], p[1], static_cast<int>(p[2]));
    if (!expr)
      throw Error("UnrealizableInvariants",
                  "no catalog representative for S(" + std::to_string(p[0]) + "," +
                      std::to_string(p[1]) + "," + std::to_string(p[2]) + ")");
    Lattice l = make_named(*expr);
    PElementaryInvariants inv = two_elementary_invariants(l);
    if (inv.r != p[0] || inv.a != p[1] || *inv.delta != p[2] ||
        inv.sig != std::make_pair(1L, p[0] - 1))
      throw Error("Internal", "catalog S-lattice fails its invariant check");
    return l;
  }
  if (base == "OmegaPerp") {
    need(1, 1);
    if (p[0] == 3) return make_named("U + U(3)*2 + A2*2");
    if (p[0] == 5) return make_named("U + U(5)*2");
    if (p[0] == 4)
      throw Error("UnknownName",
                  "OmegaPerp(4) has no catalog Gram matrix; only its rank and "
                  "discriminant data are recorded in the registry");
    throw Error("UnknownName", "OmegaPerp is available for m = 3, 5");
  }
  throw Error("UnknownName", "unknown lattice name: " + base);
}

}  // namespace

Lattice eval_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Block: {
      Lattice l = eval_block(e);
      return Lattice(l.gram(), pretty_print(e));
    }
    case Expr::Kind::Gram:
      return Lattice(e.gram, pretty_print(e));
    case Expr::Kind::Repeat: {
      Lattice part = eval_expr(e.children.at(0));
      IntMat g = part.gram();
      for (long i = 1; i < e.count; ++i) g = block_diag(g, part.gram());
      return Lattice(std::move(g), pretty_print(e));
    }
    case Expr::Kind::Sum: {
      IntMat g = eval_expr(e.children.at(0)).gram();
      for (std::size_t i = 1; i < e.children.size(); ++i)
        g = block_diag(g, eval_expr(e.children[i]).gram());
      return Lattice(std::move(g), pretty_print(e));
    }
  }
  throw Error("Internal", "unreachable");
}

Lattice make_named(const std::string& src) { return eval_expr(parse_expr(src)); }

std::optional<std::string> s_lattice_expression(long r, long a, int delta) {
  for (const auto& e : kSCatalog)
    if (e.r == r && e.a == a && e.delta == delta) return std::string(e.expr);
  return std::nullopt;
}

std::vector<std::array<long, 3>> s_lattice_catalog() {
  std::vector<std::array<long, 3>> out;
  for (const auto& e : kSCatalog) out.push_back({e.r, e.a, static_cast<long>(e.delta)});
  return out;
}

namespace {

void accumulate_blocks(const Expr& e, long multiplicity, std::map<std::string, long>& out) {
  switch (e.kind) {
    case Expr::Kind::Gram:
      throw Error("NotExpression", "Gram literals are not catalog block expressions");
    case Expr::Kind::Sum:
      for (const Expr& c : e.children) accumulate_blocks(c, multiplicity, out);
      return;
    case Expr::Kind::Repeat:
      accumulate_blocks(e.children.at(0), multiplicity * e.count, out);
      return;
    case Expr::Kind::Block: {
      if (e.base == "S") {
        auto expr = s_lattice_expression(e.params.at(0), e.params.at(1),
                                         static_cast<int>(e.params.at(2)));
        if (!expr) throw Error("UnrealizableInvariants", "S triple outside catalog");
        accumulate_blocks(parse_expr(*expr), multiplicity, out);
        return;
      }
      if (e.base == "OmegaPerp") {
        long m = e.params.at(0);
        if (m == 3) {
          accumulate_blocks(parse_expr("U + U(3)*2 + A2*2"), multiplicity, out);
          return;
        }
        if (m == 5) {
          accumulate_blocks(parse_expr("U + U(5)*2"), multiplicity, out);
          return;
        }
        throw Error("UnknownName", "OmegaPerp expansion available for m = 3, 5");
      }
      out[pretty_print(e)] += multiplicity;
      return;
    }
  }
}

}  // namespace

std::map<std::string, long> block_multiset(const Expr& e) {
  std::map<std::string, long> out;
  accumulate_blocks(e, 1, out);
  return out;
}

}  // namespace k3lat
