#include "k3lat/lattice.hpp"

#include "k3lat/catalog.hpp"
#include "k3lat/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace k3lat;

TEST_CASE("named lattices have the expected basic invariants") {
  struct Row {
    const char* expr;
    long rank;
    long det_abs;
    std::pair<long, long> sig;
  };
  const Row rows[] = {
      {"U", 2, 1, {1, 1}},
      {"U(3)", 2, 9, {1, 1}},
      {"A2", 2, 3, {0, 2}},
      {"A1", 1, 2, {0, 1}},
      {"D4", 4, 4, {0, 4}},
      {"E6", 6, 3, {0, 6}},
      {"E7", 7, 2, {0, 7}},
      {"E8", 8, 1, {0, 8}},
      {"E8(2)", 8, 256, {0, 8}},
      {"K7", 2, 7, {0, 2}},
      {"H5", 2, 5, {1, 1}},
      {"N", 8, 64, {0, 8}},
      {"<2>", 1, 2, {1, 0}},
      {"A2(-1)", 2, 3, {2, 0}},
      {"U + U(3) + A2*2", 8, 81, {2, 6}},
  };
  for (const Row& r : rows) {
    CAPTURE(r.expr);
    Lattice l = make_named(r.expr);
    CHECK(l.rank() == r.rank);
    Int d = l.det() < 0 ? Int(-l.det()) : l.det();
    CHECK(d == r.det_abs);
    CHECK(l.signature() == r.sig);
  }
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS_AS(make_named("<3>"), Error);               // odd diagonal
  CHECK_THROWS_AS(make_named("[ 2 1 ; 1 2 ] + [ 0 0 ; 0 0 ]"), Error);  // degenerate
  CHECK_THROWS_AS(make_named("Foo"), Error);               // unknown name
  CHECK_THROWS_AS(make_named("S(3,7,0)"), Error);          // outside catalog
  CHECK_THROWS_AS(rescale(make_named("U"), 0), Error);     // zero scale
}

TEST_CASE("rescale") {
  Lattice u5 = make_named("U(5)");
  CHECK(u5.gram().at(0, 1) == 5);
  CHECK(u5.gram().at(0, 0) == 0);
  CHECK(rescale(make_named("A2"), -1).signature() == std::make_pair(2L, 0L));
  Int d = make_named("E8(2)").det();
  CHECK(d == 256);
}

TEST_CASE("discriminant groups of the classics") {
  CHECK(discriminant_group(make_named("U")).invariant_factors.empty());
  CHECK(discriminant_group(make_named("U(5)")).invariant_factors == std::vector<Int>{5, 5});
  CHECK(discriminant_group(make_named("E8(2)")).invariant_factors == std::vector<Int>(8, Int(2)));
  CHECK(discriminant_group(make_named("K7")).invariant_factors == std::vector<Int>{7});
  CHECK(discriminant_group(make_named("N")).invariant_factors == std::vector<Int>(6, Int(2)));
}

TEST_CASE("discriminant form values") {
  SUBCASE("<2> has q = 1/2 on the generator") {
    DiscriminantForm f = discriminant_form(make_named("<2>"));
    REQUIRE(f.num_generators() == 1);
    CHECK(f.q_generator(0) == Rat(1, 2));
  }
  SUBCASE("A2 generator has q = -2/3 mod 2Z") {
    DiscriminantForm f = discriminant_form(make_named("A2"));
    REQUIRE(f.num_generators() == 1);
    CHECK(f.q_generator(0) == Rat(4, 3));  // -2/3 normalized into [0,2)
  }
  SUBCASE("Nikulin lattice has the discriminant form of U(2)^3") {
    DiscriminantForm n = discriminant_form(make_named("N"));
    DiscriminantForm u23 = discriminant_form(make_named("U(2)*3"));
    CHECK(two_elementary_forms_isomorphic(n, u23));
    // and not that of <2>*3 + <-2>*3, say
    DiscriminantForm other = discriminant_form(make_named("<2>*3 + <-2>*3"));
    CHECK_FALSE(two_elementary_forms_isomorphic(n, other));
  }
}

TEST_CASE("length and prime-power length") {
  CHECK(length(make_named("K7")) == 1);
  CHECK(length_q(make_named("K7"), 7) == 1);
  CHECK(length(make_named("U(3)")) == 2);
  CHECK(length_q(make_named("U + U(3) + A2*2"), 3) == 4);
  // the order-4 coinvariant complement: factors (2,2,4,4,4,4)
  std::vector<Int> om4{2, 2, 4, 4, 4, 4};
  CHECK(length_q(om4, 4) == 4);
  CHECK(length_q(om4, 2) == 6);
}

TEST_CASE("p-elementary predicates") {
  CHECK(is_p_elementary(make_named("E8(2)"), 2));
  CHECK(is_p_elementary(make_named("U + H5"), 5));
  CHECK(length(make_named("U + H5")) == 1);
  Lattice mixed = make_named("U(3) + <2>");
  for (long p : {2, 3, 5, 7}) CHECK_FALSE(is_p_elementary(mixed, p));
  // unimodular lattices are p-elementary with a = 0
  CHECK(is_p_elementary(make_named("U"), 2));
  CHECK(is_p_elementary(make_named("U"), 3));
}

TEST_CASE("delta invariant") {
  CHECK(delta_invariant(make_named("U(2) + E8(2)")) == 0);
  CHECK(delta_invariant(make_named("<2> + E8(2)")) == 1);
  CHECK(delta_invariant(make_named("U + N")) == 0);
  CHECK_THROWS_AS(delta_invariant(make_named("U(3)")), Error);
}

TEST_CASE("delta becomes 1 after adding <-2>") {
  for (const char* expr : {"U(2)", "E8(2)", "U + N", "U(2) + E8(2)", "U + E8*2"}) {
    CAPTURE(expr);
    Lattice l = direct_sum(make_named(expr), make_named("<-2>"));
    CHECK(delta_invariant(l) == 1);
  }
}

TEST_CASE("two-elementary invariant triples of the catalog surfaces") {
  struct Row {
    const char* expr;
    long r, a;
    int delta;
  };
  const Row rows[] = {
      {"<2> + E8(2)", 9, 9, 1},   {"U(2) + E8(2)", 10, 10, 0}, {"U + E8(2)", 10, 8, 0},
      {"U + N", 10, 6, 0},        {"U(2) + E8 + D4", 14, 4, 0}, {"U + D4*3", 14, 6, 0},
      {"U + E8*2", 18, 0, 0},     {"U(2) + E8*2", 18, 2, 0},   {"U + E8 + D4*2", 18, 4, 0},
  };
  for (const Row& row : rows) {
    CAPTURE(row.expr);
    PElementaryInvariants inv = two_elementary_invariants(make_named(row.expr));
    CHECK(inv.r == row.r);
    CHECK(inv.a == row.a);
    CHECK(*inv.delta == row.delta);
    CHECK(inv.sig == std::make_pair(1L, row.r - 1));
  }
}

TEST_CASE("S catalog representatives verify at construction") {
  for (const auto& [r, a, d] : s_lattice_catalog()) {
    CAPTURE(r);
    CAPTURE(a);
    Lattice l = make_named("S(" + std::to_string(r) + "," + std::to_string(a) + "," +
                           std::to_string(d) + ")");
    CHECK(l.rank() == r);
  }
}

TEST_CASE("hyperbolic p-elementary existence") {
  CHECK_FALSE(exists_hyperbolic_p_elementary(3, 6, 6));
  CHECK(exists_hyperbolic_p_elementary(7, 4, 3));
  CHECK(exists_hyperbolic_p_elementary(11, 2, 2));
  CHECK(exists_hyperbolic_p_elementary(3, 10, 0));  // U + E8 witness
  CHECK_THROWS_AS(exists_hyperbolic_p_elementary(2, 4, 2), Error);
  CHECK_THROWS_AS(exists_hyperbolic_p_elementary(9, 4, 2), Error);
}

TEST_CASE("existence is consistent with catalog witnesses") {
  // every catalog lattice that is hyperbolic and p-elementary for odd p is a
  // witness the criterion must accept
  const char* exprs[] = {"U(3)", "U(5)", "U(7)", "U(11)", "U(7) + K7", "H5", "U(3) + A2"};
  for (const char* expr : exprs) {
    CAPTURE(expr);
    Lattice l = make_named(expr);
    auto factors = discriminant_group(l).invariant_factors;
    REQUIRE_FALSE(factors.empty());
    Int p = factors.front();
    for (const Int& d : factors) REQUIRE(d == p);
    REQUIRE(l.signature() == std::make_pair(1L, l.rank() - 1));
    CHECK(exists_hyperbolic_p_elementary(p, l.rank(), static_cast<long>(factors.size())));
  }
}

TEST_CASE("discriminant data behaves under direct sums") {
  for (int iter = 0; iter < 40; ++iter) {
    Lattice a(oracle::random_even_gram(4, 6));
    Lattice b(oracle::random_even_gram(4, 6));
    Lattice s = direct_sum(a, b);
    // determinant multiplicative
    CHECK(s.det() == a.det() * b.det());
    // per-prime-power lengths additive
    Int da = a.det() < 0 ? Int(-a.det()) : a.det();
    Int db = b.det() < 0 ? Int(-b.det()) : b.det();
    Int prod = da * db;
    for (Int q = 2; q <= 16; ++q) {
      if (prod % q != 0) continue;
      CHECK(length_q(s, q) == length_q(a, q) + length_q(b, q));
    }
    // |disc group| = |det|
    CHECK(discriminant_group(s).order() == (s.det() < 0 ? Int(-s.det()) : s.det()));
  }
}

TEST_CASE("q restricted to a summand is the summand form") {
  for (int iter = 0; iter < 25; ++iter) {
    Lattice a(oracle::random_even_gram(3, 6));
    Lattice b(oracle::random_even_gram(3, 6));
    Lattice s = direct_sum(a, b);
    DiscriminantForm fa = discriminant_form(a);
    DiscriminantForm fs = discriminant_form(s);
    for (int k = 0; k < 6; ++k) {
      std::vector<Int> dual_a(a.rank());
      for (long i = 0; i < a.rank(); ++i) dual_a[i] = oracle::rand_between(-4, 4);
      std::vector<Int> dual_s(s.rank(), Int(0));
      for (long i = 0; i < a.rank(); ++i) dual_s[i] = dual_a[i];
      CHECK(fa.q_dual(dual_a) == fs.q_dual(dual_s));
    }
  }
}

TEST_CASE("primitive sublattice and complement have equal determinant size in a unimodular ambient") {
  // Lambda = U^3 + E8^2 with the antidiagonal E8(2) inside E8 + E8
  Lattice lambda = make_named("U*3 + E8*2");
  REQUIRE(lambda.rank() == 22);
  REQUIRE((lambda.det() == 1 || lambda.det() == -1));
  IntMat emb(22, 8);
  for (long i = 0; i < 8; ++i) {
    emb.at(6 + i, i) = 1;
    emb.at(14 + i, i) = -1;
  }
  IntMat s_gram = emb.transposed() * lambda.gram() * emb;
  Lattice s(s_gram);
  CHECK(two_elementary_invariants(s).a == 8);
  CHECK(s.gram() == make_named("E8(2)").gram());

  IntMat comp = orthogonal_complement(lambda.gram(), emb);
  REQUIRE(comp.cols() == 14);
  Lattice t(comp.transposed() * lambda.gram() * comp);
  Int ds = s.det() < 0 ? Int(-s.det()) : s.det();
  Int dt = t.det() < 0 ? Int(-t.det()) : t.det();
  CHECK(ds == dt);
  CHECK(dt == 256);
}
