#include "k3lat/linalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace k3lat;

namespace {

IntMat gram_u() { return IntMat{{Int(0), Int(1)}, {Int(1), Int(0)}}; }
IntMat gram_a2() { return IntMat{{Int(-2), Int(1)}, {Int(1), Int(-2)}}; }

}  // namespace

TEST_CASE("smith normal form on fixed inputs") {
  SUBCASE("already diagonal") {
    IntMat m{{Int(2), Int(0)}, {Int(0), Int(2)}};
    auto s = smith_normal_form(m);
    CHECK(s.diagonal() == std::vector<Int>{2, 2});
  }
  SUBCASE("hyperbolic plane is unimodular") {
    auto s = smith_normal_form(gram_u());
    CHECK(s.diagonal() == std::vector<Int>{1, 1});
  }
  SUBCASE("A2 has determinant 3") {
    auto s = smith_normal_form(gram_a2());
    CHECK(s.diagonal() == std::vector<Int>{1, 3});
  }
}

TEST_CASE("smith normal form contract on random matrices") {
  for (int iter = 0; iter < 300; ++iter) {
    long rows = oracle::rand_between(1, 6);
    long cols = oracle::rand_between(1, 6);
    IntMat m(rows, cols);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) m.at(i, j) = oracle::rand_between(-9, 9);
    auto s = smith_normal_form(m);

    CHECK(s.u * m * s.v == s.d);
    Int du = det_int(s.u);
    Int dv = det_int(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(s.u * s.u_inv == IntMat::identity(rows));
    CHECK(s.v * s.v_inv == IntMat::identity(cols));

    auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      CHECK(diag[i] >= 0);
      if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
      if (i + 1 < diag.size() && diag[i] == 0) CHECK(diag[i + 1] == 0);
    }
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);

    if (rows == cols) {
      Int prod = 1;
      for (const Int& x : diag) prod *= x;
      Int dm = oracle::det_cofactor(m);
      CHECK(prod == (dm < 0 ? Int(-dm) : dm));
    }
  }
}

TEST_CASE("signature on fixed inputs") {
  CHECK(signature(to_rat(gram_u())) == std::make_pair(1L, 1L));
  IntMat h5{{Int(2), Int(1)}, {Int(1), Int(-2)}};
  CHECK(signature(to_rat(h5)) == std::make_pair(1L, 1L));
  CHECK_THROWS_AS(signature(RatMat{{Rat(0)}}), Error);
}

TEST_CASE("signature is a congruence invariant") {
  for (int iter = 0; iter < 80; ++iter) {
    IntMat g = oracle::random_even_gram(6, 6);
    auto sig = signature(to_rat(g));
    CHECK(sig.first + sig.second == static_cast<long>(g.rows()));
    IntMat p = oracle::random_unimodular(g.rows());
    IntMat conj = p.transposed() * g * p;
    CHECK(signature(to_rat(conj)) == sig);
  }
}

TEST_CASE("rational_solve on fixed inputs") {
  SUBCASE("identity") {
    RatMat a = to_rat(IntMat::identity(3));
    std::vector<Rat> b(3, Rat(0));
    auto sol = rational_solve(a, b);
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.empty());
    CHECK(sol.particular == std::vector<Rat>(3, Rat(0)));
  }
  SUBCASE("one equation, one free variable") {
    RatMat a(1, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    auto sol = rational_solve(a, {Rat(2)});
    REQUIRE(sol.consistent);
    CHECK(sol.particular == std::vector<Rat>{Rat(2), Rat(0)});
    REQUIRE(sol.kernel.size() == 1);
    // kernel spans (1,-1)
    CHECK(sol.kernel[0][0] == -sol.kernel[0][1]);
    CHECK(sol.kernel[0][1] != 0);
  }
  SUBCASE("inconsistent") {
    RatMat a(2, 1);
    a.at(0, 0) = 1;
    a.at(1, 0) = 1;
    auto sol = rational_solve(a, {Rat(1), Rat(2)});
    CHECK_FALSE(sol.consistent);
  }
}

TEST_CASE("rational_solve solutions actually solve the system") {
  for (int iter = 0; iter < 120; ++iter) {
    long rows = oracle::rand_between(1, 5);
    long cols = oracle::rand_between(1, 5);
    RatMat a(rows, cols);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) a.at(i, j) = Rat(oracle::rand_between(-5, 5));
    std::vector<Rat> b(rows);
    for (long i = 0; i < rows; ++i) b[i] = Rat(oracle::rand_between(-5, 5));
    auto sol = rational_solve(a, b);
    if (!sol.consistent) continue;
    CHECK(a * sol.particular == b);
    for (const auto& k : sol.kernel) {
      std::vector<Rat> x = sol.particular;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += Rat(3) * k[j];
      CHECK(a * x == b);
    }
  }
}

TEST_CASE("hermite_saturation") {
  SUBCASE("finite-index sublattice of Z^2") {
    IntMat b{{Int(2), Int(0)}, {Int(0), Int(2)}};
    IntMat s = hermite_saturation(b);
    Int d = det_int(s);
    CHECK((d == 1 || d == -1));
  }
  SUBCASE("single column divided by content") {
    IntMat b(2, 1);
    b.at(0, 0) = 2;
    b.at(1, 0) = 4;
    IntMat s = hermite_saturation(b);
    REQUIRE(s.cols() == 1);
    Int g = boost::multiprecision::gcd(s.at(0, 0), s.at(1, 0));
    CHECK(g == 1);
    // same line as (1,2)
    CHECK(s.at(0, 0) * 2 == s.at(1, 0));
  }
  SUBCASE("glue-extended Nikulin basis saturates to Z^8") {
    // columns 2e_1..2e_7 and the all-ones vector (twice the glue class)
    IntMat b(8, 8);
    for (long i = 0; i < 7; ++i) b.at(i, i) = 2;
    for (long i = 0; i < 8; ++i) b.at(i, 7) = 1;
    Int idx = det_int(b);
    CHECK((idx == 128 || idx == -128));
    IntMat s = hermite_saturation(b);
    Int d = det_int(s);
    CHECK((d == 1 || d == -1));
  }
  SUBCASE("rank-deficient input is rejected") {
    IntMat b(2, 2);
    b.at(0, 0) = 1;
    b.at(1, 0) = 1;
    b.at(0, 1) = 2;
    b.at(1, 1) = 2;
    CHECK_THROWS_AS(hermite_saturation(b), Error);
  }
}

TEST_CASE("hermite_saturation contains the input columns integrally") {
  for (int iter = 0; iter < 60; ++iter) {
    long n = oracle::rand_between(2, 5);
    long k = oracle::rand_between(1, n);
    IntMat b(n, k);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < k; ++j) b.at(i, j) = oracle::rand_between(-6, 6);
    auto s = smith_normal_form(b);
    long rank = 0;
    for (const Int& x : s.diagonal())
      if (x != 0) ++rank;
    if (rank < k) continue;
    IntMat sat = hermite_saturation(b);
    for (long j = 0; j < k; ++j) {
      std::vector<Rat> rhs(n);
      for (long i = 0; i < n; ++i) rhs[i] = Rat(b.at(i, j));
      auto sol = rational_solve(to_rat(sat), rhs);
      REQUIRE(sol.consistent);
      for (const Rat& x : sol.particular) CHECK(denominator(x) == 1);
    }
  }
}
