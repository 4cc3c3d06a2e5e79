#include "k3lat/cyclotomic.hpp"

#include "k3lat/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace k3lat;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Cyclotomic random_elem(long m) {
  Cyclotomic out(m);
  Cyclotomic acc(m);
  for (long i = 0; i < euler_phi(m); ++i) {
    Rat c(oracle::rand_between(-3, 3), oracle::rand_between(1, 4));
    acc = acc + Cyclotomic::from_rat(m, c) * Cyclotomic::zeta_pow(m, i);
  }
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials, small orders") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(14) == ints({1, -1, 1, -1, 1, -1, 1}));
  CHECK(euler_phi(14) == 6);
  CHECK(euler_phi(22) == 10);
  CHECK(euler_phi(66) == 20);
}

TEST_CASE("product of Phi_d over divisors is x^m - 1") {
  for (long m = 1; m <= 66; ++m) {
    std::vector<Rat> prod{Rat(1)};
    for (long d = 1; d <= m; ++d) {
      if (m % d) continue;
      auto phi = cyclotomic_polynomial(d);
      std::vector<Rat> next(prod.size() + phi.size() - 1, Rat(0));
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * Rat(phi[j]);
      prod = std::move(next);
    }
    REQUIRE(prod.size() == static_cast<std::size_t>(m + 1));
    CHECK(prod[0] == Rat(-1));
    CHECK(prod[m] == Rat(1));
    for (long i = 1; i < m; ++i) CHECK(prod[i] == Rat(0));
  }
}

TEST_CASE("small fixed identities") {
  SUBCASE("zeta_2 squared is 1") {
    Cyclotomic z = Cyclotomic::zeta_pow(2, 1);
    CHECK(z * z == Cyclotomic::from_rat(2, 1));
    CHECK(z.coeffs() == std::vector<Rat>{Rat(-1)});
  }
  SUBCASE("norm of 1 - zeta_3") {
    Cyclotomic one = Cyclotomic::from_rat(3, 1);
    Cyclotomic z = Cyclotomic::zeta_pow(3, 1);
    Cyclotomic z2 = Cyclotomic::zeta_pow(3, 2);
    CHECK((one - z) * (one - z2) == Cyclotomic::from_rat(3, 3));
  }
  SUBCASE("inverse undoes multiplication, m = 5") {
    Cyclotomic one = Cyclotomic::from_rat(5, 1);
    Cyclotomic a = one - Cyclotomic::zeta_pow(5, 1);
    CHECK(a.inverse() * a == one);
  }
  SUBCASE("inverse of zero fails") {
    CHECK_THROWS_AS(Cyclotomic(7).inverse(), Error);
  }
}

TEST_CASE("field axioms sampled for every order up to 66") {
  for (long m = 2; m <= 66; ++m) {
    Cyclotomic a = random_elem(m);
    Cyclotomic b = random_elem(m);
    Cyclotomic c = random_elem(m);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::from_rat(m, 1));
  }
}
