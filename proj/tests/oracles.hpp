#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include "k3lat/lattice.hpp"
#include "k3lat/matrix.hpp"

#include <random>
#include <set>
#include <vector>

namespace oracle {

using k3lat::Int;
using k3lat::IntMat;
using k3lat::Rat;

// Determinant by cofactor expansion; O(n!) but exercised only on small
// matrices, and entirely separate from the Gaussian-elimination route.
inline Int det_cofactor(const IntMat& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  Int out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * det_cofactor(minor);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20260810u);
  return gen;
}

inline long rand_between(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng());
}

// Random symmetric even integer matrix with nonzero determinant.
inline IntMat random_even_gram(long max_rank = 8, long max_entry = 8) {
  for (;;) {
    long n = rand_between(1, max_rank);
    IntMat g(n, n);
    for (long i = 0; i < n; ++i) {
      g.at(i, i) = 2 * rand_between(-max_entry / 2, max_entry / 2);
      for (long j = i + 1; j < n; ++j) {
        Int v = rand_between(-max_entry, max_entry);
        g.at(i, j) = v;
        g.at(j, i) = v;
      }
    }
    if (k3lat::det_int(g) != 0) return g;
  }
}

// Random unimodular matrix via a walk of elementary operations.
inline IntMat random_unimodular(long n, long ops = 24) {
  IntMat u = IntMat::identity(n);
  for (long s = 0; s < ops; ++s) {
    long i = rand_between(0, n - 1);
    long j = rand_between(0, n - 1);
    if (i == j) continue;
    Int c = rand_between(-2, 2);
    for (long k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
  }
  return u;
}

// Brute-force enumeration of isotropic subgroups of the given order as
// sorted element sets, by scanning every subset closure of candidate
// generators. Independent of the library's search.
inline std::set<std::vector<std::vector<Int>>> isotropic_subgroups_bruteforce(
    const k3lat::DiscriminantForm& form, long order) {
  auto elems = form.elements();
  const auto& factors = form.factors();
  auto add = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      c[i] = a[i] + b[i];
      c[i] %= factors[i];
    }
    return c;
  };
  std::set<std::vector<std::vector<Int>>> found;
  // close over all pairs of elements (groups of order <= 81 need at most
  // two generators at the orders exercised here)
  for (std::size_t x = 0; x < elems.size(); ++x)
    for (std::size_t y = x; y < elems.size(); ++y) {
      std::set<std::vector<Int>> h;
      h.insert(std::vector<Int>(factors.size(), Int(0)));
      std::vector<std::vector<Int>> frontier(h.begin(), h.end());
      while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& e : frontier)
          for (const auto& g : {elems[x], elems[y]}) {
            auto s = add(e, g);
            if (h.insert(s).second) next.push_back(s);
          }
        frontier = std::move(next);
      }
      if (static_cast<long>(h.size()) != order) continue;
      bool iso = true;
      std::vector<std::vector<Int>> hv(h.begin(), h.end());
      for (const auto& e : hv)
        if (form.q_of(e) != 0) iso = false;
      for (std::size_t i = 0; i < hv.size() && iso; ++i)
        for (std::size_t j = i; j < hv.size(); ++j)
          if (form.b_of(hv[i], hv[j]) != 0) {
            iso = false;
            break;
          }
      if (iso) found.insert(hv);
    }
  return found;
}

}  // namespace oracle
