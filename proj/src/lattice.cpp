#include "k3lat/lattice.hpp"

#include "k3lat/error.hpp"

#include <algorithm>
#include <map>

namespace k3lat {

Lattice::Lattice(IntMat gram, std::string name_expr)
    : gram_(std::move(gram)), name_expr_(std::move(name_expr)) {
  if (gram_.rows() == 0) throw Error("EmptyLattice", "lattice must have rank >= 1");
  if (!gram_.is_symmetric()) throw Error("NotSymmetric", "Gram matrix must be symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (gram_.at(i, i) % 2 != 0)
      throw Error("OddLattice", "Gram matrix has an odd diagonal entry; only even lattices are supported");
  det_ = det_int(gram_);
  if (det_ == 0) throw Error("SingularMatrix", "Gram matrix is degenerate");
  signature_ = k3lat::signature(to_rat(gram_));
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::string name;
  if (!a.name_expr().empty() && !b.name_expr().empty())
    name = a.name_expr() + " + " + b.name_expr();
  return Lattice(block_diag(a.gram(), b.gram()), name);
}

Lattice rescale(const Lattice& l, const Int& n) {
  if (n == 0) throw Error("ZeroScale", "rescaling by zero is not a lattice");
  IntMat g = l.gram();
  g.scale(n);
  return Lattice(std::move(g));
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  // A_L = Z^n / G Z^n; invariant factors from the SNF, generator of the
  // factor Z/d_i is column i of u_inv, read in dual-basis coordinates.
  SnfResult s = smith_normal_form(l.gram());
  std::vector<Int> diag = s.diagonal();
  DiscriminantGroup g;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] > 1) {
      g.invariant_factors.push_back(diag[i]);
      keep.push_back(i);
    }
  g.generator_coords = IntMat(l.gram().rows(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (std::size_t r = 0; r < l.gram().rows(); ++r)
      g.generator_coords.at(r, c) = s.u_inv.at(r, keep[c]);
  return g;
}

namespace {

RatMat gram_inverse(const Lattice& l) {
  // Solve G X = I exactly.
  const std::size_t n = l.gram().rows();
  RatMat g = to_rat(l.gram());
  RatMat inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Rat> e(n, Rat(0));
    e[col] = 1;
    LinearSolution sol = rational_solve(g, e);
    if (!sol.consistent) throw Error("SingularMatrix", "Gram matrix is degenerate");
    for (std::size_t r = 0; r < n; ++r) inv.at(r, col) = sol.particular[r];
  }
  return inv;
}

}  // namespace

DiscriminantForm::DiscriminantForm(DiscriminantGroup group, RatMat gram_inv)
    : group_(std::move(group)), gram_inv_(std::move(gram_inv)) {
  const std::size_t k = group_.invariant_factors.size();
  q_gen_.resize(k);
  b_gen_ = RatMat(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> gi(gram_inv_.rows());
    for (std::size_t r = 0; r < gram_inv_.rows(); ++r) gi[r] = group_.generator_coords.at(r, i);
    q_gen_[i] = q_dual(gi);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Int> gj(gram_inv_.rows());
      for (std::size_t r = 0; r < gram_inv_.rows(); ++r) gj[r] = group_.generator_coords.at(r, j);
      Rat v(0);
      for (std::size_t a = 0; a < gram_inv_.rows(); ++a)
        for (std::size_t b = 0; b < gram_inv_.rows(); ++b)
          v += Rat(gi[a]) * gram_inv_.at(a, b) * Rat(gj[b]);
      b_gen_.at(i, j) = rat_mod(v, Rat(1));
    }
  }
}

Rat DiscriminantForm::q_dual(const std::vector<Int>& dual_coords) const {
  Rat v(0);
  for (std::size_t a = 0; a < gram_inv_.rows(); ++a) {
    if (dual_coords[a] == 0) continue;
    for (std::size_t b = 0; b < gram_inv_.rows(); ++b)
      v += Rat(dual_coords[a]) * gram_inv_.at(a, b) * Rat(dual_coords[b]);
  }
  return rat_mod(v, Rat(2));
}

Rat DiscriminantForm::q_of(const std::vector<Int>& coords) const {
  std::vector<Int> dual(gram_inv_.rows(), Int(0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t r = 0; r < gram_inv_.rows(); ++r)
      dual[r] += coords[i] * group_.generator_coords.at(r, i);
  return q_dual(dual);
}

Rat DiscriminantForm::b_of(const std::vector<Int>& x, const std::vector<Int>& y) const {
  Rat v(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (x[i] != 0 && y[j] != 0) v += Rat(x[i] * y[j]) * b_gen_.at(i, j);
  return rat_mod(v, Rat(1));
}

std::vector<std::vector<Int>> DiscriminantForm::elements() const {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(num_generators(), Int(0));
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      cur[i] += 1;
      if (cur[i] < factors()[i]) break;
      cur[i] = 0;
    }
    if (i == cur.size()) break;
  }
  return out;
}

bool DiscriminantForm::all_q_integral() const {
  const std::size_t k = num_generators();
  if (order() <= Int(4096)) {
    for (const auto& e : elements())
      if (denominator(q_of(e)) != 1) return false;
    return true;
  }
  // 2-elementary group, q quadratic: values on generators and pairwise sums
  // determine all values.
  for (std::size_t i = 0; i < k; ++i)
    if (denominator(q_gen_[i]) != 1) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<Int> s(k, Int(0));
      s[i] = 1;
      s[j] = 1;
      if (denominator(q_of(s)) != 1) return false;
    }
  return true;
}

DiscriminantForm discriminant_form(const Lattice& l) {
  return DiscriminantForm(discriminant_group(l), gram_inverse(l));
}

long length(const Lattice& l) {
  return static_cast<long>(discriminant_group(l).invariant_factors.size());
}

long length_q(const std::vector<Int>& invariant_factors, const Int& q) {
  long n = 0;
  for (const Int& d : invariant_factors)
    if (d % q == 0) ++n;
  return n;
}

long length_q(const Lattice& l, const Int& q) {
  return length_q(discriminant_group(l).invariant_factors, q);
}

bool is_p_elementary(const Lattice& l, const Int& p) {
  for (const Int& d : discriminant_group(l).invariant_factors)
    if (d != p) return false;
  return true;
}

int delta_invariant(const Lattice& l) {
  if (!is_p_elementary(l, 2)) throw Error("Not2Elementary", "delta is defined for 2-elementary lattices");
  return discriminant_form(l).all_q_integral() ? 0 : 1;
}

PElementaryInvariants two_elementary_invariants(const Lattice& l) {
  if (!is_p_elementary(l, 2))
    throw Error("Not2Elementary", "lattice is not 2-elementary");
  PElementaryInvariants inv;
  inv.p = 2;
  inv.r = l.rank();
  inv.a = length(l);
  inv.delta = delta_invariant(l);
  inv.sig = l.signature();
  return inv;
}

bool exists_hyperbolic_p_elementary(const Int& p, long r, long a) {
  if (p == 2) throw Error("EvenPrime", "criterion applies to odd primes only");
  if (!is_prime(p)) throw Error("NotPrime", "p must be prime");
  if (a < 0 || r < 1) return false;
  if (a > r) return false;
  if (r % 2 != 0) return false;
  if (a % 2 == 0) {
    if (r % 4 != 2) return false;
  } else {
    // p = (-1)^(r/2 - 1) mod 4
    bool want_one = ((r / 2 - 1) % 2 == 0);
    long pm4 = static_cast<long>(p % 4);
    if (want_one && pm4 != 1) return false;
    if (!want_one && pm4 != 3) return false;
  }
  if (r % 8 != 2 && !(r > a && a > 0)) return false;
  return true;
}

bool two_elementary_forms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b) {
  if (a.factors() != b.factors()) return false;
  for (const Int& d : a.factors())
    if (d != 2) throw Error("Not2Elementary", "comparison implemented for 2-elementary forms");
  if (a.order() > Int(4096)) throw Error("TooLarge", "form comparison is exhaustive");
  auto values = [](const DiscriminantForm& f) {
    std::vector<Rat> v;
    for (const auto& e : f.elements()) v.push_back(f.q_of(e));
    std::sort(v.begin(), v.end());
    return v;
  };
  return values(a) == values(b);
}

}  // namespace k3lat
