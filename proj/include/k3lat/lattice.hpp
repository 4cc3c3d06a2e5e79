#pragma once

#include "k3lat/linalg.hpp"
#include "k3lat/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3lat {

// Even nondegenerate lattice given by its Gram matrix. The constructor
// rejects odd forms (every lattice in scope is even) and degenerate ones.
class Lattice {
 public:
  explicit Lattice(IntMat gram, std::string name_expr = "");

  const IntMat& gram() const { return gram_; }
  long rank() const { return static_cast<long>(gram_.rows()); }
  const Int& det() const { return det_; }
  std::pair<long, long> signature() const { return signature_; }
  const std::string& name_expr() const { return name_expr_; }
  bool is_unimodular() const { return det_ == 1 || det_ == -1; }

 private:
  IntMat gram_;
  std::string name_expr_;
  Int det_;
  std::pair<long, long> signature_;
};

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const Int& n);  // throws ZeroScale

// L^vee / L as invariant factors d_1 | d_2 | ... (each > 1), with generator
// coordinates in the dual basis (columns).
struct DiscriminantGroup {
  std::vector<Int> invariant_factors;
  IntMat generator_coords;  // rank x k, column i generates Z/d_i

  Int order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
  }
};

DiscriminantGroup discriminant_group(const Lattice& l);

// Finite quadratic form q: A_L -> Q/2Z with pairing b: A_L x A_L -> Q/Z.
// Elements are coordinate vectors over the invariant-factor generators.
class DiscriminantForm {
 public:
  DiscriminantForm(DiscriminantGroup group, RatMat gram_inv);

  const DiscriminantGroup& group() const { return group_; }
  const std::vector<Int>& factors() const { return group_.invariant_factors; }
  std::size_t num_generators() const { return group_.invariant_factors.size(); }
  Int order() const { return group_.order(); }

  // q on generator i, normalized to [0,2)
  const Rat& q_generator(std::size_t i) const { return q_gen_[i]; }
  // b on generator pair, normalized to [0,1)
  const Rat& b_generators(std::size_t i, std::size_t j) const { return b_gen_.at(i, j); }

  Rat q_of(const std::vector<Int>& coords) const;                       // mod 2Z
  Rat b_of(const std::vector<Int>& x, const std::vector<Int>& y) const;  // mod Z
  // q on a raw dual-basis coordinate vector (length = rank of L)
  Rat q_dual(const std::vector<Int>& dual_coords) const;

  // Enumerate all element coordinate vectors (mixed radix). Guarded by the
  // caller, the group order fits comfortably in memory for everything here.
  std::vector<std::vector<Int>> elements() const;

  bool all_q_integral() const;

 private:
  DiscriminantGroup group_;
  RatMat gram_inv_;
  std::vector<Rat> q_gen_;
  RatMat b_gen_;
};

DiscriminantForm discriminant_form(const Lattice& l);

// Minimal number of generators of the discriminant group, or with q = p^k
// given, the number of invariant factors divisible by q.
long length(const Lattice& l);
long length_q(const Lattice& l, const Int& q);
long length_q(const std::vector<Int>& invariant_factors, const Int& q);

bool is_p_elementary(const Lattice& l, const Int& p);

// delta = 0 iff the discriminant form takes only integer values (mod 2Z).
// Exhaustive when the group is small, generators plus pairwise sums
// otherwise (sufficient: the group is 2-elementary and q is quadratic).
// Throws Not2Elementary.
int delta_invariant(const Lattice& l);

struct PElementaryInvariants {
  Int p;
  long r = 0;  // rank
  long a = 0;  // length
  std::optional<int> delta;
  std::pair<long, long> sig{0, 0};
};

PElementaryInvariants two_elementary_invariants(const Lattice& l);  // Not2Elementary

// Existence of a hyperbolic p-elementary lattice with invariants (r, a),
// p odd. Throws EvenPrime for p = 2.
bool exists_hyperbolic_p_elementary(const Int& p, long r, long a);

// Isomorphism test for discriminant forms of 2-elementary lattices: equal
// invariant factors and equal multiset of q-values over the whole group.
bool two_elementary_forms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b);

}  // namespace k3lat
