#pragma once

#include "k3lat/expr.hpp"
#include "k3lat/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

// Invariant-level view of a lattice, enough for the obstruction tests. Some
// registry lattices (OmegaPerp(4)) are only known at this level.
struct LatticeInvariants {
  long rank = 0;
  std::optional<std::pair<long, long>> sig;
  std::vector<Int> invariant_factors;

  static LatticeInvariants of(const Lattice& l);
  long length() const { return static_cast<long>(invariant_factors.size()); }
  long length_q(const Int& q) const { return k3lat::length_q(invariant_factors, q); }
};

struct IsotropicSubgroup {
  // generators as coordinate vectors over the discriminant-group generators
  std::vector<std::vector<Int>> generators;
  Int order;
};

// All isotropic subgroups of the given order (q = 0 mod 2Z and b = 0 mod Z
// on the subgroup). Brute force; throws TooLarge past 2^16 group order.
std::vector<IsotropicSubgroup> isotropic_subgroups(const DiscriminantForm& form, const Int& order);

// Even overlattice generated by L and lifts of the given glue classes.
Lattice overlattice_from_glue(const Lattice& l, const std::vector<std::vector<Int>>& generators);

// All even overlattices of the given index, one per isotropic subgroup,
// sorted by Gram-matrix lexicographic order.
std::vector<Lattice> overlattices(const Lattice& l, const Int& index);

enum class EmbedStatus { Obstructed, Inconclusive, EmbeddedByConstruction };

struct EmbeddingVerdict {
  EmbedStatus status = EmbedStatus::Inconclusive;
  std::string reason;
  std::optional<std::string> witness;
};

const char* to_string(EmbedStatus s);

// Necessary conditions for a primitive embedding S -> W (m = rank W - rank S):
//   (a) componentwise signature bound,
//   (b) for every prime power q:  l_q(W) <= l_q(S) + m,
//   (c) for every prime p:        l_p(W) >= l_p(S) - m.
// Returns Obstructed with the violated inequality, else Inconclusive.
// Throws RankMismatch when rank S > rank W.
EmbeddingVerdict primitive_embedding_length_obstruction(const LatticeInvariants& s,
                                                        const LatticeInvariants& w);

enum class Existence { Exists, No, Unknown };

const char* to_string(Existence e);

struct SplitOffResult {
  LatticeInvariants complement;  // invariants forced on the complement
  Existence existence = Existence::Unknown;
  std::string reason;
};

// A unimodular S primitively embedded in W splits off: W = S + L. Computes
// the invariants L must have and decides existence where the p-elementary
// classification applies. Throws NotUnimodular.
SplitOffResult split_off_unimodular(const Lattice& s, const Lattice& w);

// Syntactic test: the block multiset of s is contained in that of w.
// Throws NotExpression when either tree contains a Gram literal.
EmbeddingVerdict direct_summand_embedding(const Expr& s, const Expr& w);

}  // namespace k3lat
