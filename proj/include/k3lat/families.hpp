#pragma once

#include "k3lat/num.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

// Nikulin invariants (r, a, delta) of the invariant lattice of a
// non-symplectic involution.
struct InvolutionInvariants {
  long r = 0;
  long a = 0;
  int delta = 0;
};

// Throws InvalidTriple outside 1 <= r <= 20, 0 <= a <= min(r, 22-r),
// delta in {0,1}.
void validate(const InvolutionInvariants& inv);

struct FixedLocusP2 {
  enum class Kind { Empty, TwoElliptic, Curves };
  Kind kind = Kind::Curves;
  long k = 0;  // number of fixed curves
  long g = 0;  // genus of the non-rational fixed curve (0 = all rational)
};

// (10,10,0) -> empty, (10,8,0) -> two elliptic curves, otherwise
// k = (r-a)/2 + 1 curves, one of genus (22-r-a)/2 and the rest rational.
FixedLocusP2 involution_invariants_to_fixed_locus(const InvolutionInvariants& inv);

// delta = 1: a > 16-r; delta = 0: a > 16-r or (r,a) = (10,6).
bool admits_symplectic_involution(const InvolutionInvariants& inv);

struct FixedLocusP3 {
  long n = 0;  // fixed points
  long k = 0;  // fixed curves
};

// true iff k = n-3 and 6 <= n <= 9. Throws UnknownFamily off the registry
// of admissible pairs.
bool admits_symplectic_order3(const FixedLocusP3& fl);

enum class Coexistence {
  Impossible,
  AtMostCountable,
  GenericImpossible,
  GenericTwoDimImpossible,
  CriterionByInvariants,
};

const char* to_string(Coexistence c);

struct CoexistenceVerdict {
  Coexistence verdict;
  bool example_exists = false;  // a special/rigid family realizes both
  std::string note;
};

// Same-order symplectic/non-symplectic coexistence for 2 <= m <= 8.
CoexistenceVerdict same_order_coexistence(long m);

// rank of the coinvariant lattice Omega_{Z/mZ}, 2 <= m <= 8.
long omega_rank(long m);

struct TableRankRow {
  long m = 0;
  bool bounds_form = false;  // involution row prints as inequalities
  long rho_min = 0, rank_t_max = 0, moduli_max = 0;
  std::vector<long> rho, rank_t, moduli;
};

// Row of the possible (rank NS, rank T, moduli) table, computed from
// omega_rank and the moduli formula. Throws OutOfRange outside 2..8.
TableRankRow tablerank_row(long m);

// m = 2: rankT - 2; m >= 3: rankT/phi(m) - 1. Throws NotDivisible.
long moduli_dimension(long rank_t, long m);

// Order p extends to 2p: always for p = 5,13,17,19; for p = 7,11 only when
// the fixed locus contains a curve. Throws UnsupportedPrime.
bool p_to_2p_extension(long p, bool fixes_a_curve);

// Isolated fixed points of a symplectic automorphism of order n in {2,3,5}.
long symplectic_fixed_points(long n);

struct FamilyDescriptor {
  long order = 0;
  std::string key;
  nlohmann::json record;
};

class Registry {
 public:
  static Registry load(const std::string& path);

  const FamilyDescriptor& lookup(long order, const std::string& key) const;  // UnknownFamily
  const std::vector<FamilyDescriptor>& families() const { return families_; }
  const nlohmann::json& raw() const { return raw_; }
  const nlohmann::json& table1() const;
  const nlohmann::json& omega(long m) const;

 private:
  nlohmann::json raw_;
  std::vector<FamilyDescriptor> families_;
};

// Data directory resolution: explicit argument beats the K3LAT_DATA
// environment variable beats the compiled-in default.
std::string resolve_data_dir(const std::string& flag_value = "");

}  // namespace k3lat
