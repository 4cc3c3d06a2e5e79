#include "k3lat/families.hpp"

#include "k3lat/cyclotomic.hpp"
#include "k3lat/error.hpp"

#include <cstdlib>
#include <fstream>

namespace k3lat {

void validate(const InvolutionInvariants& inv) {
  long cap = inv.r < 22 - inv.r ? inv.r : 22 - inv.r;
  if (inv.r < 1 || inv.r > 20 || inv.a < 0 || inv.a > cap || (inv.delta != 0 && inv.delta != 1))
    throw Error("InvalidTriple", "invalid involution invariants (r,a,delta)");
}

FixedLocusP2 involution_invariants_to_fixed_locus(const InvolutionInvariants& inv) {
  validate(inv);
  FixedLocusP2 out;
  if (inv.r == 10 && inv.a == 10 && inv.delta == 0) {
    out.kind = FixedLocusP2::Kind::Empty;
    out.k = 0;
    out.g = 0;
    return out;
  }
  if (inv.r == 10 && inv.a == 8 && inv.delta == 0) {
    out.kind = FixedLocusP2::Kind::TwoElliptic;
    out.k = 2;
    out.g = 1;
    return out;
  }
  if ((inv.r - inv.a) % 2 != 0 || (22 - inv.r - inv.a) % 2 != 0)
    throw Error("InvalidTriple", "fixed-locus formulas need r = a (mod 2)");
  out.kind = FixedLocusP2::Kind::Curves;
  out.k = (inv.r - inv.a) / 2 + 1;
  out.g = (22 - inv.r - inv.a) / 2;
  return out;
}

bool admits_symplectic_involution(const InvolutionInvariants& inv) {
  validate(inv);
  if (inv.a > 16 - inv.r) return true;
  return inv.delta == 0 && inv.r == 10 && inv.a == 6;
}

bool admits_symplectic_order3(const FixedLocusP3& fl) {
  // Admissible pairs: non-symplectic automorphisms of order 3 fix at most 9
  // points and at most 6 curves, and fix something.
  if (fl.n < 0 || fl.k < 0 || fl.n > 9 || fl.k > 6 || (fl.n == 0 && fl.k == 0))
    throw Error("UnknownFamily", "no order-3 family with this fixed locus");
  return fl.k == fl.n - 3 && fl.n >= 6 && fl.n <= 9;
}

const char* to_string(Coexistence c) {
  switch (c) {
    case Coexistence::Impossible: return "Impossible";
    case Coexistence::AtMostCountable: return "AtMostCountable";
    case Coexistence::GenericImpossible: return "GenericImpossible";
    case Coexistence::GenericTwoDimImpossible: return "GenericTwoDimImpossible";
    case Coexistence::CriterionByInvariants: return "CriterionByInvariants";
  }
  return "?";
}

CoexistenceVerdict same_order_coexistence(long m) {
  switch (m) {
    case 2:
    case 3:
      return {Coexistence::CriterionByInvariants, true,
              "decided by the involution / order-3 classifiers"};
    case 4:
      return {Coexistence::GenericTwoDimImpossible, true,
              "generic two-dimensional family obstructed; a rigid surface realizes both"};
    case 5:
      return {Coexistence::AtMostCountable, true,
              "moduli dimension 0; a rigid surface realizes both"};
    case 6:
      return {Coexistence::GenericImpossible, true,
              "generic member obstructed; a 1-dimensional family realizes both"};
    case 7:
    case 8:
      return {Coexistence::Impossible, false, "no admissible transcendental rank"};
    default:
      throw Error("OutOfRange", "coexistence verdicts cover orders 2..8");
  }
}

long omega_rank(long m) {
  switch (m) {
    case 2: return 8;
    case 3: return 12;
    case 4: return 14;
    case 5: return 16;
    case 6: return 16;
    case 7: return 18;
    case 8: return 18;
    default: throw Error("OutOfRange", "omega rank recorded for orders 2..8");
  }
}

long moduli_dimension(long rank_t, long m) {
  if (m < 2) throw Error("OutOfRange", "order must be >= 2");
  if (m == 2) {
    if (rank_t < 2) throw Error("NotDivisible", "involution moduli need rank T >= 2");
    return rank_t - 2;
  }
  long phi = euler_phi(m);
  if (rank_t < phi || rank_t % phi != 0)
    throw Error("NotDivisible", "phi(m) must divide rank T");
  return rank_t / phi - 1;
}

TableRankRow tablerank_row(long m) {
  if (m < 2 || m > 8) throw Error("OutOfRange", "table covers orders 2..8");
  TableRankRow row;
  row.m = m;
  long rho_min = omega_rank(m) + 1;
  long t_budget = 22 - rho_min;
  if (m == 2) {
    row.bounds_form = true;
    row.rho_min = rho_min;
    row.rank_t_max = t_budget;
    row.moduli_max = moduli_dimension(t_budget, 2);
    return row;
  }
  // rank T descending, so rank NS ascends as printed.
  long phi = euler_phi(m);
  for (long t = (t_budget / phi) * phi; t >= phi; t -= phi) {
    row.rank_t.push_back(t);
    row.rho.push_back(22 - t);
    row.moduli.push_back(moduli_dimension(t, m));
  }
  return row;
}

bool p_to_2p_extension(long p, bool fixes_a_curve) {
  switch (p) {
    case 5:
    case 13:
    case 17:
    case 19:
      return true;
    case 7:
    case 11:
      return fixes_a_curve;
    default:
      throw Error("UnsupportedPrime", "extension criterion covers p in {5,7,11,13,17,19}");
  }
}

long symplectic_fixed_points(long n) {
  switch (n) {
    case 2: return 8;
    case 3: return 6;
    case 5: return 4;
    default: throw Error("Unsupported", "fixed-point registry covers n in {2,3,5}");
  }
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("RegistryNotFound", "cannot open registry: " + path);
  Registry reg;
  try {
    in >> reg.raw_;
  } catch (const nlohmann::json::exception& e) {
    throw Error("BadRegistry", std::string("registry parse error: ") + e.what());
  }
  for (const auto& rec : reg.raw_.at("families")) {
    FamilyDescriptor fd;
    fd.order = rec.at("order").get<long>();
    fd.key = rec.at("key").get<std::string>();
    fd.record = rec;
    reg.families_.push_back(std::move(fd));
  }
  return reg;
}

const FamilyDescriptor& Registry::lookup(long order, const std::string& key) const {
  for (const auto& f : families_)
    if (f.order == order && f.key == key) return f;
  throw Error("UnknownFamily",
              "no registry record for order " + std::to_string(order) + ", key '" + key + "'");
}

const nlohmann::json& Registry::table1() const { return raw_.at("table1"); }

const nlohmann::json& Registry::omega(long m) const {
  return raw_.at("omega").at(std::to_string(m));
}

std::string resolve_data_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("K3LAT_DATA"); env && *env) return env;
#ifdef K3LAT_DEFAULT_DATA_DIR
  return K3LAT_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace k3lat
