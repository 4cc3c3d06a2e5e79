#pragma once

#include "k3lat/cyclotomic.hpp"
#include "k3lat/matrix.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace k3lat {

// The local action at an isolated fixed point of type t is
// diag(zeta^(t+1), zeta^(m-t)); the point contribution is
// 1/det(I - A) = 1/((1 - zeta^(t+1)) (1 - zeta^(m-t))).
//
// Fraction keeps the alternative indexing 1/((1 - zeta^t)(1 - zeta^(m-t+1)))
// for auditing; it degenerates at t = 1.
enum class PointConvention { Matrix, Fraction };

long max_isolated_type(long m);  // (m-2)/2

Cyclotomic point_contribution(long m, long t,
                              PointConvention conv = PointConvention::Matrix);

// (1 + zeta) (1 - g) / (1 - zeta)^2
Cyclotomic curve_contribution(long m, long g);

// 1 + zeta^(m-1)
Cyclotomic lefschetz_number(long m);

struct FixedLocusHypothesis {
  long m = 0;
  std::vector<long> unknown_types;            // free multiplicities n_t >= 0
  std::vector<long> forced_zero_types;        // n_t = 0 (bookkeeping only)
  std::variant<long, std::pair<long, long>> h = 0L;  // fixed value or range

  bool h_is_free() const { return std::holds_alternative<std::pair<long, long>>(h); }
};

struct LefschetzSystem {
  long m = 0;
  std::vector<std::string> unknowns;  // "n_t" columns, then possibly "h"
  bool has_h_column = false;
  std::pair<long, long> h_range{0, 0};
  RatMat a;               // phi(m) rows
  std::vector<Rat> rhs;
};

// Equate coefficients of sum n_t a(t) + h b with L(eta) in the power basis.
LefschetzSystem build_system(const FixedLocusHypothesis& hyp,
                             PointConvention conv = PointConvention::Matrix);

using Solution = std::map<std::string, long>;

// Nonnegative integer solutions within the box (n_t in [0, bound]; a free h
// ranges over its own interval). Exact elimination first, then enumeration
// of the free variables; output in lexicographic column order.
std::vector<Solution> solve_nonneg(const LefschetzSystem& sys, long bound = 24);

struct PrintedSystem {
  std::string which;  // "m14" or "m22"
  long order = 0;
  std::vector<std::string> unknowns;
  std::vector<std::vector<Int>> rows;  // coefficients then rhs
};

PrintedSystem load_printed_system(const std::string& path);

// Nonnegative solutions of a stored verbatim system over [0, bound]^k.
std::vector<Solution> solve_printed(const PrintedSystem& sys, long bound = 24);

}  // namespace k3lat
