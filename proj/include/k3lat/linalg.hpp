#pragma once

#include "k3lat/matrix.hpp"

#include <utility>
#include <vector>

namespace k3lat {

// Smith normal form u*m*v = d with u, v unimodular and nonnegative diagonal
// entries in a divisibility chain d1 | d2 | ... . The inverses are tracked
// alongside because discriminant-group generators and saturations read off
// columns of u_inv.
struct SnfResult {
  IntMat d;
  IntMat u, v;
  IntMat u_inv, v_inv;

  std::vector<Int> diagonal() const {
    std::vector<Int> out;
    std::size_t n = d.rows() < d.cols() ? d.rows() : d.cols();
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
  }
};

SnfResult smith_normal_form(const IntMat& m);

// Inertia indices (n_plus, n_minus) of a symmetric nondegenerate rational
// matrix, via exact symmetric congruence elimination. Zero diagonals (even
// lattices such as U) are handled by a row+column addition that creates a
// nonzero pivot. Throws SingularMatrix when det = 0.
std::pair<long, long> signature(const RatMat& g);

Rat det_rat(const RatMat& m);
Int det_int(const IntMat& m);

struct LinearSolution {
  bool consistent = false;
  std::vector<Rat> particular;             // one solution (free vars = 0)
  std::vector<std::vector<Rat>> kernel;    // basis of the homogeneous space
  std::vector<std::size_t> pivot_columns;  // RREF bookkeeping
  std::vector<std::size_t> free_columns;   // kernel[i] has a 1 in free_columns[i]
};

// Exact solution space of a*x = b.  Inconsistency is a value, not an error.
LinearSolution rational_solve(const RatMat& a, const std::vector<Rat>& b);

// Basis of the saturation (primitive closure) of the column span of b inside
// Z^n. Requires full column rank; throws RankDeficient otherwise.
IntMat hermite_saturation(const IntMat& b);

// Basis (as columns) of the Z-span of the columns of b; the result has
// rank(b) columns.
IntMat integer_column_span_basis(const IntMat& b);

// Saturated basis of { x in Z^n : x^T * gram * b_j = 0 for all columns b_j }.
IntMat orthogonal_complement(const IntMat& ambient_gram, const IntMat& embedding);

}  // namespace k3lat
