#include "k3lat/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace k3lat {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfWork {
  IntMat m, u, v, u_inv, v_inv;

  explicit SnfWork(const IntMat& in)
      : m(in),
        u(IntMat::identity(in.rows())),
        v(IntMat::identity(in.cols())),
        u_inv(IntMat::identity(in.rows())),
        v_inv(IntMat::identity(in.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    for (std::size_t i = 0; i < u_inv.rows(); ++i) std::swap(u_inv.at(i, a), u_inv.at(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    for (std::size_t j = 0; j < v_inv.cols(); ++j) std::swap(v_inv.at(a, j), v_inv.at(b, j));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv.at(i, r) = -u_inv.at(i, r);
  }

  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) += c * m.at(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(j, k);
    for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv.at(k, j) -= c * u_inv.at(k, i);
  }

  // col_j += c * col_i
  void add_col(std::size_t j, std::size_t i, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, j) += c * m.at(k, i);
    for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, j) += c * v.at(k, i);
    for (std::size_t k = 0; k < v_inv.cols(); ++k) v_inv.at(i, k) -= c * v_inv.at(j, k);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& in) {
  SnfWork w(in);
  const std::size_t nr = in.rows(), nc = in.cols();
  const std::size_t steps = nr < nc ? nr : nc;

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Minimal-absolute-value pivot keeps coefficient growth tame.
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j) {
          const Int& x = w.m.at(i, j);
          if (x == 0) continue;
          Int a = abs_int(x);
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) goto done;  // trailing block is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (w.m.at(i, t) == 0) continue;
        Int q = floor_div(w.m.at(i, t), w.m.at(t, t));
        w.add_row(i, t, -q);
        if (w.m.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (w.m.at(t, j) == 0) continue;
        Int q = floor_div(w.m.at(t, j), w.m.at(t, t));
        w.add_col(j, t, -q);
        if (w.m.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the whole trailing block for the chain to hold;
      // fold an offending row in and start over.
      bool chain_ok = true;
      for (std::size_t i = t + 1; i < nr && chain_ok; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (w.m.at(i, j) % w.m.at(t, t) != 0) {
            w.add_row(t, i, 1);
            chain_ok = false;
            break;
          }
      if (chain_ok) break;
    }
    if (w.m.at(t, t) < 0) w.negate_row(t);
  }
done:
  return SnfResult{w.m, w.u, w.v, w.u_inv, w.v_inv};
}

std::pair<long, long> signature(const RatMat& g) {
  if (!g.is_symmetric()) throw Error("NotSymmetric", "signature needs a symmetric matrix");
  RatMat a = g;
  const std::size_t n = a.rows();
  long np = 0, nm = 0;

  auto sym_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(x, j), a.at(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, x), a.at(i, y));
  };
  // row/col addition r_x += c*r_y, keeping symmetry
  auto sym_add = [&](std::size_t x, std::size_t y, const Rat& c) {
    for (std::size_t j = 0; j < n; ++j) a.at(x, j) += c * a.at(y, j);
    for (std::size_t i = 0; i < n; ++i) a.at(i, x) += c * a.at(i, y);
  };

  for (std::size_t k = 0; k < n; ++k) {
    while (a.at(k, k) == 0) {
      std::size_t dj = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (a.at(j, j) != 0) {
          dj = j;
          break;
        }
      if (dj < n) {
        sym_swap(k, dj);
        break;
      }
      // All remaining diagonal entries vanish (e.g. hyperbolic planes);
      // a_kj != 0 gives the 2x2 block [[0,b],[b,0]] and adding row/col j
      // produces the pivot 2b.
      std::size_t oj = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (a.at(k, j) != 0) {
          oj = j;
          break;
        }
      if (oj < n) {
        sym_add(k, oj, Rat(1));
        break;
      }
      // Row k is zero on the trailing block; pull up a row that is not.
      std::size_t ri = n;
      for (std::size_t i = k + 1; i < n && ri == n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a.at(i, j) != 0) {
            ri = i;
            break;
          }
      if (ri == n) throw Error("SingularMatrix", "matrix is degenerate");
      sym_swap(k, ri);
    }
    const Rat p = a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = -a.at(i, k) / p;
      sym_add(i, k, f);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a.at(k, k) > 0)
      ++np;
    else if (a.at(k, k) < 0)
      ++nm;
    else
      throw Error("SingularMatrix", "matrix is degenerate");
  }
  return {np, nm};
}

Rat det_rat(const RatMat& m) {
  if (!m.is_square()) throw Error("BadShape", "determinant of non-square matrix");
  RatMat a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return Rat(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      det = -det;
    }
    det *= a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) / a.at(k, k);
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

Int det_int(const IntMat& m) {
  Rat d = det_rat(to_rat(m));
  return numerator(d);  // denominator is 1 for integer input
}

LinearSolution rational_solve(const RatMat& a, const std::vector<Rat>& b) {
  if (a.rows() != b.size()) throw Error("BadShape", "rhs length mismatch");
  const std::size_t nr = a.rows(), nc = a.cols();
  RatMat w(nr, nc + 1);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, nc) = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = nr;
    for (std::size_t i = row; i < nr; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    if (piv != row)
      for (std::size_t j = 0; j <= nc; ++j) std::swap(w.at(row, j), w.at(piv, j));
    Rat p = w.at(row, col);
    for (std::size_t j = 0; j <= nc; ++j) w.at(row, j) /= p;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (std::size_t j = 0; j <= nc; ++j) w.at(i, j) -= f * w.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolution sol;
  for (std::size_t i = row; i < nr; ++i)
    if (w.at(i, nc) != 0) {
      sol.consistent = false;
      return sol;
    }
  sol.consistent = true;

  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  sol.particular.assign(nc, Rat(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol.particular[pivot_col[r]] = w.at(r, nc);

  sol.pivot_columns = pivot_col;
  for (std::size_t col = 0; col < nc; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rat> k(nc, Rat(0));
    k[col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) k[pivot_col[r]] = -w.at(r, col);
    sol.kernel.push_back(std::move(k));
    sol.free_columns.push_back(col);
  }
  return sol;
}

IntMat integer_column_span_basis(const IntMat& b) {
  SnfResult s = smith_normal_form(b);
  std::vector<Int> d = s.diagonal();
  std::size_t rank = 0;
  for (const Int& x : d)
    if (x != 0) ++rank;
  // Span of the columns = Z-span of { d_i * (column i of u_inv) }.
  IntMat out(b.rows(), rank);
  std::size_t c = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    for (std::size_t r = 0; r < b.rows(); ++r) out.at(r, c) = d[i] * s.u_inv.at(r, i);
    ++c;
  }
  return out;
}

IntMat hermite_saturation(const IntMat& b) {
  if (b.cols() == 0 || b.rows() < b.cols()) throw Error("RankDeficient", "need full column rank");
  SnfResult s = smith_normal_form(b);
  std::vector<Int> d = s.diagonal();
  for (const Int& x : d)
    if (x == 0) throw Error("RankDeficient", "columns are linearly dependent");
  // u*b*v = d  =>  b*v = u_inv*d, so the rational column span is spanned by
  // the first k columns of u_inv, which extend to a basis of Z^n.
  IntMat out(b.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) out.at(i, j) = s.u_inv.at(i, j);
  return out;
}

IntMat orthogonal_complement(const IntMat& ambient_gram, const IntMat& embedding) {
  RatMat bt_g = to_rat(embedding.transposed() * ambient_gram);
  std::vector<Rat> zero(bt_g.rows(), Rat(0));
  LinearSolution sol = rational_solve(bt_g, zero);
  if (sol.kernel.empty()) return IntMat(ambient_gram.rows(), 0);
  IntMat k(ambient_gram.rows(), sol.kernel.size());
  for (std::size_t j = 0; j < sol.kernel.size(); ++j) {
    Int lcm = 1;
    for (const Rat& x : sol.kernel[j]) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    for (std::size_t i = 0; i < sol.kernel[j].size(); ++i)
      k.at(i, j) = numerator(sol.kernel[j][i]) * (lcm / denominator(sol.kernel[j][i]));
  }
  return hermite_saturation(k);
}

}  // namespace k3lat
