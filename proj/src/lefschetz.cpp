#include "k3lat/lefschetz.hpp"

#include "k3lat/error.hpp"
#include "k3lat/linalg.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>

namespace k3lat {

long max_isolated_type(long m) { return (m - 2) / 2; }

Cyclotomic point_contribution(long m, long t, PointConvention conv) {
  if (m < 3) throw Error("BadOrder", "isolated point types need m >= 3");
  if (t < 1 || t > max_isolated_type(m))
    throw Error("BadType", "isolated types are 1 <= t <= (m-2)/2");
  long e1, e2;
  if (conv == PointConvention::Matrix) {
    e1 = t + 1;
    e2 = m - t;
  } else {
    e1 = t;
    e2 = m - t + 1;
  }
  Cyclotomic one = Cyclotomic::from_rat(m, 1);
  Cyclotomic d = (one - Cyclotomic::zeta_pow(m, e1)) * (one - Cyclotomic::zeta_pow(m, e2));
  if (d.is_zero())
    throw Error("DegenerateType", "det(I - A) vanishes for this type/convention");
  return d.inverse();
}

Cyclotomic curve_contribution(long m, long g) {
  if (m < 2) throw Error("BadOrder", "curve contribution needs m >= 2");
  Cyclotomic one = Cyclotomic::from_rat(m, 1);
  Cyclotomic zeta = Cyclotomic::zeta_pow(m, 1);
  Cyclotomic denom = (one - zeta) * (one - zeta);
  if (denom.is_zero()) throw Error("Internal", "(1 - zeta)^2 vanished");
  return (one + zeta) * Cyclotomic::from_rat(m, Rat(1 - g)) * denom.inverse();
}

Cyclotomic lefschetz_number(long m) {
  if (m < 2) throw Error("BadOrder", "Lefschetz number needs m >= 2");
  return Cyclotomic::from_rat(m, 1) + Cyclotomic::zeta_pow(m, m - 1);
}

LefschetzSystem build_system(const FixedLocusHypothesis& hyp, PointConvention conv) {
  const long m = hyp.m;
  if (m < 2) throw Error("BadOrder", "order must be >= 2");
  for (long t : hyp.unknown_types)
    for (long z : hyp.forced_zero_types)
      if (t == z) throw Error("BadHypothesis", "a type cannot be both free and forced to zero");

  std::vector<long> types = hyp.unknown_types;
  std::sort(types.begin(), types.end());

  LefschetzSystem sys;
  sys.m = m;
  const long phi = euler_phi(m);
  const bool h_free = hyp.h_is_free();
  const std::size_t cols = types.size() + (h_free ? 1 : 0);
  sys.a = RatMat(phi, cols);
  sys.rhs.assign(phi, Rat(0));
  sys.has_h_column = h_free;

  for (std::size_t j = 0; j < types.size(); ++j) {
    Cyclotomic a_t = point_contribution(m, types[j], conv);
    sys.unknowns.push_back("n_" + std::to_string(types[j]));
    for (long i = 0; i < phi; ++i) sys.a.at(i, j) = a_t.coeffs()[i];
  }

  Cyclotomic curve = curve_contribution(m, 0);  // h = sum(1 - g); basis term uses g = 0
  Cyclotomic target = lefschetz_number(m);
  if (h_free) {
    sys.unknowns.push_back("h");
    sys.h_range = std::get<std::pair<long, long>>(hyp.h);
    if (sys.h_range.first > sys.h_range.second)
      throw Error("BadHypothesis", "empty h range");
    for (long i = 0; i < phi; ++i) sys.a.at(i, types.size()) = curve.coeffs()[i];
  } else {
    long h = std::get<long>(hyp.h);
    target = target - (curve * Cyclotomic::from_rat(m, Rat(h)));
  }
  for (long i = 0; i < phi; ++i) sys.rhs[i] = target.coeffs()[i];
  return sys;
}

namespace {

// Enumerate integer points of the affine solution space that fall in the
// per-column boxes. Elimination gives pivot columns as affine functions of
// the free columns; free columns are scanned over their ranges.
std::vector<Solution> enumerate_box(const RatMat& a, const std::vector<Rat>& rhs,
                                    const std::vector<std::string>& names,
                                    const std::vector<std::pair<long, long>>& box) {
  LinearSolution sol = rational_solve(a, rhs);
  std::vector<Solution> out;
  if (!sol.consistent) return out;
  const std::size_t nc = a.cols();
  const std::vector<std::size_t>& free_cols = sol.free_columns;

  std::vector<long> assign(free_cols.size(), 0);
  std::vector<Rat> point(nc);

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == free_cols.size()) {
      for (std::size_t j = 0; j < nc; ++j) point[j] = sol.particular[j];
      for (std::size_t f = 0; f < free_cols.size(); ++f)
        for (std::size_t j = 0; j < nc; ++j)
          point[j] += Rat(assign[f]) * sol.kernel[f][j];
      Solution s;
      for (std::size_t j = 0; j < nc; ++j) {
        if (denominator(point[j]) != 1) return;
        Int v = numerator(point[j]);
        if (v < box[j].first || v > box[j].second) return;
        s[names[j]] = static_cast<long>(v);
      }
      out.push_back(std::move(s));
      return;
    }
    std::size_t col = free_cols[idx];
    for (long v = box[col].first; v <= box[col].second; ++v) {
      assign[idx] = v;
      rec(idx + 1);
    }
  };
  rec(0);

  std::sort(out.begin(), out.end(), [&](const Solution& x, const Solution& y) {
    for (const auto& n : names) {
      auto a_it = x.find(n), b_it = y.find(n);
      if (a_it->second != b_it->second) return a_it->second < b_it->second;
    }
    return false;
  });
  return out;
}

}  // namespace

std::vector<Solution> solve_nonneg(const LefschetzSystem& sys, long bound) {
  if (bound < 0) throw Error("BadBound", "bound must be nonnegative");
  std::vector<std::pair<long, long>> box;
  for (std::size_t j = 0; j < sys.unknowns.size(); ++j) {
    if (sys.has_h_column && j + 1 == sys.unknowns.size()) {
      long lo = std::max(sys.h_range.first, -bound);
      long hi = std::min(sys.h_range.second, bound);
      box.emplace_back(lo, hi);
    } else {
      box.emplace_back(0, bound);
    }
  }
  return enumerate_box(sys.a, sys.rhs, sys.unknowns, box);
}

PrintedSystem load_printed_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FixtureNotFound", "cannot open fixture file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("BadFixture", std::string("fixture parse error: ") + e.what());
  }
  PrintedSystem sys;
  sys.which = j.at("which").get<std::string>();
  sys.order = j.at("order").get<long>();
  sys.unknowns = j.at("unknowns").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(Int(x.get<long long>()));
    if (r.size() != sys.unknowns.size() + 1)
      throw Error("BadFixture", "fixture row length mismatch");
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

std::vector<Solution> solve_printed(const PrintedSystem& sys, long bound) {
  RatMat a(sys.rows.size(), sys.unknowns.size());
  std::vector<Rat> rhs(sys.rows.size());
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    for (std::size_t j = 0; j < sys.unknowns.size(); ++j) a.at(i, j) = Rat(sys.rows[i][j]);
    rhs[i] = Rat(sys.rows[i].back());
  }
  std::vector<std::pair<long, long>> box(sys.unknowns.size(), {0, bound});
  return enumerate_box(a, rhs, sys.unknowns, box);
}

}  // namespace k3lat
