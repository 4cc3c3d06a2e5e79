#include "k3lat/glue.hpp"

#include "k3lat/catalog.hpp"
#include "k3lat/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace k3lat {

LatticeInvariants LatticeInvariants::of(const Lattice& l) {
  LatticeInvariants inv;
  inv.rank = l.rank();
  inv.sig = l.signature();
  inv.invariant_factors = discriminant_group(l).invariant_factors;
  return inv;
}

namespace {

std::vector<Int> normalize_coords(std::vector<Int> c, const std::vector<Int>& factors) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] %= factors[i];
    if (c[i] < 0) c[i] += factors[i];
  }
  return c;
}

std::vector<Int> add_coords(const std::vector<Int>& a, const std::vector<Int>& b,
                            const std::vector<Int>& factors) {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return normalize_coords(std::move(c), factors);
}

bool is_zero_coords(const std::vector<Int>& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

// Subgroup generated by a set of elements, as a sorted element list.
std::vector<std::vector<Int>> generate_subgroup(const std::vector<std::vector<Int>>& gens,
                                                const std::vector<Int>& factors) {
  std::set<std::vector<Int>> seen;
  seen.insert(std::vector<Int>(factors.size(), Int(0)));
  std::vector<std::vector<Int>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = add_coords(x, g, factors);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool subgroup_isotropic(const std::vector<std::vector<Int>>& elems, const DiscriminantForm& form) {
  for (const auto& x : elems)
    if (form.q_of(x) != 0) return false;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      if (form.b_of(elems[i], elems[j]) != 0) return false;
  return true;
}

long count_prime_factors(Int n) {
  long k = 0;
  for (Int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++k;
    }
  if (n > 1) ++k;
  return k;
}

Int element_order(const std::vector<Int>& c, const std::vector<Int>& factors) {
  Int o = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Int d = factors[i] / boost::multiprecision::gcd(c[i], factors[i]);
    o = boost::multiprecision::lcm(o, d);
  }
  return o;
}

}  // namespace

std::vector<IsotropicSubgroup> isotropic_subgroups(const DiscriminantForm& form,
                                                   const Int& order) {
  if (order < 2) throw Error("BadIndex", "subgroup order must be >= 2");
  if (form.order() > Int(65536)) throw Error("TooLarge", "discriminant group exceeds 2^16");
  const auto& factors = form.factors();
  if (form.order() % order != 0) return {};

  // Candidate elements: isotropic, order dividing the target. Any element of
  // an isotropic subgroup is of this kind.
  std::vector<std::vector<Int>> candidates;
  for (const auto& e : form.elements()) {
    if (is_zero_coords(e)) continue;
    if (order % element_order(e, factors) != 0) continue;
    if (form.q_of(e) != 0) continue;
    candidates.push_back(e);
  }

  const long max_gens = count_prime_factors(order);
  std::set<std::vector<std::vector<Int>>> found;

  std::vector<std::vector<Int>> gens;
  std::function<void(std::size_t)> search = [&](std::size_t start) {
    auto elems = generate_subgroup(gens, factors);
    Int sz(elems.size());
    if (order % sz != 0) return;
    if (sz == order) {
      if (subgroup_isotropic(elems, form)) found.insert(elems);
      return;
    }
    if (static_cast<long>(gens.size()) >= max_gens) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      gens.push_back(candidates[i]);
      search(i + 1);
      gens.pop_back();
    }
  };
  search(0);

  std::vector<IsotropicSubgroup> out;
  for (const auto& elems : found) {
    IsotropicSubgroup sg;
    sg.order = Int(elems.size());
    // minimal generating set is not needed; keep all nonzero elements
    for (const auto& e : elems)
      if (!is_zero_coords(e)) sg.generators.push_back(e);
    out.push_back(std::move(sg));
  }
  return out;
}

Lattice overlattice_from_glue(const Lattice& l, const std::vector<std::vector<Int>>& generators) {
  const std::size_t n = l.gram().rows();
  DiscriminantGroup group = discriminant_group(l);

  // Work in dual-basis coordinates: L itself is the column span of G, the
  // glue classes are integer vectors, and the inner product is G^{-1}.
  IntMat stack(n, n + generators.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) stack.at(i, j) = l.gram().at(i, j);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& coords = generators[g];
    if (coords.size() != group.invariant_factors.size())
      throw Error("BadGlue", "glue coordinates must match the discriminant generators");
    for (std::size_t i = 0; i < n; ++i) {
      Int v = 0;
      for (std::size_t k = 0; k < coords.size(); ++k)
        v += coords[k] * group.generator_coords.at(i, k);
      stack.at(i, n + g) = v;
    }
  }

  IntMat basis = integer_column_span_basis(stack);
  if (basis.cols() != n) throw Error("Internal", "overlattice basis is not full rank");

  // Gram = B^T G^{-1} B; integrality certifies b-isotropy, evenness q-isotropy.
  RatMat gi(n, n);
  {
    RatMat g = to_rat(l.gram());
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<Rat> e(n, Rat(0));
      e[col] = 1;
      LinearSolution sol = rational_solve(g, e);
      for (std::size_t r = 0; r < n; ++r) gi.at(r, col) = sol.particular[r];
    }
  }
  RatMat gram_w = to_rat(basis.transposed()) * gi * to_rat(basis);
  IntMat gram;
  try {
    gram = to_int_exact(gram_w);
  } catch (const Error&) {
    throw Error("NotIsotropic", "glue classes do not give an integral lattice");
  }
  return Lattice(std::move(gram));
}

std::vector<Lattice> overlattices(const Lattice& l, const Int& index) {
  if (index < 2) throw Error("BadIndex", "overlattice index must be >= 2");
  DiscriminantForm form = discriminant_form(l);
  std::vector<Lattice> out;
  for (const auto& sg : isotropic_subgroups(form, index)) {
    Lattice w = overlattice_from_glue(l, sg.generators);
    // |det W| * index^2 = |det L|
    Int lhs = w.det() < 0 ? Int(-w.det()) : w.det();
    Int rhs = l.det() < 0 ? Int(-l.det()) : l.det();
    if (lhs * index * index != rhs) throw Error("Internal", "overlattice determinant law failed");
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const Lattice& a, const Lattice& b) { return a.gram() < b.gram(); });
  return out;
}

const char* to_string(EmbedStatus s) {
  switch (s) {
    case EmbedStatus::Obstructed: return "Obstructed";
    case EmbedStatus::Inconclusive: return "Inconclusive";
    case EmbedStatus::EmbeddedByConstruction: return "EmbeddedByConstruction";
  }
  return "?";
}

const char* to_string(Existence e) {
  switch (e) {
    case Existence::Exists: return "Exists";
    case Existence::No: return "No";
    case Existence::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::set<Int> primes_of(const std::vector<Int>& factors) {
  std::set<Int> out;
  for (Int d : factors) {
    for (Int p = 2; p * p <= d; ++p)
      while (d % p == 0) {
        out.insert(p);
        d /= p;
      }
    if (d > 1) out.insert(d);
  }
  return out;
}

std::set<Int> prime_powers_of(const std::vector<Int>& factors) {
  std::set<Int> out;
  for (const Int& d : factors)
    for (const Int& p : primes_of({d})) {
      Int q = p;
      while (d % q == 0) {
        out.insert(q);
        q *= p;
      }
    }
  return out;
}

}  // namespace

EmbeddingVerdict primitive_embedding_length_obstruction(const LatticeInvariants& s,
                                                        const LatticeInvariants& w) {
  if (s.rank > w.rank) throw Error("RankMismatch", "rank(S) exceeds rank(W)");
  const long m = w.rank - s.rank;

  if (s.sig && w.sig) {
    if (s.sig->first > w.sig->first || s.sig->second > w.sig->second) {
      std::ostringstream os;
      os << "signature (" << s.sig->first << "," << s.sig->second
         << ") does not fit componentwise in (" << w.sig->first << "," << w.sig->second << ")";
      return {EmbedStatus::Obstructed, os.str(), std::nullopt};
    }
  }

  // (b) prime powers q: l_q(W) <= l_q(S) + m
  std::set<Int> qs = prime_powers_of(w.invariant_factors);
  for (const Int& q : prime_powers_of(s.invariant_factors)) qs.insert(q);
  for (const Int& q : qs) {
    long lw = w.length_q(q);
    long ls = s.length_q(q);
    if (lw > ls + m) {
      std::ostringstream os;
      os << "l_" << q << "(W) = " << lw << " > " << ls << " + " << m << " = l_" << q << "(S) + m";
      return {EmbedStatus::Obstructed, os.str(), std::nullopt};
    }
  }

  // (c) primes p: l_p(W) >= l_p(S) - m
  std::set<Int> ps = primes_of(s.invariant_factors);
  for (const Int& p : primes_of(w.invariant_factors)) ps.insert(p);
  for (const Int& p : ps) {
    long lw = w.length_q(p);
    long ls = s.length_q(p);
    if (lw < ls - m) {
      std::ostringstream os;
      os << "l_" << p << "(W) = " << lw << " < " << ls << " - " << m << " = l_" << p << "(S) - m";
      return {EmbedStatus::Obstructed, os.str(), std::nullopt};
    }
  }

  return {EmbedStatus::Inconclusive, "no length or signature condition fails", std::nullopt};
}

SplitOffResult split_off_unimodular(const Lattice& s, const Lattice& w) {
  if (!s.is_unimodular()) throw Error("NotUnimodular", "S must be unimodular");
  if (s.rank() > w.rank()) throw Error("RankMismatch", "rank(S) exceeds rank(W)");

  SplitOffResult res;
  res.complement.rank = w.rank() - s.rank();
  auto ssig = s.signature();
  auto wsig = w.signature();
  res.complement.sig = {wsig.first - ssig.first, wsig.second - ssig.second};
  res.complement.invariant_factors = discriminant_group(w).invariant_factors;

  if (res.complement.sig->first < 0 || res.complement.sig->second < 0) {
    res.existence = Existence::No;
    res.reason = "signature of S does not fit in W";
    return res;
  }
  if (res.complement.rank == 0) {
    if (res.complement.invariant_factors.empty()) {
      res.existence = Existence::Exists;
      res.reason = "S and W are both unimodular of equal rank";
    } else {
      res.existence = Existence::No;
      res.reason = "rank-0 complement cannot carry a nontrivial discriminant group";
    }
    return res;
  }
  if (res.complement.length() > res.complement.rank) {
    std::ostringstream os;
    os << "complement needs length " << res.complement.length() << " on rank "
       << res.complement.rank;
    res.existence = Existence::No;
    res.reason = os.str();
    return res;
  }

  // Syntactic witness: S's blocks are a sub-multiset of W's blocks.
  if (!s.name_expr().empty() && !w.name_expr().empty()) {
    try {
      EmbeddingVerdict direct =
          direct_summand_embedding(parse_expr(s.name_expr()), parse_expr(w.name_expr()));
      if (direct.status == EmbedStatus::EmbeddedByConstruction) {
        res.existence = Existence::Exists;
        res.reason = "S is a visible direct summand of W";
        return res;
      }
    } catch (const Error&) {
      // expressions unavailable; fall through
    }
  }

  // p-elementary complements with hyperbolic signature fall under the
  // classification theorem.
  std::set<Int> ps = primes_of(res.complement.invariant_factors);
  if (ps.size() == 1) {
    const Int p = *ps.begin();
    bool elementary = true;
    for (const Int& d : res.complement.invariant_factors)
      if (d != p) elementary = false;
    if (elementary && p != 2 &&
        *res.complement.sig == std::make_pair(1L, res.complement.rank - 1)) {
      bool ex = exists_hyperbolic_p_elementary(p, res.complement.rank, res.complement.length());
      // Existence of the complement alone does not certify the embedding,
      // so the positive direction stays Unknown.
      res.existence = ex ? Existence::Unknown : Existence::No;
      std::ostringstream os;
      os << "hyperbolic " << p << "-elementary lattice with (r,a) = (" << res.complement.rank
         << "," << res.complement.length() << ") " << (ex ? "exists" : "does not exist");
      res.reason = os.str();
      return res;
    }
  }

  res.existence = Existence::Unknown;
  if (res.reason.empty()) res.reason = "no decisive criterion applies";
  return res;
}

EmbeddingVerdict direct_summand_embedding(const Expr& s, const Expr& w) {
  std::map<std::string, long> ms, mw;
  try {
    ms = block_multiset(s);
    mw = block_multiset(w);
  } catch (const Error& e) {
    if (e.code() == "NotExpression") throw;
    throw Error("NotExpression", e.what());
  }
  for (const auto& [block, count] : ms) {
    auto it = mw.find(block);
    if (it == mw.end() || it->second < count) {
      std::ostringstream os;
      os << "block " << block << " occurs " << count << " time(s) in S but "
         << (it == mw.end() ? 0 : it->second) << " in W";
      return {EmbedStatus::Inconclusive, os.str(), std::nullopt};
    }
  }
  return {EmbedStatus::EmbeddedByConstruction, "every block of S occurs in W",
          std::string("identity inclusion of blocks: ") + pretty_print(s)};
}

}  // namespace k3lat
