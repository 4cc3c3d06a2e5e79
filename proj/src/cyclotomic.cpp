#include "k3lat/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace k3lat {

namespace {

// Dense polynomials over Q, ascending degree, no trailing zeros.
using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Remainder of a modulo monic b.
Poly rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rat lead = a.back();  // b is monic
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  return a;
}

// quotient + remainder, b monic
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size()) {
    Rat lead = a.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly scale(Poly p, const Rat& s) {
  for (auto& x : p) x *= s;
  return p;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

}  // namespace

long euler_phi(long m) {
  long out = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out -= out / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) out -= out / n;
  return out;
}

namespace {
std::mutex phi_cache_mu;
std::map<long, std::vector<Int>> phi_cache;
}  // namespace

std::vector<Int> cyclotomic_polynomial(long m) {
  if (m < 1) throw Error("BadOrder", "cyclotomic polynomial needs m >= 1");
  {
    std::lock_guard<std::mutex> lk(phi_cache_mu);
    auto it = phi_cache.find(m);
    if (it != phi_cache.end()) return it->second;
  }
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed over Q but with
  // integer result.
  Poly num(m + 1, Rat(0));
  num[0] = -1;
  num[m] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d) continue;
    std::vector<Int> phi_d = cyclotomic_polynomial(d);
    Poly p(phi_d.size());
    for (std::size_t i = 0; i < phi_d.size(); ++i) p[i] = Rat(phi_d[i]);
    auto [q, r] = divmod(num, p);
    if (!r.empty()) throw Error("Internal", "cyclotomic division not exact");
    num = q;
  }
  std::vector<Int> out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (denominator(num[i]) != 1) throw Error("Internal", "cyclotomic coefficient not integral");
    out[i] = numerator(num[i]);
  }
  std::lock_guard<std::mutex> lk(phi_cache_mu);
  phi_cache.emplace(m, out);
  return out;
}

Cyclotomic::Cyclotomic(long m) : m_(m) {
  if (m < 1) throw Error("BadOrder", "cyclotomic order must be >= 1");
  c_.assign(euler_phi(m), Rat(0));
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (m_ != o.m_) throw Error("OrderMismatch", "cyclotomic orders differ");
}

Cyclotomic Cyclotomic::from_rat(long m, const Rat& r) {
  Cyclotomic out(m);
  out.c_[0] = r;
  return out;
}

Cyclotomic Cyclotomic::zeta_pow(long m, long k) {
  k %= m;
  if (k < 0) k += m;
  Poly p(k + 1, Rat(0));
  p[k] = 1;
  std::vector<Int> phi = cyclotomic_polynomial(m);
  Poly phi_q(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi_q[i] = Rat(phi[i]);
  Poly r = rem(p, phi_q);
  Cyclotomic out(m);
  for (std::size_t i = 0; i < r.size(); ++i) out.c_[i] = r[i];
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same(o);
  Cyclotomic out(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  check_same(o);
  Cyclotomic out(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same(o);
  Poly a(c_.begin(), c_.end());
  Poly b(o.c_.begin(), o.c_.end());
  trim(a);
  trim(b);
  std::vector<Int> phi = cyclotomic_polynomial(m_);
  Poly phi_q(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi_q[i] = Rat(phi[i]);
  Poly r = rem(mul(a, b), phi_q);
  Cyclotomic out(m_);
  for (std::size_t i = 0; i < r.size(); ++i) out.c_[i] = r[i];
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero cyclotomic element");
  // Extended Euclid in Q[x] against Phi_m, which is irreducible, so the gcd
  // is a nonzero constant.
  std::vector<Int> phi = cyclotomic_polynomial(m_);
  Poly r0(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rat(phi[i]);
  Poly r1(c_.begin(), c_.end());
  trim(r1);
  Poly s0 = {}, s1 = {Rat(1)};  // coefficients of *this in the combination
  while (!r1.empty() && r1.size() > 1) {
    // make r1 monic for divmod
    Rat lead = r1.back();
    Poly r1m = scale(r1, Rat(1) / lead);
    auto [q, r] = divmod(r0, r1m);
    q = scale(q, Rat(1) / lead);
    Poly s2 = add(s0, scale(mul(q, s1), Rat(-1)));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  if (r1.empty()) throw Error("Internal", "element shares a factor with Phi_m");
  Poly inv = scale(s1, Rat(1) / r1[0]);
  Poly phi_p(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi_p[i] = Rat(phi[i]);
  inv = rem(inv, phi_p);
  Cyclotomic out(m_);
  for (std::size_t i = 0; i < inv.size(); ++i) out.c_[i] = inv[i];
  return out;
}

}  // namespace k3lat
