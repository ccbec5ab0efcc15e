#include "abel/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "abel/error.hpp"

namespace abel {

namespace {
const Scalar kZero;
}

Poly Poly::monomial(const Scalar& c, std::size_t n) {
  std::vector<Scalar> v(n + 1);
  v[n] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Poly::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

const Scalar& Poly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

void Poly::add_product(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return;
  std::size_t n = f.c_.size() + g.c_.size() - 1;
  if (n > c_.size()) c_.resize(n);
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) c_[i + j].add_product(f.c_[i], g.c_[j]);
  }
  trim();
}

Poly operator*(const Poly& f, const Poly& g) {
  Poly r;
  r.add_product(f, g);
  return r;
}

bool operator<(const Poly& f, const Poly& g) {
  if (f.size() != g.size()) return f.size() < g.size();
  return std::lexicographical_compare(f.c_.begin(), f.c_.end(), g.c_.begin(), g.c_.end());
}

std::string Poly::pretty(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    if (!c.is_rational() && sgn(c.rational_part()) != 0) cs = "(" + cs + ")";
    if (!first && cs[0] != '-') os << '+';
    if (i == 0) {
      os << cs;
    } else {
      if (cs == "-1") os << '-';
      else if (cs != "1") os << cs << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

Poly pow(const Poly& f, unsigned n) {
  Poly result = Poly::constant(1);
  Poly base = f;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly derivative(const Poly& f) {
  if (f.size() <= 1) return {};
  std::vector<Scalar> d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * Scalar(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly compose(const Poly& f, const Poly& g) {
  Poly acc;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * g;
    acc += Poly::constant(f[i]);
  }
  return acc;
}

Poly primitive(const Poly& f, const Scalar& a) {
  if (f.is_zero()) return {};
  std::vector<Scalar> F(f.size() + 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    F[i + 1] = f[i];
    F[i + 1] /= Scalar(static_cast<long>(i + 1));
  }
  Poly out(std::move(F));
  Scalar at_a = out(a);
  if (!at_a.is_zero()) out -= Poly::constant(at_a);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DomainError("zero divisor");
  if (f.size() < g.size()) return {Poly(), f};
  std::vector<Scalar> rem = f.coeffs();
  std::vector<Scalar> quo(f.size() - g.size() + 1);
  Scalar inv_lead = g.leading().inverse();
  std::size_t dg = g.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Scalar c = rem[k + dg] * inv_lead;
    quo[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= c * g[j];
  }
  rem.resize(dg);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Interval::Interval(Scalar a_, Scalar b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == b) throw DomainError("degenerate interval: a == b");
}

Scalar definite_integral(const Poly& f, const Interval& iv) {
  Poly F = primitive(f, iv.a);
  return F(iv.b);
}

bool in_pc_space(const Poly& f, const Interval& iv) { return f(iv.a).is_zero() && f(iv.b).is_zero(); }

PCPair::PCPair(Poly P_, Poly Q_, Interval iv_) : P(std::move(P_)), Q(std::move(Q_)), iv(std::move(iv_)) {
  if (!in_pc_space(P, iv)) throw DomainError("P does not vanish at both endpoints");
  if (!in_pc_space(Q, iv)) throw DomainError("Q does not vanish at both endpoints");
}

Poly chebyshev(unsigned d) {
  Poly prev = Poly::constant(1);
  if (d == 0) return prev;
  Poly cur = Poly::x();
  Poly two_x = Poly::monomial(2, 1);
  for (unsigned n = 1; n < d; ++n) {
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::optional<Poly> in_subring(const Poly& Q, const Poly& W) {
  if (W.is_constant()) throw DomainError("constant factor");
  std::vector<Scalar> digits;
  Poly rest = Q;
  while (!rest.is_zero()) {
    auto [quo, rem] = divmod(rest, W);
    if (!rem.is_constant()) return std::nullopt;
    digits.push_back(rem[0]);
    rest = std::move(quo);
  }
  return Poly(std::move(digits));
}

namespace {

bool is_power_of(unsigned n, unsigned p) {
  if (n < p) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool u_membership(const Poly& f, const std::set<unsigned>& primes, SupportClass which) {
  if (primes.empty()) throw DomainError("empty prime set");
  for (unsigned p : primes)
    if (prime_factors(p) != std::vector<unsigned>{p}) throw DomainError(std::to_string(p) + " is not prime");
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    auto n = static_cast<unsigned>(i);
    bool ok = false;
    if (which == SupportClass::U) {
      bool coprime_all = std::all_of(primes.begin(), primes.end(), [&](unsigned p) { return std::gcd(n, p) == 1; });
      bool power = std::any_of(primes.begin(), primes.end(), [&](unsigned p) { return is_power_of(n, p); });
      ok = coprime_all || power;
    } else {
      auto fs = prime_factors(n);
      ok = std::all_of(fs.begin(), fs.end(), [&](unsigned p) { return primes.count(p) > 0; });
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace abel
