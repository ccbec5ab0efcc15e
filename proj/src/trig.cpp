#include "abel/trig.hpp"

#include <numeric>
#include <sstream>

#include "abel/error.hpp"

namespace abel {

namespace {

void accumulate(std::map<int, Scalar>& m, int k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

TrigPoly TrigPoly::constant(const Scalar& c) {
  TrigPoly f;
  f.a0_ = c;
  return f;
}

TrigPoly TrigPoly::cos(int k, const Scalar& c) {
  TrigPoly f;
  f.add_cos(k, c);
  return f;
}

TrigPoly TrigPoly::sin(int k, const Scalar& c) {
  TrigPoly f;
  f.add_sin(k, c);
  return f;
}

void TrigPoly::add_cos(int k, const Scalar& c) {
  if (k < 0) k = -k;
  if (k == 0) a0_ += c;
  else accumulate(cos_, k, c);
}

void TrigPoly::add_sin(int k, const Scalar& c) {
  if (k < 0) {
    add_sin(-k, -c);
    return;
  }
  if (k > 0) accumulate(sin_, k, c);
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& g) {
  a0_ += g.a0_;
  for (const auto& [k, c] : g.cos_) accumulate(cos_, k, c);
  for (const auto& [k, c] : g.sin_) accumulate(sin_, k, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& g) {
  a0_ -= g.a0_;
  for (const auto& [k, c] : g.cos_) accumulate(cos_, k, -c);
  for (const auto& [k, c] : g.sin_) accumulate(sin_, k, -c);
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    *this = TrigPoly();
    return *this;
  }
  a0_ *= s;
  for (auto& [k, c] : cos_) c *= s;
  for (auto& [k, c] : sin_) c *= s;
  return *this;
}

TrigPoly operator*(const TrigPoly& f, const TrigPoly& g) {
  TrigPoly r;
  const Scalar half(1, 2);
  r.a0_ = f.a0_ * g.a0_;
  if (!f.a0_.is_zero()) {
    for (const auto& [k, c] : g.cos_) r.add_cos(k, f.a0_ * c);
    for (const auto& [k, c] : g.sin_) r.add_sin(k, f.a0_ * c);
  }
  if (!g.a0_.is_zero()) {
    for (const auto& [k, c] : f.cos_) r.add_cos(k, g.a0_ * c);
    for (const auto& [k, c] : f.sin_) r.add_sin(k, g.a0_ * c);
  }
  for (const auto& [m, cm] : f.cos_) {
    for (const auto& [n, cn] : g.cos_) {
      Scalar h = half * cm * cn;  // cos m cos n = (cos(m-n) + cos(m+n))/2
      r.add_cos(m - n, h);
      r.add_cos(m + n, h);
    }
    for (const auto& [n, sn] : g.sin_) {
      Scalar h = half * cm * sn;  // cos m sin n = (sin(m+n) - sin(m-n))/2
      r.add_sin(m + n, h);
      r.add_sin(m - n, -h);
    }
  }
  for (const auto& [m, sm] : f.sin_) {
    for (const auto& [n, cn] : g.cos_) {
      Scalar h = half * sm * cn;  // sin m cos n = (sin(m+n) + sin(m-n))/2
      r.add_sin(m + n, h);
      r.add_sin(m - n, h);
    }
    for (const auto& [n, sn] : g.sin_) {
      Scalar h = half * sm * sn;  // sin m sin n = (cos(m-n) - cos(m+n))/2
      r.add_cos(m - n, h);
      r.add_cos(m + n, -h);
    }
  }
  return r;
}

std::string TrigPoly::pretty() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Scalar& c, const std::string& fn) {
    std::string cs = c.str();
    if (!c.is_rational() && sgn(c.rational_part()) != 0) cs = "(" + cs + ")";
    if (!first && cs[0] != '-') os << '+';
    os << cs;
    if (!fn.empty()) os << '*' << fn;
    first = false;
  };
  if (!a0_.is_zero()) term(a0_, "");
  for (const auto& [k, c] : cos_) term(c, "cos(" + std::to_string(k) + "t)");
  for (const auto& [k, c] : sin_) term(c, "sin(" + std::to_string(k) + "t)");
  return first ? "0" : os.str();
}

TrigPoly trig_mul(const TrigPoly& f, const TrigPoly& g) { return f * g; }

TrigPoly trig_pow(const TrigPoly& f, unsigned n) {
  TrigPoly r = TrigPoly::constant(1);
  for (unsigned t = 0; t < n; ++t) r = r * f;
  return r;
}

TrigPoly trig_diff(const TrigPoly& f) {
  TrigPoly d;
  for (const auto& [k, c] : f.cos_coeffs()) d.add_sin(k, -Scalar(k) * c);
  for (const auto& [k, c] : f.sin_coeffs()) d.add_cos(k, Scalar(k) * c);
  return d;
}

PiScalar trig_integral(const TrigPoly& f) { return PiScalar{Scalar(2) * f.a0()}; }

PiScalar trig_moment(const TrigPoly& P, const TrigPoly& Q, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("moment exponents must be nonnegative");
  TrigPoly Qi = trig_pow(Q, static_cast<unsigned>(i));
  TrigPoly dPj = trig_diff(trig_pow(P, static_cast<unsigned>(j)));
  return trig_integral(Qi * dPj);
}

std::set<int> frequency_support(const TrigPoly& f) {
  std::set<int> s;
  for (const auto& [k, c] : f.cos_coeffs()) s.insert(k);
  for (const auto& [k, c] : f.sin_coeffs()) s.insert(k);
  return s;
}

TrigPoly compose(const Poly& R, const TrigPoly& f) {
  TrigPoly acc;
  for (std::size_t i = R.size(); i-- > 0;) {
    acc = acc * f;
    acc += TrigPoly::constant(R[i]);
  }
  return acc;
}

TrigPair build_family(int d1, int d2, const FamilySpec& p_spec, const FamilySpec& q_spec) {
  if (d1 <= 1 || d2 <= 1) throw DomainError("frequencies must exceed 1");
  if (std::gcd(d1, d2) != 1) throw DomainError("frequencies not coprime");
  auto build = [](const FamilySpec& spec, int step, int excluded, const char* name) {
    TrigPoly f = TrigPoly::constant(spec.constant);
    auto check = [&](int k, const Scalar& c, const char* kind) {
      if (k < 1) throw DomainError(std::string(name) + " " + kind + " index " + std::to_string(k) + " must be >= 1");
      if (!c.is_zero() && k % excluded == 0)
        throw DomainError(std::string(name) + " " + kind + " coefficient at index " + std::to_string(k) +
                          " is excluded (divisible by " + std::to_string(excluded) + ")");
    };
    for (const auto& [k, c] : spec.cos) {
      check(k, c, "cos");
      f.add_cos(k * step, c);
    }
    for (const auto& [k, c] : spec.sin) {
      check(k, c, "sin");
      f.add_sin(k * step, c);
    }
    return f;
  };
  return TrigPair{build(p_spec, d1, d2, "P"), build(q_spec, d2, d1, "Q")};
}

TrigPoly modify_family(const TrigPoly& Q, int d2, const Poly& R) {
  return Q + compose(R, TrigPoly::cos(d2));
}

std::optional<NonCCCertificate> non_cc_certificate(const TrigPoly& P, const TrigPoly& Q, int i_max, int j_max) {
  if (i_max < 1 || j_max < 1) throw DomainError("search bounds must be at least 1");
  std::vector<TrigPoly> Qpow{TrigPoly::constant(1)};
  for (int i = 1; i <= i_max; ++i) Qpow.push_back(Qpow.back() * Q);
  std::vector<TrigPoly> dPpow{TrigPoly()};
  TrigPoly Pj = TrigPoly::constant(1);
  for (int j = 1; j <= j_max; ++j) {
    Pj = Pj * P;
    dPpow.push_back(trig_diff(Pj));
  }
  for (int total = 2; total <= i_max + j_max; ++total) {
    for (int i = 1; i <= i_max; ++i) {
      int j = total - i;
      if (j < 1 || j > j_max) continue;
      PiScalar v = trig_integral(Qpow[i] * dPpow[j]);
      if (!v.coeff.is_zero()) return NonCCCertificate{i, j, v};
    }
  }
  return std::nullopt;
}

}  // namespace abel
