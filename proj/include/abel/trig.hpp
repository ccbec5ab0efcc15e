#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "abel/poly.hpp"
#include "abel/scalar.hpp"

namespace abel {

/// Real trigonometric polynomial a0 + Σ cos_k cos(kθ) + sin_k sin(kθ) with
/// exact coefficients. Zero coefficients are never stored.
class TrigPoly {
 public:
  TrigPoly() = default;
  static TrigPoly constant(const Scalar& c);
  static TrigPoly cos(int k, const Scalar& c = 1);
  static TrigPoly sin(int k, const Scalar& c = 1);

  const Scalar& a0() const { return a0_; }
  const std::map<int, Scalar>& cos_coeffs() const { return cos_; }
  const std::map<int, Scalar>& sin_coeffs() const { return sin_; }
  bool is_zero() const { return a0_.is_zero() && cos_.empty() && sin_.empty(); }

  void add_cos(int k, const Scalar& c);
  void add_sin(int k, const Scalar& c);

  TrigPoly& operator+=(const TrigPoly& g);
  TrigPoly& operator-=(const TrigPoly& g);
  TrigPoly& operator*=(const Scalar& s);
  friend TrigPoly operator+(TrigPoly f, const TrigPoly& g) { return f += g; }
  friend TrigPoly operator-(TrigPoly f, const TrigPoly& g) { return f -= g; }
  friend TrigPoly operator*(TrigPoly f, const Scalar& s) { return f *= s; }
  friend TrigPoly operator*(const Scalar& s, TrigPoly f) { return f *= s; }
  /// Product-to-sum convolution of the frequency tables.
  friend TrigPoly operator*(const TrigPoly& f, const TrigPoly& g);
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

  std::string pretty() const;

 private:
  Scalar a0_;
  std::map<int, Scalar> cos_;
  std::map<int, Scalar> sin_;
};

/// c·π.
struct PiScalar {
  Scalar coeff;
  friend bool operator==(const PiScalar&, const PiScalar&) = default;
  std::string str() const { return coeff.str() + "*pi"; }
};

TrigPoly trig_mul(const TrigPoly& f, const TrigPoly& g);
TrigPoly trig_pow(const TrigPoly& f, unsigned n);
/// d/dθ.
TrigPoly trig_diff(const TrigPoly& f);
/// ∫_0^{2π} f dθ = 2π·a0.
PiScalar trig_integral(const TrigPoly& f);
/// ∫_0^{2π} Q^i d(P^j).
PiScalar trig_moment(const TrigPoly& P, const TrigPoly& Q, int i, int j);
/// Frequencies k >= 1 carrying a nonzero cos or sin coefficient.
std::set<int> frequency_support(const TrigPoly& f);
/// R(f) for a univariate polynomial R.
TrigPoly compose(const Poly& R, const TrigPoly& f);

/// Coefficients of Σ (a_k cos(k d θ) + b_k sin(k d θ)) by the multiple k.
struct FamilySpec {
  Scalar constant;
  std::map<int, Scalar> cos;
  std::map<int, Scalar> sin;
};

struct TrigPair {
  TrigPoly P;
  TrigPoly Q;
};

/// P = Σ a_k cos(k d1 θ) + b_k sin(k d1 θ), Q = Σ c_l cos(l d2 θ) + f_l sin(l d2 θ)
/// with a_k = b_k = 0 whenever d2 | k and c_l = f_l = 0 whenever d1 | l
/// (k, l >= 1); gcd(d1, d2) = 1, d1, d2 > 1.
TrigPair build_family(int d1, int d2, const FamilySpec& p_spec, const FamilySpec& q_spec);

/// Q + R(cos(d2 θ)).
TrigPoly modify_family(const TrigPoly& Q, int d2, const Poly& R);

struct NonCCCertificate {
  int i;
  int j;
  PiScalar value;
};

/// First (i, j), ordered by i + j and then i, with ∫ Q^i d(P^j) != 0. A
/// nonzero mixed integral rules out composition; nullopt is inconclusive.
std::optional<NonCCCertificate> non_cc_certificate(const TrigPoly& P, const TrigPoly& Q, int i_max, int j_max);

}  // namespace abel
