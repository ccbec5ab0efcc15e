#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abel/scalar.hpp"

namespace abel {

/// Dense univariate polynomial over Q(sqrt D), coefficients in ascending
/// powers. Trailing zeros are never stored; the zero polynomial is empty and
/// has no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Scalar& c) { return Poly({c}); }
  static Poly monomial(const Scalar& c, std::size_t n);
  /// The identity polynomial x.
  static Poly x() { return monomial(1, 1); }

  const std::vector<Scalar>& coeffs() const { return c_; }
  /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
  std::size_t size() const { return c_.size(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    return c_.empty() ? std::nullopt : std::optional<std::size_t>(c_.size() - 1);
  }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Scalar& leading() const;
  /// Coefficient of x^i (zero beyond the degree).
  const Scalar& operator[](std::size_t i) const;

  Scalar operator()(const Scalar& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Scalar& s);
  /// this += f*g.
  void add_product(const Poly& f, const Poly& g);

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, const Scalar& s) { return f *= s; }
  friend Poly operator*(const Scalar& s, Poly f) { return f *= s; }

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Degree first, then coefficients from the constant term upwards.
  friend bool operator<(const Poly& f, const Poly& g);

  /// Human readable form in the variable `var`, e.g. "x^3-3/4*x".
  std::string pretty(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Scalar> c_;
};

Poly pow(const Poly& f, unsigned n);
Poly derivative(const Poly& f);
/// f∘g, i.e. f(g(x)).
Poly compose(const Poly& f, const Poly& g);
/// The antiderivative F with F(a) = 0.
Poly primitive(const Poly& f, const Scalar& a);
/// Quotient and remainder of f by a nonzero g.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

/// Endpoints of a real integration path [a,b], a != b.
struct Interval {
  Scalar a;
  Scalar b;

  Interval(Scalar a_, Scalar b_);
  friend bool operator==(const Interval&, const Interval&) = default;
};

Scalar definite_integral(const Poly& f, const Interval& iv);

/// Primitives P, Q of the Abel coefficients, both vanishing at a and b.
struct PCPair {
  Poly P;
  Poly Q;
  Interval iv;

  /// Validates P(a)=P(b)=0 and Q(a)=Q(b)=0.
  PCPair(Poly P_, Poly Q_, Interval iv_);
};

/// True iff f(a) = f(b) = 0.
bool in_pc_space(const Poly& f, const Interval& iv);

/// Chebyshev polynomial of the first kind.
Poly chebyshev(unsigned d);

/// The polynomial R with R∘W = Q when Q lies in the subring generated by W,
/// found by W-adic expansion; nullopt otherwise. Throws on constant W.
std::optional<Poly> in_subring(const Poly& Q, const Poly& W);

enum class SupportClass { U, U1 };

/// Coefficient-support predicates for a set of primes R. U: every exponent
/// with a nonzero coefficient is coprime to each prime of R or a power of one
/// of them. U1: every prime factor of such an exponent lies in R. Exponent 0
/// passes both.
bool u_membership(const Poly& f, const std::set<unsigned>& primes, SupportClass which);

}  // namespace abel
