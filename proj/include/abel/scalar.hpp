#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace abel {

using Rational = mpq_class;

/// Exact element rat + irr*sqrt(D) of Q(sqrt D).
///
/// D is squarefree and > 1. A value whose irrational part is zero carries no
/// radicand and combines with any context; two values with nonzero irrational
/// parts over different radicands raise "field mismatch". Both parts are kept
/// canonical by GMP (reduced, positive denominator), so equality is
/// component-wise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) : rat_(r) { rat_.canonicalize(); }  // NOLINT
  Scalar(long num, long den);
  Scalar(const Rational& rat, const Rational& irr, int radicand);

  /// sqrt(D) itself.
  static Scalar sqrt_of(int radicand);

  const Rational& rational_part() const { return rat_; }
  const Rational& irrational_part() const { return irr_; }
  /// 0 when the value is rational.
  int radicand() const { return root_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_rational() const { return root_ == 0; }
  /// Sign of the real number rat + irr*sqrt(D).
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y);

  /// this += x*y without a temporary Scalar.
  void add_product(const Scalar& x, const Scalar& y);

  Scalar inverse() const;
  /// Conjugate rat - irr*sqrt(D).
  Scalar conjugate() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.root_ == y.root_ && x.rat_ == y.rat_ && x.irr_ == y.irr_;
  }
  /// Ordering of the underlying real numbers.
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// Text form "a/b" or "a/b+c/d*rD" (also "c/d*rD" when the rational part is
  /// zero). Integers are written without a denominator.
  std::string str() const;
  /// Parses the text form. `context` is the session radicand (0 for a pure
  /// rational session); any radical must match it.
  static Scalar parse(std::string_view text, int context = 0);

 private:
  void settle();

  Rational rat_;
  Rational irr_;
  int root_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// True iff d > 1 and no square of a prime divides d.
bool is_squarefree(std::int64_t d);

/// binom(r, i) for rational r, exact.
Rational rational_binomial(const Rational& r, unsigned i);

}  // namespace abel
