#include "abel/scalar.hpp"

#include <cctype>
#include <ostream>

#include "abel/error.hpp"

namespace abel {

namespace {

int merge_roots(int x, int y) {
  if (x == 0) return y;
  if (y == 0 || x == y) return x;
  throw DomainError("field mismatch: sqrt(" + std::to_string(x) + ") and sqrt(" +
                    std::to_string(y) + ")");
}

Rational parse_rational(std::string_view s, std::string_view whole) {
  auto bad = [&] { return InputError("malformed scalar '" + std::string(whole) + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto is_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-') throw bad();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in scalar '" + std::string(whole) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

bool is_squarefree(std::int64_t d) {
  if (d <= 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DomainError("zero divisor");
  rat_ = Rational(num, den);
  rat_.canonicalize();
}

Scalar::Scalar(const Rational& rat, const Rational& irr, int radicand) : rat_(rat), irr_(irr) {
  rat_.canonicalize();
  irr_.canonicalize();
  if (sgn(irr_) != 0) {
    if (!is_squarefree(radicand))
      throw DomainError("radicand " + std::to_string(radicand) + " is not a squarefree integer > 1");
    root_ = radicand;
  }
}

Scalar Scalar::sqrt_of(int radicand) { return Scalar(0, 1, radicand); }

void Scalar::settle() {
  if (sgn(irr_) == 0) root_ = 0;
}

int Scalar::sign() const {
  int sa = sgn(rat_);
  int sb = sgn(irr_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = rat_ * rat_;
  Rational rhs = irr_ * irr_ * root_;
  return lhs > rhs ? sa : sb;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.irr_ = -r.irr_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& y) {
  rat_ += y.rat_;
  if (y.root_ != 0) {
    root_ = merge_roots(root_, y.root_);
    irr_ += y.irr_;
    settle();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  rat_ -= y.rat_;
  if (y.root_ != 0) {
    root_ = merge_roots(root_, y.root_);
    irr_ -= y.irr_;
    settle();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& y) {
  if (y.root_ == 0) {
    rat_ *= y.rat_;
    if (root_ != 0) {
      irr_ *= y.rat_;
      settle();
    }
    return *this;
  }
  if (root_ == 0) {
    irr_ = rat_ * y.irr_;
    rat_ *= y.rat_;
    root_ = y.root_;
    settle();
    return *this;
  }
  int d = merge_roots(root_, y.root_);
  Rational r = rat_ * y.rat_ + irr_ * y.irr_ * d;
  Rational i = rat_ * y.irr_ + irr_ * y.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  root_ = d;
  settle();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& y) {
  if (y.is_zero()) throw DomainError("zero divisor");
  if (y.root_ == 0) {
    rat_ /= y.rat_;
    if (root_ != 0) irr_ /= y.rat_;
    return *this;
  }
  return *this *= y.inverse();
}

void Scalar::add_product(const Scalar& x, const Scalar& y) {
  if (x.root_ == 0 && y.root_ == 0) {
    thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), x.rat_.get_mpq_t(), y.rat_.get_mpq_t());
    mpq_add(rat_.get_mpq_t(), rat_.get_mpq_t(), tmp.get_mpq_t());
    return;
  }
  *this += x * y;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.irr_ = -r.irr_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("zero divisor");
  if (root_ == 0) {
    Scalar r;
    r.rat_ = 1 / rat_;
    return r;
  }
  Rational norm = rat_ * rat_ - irr_ * irr_ * root_;
  Scalar r;
  r.rat_ = rat_ / norm;
  r.irr_ = -irr_ / norm;
  r.root_ = root_;
  return r;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::str() const {
  if (root_ == 0) return rat_.get_str();
  std::string irr = irr_.get_str() + "*r" + std::to_string(root_);
  if (sgn(rat_) == 0) return irr;
  return rat_.get_str() + (sgn(irr_) > 0 ? "+" : "") + irr;
}

Scalar Scalar::parse(std::string_view text, int context) {
  if (text.empty()) throw InputError("empty scalar");
  std::size_t rpos = text.find('r');
  if (rpos == std::string_view::npos) return Scalar(parse_rational(text, text));

  std::string_view root_text = text.substr(rpos + 1);
  if (root_text.empty() || root_text.find_first_not_of("0123456789") != std::string_view::npos)
    throw InputError("malformed radicand in scalar '" + std::string(text) + "'");
  int root = std::stoi(std::string(root_text));
  if (!is_squarefree(root))
    throw InputError("radicand " + std::to_string(root) + " is not a squarefree integer > 1");
  if (root != context)
    throw InputError("field mismatch: scalar '" + std::string(text) + "' outside the declared context D=" +
                     std::to_string(context));

  // Locate the sign that starts the irrational term.
  std::size_t start = 0;
  for (std::size_t i = rpos; i-- > 0;) {
    if (text[i] == '+' || text[i] == '-') {
      start = i;
      break;
    }
  }
  Rational rat;
  if (start > 0) {
    std::size_t rat_end = start;
    if (text[start - 1] == '+') --rat_end;
    rat = parse_rational(text.substr(0, rat_end), text);
  }
  std::string_view coef = text.substr(start, rpos - start);
  if (!coef.empty() && coef[0] == '+') coef.remove_prefix(1);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  else if (!coef.empty() && coef != "-")
    throw InputError("malformed scalar '" + std::string(text) + "'");
  Rational irr;
  if (coef.empty()) irr = 1;
  else if (coef == "-") irr = -1;
  else irr = parse_rational(coef, text);
  return Scalar(rat, irr, root);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

Rational rational_binomial(const Rational& r, unsigned i) {
  Rational out = 1;
  for (unsigned t = 0; t < i; ++t) {
    out *= (r - t);
    out /= (t + 1);
  }
  return out;
}

}  // namespace abel
