#include "abel/center.hpp"
#include "abel/decomp.hpp"
#include "abel/matrix.hpp"
#include "abel/moments.hpp"
#include "abel/parallel.hpp"
#include "verify_internal.hpp"

namespace abel::verify_detail {

Interval t6_interval() {
  return Interval(Scalar(Rational(0), Rational(-1, 2), 3), Scalar(Rational(0), Rational(1, 2), 3));
}

Poly t6_P() { return Poly{1} + chebyshev(6); }

Poly t6_family_Q(Sampler& s, int d) {
  Poly S1 = s.poly(static_cast<std::size_t>(s.integer(1, d / 2)));
  std::vector<Scalar> odd;
  long top = d / 3;
  if (top % 2 == 0) --top;
  if (top >= 1) {
    long deg = 1 + 2 * s.integer(0, (top - 1) / 2);
    odd.resize(static_cast<std::size_t>(deg) + 1);
    for (long e = 1; e < deg; e += 2) odd[static_cast<std::size_t>(e)] = s.coefficient();
    odd[static_cast<std::size_t>(deg)] = s.nonzero_coefficient();
  }
  Poly Q = compose(S1, chebyshev(2)) + compose(Poly(odd), chebyshev(3));
  return Q - Poly{Q(t6_interval().a)};
}

namespace {

std::string dims_line(int d, std::size_t dim) {
  return cat("d=", d, ": dim ", dim, ", printed formula ", z_dim_formula(d), ", adjusted ", z_dim_adjusted(d));
}

}  // namespace

CriterionResult criterion_a5(std::uint64_t seed) {
  Report rep("A5", "Chebyshev moments and zero-moment spaces");
  Sampler s(criterion_seed(seed, 5));
  const Interval iv = t6_interval();
  const Poly P = t6_P();

  // (a)
  std::vector<Poly> Qs;
  for (int n = 0; n < 30; ++n) Qs.push_back(t6_family_Q(s, 12));
  auto bad = parallel_map<int>(Qs.size(), [&](std::size_t n) {
    const Poly& Q = Qs[n];
    if (!in_pc_space(Q, iv)) return 0;
    Poly q = derivative(Q);
    Poly Pi = Poly{1};
    for (int i = 0; i <= 15; ++i) {
      if (!definite_integral(Pi * q, iv).is_zero()) return i + 1;
      Pi = Pi * P;
    }
    return -1;
  });
  for (std::size_t n = 0; n < bad.size(); ++n) {
    rep.check(bad[n] != 0, cat("(a) sample ", n, " does not vanish at the endpoints"));
    rep.check(bad[n] <= 0, cat("(a) sample ", n, ": m_", bad[n] - 1, "(P,Q) != 0"));
  }
  rep.note("(a) m_i(1+T6, S1(T2)+S2(T3)) = 0 for i <= 15 on 30 samples of degree <= 12");

  // Structure classification on a few of these pairs.
  for (std::size_t n = 0; n < 3; ++n) {
    auto r = parametric_structure_report(PCPair(P, Qs[n], iv), 8, 10);
    rep.check(r.classification_consistent, cat("(a) structure report inconsistent on sample ", n));
  }

  // (b)
  int off_by_one = 0;
  for (int d = 6; d <= 12; ++d) {
    std::size_t dim = zspace(P, iv, d).size();
    int printed = z_dim_formula(d);
    int adjusted = z_dim_adjusted(d);
    rep.check(static_cast<int>(dim) == adjusted, "(b) " + dims_line(d, dim));
    int diff = printed - static_cast<int>(dim);
    rep.check(diff == 0 || diff == 1, "(b) printed formula off by more than one: " + dims_line(d, dim));
    if (diff != 0) ++off_by_one;
    rep.note("(b) " + dims_line(d, dim));
  }
  if (off_by_one > 0)
    rep.note(cat("(b) the printed formula exceeds the kernel dimension by one at ", off_by_one,
                 " degrees. It equals floor(d/2)+floor(d/3)-floor(d/6) evaluated at d+1, which counts exponents "
                 "1..d+1 divisible by 2 or 3; the kernel has one basis element per such exponent up to d"));

  // (c)
  const Interval sym(-1, 1);
  const Poly power_like = Poly{0, 0, 1} * pow(Poly{-1, 0, 0, 0, 1}, 2);
  for (int d = 2; d <= 12; ++d) {
    rep.check(yui_check(P, iv, d), cat("(c) 1+T6, d=", d));
    rep.check(yui_check(power_like, sym, d), cat("(c) x^2(x^4-1)^2, d=", d));
  }
  rep.note("(c) zero-moment space equals the composition sum for d = 2..12 on both polynomials");
  return rep.finish();
}

namespace {

// Coefficients on `exponents`, fixed up in the constant and linear slots so
// the polynomial vanishes at both endpoints.
Poly supported_vanishing(Sampler& s, const std::vector<std::size_t>& exponents, const Interval& iv) {
  for (;;) {
    Poly f;
    for (std::size_t e : exponents)
      if (e >= 2 && s.integer(0, 2) > 0) f += Poly::monomial(s.nonzero_coefficient(), e);
    if (f.is_constant()) continue;
    // c0 + c1 x = -f at a and b.
    Scalar fa = f(iv.a);
    Scalar fb = f(iv.b);
    Scalar c1 = (fa - fb) / (iv.b - iv.a);
    Scalar c0 = -fa - c1 * iv.a;
    return f + Poly{c0, c1};
  }
}

}  // namespace

CriterionResult criterion_a10(std::uint64_t seed) {
  Report rep("A10", "U(R)-definiteness instances, R = {2}");
  Sampler s(criterion_seed(seed, 10));
  const std::set<unsigned> primes{2};
  const std::vector<std::size_t> u_exponents{2, 3, 4, 5, 7, 8, 9, 11};
  const std::vector<std::size_t> u1_exponents{0, 1, 2, 4, 8};
  const int N = 20;

  std::size_t kernel_elements = 0;
  std::size_t double_vanishing = 0;
  for (int n = 0; n < 10; ++n) {
    bool even = n % 2 == 1;
    Interval iv = even ? Interval(-1, 1) : s.interval();
    Poly P = even ? supported_vanishing(s, {2, 4, 8}, iv) : supported_vanishing(s, u_exponents, iv);
    rep.check(u_membership(P, primes, SupportClass::U) && in_pc_space(P, iv), cat("P ", n, " outside U(R)"));

    // Unknowns: coefficients of x^e, e in u1_exponents. Rows: both endpoint
    // values, then m_i(P, .) for i = 0..rows.
    auto system = [&](int rows) {
      Matrix M(0, u1_exponents.size());
      Vector ra, rb;
      for (std::size_t e : u1_exponents) {
        ra.push_back(Poly::monomial(1, e)(iv.a));
        rb.push_back(Poly::monomial(1, e)(iv.b));
      }
      M.append_row(ra);
      M.append_row(rb);
      Poly Pi{1};
      for (int i = 0; i <= rows; ++i) {
        Vector r;
        for (std::size_t e : u1_exponents) r.push_back(definite_integral(Pi * derivative(Poly::monomial(1, e)), iv));
        M.append_row(r);
        Pi = Pi * P;
      }
      return M;
    };
    auto kernel = kernel_basis(system(N));
    rep.check(kernel.size() == kernel_basis(system(N + 5)).size(), cat("P ", n, ": kernel not stabilized"));

    std::vector<Poly> candidates;
    Poly combo;
    for (const auto& v : kernel) {
      Poly Q;
      for (std::size_t t = 0; t < v.size(); ++t) Q += Poly::monomial(v[t], u1_exponents[t]);
      combo += Q * s.nonzero_coefficient();
      candidates.push_back(std::move(Q));
    }
    if (kernel.size() > 1) candidates.push_back(combo);
    for (const Poly& Q : candidates) {
      if (Q.is_constant()) continue;
      ++kernel_elements;
      rep.check(u_membership(Q, primes, SupportClass::U1), cat("P ", n, ": kernel element outside U1(R)"));
      if (double_moments_vanish(P, Q, iv, N)) ++double_vanishing;
      auto w = cc_check(P, Q, iv);
      rep.check(w.has_value(), cat("P ", n, ": Q = ", Q.pretty(), " kills every moment of P but has no witness"));
      if (w)
        rep.check(compose(w->P_outer, w->W) == P && compose(w->Q_outer, w->W) == Q && w->W(iv.a) == w->W(iv.b),
                  cat("P ", n, ": witness does not recompose"));
    }
  }
  rep.note(cat("10 polynomials P (5 generic, 5 even on [-1,1]); ", kernel_elements,
               " kernel elements checked, ", double_vanishing, " of them with vanishing double moments"));
  rep.check(kernel_elements > 0, "no nontrivial kernel element: test vacuous");
  return rep.finish();
}

}  // namespace abel::verify_detail
