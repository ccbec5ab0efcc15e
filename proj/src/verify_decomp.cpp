#include "abel/decomp.hpp"
#include "abel/moments.hpp"
#include "verify_internal.hpp"

namespace abel::verify_detail {

CCSample random_cc_pair(Sampler& s) {
  Interval iv = s.interval();
  // W(a) = W(b) and the outer polynomials vanish at W(a).
  Poly W = s.vanishing_poly(iv, static_cast<std::size_t>(s.integer(2, 3))) + Poly{s.coefficient()};
  Poly shift{-W(iv.a), Scalar(1)};
  Poly P_outer = shift * s.poly(static_cast<std::size_t>(s.integer(0, 2)));
  Poly Q_outer = shift * s.poly(static_cast<std::size_t>(s.integer(0, 2)));
  return CCSample{PCPair(compose(P_outer, W), compose(Q_outer, W), iv), W};
}

CriterionResult criterion_a6(std::uint64_t seed) {
  Report rep("A6", "right factor enumeration");
  Sampler s(criterion_seed(seed, 6));
  std::size_t max_s = 0;
  auto track = [&](const FactorSet& f) {
    max_s = std::max(max_s, f.s);
    return f;
  };

  FactorSet cheb = track(indecomposable_ab_factors(t6_P(), t6_interval()));
  std::vector<std::size_t> degs;
  for (const auto& W : cheb.factors) degs.push_back(*W.degree());
  rep.check(cheb.s == 2 && degs == std::vector<std::size_t>{2, 3}, cat("1+T6: s=", cheb.s));
  rep.note(cat("1+T6: s=", cheb.s, ", factors ", cheb.factors[0].pretty(), ", ",
               cheb.factors.size() > 1 ? cheb.factors[1].pretty() : "-"));

  const Interval sym(-1, 1);
  const Poly power_like = Poly{0, 0, 1} * pow(Poly{-1, 0, 0, 0, 1}, 2);
  FactorSet pw = track(indecomposable_ab_factors(power_like, sym));
  rep.check(pw.s == 2 && pw.factors == std::vector<Poly>{Poly{0, 0, 1}, Poly{0, -1, 0, 0, 0, 1}},
            cat("x^2(x^4-1)^2: s=", pw.s));
  rep.note(cat("x^2(x^4-1)^2: s=", pw.s, ", factors ", pw.factors[0].pretty(), ", ",
               pw.factors.size() > 1 ? pw.factors[1].pretty() : "-"));

  int dense = 0;
  for (int n = 0; n < 100; ++n) {
    Interval iv = s.interval();
    Poly P = s.vanishing_poly(iv, static_cast<std::size_t>(s.integer(2, 5)));
    FactorSet f = track(indecomposable_ab_factors(P, iv));
    rep.check(f.s == 1, cat("random degree ", *P.degree(), " polynomial ", P.pretty(), ": s=", f.s));
    ++dense;
  }
  rep.note(cat(dense, " random polynomials of degree <= 5: s = 1"));

  for (int n = 0; n < 20; ++n) {
    CCSample cc = random_cc_pair(s);
    track(indecomposable_ab_factors(cc.pair.P, cc.pair.iv));
  }
  rep.check(max_s <= 3, cat("s = ", max_s, " exceeds 3"));
  rep.note(cat("largest s seen: ", max_s));
  return rep.finish();
}

CriterionResult criterion_a7(std::uint64_t seed) {
  Report rep("A7", "composition condition checker");
  Sampler s(criterion_seed(seed, 7));
  int detected = 0;
  int rejected = 0;
  int consistent = 0;
  for (int n = 0; n < 30; ++n) {
    CCSample cc = random_cc_pair(s);
    const Poly& P = cc.pair.P;
    const Poly& Q = cc.pair.Q;
    const Interval& iv = cc.pair.iv;
    auto w = cc_check(P, Q, iv);
    rep.check(w.has_value(), cat("pair ", n, ": composition not detected"));
    if (w) {
      bool exact = compose(w->P_outer, w->W) == P && compose(w->Q_outer, w->W) == Q && w->W(iv.a) == w->W(iv.b);
      rep.check(exact, cat("pair ", n, ": witness does not recompose"));
      if (exact) ++detected;
    }
    rep.check(cc_check(Q, P, iv).has_value() == w.has_value(), cat("pair ", n, ": cc_check not symmetric"));

    // Q + x^7 - λx with λ restoring equal endpoint values.
    Scalar lambda = (pow(Poly::x(), 7)(iv.b) - pow(Poly::x(), 7)(iv.a)) / (iv.b - iv.a);
    Poly perturbed = Q + Poly::monomial(1, 7) - Poly::monomial(lambda, 1);
    auto wp = cc_check(P, perturbed, iv);
    rep.check(!wp.has_value(), cat("pair ", n, ": perturbed pair accepted with W = ", wp ? wp->W.pretty() : ""));
    rep.check(cc_check(perturbed, P, iv).has_value() == wp.has_value(), cat("pair ", n, ": perturbed pair not symmetric"));
    if (!wp) ++rejected;

    if (n < 10) {
      auto r = parametric_structure_report(cc.pair, 8, 10);
      rep.check(r.cc.has_value() && r.truncated_parametric_center && r.double_moments,
                cat("pair ", n, ": composition pair without vanishing table or moments"));
      rep.check(r.classification_consistent, cat("pair ", n, ": structure report inconsistent"));
      if (r.classification_consistent) ++consistent;
    }
  }
  rep.note(cat(detected, "/30 composition pairs detected with exact witnesses; ", rejected,
               "/30 perturbed pairs rejected; cc_check symmetric on all 60 instances"));
  rep.note(cat(consistent, "/10 structure reports consistent (tables vanish through K=8)"));
  return rep.finish();
}

}  // namespace abel::verify_detail
