#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "abel/decomp.hpp"
#include "abel/error.hpp"

using namespace abel;

namespace {

Interval t6_iv() {
  Scalar h(Rational(0), Rational(1, 2), 3);
  return Interval(-h, h);
}

std::vector<std::size_t> degrees(const FactorSet& f) {
  std::vector<std::size_t> out;
  for (const auto& W : f.factors) out.push_back(*W.degree());
  return out;
}

const Poly power_like = Poly{0, 0, 1} * pow(Poly{-1, 0, 0, 0, 1}, 2);

}  // namespace

TEST_CASE("right factors") {
  Interval sym(-1, 1);
  FactorSet x4 = right_factors(Poly::monomial(1, 4), sym);
  CHECK(x4.factors == std::vector<Poly>{Poly{0, 0, 1}, Poly::monomial(1, 4)});

  FactorSet t6 = right_factors(Poly{1} + chebyshev(6), t6_iv());
  CHECK(degrees(t6) == std::vector<std::size_t>{2, 3, 6});

  FactorSet cubic = right_factors(Poly{0, -1, 0, 1}, sym);
  CHECK(cubic.factors == std::vector<Poly>{Poly{0, -1, 0, 1}});

  CHECK_THROWS_AS(right_factors(Poly{0, 0, 0, 1}, sym), DomainError);
  CHECK_THROWS_AS(right_factors(Poly{4}, sym), DomainError);
}

TEST_CASE("indecomposable factors") {
  FactorSet t6 = indecomposable_ab_factors(Poly{1} + chebyshev(6), t6_iv());
  CHECK(t6.s == 2);
  CHECK(degrees(t6) == std::vector<std::size_t>{2, 3});

  FactorSet pw = indecomposable_ab_factors(power_like, Interval(-1, 1));
  CHECK(pw.s == 2);
  CHECK(pw.factors == std::vector<Poly>{Poly{0, 0, 1}, Poly{0, -1, 0, 0, 0, 1}});

  FactorSet x4 = indecomposable_ab_factors(Poly::monomial(1, 4), Interval(-1, 1));
  CHECK(x4.s == 1);
  CHECK(x4.factors == std::vector<Poly>{Poly{0, 0, 1}});
}

TEST_CASE("definiteness") {
  CHECK_FALSE(is_definite(Poly{1} + chebyshev(6), t6_iv()));
  CHECK(is_definite(Poly{-1, 0, 1}, Interval(-1, 1)));
  CHECK_FALSE(is_definite(power_like, Interval(-1, 1)));
}

TEST_CASE("composition condition") {
  Interval sym(-1, 1);
  auto w = cc_check(pow(Poly{-1, 0, 1}, 2), Poly{0, 0, -1, 0, 1}, sym);
  REQUIRE(w);
  CHECK(w->W == Poly{0, 0, 1});
  CHECK(w->P_outer == Poly{1, -2, 1});
  CHECK(w->Q_outer == Poly{0, -1, 1});

  CHECK_FALSE(cc_check(Poly{0, 0, 1}, Poly{0, -1, 0, 1}, sym));

  Poly P = Poly{1} + chebyshev(6);
  Poly Q = chebyshev(2) - Poly{chebyshev(2)(t6_iv().a)};
  auto wt = cc_check(P, Q, t6_iv());
  REQUIRE(wt);
  CHECK(normalize_factor(wt->W) == normalize_factor(chebyshev(2)));
  CHECK(compose(wt->P_outer, wt->W) == P);
  CHECK(compose(wt->Q_outer, wt->W) == Q);
}

TEST_CASE("structure report") {
  StructureReport t6 = structure_report(Poly{1} + chebyshev(6), t6_iv());
  CHECK(t6.s == 2);
  CHECK(t6.tag == "chebyshev-like");
  CHECK(t6.pattern == std::vector<std::size_t>{2, 3});
  CHECK_FALSE(t6.definite);

  StructureReport pw = structure_report(power_like, Interval(-1, 1));
  CHECK(pw.tag == "power-like");
  CHECK(pw.pattern == std::vector<std::size_t>{2, 5});

  StructureReport one = structure_report(Poly{-1, 0, 1}, Interval(-1, 1));
  CHECK(one.s == 1);
  CHECK(one.tag == "single");
  CHECK(one.definite);
}

TEST_CASE("Chebyshev shape test") {
  CHECK(common_chebyshev_shape(chebyshev(2), chebyshev(3)));
  Poly lam{Scalar(1, 3), Scalar(2)};
  CHECK(common_chebyshev_shape(compose(chebyshev(2), lam) * Scalar(5) + Poly{1}, compose(chebyshev(3), lam) * Scalar(-2)));
  CHECK_FALSE(common_chebyshev_shape(Poly{0, 0, 1}, Poly{0, -1, 0, 0, 0, 1}));
}

TEST_CASE("normalization is idempotent and class invariant") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int n = 0; n < 50; ++n) {
    Poly W{c(rng), c(rng), c(rng), 1 + std::abs(c(rng))};
    Poly N = normalize_factor(W);
    CHECK(normalize_factor(N) == N);
    CHECK(N[0].is_zero());
    CHECK(N.leading() == Scalar(1));
    Scalar alpha(1 + std::abs(c(rng)), 1 + std::abs(c(rng)));
    CHECK(normalize_factor(W * alpha + Poly{c(rng)}) == N);
  }
}

TEST_CASE("factor sets under outer and inner affine maps") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> c(-3, 3);
  Interval sym(-1, 1);
  std::vector<std::pair<Poly, Interval>> cases = {{Poly{1} + chebyshev(6), t6_iv()}, {power_like, sym}};
  for (int n = 0; n < 20; ++n) {
    // W(a) = W(b) for W = (x^2 - 1) S + c on [-1, 1].
    Poly W = Poly{-1, 0, 1} * Poly{c(rng), c(rng), 1} + Poly{c(rng)};
    Poly outer = Poly{-W(Scalar(-1)), 1} * Poly{c(rng), 1};
    cases.push_back({compose(outer, W), sym});
  }
  for (const auto& [P, iv] : cases) {
    FactorSet base = right_factors(P, iv);
    CHECK(base.s <= 3);
    for (const auto& W : base.factors) {
      CHECK(W(iv.a) == W(iv.b));
      CHECK(in_subring(P, W).has_value());
    }
    // μ∘P has the same factors.
    Scalar alpha(1 + std::abs(c(rng)), 2);
    CHECK(right_factors(P * alpha + Poly{c(rng)}, iv).factors == base.factors);
    // P∘τ on the pulled-back interval has the pulled-back factors.
    Poly tau{Scalar(1, 2), Scalar(3)};
    Interval pulled((iv.a - Scalar(1, 2)) / Scalar(3), (iv.b - Scalar(1, 2)) / Scalar(3));
    FactorSet moved = right_factors(compose(P, tau), pulled);
    std::vector<Poly> expect;
    for (const auto& W : base.factors) expect.push_back(normalize_factor(compose(W, tau)));
    std::sort(expect.begin(), expect.end());
    CHECK(moved.factors == expect);
    CHECK(moved.s == base.s);
  }
}

TEST_CASE("symmetry of the composition check") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> c(-3, 3);
  Interval iv(0, 2);
  for (int n = 0; n < 40; ++n) {
    Poly P = Poly{0, -2, 1} * Poly{c(rng), c(rng), 1 + std::abs(c(rng))};
    Poly Q = n % 2 ? compose(Poly{0, 1, c(rng)}, Poly{0, -2, 1}) : Poly{0, -2, 1} * Poly{c(rng), 1};
    CHECK(cc_check(P, Q, iv).has_value() == cc_check(Q, P, iv).has_value());
  }
}
