#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "abel/error.hpp"
#include "abel/trig.hpp"

using namespace abel;

namespace {

double approx(const Scalar& x) {
  double v = x.rational_part().get_d();
  if (!x.is_rational()) v += x.irrational_part().get_d() * std::sqrt(static_cast<double>(x.radicand()));
  return v;
}

double eval(const TrigPoly& f, double t) {
  double v = approx(f.a0());
  for (const auto& [k, c] : f.cos_coeffs()) v += approx(c) * std::cos(k * t);
  for (const auto& [k, c] : f.sin_coeffs()) v += approx(c) * std::sin(k * t);
  return v;
}

// Rectangle rule on a uniform grid; exact for trigonometric polynomials of
// frequency below the node count.
double quadrature(const std::function<double(double)>& f, int nodes = 512) {
  double sum = 0;
  for (int n = 0; n < nodes; ++n) sum += f(2 * std::numbers::pi * n / nodes);
  return sum * 2 * std::numbers::pi / nodes;
}

TrigPoly random_trig(std::mt19937_64& rng, int max_k) {
  std::uniform_int_distribution<long> c(-3, 3);
  TrigPoly f = TrigPoly::constant(Scalar(c(rng), 2));
  for (int k = 1; k <= max_k; ++k) {
    f.add_cos(k, Scalar(c(rng)));
    f.add_sin(k, Scalar(c(rng), 3));
  }
  return f;
}

}  // namespace

TEST_CASE("products") {
  CHECK(TrigPoly::cos(1) * TrigPoly::cos(1) == TrigPoly::constant(Scalar(1, 2)) + TrigPoly::cos(2, Scalar(1, 2)));
  CHECK(TrigPoly::sin(2) * TrigPoly::sin(6) == TrigPoly::cos(4, Scalar(1, 2)) - TrigPoly::cos(8, Scalar(1, 2)));
  CHECK((TrigPoly::cos(3) * TrigPoly()).is_zero());
  CHECK(trig_pow(TrigPoly::cos(3), 2) == TrigPoly::constant(Scalar(1, 2)) + TrigPoly::cos(6, Scalar(1, 2)));
  CHECK(TrigPoly::cos(2, 0).is_zero());
}

TEST_CASE("derivatives and integrals") {
  CHECK(trig_diff(TrigPoly::cos(3)) == TrigPoly::sin(3, -3));
  CHECK(trig_diff(TrigPoly::constant(5)).is_zero());
  CHECK(trig_diff(TrigPoly::sin(2) + TrigPoly::cos(6)) == TrigPoly::cos(2, 2) - TrigPoly::sin(6, 6));
  CHECK(trig_integral(TrigPoly::cos(4)).coeff.is_zero());
  CHECK(trig_integral(TrigPoly::constant(1)).coeff == Scalar(2));
  CHECK(trig_integral(trig_pow(TrigPoly::sin(6), 2)).coeff == Scalar(1));
}

TEST_CASE("moments") {
  const TrigPoly P = TrigPoly::cos(3), Q = TrigPoly::sin(2);
  CHECK(trig_moment(P, Q, 3, 2).coeff == Scalar(3, 4));
  CHECK(trig_moment(P, Q, 3, 2).str() == "3/4*pi");
  for (int i = 0; i <= 12; ++i) CHECK(trig_moment(P, Q, i, 1).coeff.is_zero());
  std::mt19937_64 rng(1);
  for (int j = 1; j <= 4; ++j) CHECK(trig_moment(random_trig(rng, 3), random_trig(rng, 3), 0, j).coeff.is_zero());
  CHECK_THROWS_AS(trig_moment(P, Q, -1, 1), DomainError);
}

TEST_CASE("exact identities") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 20; ++n) {
    TrigPoly f = random_trig(rng, 3), g = random_trig(rng, 3);
    // ∫ d(fg) = 0, so ∫ f dg = -∫ g df.
    CHECK(trig_integral(trig_diff(f * g)).coeff.is_zero());
    CHECK(trig_integral(f * trig_diff(g)).coeff == -trig_integral(g * trig_diff(f)).coeff);
    CHECK(f * g == g * f);
    CHECK(trig_mul(f, g) == f * g);
    CHECK(trig_diff(f * g) == trig_diff(f) * g + f * trig_diff(g));
    // Frequencies that share no residue class integrate to zero.
    TrigPoly a = TrigPoly::cos(3 * (1 + n % 3)), b = TrigPoly::sin(3 * (1 + n % 3) + 1);
    CHECK(trig_integral(a * b).coeff.is_zero());
  }
}

TEST_CASE("moments against floating-point quadrature") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    TrigPoly P = random_trig(rng, 3), Q = random_trig(rng, 2);
    int i = static_cast<int>(rng() % 4), j = 1 + static_cast<int>(rng() % 3);
    double exact = approx(trig_moment(P, Q, i, j).coeff) * std::numbers::pi;
    TrigPoly dP = trig_diff(P);
    double numeric = quadrature([&](double t) {
      return std::pow(eval(Q, t), i) * j * std::pow(eval(P, t), j - 1) * eval(dP, t);
    });
    CHECK(numeric == doctest::Approx(exact).epsilon(1e-9).scale(1.0));
  }
  TrigPoly r3 = TrigPoly::sin(2, Scalar::sqrt_of(3)) + TrigPoly::cos(1, Scalar(1, 2));
  double numeric = quadrature([&](double t) { return eval(r3, t) * eval(r3, t); });
  CHECK(numeric == doctest::Approx(approx(trig_integral(r3 * r3).coeff) * std::numbers::pi));
}

TEST_CASE("composition with polynomials") {
  CHECK(compose(Poly{0, -3, 0, 4}, TrigPoly::cos(2)) == TrigPoly::cos(6));
  CHECK(compose(chebyshev(5), TrigPoly::cos(1)) == TrigPoly::cos(5));
  CHECK(compose(Poly{}, TrigPoly::cos(2)).is_zero());
}

TEST_CASE("families") {
  auto pair = build_family(3, 2, FamilySpec{0, {{1, 1}}, {}}, FamilySpec{0, {}, {{1, 1}}});
  CHECK(pair.P == TrigPoly::cos(3));
  CHECK(pair.Q == TrigPoly::sin(2));
  CHECK_THROWS_WITH_AS(build_family(2, 4, FamilySpec{}, FamilySpec{}), "frequencies not coprime", DomainError);
  CHECK_THROWS_AS(build_family(1, 2, FamilySpec{}, FamilySpec{}), DomainError);
  try {
    build_family(3, 2, FamilySpec{0, {{2, 1}}, {}}, FamilySpec{});
    FAIL("excluded index accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("index 2") != std::string::npos);
  }
}

TEST_CASE("modified families") {
  TrigPoly base = TrigPoly::sin(2, 5) + TrigPoly::cos(2, -1);
  CHECK(modify_family(base, 2, Poly{0, -6, 0, 8}) == base + TrigPoly::cos(6, 2));
  CHECK(modify_family(base, 2, Poly{}) == base);
  CHECK(modify_family(base, 2, Poly{1}) == base + TrigPoly::constant(1));
}

TEST_CASE("non-composition certificates") {
  auto c = non_cc_certificate(TrigPoly::cos(3), TrigPoly::sin(2), 6, 6);
  REQUIRE(c);
  CHECK(c->i == 3);
  CHECK(c->j == 2);
  CHECK(c->value.coeff == Scalar(3, 4));
  TrigPoly q = TrigPoly::sin(2, Scalar::sqrt_of(3)) + TrigPoly::cos(2);
  CHECK(trig_moment(TrigPoly::cos(3), q, 3, 2).coeff.is_zero());
  CHECK_FALSE(non_cc_certificate(TrigPoly::cos(2), TrigPoly::cos(4), 6, 6));
  CHECK_THROWS_AS(non_cc_certificate(TrigPoly::cos(2), TrigPoly::cos(4), 0, 6), DomainError);
}

TEST_CASE("frequency support") {
  CHECK(frequency_support(TrigPoly::cos(3) + TrigPoly::sin(6)) == std::set<int>{3, 6});
  CHECK(frequency_support(TrigPoly::constant(4)).empty());
  CHECK(frequency_support(trig_pow(TrigPoly::cos(3), 2)) == std::set<int>{6});
}

TEST_CASE("pretty printing") {
  CHECK_FALSE((TrigPoly::cos(3) + TrigPoly::sin(2, Scalar(-1, 2))).pretty().empty());
  CHECK(TrigPoly().pretty() == "0");
}
