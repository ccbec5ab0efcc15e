#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abel/decomp.hpp"
#include "abel/error.hpp"
#include "abel/matrix.hpp"
#include "abel/moments.hpp"

using namespace abel;

namespace {

const Interval sym(-1, 1);
const Interval unit(0, 1);

Interval t6_iv() {
  Scalar h(Rational(0), Rational(1, 2), 3);
  return Interval(-h, h);
}

std::vector<Vector> coords(const std::vector<Poly>& fs, int d) {
  std::vector<Vector> out;
  for (const auto& f : fs) out.push_back(coefficient_vector(f, d));
  return out;
}

bool in_span(const Poly& f, const std::vector<Poly>& basis, int d) {
  auto with = basis;
  with.push_back(f);
  return span_basis(coords(with, d), d + 1).size() == span_basis(coords(basis, d), d + 1).size();
}

Poly random_poly(std::mt19937_64& rng, std::size_t deg) {
  std::uniform_int_distribution<long> c(-3, 3);
  std::vector<Scalar> v(deg + 1);
  for (auto& x : v) x = Scalar(c(rng));
  v.back() = Scalar(1 + static_cast<long>(rng() % 3));
  return Poly(v);
}

// Brute force over the pc_basis: Q lies in Z(P)_d iff every moment up to
// `rows` vanishes. Returns the dimension of that kernel.
std::size_t brute_dim(const Poly& P, const Interval& iv, int d, int rows) {
  auto basis = pc_basis(iv, d);
  Matrix M(0, basis.size());
  Poly Pi{1};
  for (int i = 0; i <= rows; ++i) {
    Vector r;
    for (const auto& B : basis) r.push_back(definite_integral(Pi * derivative(B), iv));
    M.append_row(r);
    Pi = Pi * P;
  }
  return kernel_basis(M).size();
}

}  // namespace

TEST_CASE("moments") {
  Poly P{-1, 0, 1}, Q{0, -1, 0, 1};
  CHECK(moment(P, Q, sym, 0).is_zero());
  CHECK(moment(P, Q, sym, 1) == Scalar(8, 15));
  CHECK(moment(Poly{0, 2, -3, 1}, Poly{0, -1, 1}, unit, 2) == Scalar(-1, 140));
  CHECK_THROWS_AS(moment(P, Q, sym, -1), DomainError);
}

TEST_CASE("moment identities") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    Poly P = Poly{-1, 0, 1} * random_poly(rng, rng() % 3);
    Poly Q1 = Poly{-1, 0, 1} * random_poly(rng, rng() % 3);
    Poly Q2 = Poly{-1, 0, 1} * random_poly(rng, rng() % 3);
    Scalar a(static_cast<long>(rng() % 5) - 2), b(1, 3);
    // Integration by parts with vanishing boundary terms.
    CHECK(moment(P, Q1, sym, 1) == -moment(Q1, P, sym, 1));
    for (int i = 0; i <= 4; ++i)
      CHECK(moment(P, Q1 * a + Q2 * b, sym, i) == a * moment(P, Q1, sym, i) + b * moment(P, Q2, sym, i));
  }
}

TEST_CASE("double moments") {
  Poly Pc = pow(Poly{-1, 0, 1}, 2), Qc{0, 0, -1, 0, 1};
  CHECK(double_moments_vanish(Pc, Qc, sym, 20));
  CHECK_FALSE(double_moments_vanish(Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, sym, 5));
  CHECK(double_moments_vanish(Poly{1} + chebyshev(6), chebyshev(3), t6_iv(), 15));
}

TEST_CASE("zero-moment spaces") {
  const Poly P6 = Poly{1} + chebyshev(6);
  CHECK(zspace(P6, t6_iv(), 6).size() == 4);
  auto z = zspace(Poly{-1, 0, 1}, sym, 4);
  CHECK(same_span(coords(z, 4), coords({Poly{-1, 0, 1}, Poly{-1, 0, 0, 0, 1}}, 4), 5));
  CHECK(same_span(coords(composition_sum_space(Poly{-1, 0, 1}, sym, 4), 4), coords(z, 4), 5));
  CHECK(zspace(Poly{-1, 0, 1}, sym, 2).size() == 1);
  CHECK_THROWS_AS(zspace(P6, t6_iv(), 6, 0), ComputeError);
  CHECK_THROWS_AS(zspace(Poly{0, 0, 1}, sym, 4), DomainError);

  for (int d = 6; d <= 12; ++d) {
    CHECK(zspace(P6, t6_iv(), d).size() == static_cast<std::size_t>(z_dim_adjusted(d)));
    CHECK(brute_dim(P6, t6_iv(), d, 3 * d) == static_cast<std::size_t>(z_dim_adjusted(d)));
  }
}

TEST_CASE("composition sums sit inside the zero-moment space") {
  std::mt19937_64 rng(14);
  for (int n = 0; n < 10; ++n) {
    Poly W = Poly{-1, 0, 1} * random_poly(rng, rng() % 2);
    Poly P = compose(Poly{0, 1, static_cast<long>(rng() % 3)}, W);
    int d = static_cast<int>(*P.degree()) + 4;
    auto Z = zspace(P, sym, d);
    for (const auto& Q : composition_sum_space(P, sym, d)) CHECK(in_span(Q, Z, d));
  }
}

TEST_CASE("composition sum equality") {
  for (int d = 2; d <= 8; ++d) CHECK(yui_check(Poly{-1, 0, 1}, sym, d));
  for (int d = 2; d <= 12; ++d) CHECK(yui_check(Poly{1} + chebyshev(6), t6_iv(), d));
}

TEST_CASE("dimension formulas") {
  CHECK(z_dim_formula(6) == 4);
  CHECK(z_dim_formula(10) == 7);
  // Floor brackets throughout, as the d = 6 and d = 10 values require.
  CHECK(z_dim_formula(0) == 0);
  CHECK(z_dim_formula(1) == 1);
  for (int d = 0; d <= 30; ++d) {
    int count = 0;
    for (int e = 1; e <= d; ++e) count += e % 2 == 0 || e % 3 == 0;
    CHECK(z_dim_adjusted(d) == count);
    CHECK(z_dim_formula(d) == z_dim_adjusted(d + 1));
  }
}

TEST_CASE("parametric structure report") {
  auto cc = parametric_structure_report(PCPair(pow(Poly{-1, 0, 1}, 2), Poly{0, 0, -1, 0, 1}, sym), 8, 10);
  CHECK(cc.cc.has_value());
  CHECK(cc.truncated_parametric_center);
  CHECK(cc.classification_consistent);

  auto plain = parametric_structure_report(PCPair(Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, sym), 8, 10);
  CHECK_FALSE(plain.cc.has_value());
  CHECK_FALSE(plain.truncated_parametric_center);
  CHECK(plain.classification_consistent);

  // T6 = T2∘T3, so this pair composes through the T3 class.
  auto cheb = parametric_structure_report(PCPair(Poly{1} + chebyshev(6), chebyshev(3), t6_iv()), 8, 15);
  REQUIRE(cheb.cc.has_value());
  CHECK(normalize_factor(cheb.cc->W) == normalize_factor(chebyshev(3)));
  CHECK(cheb.double_moments);
  CHECK_FALSE(cheb.P_definite);
  CHECK(cheb.classification_consistent);
}
