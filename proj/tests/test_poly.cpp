#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abel/error.hpp"
#include "abel/matrix.hpp"
#include "abel/poly.hpp"

using namespace abel;

namespace {

Scalar half_root3() { return Scalar(Rational(0), Rational(1, 2), 3); }

Poly random_poly(std::mt19937_64& rng, std::size_t deg) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::vector<Scalar> v(deg + 1);
  for (auto& x : v) x = Scalar(c(rng), 1 + static_cast<long>(rng() % 3));
  if (v.back().is_zero()) v.back() = 1;
  return Poly(v);
}

// Solves Q = Σ r_t W^t for r by exact linear algebra; true iff solvable.
bool subring_by_linear_solve(const Poly& Q, const Poly& W) {
  std::size_t dq = Q.is_zero() ? 0 : *Q.degree(), dw = *W.degree();
  if (dq % dw != 0) return false;
  std::size_t n = dq / dw;
  std::vector<Poly> powers{Poly{1}};
  for (std::size_t t = 1; t <= n; ++t) powers.push_back(powers.back() * W);
  Matrix A(dq + 1, n + 2);
  for (std::size_t t = 0; t <= n; ++t)
    for (std::size_t i = 0; i <= dq; ++i) A(i, t) = powers[t][i];
  for (std::size_t i = 0; i <= dq; ++i) A(i, n + 1) = -Q[i];
  for (const auto& v : kernel_basis(A))
    if (!v.back().is_zero()) return true;
  return false;
}

}  // namespace

TEST_CASE("evaluation") {
  CHECK(chebyshev(2)(half_root3()) == Scalar(1, 2));
  CHECK(Poly()(Scalar(5)) == Scalar());
  CHECK(chebyshev(6)(half_root3()) == Scalar(-1));
}

TEST_CASE("composition") {
  CHECK(compose(chebyshev(3), chebyshev(2)) == chebyshev(6));
  CHECK(chebyshev(6) == Poly{-1, 0, 18, 0, -48, 0, 32});
  Poly f{1, -2, 0, 5};
  CHECK(compose(f, Poly::x()) == f);
  CHECK(compose(Poly{0, 0, 1}, Poly{0, -1, 0, 0, 0, 1}) == Poly{0, 0, 1, 0, 0, 0, -2, 0, 0, 0, 1});
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned n = 1; n <= 6; ++n) CHECK(compose(chebyshev(m), chebyshev(n)) == chebyshev(m * n));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    Poly a = random_poly(rng, rng() % 3), b = random_poly(rng, rng() % 3), c = random_poly(rng, rng() % 3);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("primitive and integrals") {
  CHECK(primitive(Poly{0, 2}, Scalar(-1)) == Poly{-1, 0, 1});
  CHECK(primitive(Poly(), Scalar(3)).is_zero());
  CHECK(primitive(Poly{-1, 0, 3}, Scalar(0)) == Poly{0, -1, 0, 1});
  CHECK(definite_integral(Poly{0, 0, 1}, Interval(-1, 1)) == Scalar(2, 3));
  CHECK(definite_integral(Poly{0, 1, 0, 5}, Interval(-2, 2)).is_zero());
  CHECK(definite_integral(Poly{0, 0, 1}, Interval(-half_root3(), half_root3())) ==
        Scalar(Rational(0), Rational(1, 4), 3));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Poly f = random_poly(rng, rng() % 6);
    Scalar a(static_cast<long>(rng() % 5) - 2), b(static_cast<long>(rng() % 5) + 3), c(1, 3);
    Poly F = primitive(f, a);
    CHECK(derivative(F) == f);
    CHECK(F(a).is_zero());
    CHECK(definite_integral(f, Interval(a, b)) == definite_integral(f, Interval(a, c)) + definite_integral(f, Interval(c, b)));
    // x = αu + β maps [u0, u1] onto [a, b].
    Scalar alpha(static_cast<long>(rng() % 3) + 1, 2), beta(static_cast<long>(rng() % 5) - 2);
    Poly tau{beta, alpha};
    Interval pulled((a - beta) / alpha, (b - beta) / alpha);
    CHECK(definite_integral(compose(f, tau) * Poly{alpha}, pulled) == definite_integral(f, Interval(a, b)));
  }
}

TEST_CASE("degree of zero is a marker") {
  CHECK_FALSE(Poly().degree().has_value());
  CHECK(Poly{0, 0, 0}.is_zero());
  CHECK(*Poly{1}.degree() == 0);
  CHECK_THROWS_AS(Interval(1, 1), DomainError);
}

TEST_CASE("division") {
  Poly f{-1, 0, 0, 1}, g{-1, 1};
  auto [q, r] = divmod(f, g);
  CHECK(q == Poly{1, 1, 1});
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(f, Poly()), DomainError);
}

TEST_CASE("subring membership") {
  auto r = in_subring(Poly{5, 0, -2, 0, 1}, Poly{0, 0, 1});
  REQUIRE(r);
  CHECK(*r == Poly{5, -2, 1});
  CHECK_FALSE(in_subring(Poly{0, 0, 0, 1}, Poly{0, 0, 1}));
  auto t = in_subring(chebyshev(6), chebyshev(2));
  REQUIRE(t);
  CHECK(*t == chebyshev(3));
  CHECK_THROWS_AS(in_subring(Poly{1, 1}, Poly{4}), DomainError);

  std::mt19937_64 rng(4);
  for (int n = 0; n < 100; ++n) {
    Poly W = random_poly(rng, 1 + rng() % 3);
    Poly Q = n % 2 ? compose(random_poly(rng, rng() % 4), W) : random_poly(rng, rng() % 9);
    auto got = in_subring(Q, W);
    CHECK(got.has_value() == subring_by_linear_solve(Q, W));
    if (got) CHECK(compose(*got, W) == Q);
  }
}

TEST_CASE("support classes") {
  const std::set<unsigned> two{2};
  CHECK(u_membership(Poly::monomial(1, 4) + Poly::monomial(1, 7), two, SupportClass::U));
  CHECK_FALSE(u_membership(Poly::monomial(1, 6), two, SupportClass::U));
  CHECK(u_membership(Poly::monomial(1, 4) + Poly::monomial(1, 8), two, SupportClass::U1));
  CHECK_FALSE(u_membership(Poly::monomial(1, 3), two, SupportClass::U1));
  CHECK(u_membership(Poly{7, 1}, two, SupportClass::U1));
  CHECK_THROWS_AS(u_membership(Poly{1}, {4}, SupportClass::U), DomainError);
}

TEST_CASE("endpoint-vanishing pairs") {
  Interval iv(-1, 1);
  CHECK(in_pc_space(Poly{-1, 0, 1}, iv));
  CHECK_FALSE(in_pc_space(Poly{0, 0, 1}, iv));
  CHECK_THROWS_AS(PCPair(Poly{0, 0, 1}, Poly{-1, 0, 1}, iv), DomainError);
}

TEST_CASE("pretty printing") {
  CHECK(Poly{0, Scalar(-3, 4), 0, 1}.pretty() == "x^3-3/4*x");
  CHECK(Poly().pretty() == "0");
}
