#include "abel/decomp.hpp"

#include <algorithm>
#include <numeric>

#include "abel/error.hpp"

namespace abel {

namespace {

void require_closed(const Poly& P, const Interval& iv) {
  if (P.is_constant()) throw DomainError("constant polynomial has no right factors");
  if (P(iv.a) != P(iv.b)) throw DomainError("not an [a,b]-closed polynomial: P(a) != P(b)");
}

// Shift c and, for n >= 3, the squared scale α² such that A(w + c) is an
// affine image of T_n(α w). nullopt when A has no such form.
struct ChebShape {
  Scalar shift;
  std::optional<Scalar> scale_sq;
};

std::optional<ChebShape> chebyshev_shape(const Poly& A) {
  std::size_t n = *A.degree();
  Scalar shift = -A[n - 1] / (A[n] * Scalar(static_cast<long>(n)));
  Poly depressed = compose(A, Poly({shift, Scalar(1)}));
  if (n < 3) return ChebShape{shift, std::nullopt};
  Poly T = chebyshev(static_cast<unsigned>(n));
  if (depressed[n - 2].is_zero()) return std::nullopt;
  Scalar s = T[n - 2] * depressed[n] / (T[n] * depressed[n - 2]);
  for (std::size_t k = 1; k < n; ++k) {
    if ((n - k) % 2 == 1) {
      if (!depressed[k].is_zero()) return std::nullopt;
      continue;
    }
    Scalar s_pow = 1;
    for (std::size_t t = 0; t < (n - k) / 2; ++t) s_pow *= s;
    if (depressed[k] * T[n] * s_pow != depressed[n] * T[k]) return std::nullopt;
  }
  return ChebShape{shift, s};
}

std::vector<std::size_t> divisors_above_one(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t m = 2; m <= n; ++m)
    if (n % m == 0) out.push_back(m);
  return out;
}

std::vector<Poly> minimal_factors(const std::vector<Poly>& all) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < all.size() && minimal; ++j) {
      if (j == i || all[j].size() >= all[i].size()) continue;
      if (in_subring(all[i], all[j])) minimal = false;
    }
    if (minimal) out.push_back(all[i]);
  }
  return out;
}

}  // namespace

Poly normalize_factor(const Poly& W) {
  if (W.is_constant()) throw DomainError("constant factor");
  Poly out = W - Poly::constant(W[0]);
  return out * W.leading().inverse();
}

Poly factor_candidate(const Poly& P, std::size_t m) {
  std::size_t n = *P.degree();
  if (m == 0 || n % m != 0) throw DomainError("candidate degree must divide deg P");
  auto r = static_cast<unsigned>(n / m);
  Poly target = P * P.leading().inverse();
  std::vector<Scalar> w(m + 1);
  w[m] = 1;
  for (std::size_t k = 1; k < m; ++k) {
    Poly partial = pow(Poly(w), r);
    w[m - k] = (target[n - k] - partial[n - k]) / Scalar(static_cast<long>(r));
  }
  return Poly(std::move(w));
}

FactorSet right_factors(const Poly& P, const Interval& iv) {
  require_closed(P, iv);
  FactorSet out;
  for (std::size_t m : divisors_above_one(*P.degree())) {
    Poly W = factor_candidate(P, m);
    if (W(iv.a) != W(iv.b)) continue;
    if (!in_subring(P, W)) continue;
    out.factors.push_back(std::move(W));
  }
  std::sort(out.factors.begin(), out.factors.end());
  out.s = minimal_factors(out.factors).size();
  return out;
}

FactorSet indecomposable_ab_factors(const Poly& P, const Interval& iv) {
  FactorSet all = right_factors(P, iv);
  FactorSet out;
  out.factors = minimal_factors(all.factors);
  out.s = out.factors.size();
  return out;
}

bool is_definite(const Poly& P, const Interval& iv) {
  if (!in_pc_space(P, iv)) throw DomainError("definiteness needs P(a) = P(b) = 0");
  return indecomposable_ab_factors(P, iv).s == 1;
}

std::optional<CCWitness> cc_check(const Poly& P, const Poly& Q, const Interval& iv) {
  require_closed(P, iv);
  require_closed(Q, iv);
  for (const Poly& W : indecomposable_ab_factors(P, iv).factors) {
    auto q_outer = in_subring(Q, W);
    if (!q_outer) continue;
    auto p_outer = in_subring(P, W);
    return CCWitness{W, std::move(*p_outer), std::move(*q_outer)};
  }
  return std::nullopt;
}

bool common_chebyshev_shape(const Poly& A, const Poly& B) {
  auto sa = chebyshev_shape(A);
  auto sb = chebyshev_shape(B);
  if (!sa || !sb) return false;
  if (sa->shift != sb->shift) return false;
  if (sa->scale_sq && sb->scale_sq && *sa->scale_sq != *sb->scale_sq) return false;
  return true;
}

StructureReport structure_report(const Poly& P, const Interval& iv) {
  FactorSet all = right_factors(P, iv);
  std::vector<Poly> minimal = minimal_factors(all.factors);
  StructureReport rep;
  rep.s = minimal.size();
  for (const auto& W : all.factors) rep.all_factor_degrees.push_back(*W.degree());
  for (const auto& W : minimal) rep.indecomposable_degrees.push_back(*W.degree());
  rep.definite = rep.s == 1;
  std::size_t deg_p = *P.degree();

  if (rep.s == 1) {
    rep.tag = "single";
  } else if (rep.s == 3) {
    rep.tag = "triple";
  } else if (rep.s == 2) {
    const Poly& W1 = minimal[0];
    const Poly& W2 = minimal[1];
    std::size_t d1 = *W1.degree();
    std::size_t d2 = *W2.degree();
    std::size_t u = std::gcd(d1, d2);
    std::size_t n = d1 / u;
    std::size_t m = d2 / u;
    bool cheb = false;
    if (n > 1 && m > 1 && deg_p % (n * m) == 0) {
      Poly inner = u == 1 ? Poly::x() : factor_candidate(W1, u);
      auto A = in_subring(W1, inner);
      auto B = in_subring(W2, inner);
      cheb = A && B && common_chebyshev_shape(*A, *B);
    }
    if (cheb) {
      rep.tag = "chebyshev-like";
      rep.pattern = {n, m};
    } else if (deg_p % d1 == 0 || deg_p % d2 == 0) {
      // Power shape z^n∘U1, z^r R(z^n)∘U1: core degrees n, r are coprime.
      rep.tag = "power-like";
      rep.pattern = {n, m};
    } else {
      rep.tag = "irregular";
    }
  } else {
    rep.tag = "irregular";
  }
  return rep;
}

}  // namespace abel
