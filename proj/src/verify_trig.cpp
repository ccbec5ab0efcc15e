#include <array>

#include "abel/error.hpp"
#include "abel/matrix.hpp"
#include "abel/trig.hpp"
#include "verify_internal.hpp"

namespace abel::verify_detail {

namespace {

// First i in [0, i_max] with ∫ A^i dB != 0, or -1.
int first_nonzero_moment(const TrigPoly& A, const TrigPoly& B, int i_max) {
  TrigPoly dB = trig_diff(B);
  TrigPoly Ai = TrigPoly::constant(1);
  for (int i = 0; i <= i_max; ++i) {
    if (!trig_integral(Ai * dB).coeff.is_zero()) return i;
    Ai = Ai * A;
  }
  return -1;
}

// Both moment families of (P, Q) for i <= i_max; empty when all vanish.
std::string moment_failure(const TrigPoly& P, const TrigPoly& Q, int i_max) {
  int i = first_nonzero_moment(Q, P, i_max);
  if (i >= 0) return cat("int Q^", i, " dP != 0");
  i = first_nonzero_moment(P, Q, i_max);
  if (i >= 0) return cat("int P^", i, " dQ != 0");
  return {};
}

FamilySpec random_spec(Sampler& s, int excluded, int max_multiple) {
  FamilySpec spec;
  spec.constant = s.coefficient();
  for (int k = 1; k <= max_multiple; ++k) {
    if (k % excluded == 0) continue;
    if (s.coin()) spec.cos[k] = s.nonzero_coefficient();
    if (s.coin()) spec.sin[k] = s.nonzero_coefficient();
  }
  if (spec.cos.empty() && spec.sin.empty()) spec.cos[1] = s.nonzero_coefficient();
  return spec;
}

TrigPoly tilde_q(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  TrigPoly base = TrigPoly::sin(2, alpha) + TrigPoly::cos(2, beta);
  return modify_family(base, 2, Poly{0, Scalar(-3) * gamma, 0, Scalar(4) * gamma});
}

}  // namespace

CriterionResult criterion_a8(std::uint64_t seed) {
  Report rep("A8", "trigonometric families and the mixed (3,2) integral");
  Sampler s(criterion_seed(seed, 8));
  const int i_max = 12;

  for (int n = 0; n < 10; ++n) {
    auto [P, Q] = build_family(3, 2, random_spec(s, 2, 5), random_spec(s, 3, 5));
    std::string f = moment_failure(P, Q, i_max);
    rep.check(f.empty(), cat("family ", n, ": ", f));
  }
  rep.note("10 random (3,2) families: both moment families vanish for i <= 12");

  for (int n = 0; n < 10; ++n) {
    TrigPoly P = TrigPoly::cos(3);
    TrigPoly Q = tilde_q(s.coefficient(), s.coefficient(), s.nonzero_coefficient());
    std::string f = moment_failure(P, Q, i_max);
    rep.check(f.empty(), cat("modified family ", n, ": ", f));
  }
  rep.note("10 modified families P = cos3t, a sin2t + b cos2t + c cos6t: both moment families vanish for i <= 12");

  bool rejected = false;
  try {
    build_family(3, 2, FamilySpec{0, {{1, 1}}, {}}, FamilySpec{0, {{1, 1}, {3, 1}}, {{1, 1}}});
  } catch (const DomainError&) {
    rejected = true;
  }
  rep.check(rejected, "a cos6t term in Q was accepted by the (3,2) family builder");

  const TrigPoly P = TrigPoly::cos(3);
  auto cert = non_cc_certificate(P, tilde_q(1, 0, 0), 6, 6);
  rep.check(cert && cert->i == 3 && cert->j == 2 && cert->value.coeff == Scalar(3, 4),
            cert ? cat("certificate (", cert->i, ",", cert->j, ") = ", cert->value.str()) : "no certificate");
  if (cert) rep.note(cat("certificate for sin2t: (", cert->i, ",", cert->j, ") = ", cert->value.str()));

  Scalar r3 = Scalar::sqrt_of(3);
  PiScalar at_root = trig_moment(P, tilde_q(r3, 1, 0), 3, 2);
  rep.check(at_root.coeff.is_zero(), "(3,2) integral at (r3, 1, 0) = " + at_root.str());

  // The (3,2) integral is a homogeneous cubic in (a, b, c). A one-dimensional
  // kernel of [monomials | -value] over 125 integer points pins it down.
  std::vector<std::array<int, 3>> monomials;
  for (int ea = 3; ea >= 0; --ea)
    for (int eb = 3 - ea; eb >= 0; --eb) monomials.push_back({ea, eb, 3 - ea - eb});
  auto eval_monomials = [&](const std::array<long, 3>& pt) {
    Vector row;
    for (const auto& m : monomials) {
      Scalar v = 1;
      for (int t = 0; t < 3; ++t)
        for (int e = 0; e < m[t]; ++e) v *= Scalar(pt[t]);
      row.push_back(v);
    }
    return row;
  };
  std::vector<std::array<long, 3>> points;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) points.push_back({a, b, c});
  Matrix A(0, monomials.size() + 1);
  for (const auto& pt : points) {
    Vector row = eval_monomials(pt);
    row.push_back(-trig_moment(P, tilde_q(pt[0], pt[1], pt[2]), 3, 2).coeff);
    A.append_row(row);
  }
  auto kernel = kernel_basis(A);
  rep.check(kernel.size() == 1 && !kernel[0].back().is_zero(), "(3,2) integral is not a cubic in (a,b,c)");
  if (kernel.size() == 1 && !kernel[0].back().is_zero()) {
    Vector coeff = kernel[0];
    Scalar scale = coeff.back().inverse();
    std::string poly;
    const char* names[3] = {"a", "b", "c"};
    for (std::size_t m = 0; m < monomials.size(); ++m) {
      Scalar c = coeff[m] * scale;
      if (c.is_zero()) continue;
      std::string term = c.str();
      for (int t = 0; t < 3; ++t)
        if (monomials[m][t] > 0) term += cat("*", names[t], monomials[m][t] > 1 ? cat("^", monomials[m][t]) : "");
      poly += (poly.empty() || term[0] == '-' ? "" : "+") + term;
    }
    rep.note("(3,2) integral / pi = " + poly + "  [125 integer points, exact]");
  }
  return rep.finish();
}

CriterionResult criterion_a9(std::uint64_t seed) {
  Report rep("A9", "modified-family linearity");
  Sampler s(criterion_seed(seed, 9));
  const TrigPoly P = TrigPoly::cos(3);
  for (int n = 0; n < 20; ++n) {
    TrigPoly Q = build_family(3, 2, FamilySpec{0, {{1, 1}}, {}}, random_spec(s, 3, 4)).Q;
    Poly R = s.poly(static_cast<std::size_t>(s.integer(0, 3)));
    TrigPoly Qt = modify_family(Q, 2, R);
    std::string f = moment_failure(P, Qt, 10);
    rep.check(f.empty(), cat("sample ", n, " with R = ", R.pretty("z"), ": ", f));
  }
  rep.note("20 random R of degree <= 3: both moment families of (cos3t, Q + R(cos2t)) vanish for i <= 10");
  return rep.finish();
}

}  // namespace abel::verify_detail
