#include "abel/moments.hpp"

#include <string>

#include "abel/center.hpp"
#include "abel/error.hpp"

namespace abel {

namespace {

// J[t] = ∫_a^b x^t dx for t <= max_power.
std::vector<Scalar> power_integrals(const Interval& iv, std::size_t max_power) {
  std::vector<Scalar> J(max_power + 1);
  Scalar a_pow = iv.a;
  Scalar b_pow = iv.b;
  for (std::size_t t = 0; t <= max_power; ++t) {
    J[t] = (b_pow - a_pow) / Scalar(static_cast<long>(t + 1));
    a_pow *= iv.a;
    b_pow *= iv.b;
  }
  return J;
}

std::vector<Poly> polys_from_vectors(const std::vector<Vector>& vs) {
  std::vector<Poly> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

std::vector<Poly> canonical_basis(const std::vector<Poly>& polys, int d) {
  std::vector<Vector> vs;
  vs.reserve(polys.size());
  for (const auto& f : polys) vs.push_back(coefficient_vector(f, d));
  return polys_from_vectors(span_basis(vs, static_cast<std::size_t>(d) + 1));
}

}  // namespace

Vector coefficient_vector(const Poly& f, int d) {
  if (f.size() > static_cast<std::size_t>(d) + 1) throw DomainError("polynomial exceeds degree bound");
  Vector v(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = f[i];
  return v;
}

Scalar moment(const Poly& P, const Poly& Q, const Interval& iv, int i) {
  if (i < 0) throw DomainError("moment index must be nonnegative");
  return definite_integral(pow(P, static_cast<unsigned>(i)) * derivative(Q), iv);
}

bool double_moments_vanish(const Poly& P, const Poly& Q, const Interval& iv, int N) {
  if (N < 0) throw DomainError("moment bound must be nonnegative");
  Poly p = derivative(P);
  Poly q = derivative(Q);
  Poly Pi = Poly::constant(1);
  Poly Qi = Poly::constant(1);
  for (int i = 0; i <= N; ++i) {
    if (!definite_integral(Pi * q, iv).is_zero()) return false;
    if (!definite_integral(Qi * p, iv).is_zero()) return false;
    Pi = Pi * P;
    Qi = Qi * Q;
  }
  return true;
}

std::vector<Poly> pc_basis(const Interval& iv, int d) {
  Poly vanish = Poly({-iv.a, Scalar(1)}) * Poly({-iv.b, Scalar(1)});
  std::vector<Poly> out;
  for (int n = 0; n + 2 <= d; ++n) out.push_back(vanish * Poly::monomial(1, static_cast<std::size_t>(n)));
  return out;
}

MomentMatrix moment_matrix(const Poly& P, const Interval& iv, int d, int I_max) {
  if (d < 2) throw DomainError("degree bound d must be at least 2");
  if (I_max < 0) throw DomainError("moment count must be nonnegative");
  std::vector<Poly> basis = pc_basis(iv, d);
  std::vector<Poly> derivs;
  for (const auto& B : basis) derivs.push_back(derivative(B));

  std::size_t deg_p = P.is_zero() ? 0 : *P.degree();
  std::vector<Scalar> J = power_integrals(iv, deg_p * static_cast<std::size_t>(I_max) + static_cast<std::size_t>(d));

  Matrix M(0, basis.size());
  Poly Pi = Poly::constant(1);
  for (int i = 0; i <= I_max; ++i) {
    // mono[s] = ∫ P^i x^s for s < d.
    std::vector<Scalar> mono(static_cast<std::size_t>(d));
    for (std::size_t s = 0; s < mono.size(); ++s)
      for (std::size_t t = 0; t < Pi.size(); ++t) mono[s].add_product(Pi[t], J[t + s]);
    Vector row(basis.size());
    for (std::size_t n = 0; n < basis.size(); ++n)
      for (std::size_t s = 0; s < derivs[n].size(); ++s) row[n].add_product(derivs[n][s], mono[s]);
    M.append_row(row);
    Pi = Pi * P;
  }
  return MomentMatrix{P, iv, d, I_max, std::move(M)};
}

std::vector<Poly> zspace(const Poly& P, const Interval& iv, int d, std::optional<int> I_max) {
  if (!in_pc_space(P, iv)) throw DomainError("zspace needs P(a) = P(b) = 0");
  int imax = I_max.value_or(default_imax(d));
  MomentMatrix extended = moment_matrix(P, iv, d, imax + 5);
  Matrix head(0, extended.M.cols());
  for (int i = 0; i <= imax; ++i) head.append_row(extended.M.row(static_cast<std::size_t>(i)));

  auto kernel = kernel_basis(head);
  auto kernel_ext = kernel_basis(extended.M);
  if (kernel.size() != kernel_ext.size())
    throw ComputeError("kernel not stabilized: dimension " + std::to_string(kernel.size()) + " at I_max=" +
                       std::to_string(imax) + " but " + std::to_string(kernel_ext.size()) + " at I_max=" +
                       std::to_string(imax + 5));

  std::vector<Poly> basis = pc_basis(iv, d);
  std::vector<Poly> out;
  for (const auto& v : kernel) {
    Poly Q;
    for (std::size_t n = 0; n < v.size(); ++n)
      if (!v[n].is_zero()) Q += basis[n] * v[n];
    out.push_back(std::move(Q));
  }
  return canonical_basis(out, d);
}

std::vector<Poly> composition_sum_space(const Poly& P, const Interval& iv, int d) {
  if (!in_pc_space(P, iv)) throw DomainError("composition_sum_space needs P(a) = P(b) = 0");
  std::vector<Poly> gens;
  for (const Poly& W : indecomposable_ab_factors(P, iv).factors) {
    std::size_t m = *W.degree();
    Poly Wt = Poly::constant(1);
    for (std::size_t t = 0; t * m <= static_cast<std::size_t>(d); ++t) {
      gens.push_back(Wt);
      Wt = Wt * W;
    }
  }
  Matrix ends(2, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    ends(0, g) = gens[g](iv.a);
    ends(1, g) = gens[g](iv.b);
  }
  std::vector<Poly> combos;
  for (const auto& c : kernel_basis(ends)) {
    Poly Q;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (!c[g].is_zero()) Q += gens[g] * c[g];
    if (!Q.is_zero()) combos.push_back(std::move(Q));
  }
  return canonical_basis(combos, d);
}

bool yui_check(const Poly& P, const Interval& iv, int d, std::optional<int> I_max) {
  return zspace(P, iv, d, I_max) == composition_sum_space(P, iv, d);
}

int z_dim_formula(int d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  return (d + 1) / 2 + (d + 1) / 3 - (d + 1) / 6;
}

int z_dim_adjusted(int d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  return d / 2 + d / 3 - d / 6;
}

ParametricStructureReport parametric_structure_report(const PCPair& pair, int K, int N) {
  const Poly& P = pair.P;
  const Poly& Q = pair.Q;
  const Interval& iv = pair.iv;
  ParametricStructureReport rep;
  rep.K = K;
  rep.N = N;
  rep.cc = cc_check(P, Q, iv);
  rep.truncated_parametric_center =
      parametric_table(derivative(P), derivative(Q), iv, K, Param::eps_on_q).all_zero();
  rep.P_definite = is_definite(P, iv);
  rep.Q_definite = is_definite(Q, iv);
  Poly p = derivative(P);
  Poly q = derivative(Q);
  rep.Q_in_Z_of_P = true;
  rep.P_in_Z_of_Q = true;
  Poly Pi = Poly::constant(1);
  Poly Qi = Poly::constant(1);
  for (int i = 0; i <= N; ++i) {
    if (rep.Q_in_Z_of_P && !definite_integral(Pi * q, iv).is_zero()) rep.Q_in_Z_of_P = false;
    if (rep.P_in_Z_of_Q && !definite_integral(Qi * p, iv).is_zero()) rep.P_in_Z_of_Q = false;
    Pi = Pi * P;
    Qi = Qi * Q;
  }
  rep.double_moments = rep.P_in_Z_of_Q && rep.Q_in_Z_of_P;
  if (rep.truncated_parametric_center && !rep.cc) {
    rep.classification_consistent = !rep.P_definite && !rep.Q_definite && rep.P_in_Z_of_Q && rep.Q_in_Z_of_P;
  }
  return rep;
}

}  // namespace abel
