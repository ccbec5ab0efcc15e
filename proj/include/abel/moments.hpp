#pragma once

#include <optional>
#include <vector>

#include "abel/decomp.hpp"
#include "abel/matrix.hpp"
#include "abel/poly.hpp"

namespace abel {

/// m_i(P,Q) = ∫_a^b P^i Q'.
Scalar moment(const Poly& P, const Poly& Q, const Interval& iv, int i);

/// m_i(P,Q) = 0 and m_i(Q,P) = 0 for every 0 <= i <= N.
bool double_moments_vanish(const Poly& P, const Poly& Q, const Interval& iv, int N);

/// B_n = (x-a)(x-b)x^n, n = 0..d-2: the basis of polynomials of degree <= d
/// vanishing at both endpoints.
std::vector<Poly> pc_basis(const Interval& iv, int d);

/// Rows i = 0..I_max of the functionals Q ↦ m_i(P,Q) in the pc_basis.
struct MomentMatrix {
  Poly P;
  Interval iv;
  int d;
  int I_max;
  Matrix M;
};

MomentMatrix moment_matrix(const Poly& P, const Interval& iv, int d, int I_max);

/// Default moment count used when none is given: 2d.
inline int default_imax(int d) { return 2 * d; }

/// Basis of Z(P)_d: the Q of degree <= d vanishing at a and b with every
/// moment m_i(P,Q) zero. The kernel at I_max must agree with the kernel at
/// I_max + 5, otherwise ComputeError ("kernel not stabilized").
std::vector<Poly> zspace(const Poly& P, const Interval& iv, int d, std::optional<int> I_max = std::nullopt);

/// Basis of (Σ_j K[W_j]) ∩ {deg <= d, Q(a) = Q(b) = 0} over the
/// indecomposable [a,b]-factors W_j of P.
std::vector<Poly> composition_sum_space(const Poly& P, const Interval& iv, int d);

/// True iff zspace and composition_sum_space coincide.
bool yui_check(const Poly& P, const Interval& iv, int d, std::optional<int> I_max = std::nullopt);

/// ⌊(d+1)/2⌋ + ⌊(d+1)/3⌋ - ⌊(d+1)/6⌋, as printed for Z(T_6)_d.
int z_dim_formula(int d);

/// ⌊d/2⌋ + ⌊d/3⌋ - ⌊d/6⌋: the number of exponents 1..d divisible by 2 or 3,
/// which is the dimension of S1(T2) + S2(T3) inside degree <= d with both
/// endpoint values zero.
int z_dim_adjusted(int d);

/// Canonical coordinates of a polynomial of degree <= d in the monomial basis.
Vector coefficient_vector(const Poly& f, int d);

struct ParametricStructureReport {
  std::optional<CCWitness> cc;
  bool truncated_parametric_center = false;  ///< every table entry zero for k <= K
  bool double_moments = false;               ///< both moment families zero up to N
  bool P_definite = false;
  bool Q_definite = false;
  bool P_in_Z_of_Q = false;  ///< m_i(Q,P) = 0, i <= N
  bool Q_in_Z_of_P = false;  ///< m_i(P,Q) = 0, i <= N
  /// Parametric center without composition must force both non-definite and
  /// mutual Z-membership; false flags a violation.
  bool classification_consistent = true;
  int K = 0;
  int N = 0;
};

ParametricStructureReport parametric_structure_report(const PCPair& pair, int K, int N);

}  // namespace abel
