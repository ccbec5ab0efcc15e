#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "abel/poly.hpp"

namespace abel {

/// Right [a,b]-factors of a polynomial, one normalized representative (monic,
/// zero constant term) per equivalence class W ~ αW + β, sorted by degree and
/// then coefficients.
struct FactorSet {
  std::vector<Poly> factors;
  /// Number of [a,b]-indecomposable classes among the right factors of P.
  std::size_t s = 0;
};

/// Representative of the class of W under W -> αW + β.
Poly normalize_factor(const Poly& W);

/// The unique normalized degree-m polynomial whose r-th power agrees with
/// P/lc(P) in the top m coefficients, where r = deg P / m. Any right
/// composition factor of P of degree m is equivalent to it.
Poly factor_candidate(const Poly& P, std::size_t m);

/// All right [a,b]-factors of P, P's own class included.
FactorSet right_factors(const Poly& P, const Interval& iv);

/// Minimal elements of right_factors under W1 <= W2 iff W2 ∈ K[W1].
FactorSet indecomposable_ab_factors(const Poly& P, const Interval& iv);

/// P is definite iff it has exactly one [a,b]-indecomposable right factor.
/// Requires P(a) = P(b) = 0.
bool is_definite(const Poly& P, const Interval& iv);

struct CCWitness {
  Poly W;
  Poly P_outer;  ///< P = P_outer∘W
  Poly Q_outer;  ///< Q = Q_outer∘W
};

/// Decides the composition condition: P and Q are both polynomials in a
/// common right [a,b]-factor W. Searching the indecomposable factors of P is
/// complete because every right [a,b]-factor is a polynomial in one of them.
std::optional<CCWitness> cc_check(const Poly& P, const Poly& Q, const Interval& iv);

struct StructureReport {
  std::size_t s = 0;
  std::vector<std::size_t> all_factor_degrees;
  std::vector<std::size_t> indecomposable_degrees;
  bool definite = false;
  /// "single", "chebyshev-like", "power-like", "triple", or "irregular"
  /// (an s=2 shape matching neither pattern).
  std::string tag;
  /// (n, m) for chebyshev-like, (n, r) for power-like, empty otherwise.
  std::vector<std::size_t> pattern;
};

StructureReport structure_report(const Poly& P, const Interval& iv);

/// True iff A = κ·T_n∘λ + e and B = κ'·T_m∘λ + e' for one degree-one λ
/// (n = deg A, m = deg B).
bool common_chebyshev_shape(const Poly& A, const Poly& B);

}  // namespace abel
