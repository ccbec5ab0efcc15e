#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "abel/poly.hpp"

namespace abel {

/// Which coefficient of y' = p y^3 + q y^2 carries the formal parameter.
enum class Param { eps_on_q, delta_on_p };
/// forward: the a -> b map y_a ↦ y_b; backward: its inverse.
enum class Direction { forward, backward };
/// How the letters 1, 2 of an iterated integral are bound to p and q.
enum class Assignment { h1_is_p, h1_is_q };

/// Word over {1, 2} naming an iterated integral ∫h_{α1}∫h_{α2}…∫h_{αs}.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> letters);
  /// From a digit string such as "1121".
  static MultiIndex parse(std::string_view digits);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

 private:
  std::vector<int> letters_;
};

/// ∫_a^b h_{α1}(t1) ∫_a^{t1} h_{α2}(t2) … dt, evaluated inside-out.
Scalar iterated_integral(const MultiIndex& alpha, const Poly& h1, const Poly& h2, const Interval& iv);

/// Coefficients of the flow map y_a ↦ y(b) of y' = p y^3 + q y^2 as a list
/// indexed by power: v[0] = 0, v[1] = 1, v[k] for 2 <= k <= K.
std::vector<Scalar> poincare_coeffs(const Poly& p, const Poly& q, const Interval& iv, int K);

/// Compositional inverse of y + Σ v_k y^k up to the length of v. The input
/// uses the layout of poincare_coeffs (v[0] = 0, v[1] = one). Works over any
/// commutative ring with + - *.
template <class Ring>
std::vector<Ring> invert_series(const std::vector<Ring>& v) {
  const std::size_t K = v.size() - 1;
  // powers[k][n] = [y^n] G(y)^k, truncated at y^K.
  std::vector<std::vector<Ring>> powers(K + 1, std::vector<Ring>(K + 1));
  powers[1] = v;
  for (std::size_t k = 2; k <= K; ++k) {
    for (std::size_t i = k - 1; i <= K; ++i) {
      if (powers[k - 1][i] == Ring()) continue;
      for (std::size_t j = 1; i + j <= K; ++j) powers[k][i + j] = powers[k][i + j] + powers[k - 1][i] * v[j];
    }
  }
  std::vector<Ring> w(K + 1);
  if (K >= 1) w[1] = v[1];
  for (std::size_t n = 2; n <= K; ++n) {
    Ring acc = v[n];
    for (std::size_t k = 2; k < n; ++k) acc = acc + w[k] * powers[k][n];
    w[n] = Ring() - acc;
  }
  return w;
}

/// Polynomial in the formal parameter whose coefficients are polynomials in
/// x. Component j multiplies parameter^j.
class EpsPoly {
 public:
  EpsPoly() = default;
  explicit EpsPoly(std::vector<Poly> comps) : comps_(std::move(comps)) { trim(); }

  const std::vector<Poly>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  EpsPoly& operator+=(const EpsPoly& g);
  /// this += f*g.
  void add_product(const EpsPoly& f, const EpsPoly& g);
  friend EpsPoly operator*(const EpsPoly& f, const EpsPoly& g) {
    EpsPoly r;
    r.add_product(f, g);
    return r;
  }
  friend bool operator==(const EpsPoly&, const EpsPoly&) = default;

  /// Componentwise primitive vanishing at a.
  friend EpsPoly primitive(const EpsPoly& f, const Scalar& a);
  /// Componentwise value at x; a polynomial in the parameter.
  Poly at(const Scalar& x) const;

 private:
  void trim();
  std::vector<Poly> comps_;
};

/// Nonzero coefficients v_{k,j} (power k of y, power j of the parameter).
struct CenterTable {
  int K = 0;
  Param param = Param::eps_on_q;
  Direction direction = Direction::forward;
  std::map<std::pair<int, int>, Scalar> entries;

  /// Zero when absent.
  Scalar entry(int k, int j) const;
  bool all_zero() const { return entries.empty(); }
};

CenterTable parametric_table(const Poly& p, const Poly& q, const Interval& iv, int K, Param param,
                             Direction direction = Direction::forward);

/// One term c·I_word of a printed return-map coefficient.
struct WordTerm {
  long coeff;
  std::string_view word;
};

/// The printed expansions of v_2 … v_6 as combinations of iterated integrals.
const std::vector<WordTerm>& printed_combination(int k);

/// Evaluates the printed expansion of v_k, 2 <= k <= 6.
Scalar paper_combination(int k, const Poly& p, const Poly& q, const Interval& iv, Assignment assignment);

/// Second Melnikov coefficients D_6, D_7, D_8 with p = P', q = Q'.
Scalar melnikov_D(int k, const PCPair& pair);
/// The three integrals combined in D_8 with weights 1, -320, 185:
/// ∫P^3 Q q, ∫P^2 q ∫Pq, ∫P q ∫P^2 q.
std::array<Scalar, 3> melnikov_D8_terms(const PCPair& pair);

/// Smallest parameter order with a nonzero entry for k <= K; nullopt when the
/// whole truncated table vanishes.
struct TruncatedOrder {
  std::optional<int> order;
  int K = 0;
};

TruncatedOrder infinitesimal_order(const Poly& p, const Poly& q, const Interval& iv, int K, Param param);

/// Entries linear in the parameter predicted by first-order variation of the
/// closed-form unperturbed flows, computed by exact series expansion:
/// eps_on_q: entry (2i+2, 1) = [u^i] ∫ q (1 - 2P u)^{1/2};
/// delta_on_p: entry (i+3, 1) = [u^i] ∫ p (1 - Q u)^{-1}.
Scalar first_order_column_oracle(const PCPair& pair, int i, Param param);

}  // namespace abel
