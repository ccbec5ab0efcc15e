#include "abel/center.hpp"

#include <algorithm>

#include "abel/error.hpp"

namespace abel {

MultiIndex::MultiIndex(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw DomainError("empty multi-index");
  for (int l : letters_)
    if (l != 1 && l != 2) throw DomainError("multi-index letters must be 1 or 2");
}

MultiIndex MultiIndex::parse(std::string_view digits) {
  std::vector<int> letters;
  for (char c : digits) {
    if (c != '1' && c != '2') throw InputError("multi-index must be a string of 1s and 2s");
    letters.push_back(c - '0');
  }
  return MultiIndex(std::move(letters));
}

Scalar iterated_integral(const MultiIndex& alpha, const Poly& h1, const Poly& h2, const Interval& iv) {
  const auto& w = alpha.letters();
  Poly inner = Poly::constant(1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Poly& h = *it == 1 ? h1 : h2;
    inner = primitive(h * inner, iv.a);
  }
  return inner(iv.b);
}

// -- EpsPoly -----------------------------------------------------------------

void EpsPoly::trim() {
  while (!comps_.empty() && comps_.back().is_zero()) comps_.pop_back();
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& g) {
  if (g.comps_.size() > comps_.size()) comps_.resize(g.comps_.size());
  for (std::size_t j = 0; j < g.comps_.size(); ++j) comps_[j] += g.comps_[j];
  trim();
  return *this;
}

void EpsPoly::add_product(const EpsPoly& f, const EpsPoly& g) {
  if (f.is_zero() || g.is_zero()) return;
  std::size_t n = f.comps_.size() + g.comps_.size() - 1;
  if (n > comps_.size()) comps_.resize(n);
  for (std::size_t i = 0; i < f.comps_.size(); ++i) {
    if (f.comps_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.comps_.size(); ++j) {
      if (g.comps_[j].is_zero()) continue;
      comps_[i + j].add_product(f.comps_[i], g.comps_[j]);
    }
  }
  trim();
}

EpsPoly primitive(const EpsPoly& f, const Scalar& a) {
  std::vector<Poly> out;
  out.reserve(f.comps_.size());
  for (const auto& c : f.comps_) out.push_back(primitive(c, a));
  return EpsPoly(std::move(out));
}

Poly EpsPoly::at(const Scalar& x) const {
  std::vector<Scalar> v;
  v.reserve(comps_.size());
  for (const auto& c : comps_) v.push_back(c(x));
  return Poly(std::move(v));
}

// -- flow recursion ------------------------------------------------------------

namespace {

Scalar value_at(const Poly& f, const Scalar& x) { return f(x); }
Poly value_at(const EpsPoly& f, const Scalar& x) { return f.at(x); }

// Coefficients c_k(x) of y(x) = Σ c_k(x) y_a^k for y' = p y^3 + q y^2,
// y(a) = y_a: c_1 = 1, c_k = ∫_a^x (p Σ_{i+j+l=k} c_i c_j c_l + q Σ_{i+j=k} c_i c_j).
// Returns the values c_k(b), with entry 0 = zero and entry 1 = one.
template <class F>
auto flow_coefficients(const F& p, const F& q, const F& one, const Interval& iv, int K) {
  if (K < 2) throw DomainError("K must be at least 2");
  std::vector<F> c(K + 1);
  std::vector<F> sq(K + 1);  // sq[k] = Σ_{i+j=k} c_i c_j
  c[1] = one;
  for (int k = 2; k <= K; ++k) {
    F s2;
    for (int i = 1; 2 * i < k; ++i) s2.add_product(c[i], c[k - i]);
    s2 += s2;
    if (k % 2 == 0) s2.add_product(c[k / 2], c[k / 2]);
    sq[k] = s2;
    F s3;
    for (int i = 1; i <= k - 2; ++i) s3.add_product(c[i], sq[k - i]);
    F rhs;
    rhs.add_product(p, s3);
    rhs.add_product(q, s2);
    c[k] = primitive(rhs, iv.a);
  }
  using V = decltype(value_at(c[1], iv.b));
  std::vector<V> v(K + 1);
  for (int k = 1; k <= K; ++k) v[k] = value_at(c[k], iv.b);
  return v;
}

}  // namespace

std::vector<Scalar> poincare_coeffs(const Poly& p, const Poly& q, const Interval& iv, int K) {
  return flow_coefficients(p, q, Poly::constant(1), iv, K);
}

Scalar CenterTable::entry(int k, int j) const {
  auto it = entries.find({k, j});
  return it == entries.end() ? Scalar() : it->second;
}

CenterTable parametric_table(const Poly& p, const Poly& q, const Interval& iv, int K, Param param,
                             Direction direction) {
  EpsPoly pe = param == Param::delta_on_p ? EpsPoly({Poly(), p}) : EpsPoly({p});
  EpsPoly qe = param == Param::eps_on_q ? EpsPoly({Poly(), q}) : EpsPoly({q});
  std::vector<Poly> v = flow_coefficients(pe, qe, EpsPoly({Poly::constant(1)}), iv, K);
  v[1] = Poly::constant(1);
  if (direction == Direction::backward) v = invert_series(v);

  CenterTable table;
  table.K = K;
  table.param = param;
  table.direction = direction;
  for (int k = 2; k <= K; ++k) {
    const auto& coeffs = v[k].coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (!coeffs[j].is_zero()) table.entries.emplace(std::pair{k, static_cast<int>(j)}, coeffs[j]);
  }
  return table;
}

// -- printed expansions ------------------------------------------------------

const std::vector<WordTerm>& printed_combination(int k) {
  static const std::vector<std::vector<WordTerm>> lists = {
      {{-1, "1"}},
      {{2, "11"}, {-1, "2"}},
      {{-6, "111"}, {3, "12"}, {2, "21"}},
      {{24, "1111"}, {-12, "112"}, {-8, "121"}, {-6, "211"}, {3, "22"}},
      {{-120, "11111"}, {60, "1112"}, {40, "1121"}, {30, "1211"}, {24, "2111"}, {-15, "122"}, {-12, "212"},
       {-8, "221"}},
  };
  if (k < 2 || k > 6) throw DomainError("printed expansions exist for 2 <= k <= 6");
  return lists[k - 2];
}

Scalar paper_combination(int k, const Poly& p, const Poly& q, const Interval& iv, Assignment assignment) {
  const Poly& h1 = assignment == Assignment::h1_is_p ? p : q;
  const Poly& h2 = assignment == Assignment::h1_is_p ? q : p;
  Scalar total;
  for (const auto& term : printed_combination(k))
    total += Scalar(term.coeff) * iterated_integral(MultiIndex::parse(term.word), h1, h2, iv);
  return total;
}

Scalar melnikov_D(int k, const PCPair& pair) {
  const Poly& P = pair.P;
  const Poly& Q = pair.Q;
  const Interval& iv = pair.iv;
  Poly p = derivative(P);
  Poly q = derivative(Q);
  switch (k) {
    case 6:
      return Scalar(1, 2) * definite_integral(p * Q * Q, iv);
    case 7:
      return Scalar(-2) * definite_integral(P * p * Q * Q, iv);
    case 8: {
      auto t = melnikov_D8_terms(pair);
      return t[0] - Scalar(320) * t[1] + Scalar(185) * t[2];
    }
    default:
      throw DomainError("Melnikov coefficients are available for k = 6, 7, 8");
  }
}

std::array<Scalar, 3> melnikov_D8_terms(const PCPair& pair) {
  const Poly& P = pair.P;
  const Interval& iv = pair.iv;
  Poly q = derivative(pair.Q);
  Poly P2 = P * P;
  return {definite_integral(P2 * P * pair.Q * q, iv), definite_integral(P2 * q * primitive(P * q, iv.a), iv),
          definite_integral(P * q * primitive(P2 * q, iv.a), iv)};
}

TruncatedOrder infinitesimal_order(const Poly& p, const Poly& q, const Interval& iv, int K, Param param) {
  CenterTable t = parametric_table(p, q, iv, K, param, Direction::forward);
  TruncatedOrder out;
  out.K = K;
  for (const auto& [kj, value] : t.entries) {
    int j = kj.second;
    if (!out.order || j < *out.order) out.order = j;
  }
  return out;
}

Scalar first_order_column_oracle(const PCPair& pair, int i, Param param) {
  if (i < 0) throw DomainError("column index must be nonnegative");
  const Interval& iv = pair.iv;
  std::vector<Poly> series(static_cast<std::size_t>(i) + 1);
  series[0] = Poly::constant(1);
  if (param == Param::eps_on_q) {
    // f = sqrt(S), S = 1 - 2P u: 2 f_0 f_n = S_n - Σ_{0<k<n} f_k f_{n-k}.
    Poly S1 = Scalar(-2) * pair.P;
    for (int n = 1; n <= i; ++n) {
      Poly acc = n == 1 ? S1 : Poly();
      for (int k = 1; k < n; ++k) acc -= series[k] * series[n - k];
      series[n] = Scalar(1, 2) * acc;
    }
    return definite_integral(derivative(pair.Q) * series[i], iv);
  }
  // g = 1/S, S = 1 - Q u: g_n = -S_1 g_{n-1}.
  Poly S1 = -pair.Q;
  for (int n = 1; n <= i; ++n) series[n] = -(S1 * series[n - 1]);
  return definite_integral(derivative(pair.P) * series[i], iv);
}

}  // namespace abel
