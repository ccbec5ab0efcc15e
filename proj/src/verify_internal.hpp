#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abel/poly.hpp"
#include "abel/trig.hpp"
#include "abel/verify.hpp"

namespace abel::verify_detail {

/// Seeded source of small exact test data.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Integers in [-3, 3] with an occasional half or third.
  Scalar coefficient() {
    long num = integer(-3, 3);
    long den = integer(0, 3) == 0 ? integer(2, 3) : 1;
    return Scalar(num, den);
  }
  Scalar nonzero_coefficient() {
    Scalar c;
    while (c.is_zero()) c = coefficient();
    return c;
  }

  Poly poly(std::size_t degree) {
    std::vector<Scalar> c(degree + 1);
    for (auto& s : c) s = coefficient();
    c[degree] = nonzero_coefficient();
    return Poly(std::move(c));
  }

  Interval interval() {
    static const std::vector<std::pair<Scalar, Scalar>> choices = {
        {Scalar(-1), Scalar(1)}, {Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(2)}, {Scalar(-1, 2), Scalar(3, 2)},
        {Scalar(1), Scalar(3)},  {Scalar(-2), Scalar(0)}};
    const auto& [a, b] = choices[static_cast<std::size_t>(integer(0, static_cast<long>(choices.size()) - 1))];
    return Interval(a, b);
  }

  /// (x-a)(x-b)R with deg R = degree - 2, degree >= 2.
  Poly vanishing_poly(const Interval& iv, std::size_t degree) {
    Poly ends = Poly({-iv.a, Scalar(1)}) * Poly({-iv.b, Scalar(1)});
    return ends * poly(degree - 2);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Seed for one criterion, independent of which other criteria run.
inline std::uint64_t criterion_seed(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

/// Collects report lines and failure flags for one criterion.
class Report {
 public:
  Report(std::string id, std::string title) {
    result_.id = std::move(id);
    result_.title = std::move(title);
  }

  void check(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (failures_ <= 10) result_.detail.push_back("FAIL: " + what);
    }
  }
  void note(const std::string& line) { result_.detail.push_back(line); }
  int failures() const { return failures_; }

  CriterionResult finish() {
    if (failures_ > 10) note(std::to_string(failures_ - 10) + " further failures omitted");
    result_.passed = failures_ == 0;
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  CriterionResult result_;
  int failures_ = 0;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

/// P = P̃∘W, Q = Q̃∘W in the endpoint-vanishing space, W(a) = W(b).
struct CCSample {
  PCPair pair;
  Poly W;
};
CCSample random_cc_pair(Sampler& s);

/// [-√3/2, √3/2] over D = 3.
Interval t6_interval();
/// 1 + T_6.
Poly t6_P();
/// S1∘T2 + S2∘T3 shifted to vanish at both endpoints, S2 odd, degree <= d.
Poly t6_family_Q(Sampler& s, int d);

CriterionResult criterion_a1(std::uint64_t seed);
CriterionResult criterion_a2(std::uint64_t seed);
CriterionResult criterion_a3(std::uint64_t seed);
CriterionResult criterion_a4(std::uint64_t seed);
CriterionResult criterion_a5(std::uint64_t seed);
CriterionResult criterion_a6(std::uint64_t seed);
CriterionResult criterion_a7(std::uint64_t seed);
CriterionResult criterion_a8(std::uint64_t seed);
CriterionResult criterion_a9(std::uint64_t seed);
CriterionResult criterion_a10(std::uint64_t seed);

}  // namespace abel::verify_detail
