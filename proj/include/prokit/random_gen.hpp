// Deterministic random generation for property suites.
//
// All randomized checks in the library, the CLI `check` command, and the test
// binaries draw from this one mechanism with explicit seeds, so every reported
// result can be reproduced.  The engine is std::mt19937_64 (fully specified by
// the standard, hence portable); bounded draws use modulo reduction on purpose
// — bias is irrelevant here and the reduction is portable.
#pragma once

#include <cstdint>
#include <random>

#include "prokit/hypermat.hpp"
#include "prokit/semiring.hpp"

namespace prokit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish integer in [lo, hi] inclusive.
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

template <class S>
typename S::value_type random_element(Rng& rng);

template <>
inline BooleanSemiring::value_type random_element<BooleanSemiring>(Rng& rng) {
  return rng.coin() ? 1 : 0;
}

template <>
inline NaturalSemiring::value_type random_element<NaturalSemiring>(Rng& rng) {
  return NaturalSemiring::value_type(rng.uniform(0, 9));
}

template <>
inline RationalSemiring::value_type random_element<RationalSemiring>(Rng& rng) {
  return RationalSemiring::value_type(rng.uniform(-9, 9), rng.uniform(1, 9));
}

template <>
inline ComplexSemiring::value_type random_element<ComplexSemiring>(Rng& rng) {
  return {rng.uniform(-4, 4) / 2.0, rng.uniform(-4, 4) / 2.0};
}

template <>
inline RationalFunctionSemiring::value_type
random_element<RationalFunctionSemiring>(Rng& rng) {
  // Small polynomials of degree <= 2, occasionally divided by a monic linear
  // factor; enough variety to exercise normalization without blowing up sizes.
  std::vector<Rat> num{Rat(rng.uniform(-4, 4)), Rat(rng.uniform(-2, 2)),
                       Rat(rng.uniform(-1, 1))};
  Polynomial n(std::move(num));
  if (rng.coin()) return RationalFunction(n, Polynomial(Rat(1)));
  std::vector<Rat> den{Rat(rng.uniform(1, 3)), Rat(1)};
  return RationalFunction(n, Polynomial(std::move(den)));
}

template <class S>
Hypermatrix<S> random_hypermatrix(Rng& rng, int N, int m, int n) {
  Hypermatrix<S> h(N, m, n);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = random_element<S>(rng);
  return h;
}

}  // namespace prokit
