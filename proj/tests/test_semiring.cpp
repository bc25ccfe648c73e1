// Semiring instances: axiom property suites (seeded) plus the specific
// normalization and tolerance behaviors each instance promises.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prokit/random_gen.hpp"
#include "prokit/semiring.hpp"

using namespace prokit;

namespace {

template <class S>
void axiom_suite(std::uint64_t seed, int iterations) {
  Rng rng(seed);
  for (int it = 0; it < iterations; ++it) {
    auto a = random_element<S>(rng);
    auto b = random_element<S>(rng);
    auto c = random_element<S>(rng);
    CHECK(S::eq(S::add(S::add(a, b), c), S::add(a, S::add(b, c))));
    CHECK(S::eq(S::add(a, b), S::add(b, a)));
    CHECK(S::eq(S::add(a, S::zero()), a));
    CHECK(S::eq(S::mul(S::mul(a, b), c), S::mul(a, S::mul(b, c))));
    CHECK(S::eq(S::mul(a, b), S::mul(b, a)));
    CHECK(S::eq(S::mul(a, S::one()), a));
    CHECK(S::eq(S::mul(a, S::zero()), S::zero()));
    CHECK(S::eq(S::mul(a, S::add(b, c)), S::add(S::mul(a, b), S::mul(a, c))));
  }
}

}  // namespace

TEST_CASE("axiom suites for the exact instances") {
  axiom_suite<BooleanSemiring>(101, 200);
  axiom_suite<NaturalSemiring>(102, 200);
  axiom_suite<RationalSemiring>(103, 200);
  axiom_suite<RationalFunctionSemiring>(104, 60);
}

TEST_CASE("complex instance satisfies the axioms within tolerance") {
  // Multiplicative associativity/distributivity only hold approximately for
  // floating point; the tolerance-based eq is the promised contract.
  axiom_suite<ComplexSemiring>(105, 200);
}

TEST_CASE("boolean is idempotent") {
  CHECK(BooleanSemiring::add(1, 1) == 1);
  CHECK(BooleanSemiring::mul(1, 0) == 0);
}

TEST_CASE("rational arithmetic is exact and canonical") {
  using R = RationalSemiring;
  R::value_type half(1, 2), third(1, 3);
  CHECK(R::eq(R::add(half, third), R::value_type(5, 6)));
  // canonical lowest terms with positive denominator
  R::value_type v = R::div(R::value_type(-4), R::value_type(-6));
  CHECK(boost::multiprecision::numerator(v) == 2);
  CHECK(boost::multiprecision::denominator(v) == 3);
  CHECK(R::to_string(R::value_type(7, 1)) == "7");
  CHECK(R::to_string(R::value_type(-3, 7)) == "-3/7");
}

TEST_CASE("natural numbers are unbounded") {
  using N = NaturalSemiring;
  auto big = N::one();
  for (int i = 0; i < 40; ++i) big = N::mul(big, N::value_type(10));
  CHECK(N::to_string(big) == "1" + std::string(40, '0'));
  CHECK(N::eq(N::mul(N::value_type(3), N::value_type(4)), N::value_type(12)));
}

TEST_CASE("complex equality is tolerance based and configurable") {
  using C = ComplexSemiring;
  const double saved = C::tolerance;
  C::tolerance = 1e-12;
  CHECK(C::eq({1.0, 0.0}, {1.0 + 1e-13, 0.0}));
  CHECK_FALSE(C::eq({1.0, 0.0}, {1.0 + 1e-9, 0.0}));
  C::tolerance = 1e-6;
  CHECK(C::eq({1.0, 0.0}, {1.0 + 1e-9, 0.0}));
  C::tolerance = saved;
}

TEST_CASE("polynomials normalize and divide") {
  Polynomial d = Polynomial::variable();
  Polynomial two_minus_d = Polynomial(std::vector<Rat>{2, -1});
  Polynomial d_minus_two = Polynomial(std::vector<Rat>{-2, 1});
  CHECK((two_minus_d + d_minus_two).is_zero());
  CHECK((two_minus_d + d_minus_two).str() == "0");

  auto [q, r] = Polynomial::divmod(d * d - Polynomial(Rat(4)), d_minus_two);
  CHECK(q == Polynomial(std::vector<Rat>{2, 1}));  // d + 2
  CHECK(r.is_zero());

  CHECK(Polynomial::gcd(d * d - Polynomial(Rat(4)), d_minus_two) ==
        d_minus_two.monic());
  CHECK(two_minus_d.str() == "-d + 2");
}

TEST_CASE("rational functions in d reduce to canonical form") {
  using F = RationalFunctionSemiring;
  F::value_type d = RationalFunction::variable();
  F::value_type two(Rat(2));
  F::value_type two_minus_d = F::sub(two, d);

  CHECK(F::eq(F::add(two_minus_d, F::sub(d, two)), F::zero()));
  CHECK(F::eq(F::mul(two_minus_d, F::div(F::one(), two_minus_d)), F::one()));

  // (d^2-4)/(d-2) reduces to d+2
  F::value_type reduced = F::div(F::sub(F::mul(d, d), F::value_type(Rat(4))),
                                 F::sub(d, two));
  CHECK(F::eq(reduced, F::add(d, two)));
  CHECK(reduced.is_polynomial());

  // denominators are monic: 1/(2-d) = (-1)/(d-2)
  F::value_type inv = F::div(F::one(), two_minus_d);
  CHECK(inv.den() == Polynomial(std::vector<Rat>{-2, 1}));
  CHECK(inv.num() == Polynomial(Rat(-1)));

  CHECK_THROWS_AS(F::div(F::one(), F::zero()), value_error);
  CHECK_THROWS_AS(RationalFunction(Polynomial(Rat(1)), Polynomial()), value_error);
}
