// Representations: constructor validation, structural evaluation as a PRO
// morphism, and the chipwise product/sum constructions with their exact
// ranges of validity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "prokit/represent.hpp"
#include "prokit/semiring.hpp"

using namespace prokit;

namespace {

template <class S>
Representation<S> random_rep(Rng& rng, const Signature& sig, int N) {
  std::map<std::string, Hypermatrix<S>> mu;
  for (const auto& c : sig.chips())
    mu.emplace(c.name, random_hypermatrix<S>(rng, N, c.out, c.in));
  return Representation<S>(N, sig, std::move(mu));
}

template <class S>
Representation<S> all_ones_rep(const Signature& sig, int N) {
  std::map<std::string, Hypermatrix<S>> mu;
  for (const auto& c : sig.chips()) {
    Hypermatrix<S> h(N, c.out, c.in);
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = S::one();
    mu.emplace(c.name, std::move(h));
  }
  return Representation<S>(N, sig, std::move(mu));
}

Signature sig_mixed() {
  return Signature({{"a", 1, 1}, {"b", 2, 1}, {"c", 1, 2}});
}

bool is_connected(const CircuitPtr& t) {
  return connected_components(t).size() == 1;
}

}  // namespace

TEST_CASE("representation construction validates shapes eagerly") {
  using S = NaturalSemiring;
  const Signature sig({{"a", 1, 1}, {"b", 2, 1}});
  std::map<std::string, Hypermatrix<S>> good;
  good.emplace("a", identity<S>(2, 1));
  good.emplace("b", Hypermatrix<S>(2, 2, 1));
  CHECK_NOTHROW(Representation<S>(2, sig, good));

  // missing assignment
  auto missing = good;
  missing.erase("b");
  CHECK_THROWS_AS(Representation<S>(2, sig, missing), value_error);

  // wrong base dimension
  auto wrong_dim = good;
  wrong_dim.at("a") = identity<S>(3, 1);
  CHECK_THROWS_AS(Representation<S>(2, sig, wrong_dim), value_error);

  // wrong ranks
  auto wrong_rank = good;
  wrong_rank.at("b") = Hypermatrix<S>(2, 1, 2);
  CHECK_THROWS_AS(Representation<S>(2, sig, wrong_rank), value_error);

  // assignment for a chip the signature does not declare
  auto extra = good;
  extra.emplace("z", identity<S>(2, 1));
  CHECK_THROWS_AS(Representation<S>(2, sig, extra), value_error);

  CHECK_THROWS_AS(Representation<S>(0, Signature(), {}), value_error);
}

TEST_CASE("evaluation maps units to units and chips to their assignments") {
  using S = RationalSemiring;
  Rng rng(6101);
  const auto sig = sig_mixed();
  const auto mu = random_rep<S>(rng, sig, 3);

  for (int n = 0; n <= 3; ++n)
    CHECK(equal(eval(mu, *wires(n)), identity<S>(3, n)));
  CHECK(eval(mu, *empty_circuit()).base_dim() == 3);
  CHECK(S::eq(eval(mu, *empty_circuit()).entry(0, 0), S::one()));
  CHECK(equal(eval(mu, *chip(sig, "b")), mu.assignment("b")));

  // a chip name the representation does not know
  const Signature other({{"zz", 1, 1}});
  CHECK_THROWS_AS(eval(mu, *chip(other, "zz")), value_error);
  // same name, different arity than assigned
  const Signature clash({{"a", 2, 2}});
  CHECK_THROWS_AS(eval(mu, *chip(clash, "a")), value_error);
}

TEST_CASE("evaluation is a morphism for both compositions") {
  using S = NaturalSemiring;
  Rng rng(6201);
  const auto sig = sig_mixed();
  const auto mu = random_rep<S>(rng, sig, 2);

  for (int i = 0; i < 30; ++i) {
    const auto t1 =
        random_circuit_term(rng, sig, rng.uniform(0, 3), rng.uniform(0, 2));
    const auto t2 =
        random_circuit_term(rng, sig, rng.uniform(0, 3), rng.uniform(0, 2));
    REQUIRE(equal(eval(mu, *hcomp(t1, t2)), hcomp(eval(mu, *t1), eval(mu, *t2))));
  }
  // connection: draw pairs until the widths line up
  int done = 0;
  for (int i = 0; i < 400 && done < 20; ++i) {
    const auto bottom =
        random_circuit_term(rng, sig, rng.uniform(0, 4), rng.uniform(0, 3));
    const auto top =
        random_circuit_term(rng, sig, rng.uniform(0, 4), bottom->out_arity);
    REQUIRE(equal(eval(mu, *vcomp(top, bottom)),
                  vcomp(eval(mu, *top), eval(mu, *bottom))));
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("axiom-equal terms evaluate to the same hypermatrix") {
  using S = RationalSemiring;
  Rng rng(6301);
  const auto sig = sig_mixed();
  const auto mu = random_rep<S>(rng, sig, 2);
  for (int i = 0; i < 20; ++i) {
    const auto t =
        random_circuit_term(rng, sig, rng.uniform(1, 5), rng.uniform(1, 3));
    const auto v = random_axiom_variant(rng, t, 10);
    REQUIRE(equal(eval(mu, *t), eval(mu, *v)));
  }
}

TEST_CASE("pointwise product of representations evaluates chipwise everywhere") {
  using S = NaturalSemiring;
  Rng rng(6401);
  const auto sig = sig_mixed();
  const auto mu = random_rep<S>(rng, sig, 2);
  const auto nu = random_rep<S>(rng, sig, 2);
  const auto prod = hadamard(mu, nu);
  CHECK(prod.base_dim() == 4);

  SUBCASE("chip level is the base-dimension product") {
    for (const auto& c : sig.chips())
      CHECK(equal(prod.assignment(c.name),
                  kronecker(mu.assignment(c.name), nu.assignment(c.name))));
  }

  SUBCASE("every enumerated circuit, connected or not") {
    for (int m = 0; m <= 3; ++m)
      for (const auto& t : enumerate_circuits(sig, 3, m, 1))
        REQUIRE(equal(eval(prod, *t), kronecker(eval(mu, *t), eval(nu, *t))));
    // a disconnected shape as well
    const auto t = hcomp(wires(1), chip(sig, "b"));
    CHECK(equal(eval(prod, *t), kronecker(eval(mu, *t), eval(nu, *t))));
  }

  SUBCASE("random wide terms") {
    for (int i = 0; i < 15; ++i) {
      const auto t =
          random_circuit_term(rng, sig, rng.uniform(0, 2), rng.uniform(0, 2));
      REQUIRE(equal(eval(prod, *t), kronecker(eval(mu, *t), eval(nu, *t))));
    }
  }

  SUBCASE("multiplying by the one-dimensional all-ones representation changes nothing") {
    const auto ones = all_ones_rep<S>(sig, 1);
    const auto same = hadamard(mu, ones);
    CHECK(same.base_dim() == 2);
    for (const auto& c : sig.chips())
      CHECK(equal(same.assignment(c.name), mu.assignment(c.name)));
    const auto t = random_circuit_term(rng, sig, 3, 2);
    CHECK(equal(eval(same, *t), eval(mu, *t)));
  }

  SUBCASE("signature mismatch is rejected") {
    const Signature other({{"a", 1, 1}});
    Rng r2(1);
    const auto rho = random_rep<S>(r2, other, 2);
    CHECK_THROWS_AS(hadamard(mu, rho), value_error);
    CHECK_THROWS_AS(quasi_sum(mu, rho), value_error);
  }
}

TEST_CASE("block sum of representations evaluates chipwise exactly on connected circuits") {
  using S = NaturalSemiring;
  Rng rng(6501);
  const auto sig = sig_mixed();
  const auto mu = random_rep<S>(rng, sig, 2);
  const auto nu = random_rep<S>(rng, sig, 1);
  const auto sum = quasi_sum(mu, nu);
  CHECK(sum.base_dim() == 3);

  SUBCASE("chip level is the block embedding") {
    for (const auto& c : sig.chips())
      CHECK(equal(sum.assignment(c.name),
                  quasi_direct_sum(mu.assignment(c.name), nu.assignment(c.name))));
  }

  SUBCASE("all small connected circuits") {
    int connected_seen = 0;
    for (int m = 0; m <= 3; ++m)
      for (const auto& t : enumerate_circuits(sig, 3, m, 1)) {
        if (!is_connected(t)) continue;
        ++connected_seen;
        REQUIRE(equal(eval(sum, *t),
                      quasi_direct_sum(eval(mu, *t), eval(nu, *t))));
      }
    CHECK(connected_seen > 10);
  }

  SUBCASE("a connected interface-free circuit: both sides collapse to the same scalar") {
    const Signature closed({{"src", 2, 0}, {"snk", 0, 2}});
    Rng r2(6502);
    const auto m2 = random_rep<S>(r2, closed, 2);
    const auto n2 = random_rep<S>(r2, closed, 2);
    const auto t = vcomp(chip(closed, "snk"), chip(closed, "src"));
    REQUIRE(is_connected(t));
    CHECK(equal(eval(quasi_sum(m2, n2), *t),
                quasi_direct_sum(eval(m2, *t), eval(n2, *t))));
  }

  SUBCASE("two parallel wires break the identity at a mixed index") {
    const auto t = wires(2);
    const auto lhs = eval(sum, *t);               // identity of width 2 over 3
    const auto rhs = quasi_direct_sum(eval(mu, *t), eval(nu, *t));
    CHECK_FALSE(equal(lhs, rhs));
    // the diagonal entry pairing a first-block digit with a second-block
    // digit is present in the true value and absent in the blockwise sum
    const Index mixed{1, 3};
    CHECK(S::eq(lhs.at(mixed, mixed), S::one()));
    CHECK(S::eq(rhs.at(mixed, mixed), S::zero()));
    // matching-block entries agree
    CHECK(S::eq(rhs.at({1, 2}, {1, 2}), S::one()));
    CHECK(S::eq(rhs.at({3, 3}, {3, 3}), S::one()));
  }

  SUBCASE("the empty circuit is not connected and indeed breaks the identity") {
    const auto lhs = eval(sum, *empty_circuit());
    const auto rhs = quasi_direct_sum(eval(mu, *empty_circuit()),
                                      eval(nu, *empty_circuit()));
    // the blockwise sum of two unit scalars adds them instead
    CHECK(S::eq(lhs.entry(0, 0), S::one()));
    CHECK(S::eq(rhs.entry(0, 0), S::add(S::one(), S::one())));
  }
}

TEST_CASE("product and sum constructions over the two-element semiring") {
  using S = BooleanSemiring;
  Rng rng(6601);
  const auto sig = sig_mixed();
  const auto mu = random_rep<S>(rng, sig, 2);
  const auto nu = random_rep<S>(rng, sig, 2);
  const auto prod = hadamard(mu, nu);
  const auto sum = quasi_sum(mu, nu);
  for (int i = 0; i < 15; ++i) {
    const auto t =
        random_circuit_term(rng, sig, rng.uniform(0, 3), rng.uniform(0, 2));
    REQUIRE(equal(eval(prod, *t), kronecker(eval(mu, *t), eval(nu, *t))));
    if (is_connected(t))
      REQUIRE(equal(eval(sum, *t), quasi_direct_sum(eval(mu, *t), eval(nu, *t))));
  }
}
