// File-format round trips: scalars in every semiring, dense and sparse
// tables, circuit terms with canonical flattening, representations, and the
// three automaton file kinds.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "automata_examples.hpp"
#include "prokit/json_io.hpp"
#include "prokit/quantum_gates.hpp"
#include "prokit/random_gen.hpp"
#include "prokit/temperley_lieb.hpp"

using namespace prokit;
using namespace examples;
using nlohmann::json;

namespace {

template <class S>
void check_scalar_roundtrip(const typename S::value_type& v) {
  const json j = ScalarCodec<S>::to_json(v);
  CHECK(S::eq(ScalarCodec<S>::from_json(j), v));
  // Canonical: serializing the reparsed value gives the same text.
  CHECK(ScalarCodec<S>::to_json(ScalarCodec<S>::from_json(j)).dump() ==
        j.dump());
}

template <class S>
void check_hypermatrix_roundtrip(const Hypermatrix<S>& h) {
  const json j = hypermatrix_to_json<S>(h);
  CHECK(equal(hypermatrix_from_json<S>(j), h));
}

}  // namespace

TEST_CASE("scalar encodings round-trip in every semiring") {
  check_scalar_roundtrip<BooleanSemiring>(0);
  check_scalar_roundtrip<BooleanSemiring>(1);
  CHECK(ScalarCodec<BooleanSemiring>::to_json(1) == json(true));
  CHECK_THROWS_AS(ScalarCodec<BooleanSemiring>::from_json(json(1)),
                  value_error);

  check_scalar_roundtrip<NaturalSemiring>(NaturalSemiring::value_type(0));
  check_scalar_roundtrip<NaturalSemiring>(NaturalSemiring::value_type(42));
  check_scalar_roundtrip<NaturalSemiring>(
      NaturalSemiring::value_type("123456789012345678901234567890"));
  CHECK(ScalarCodec<NaturalSemiring>::to_json(
            NaturalSemiring::value_type(42)) == json("42"));
  CHECK_THROWS_AS(ScalarCodec<NaturalSemiring>::from_json(json("-3")),
                  value_error);
  CHECK_THROWS_AS(ScalarCodec<NaturalSemiring>::from_json(json("4x")),
                  value_error);
  CHECK_THROWS_AS(ScalarCodec<NaturalSemiring>::from_json(json(42)),
                  value_error);

  check_scalar_roundtrip<RationalSemiring>(RationalSemiring::value_type(0));
  check_scalar_roundtrip<RationalSemiring>(
      RationalSemiring::value_type("-3/7"));
  check_scalar_roundtrip<RationalSemiring>(RationalSemiring::value_type(42));
  // Non-canonical input parses and re-emits reduced.
  CHECK(ScalarCodec<RationalSemiring>::to_json(
            ScalarCodec<RationalSemiring>::from_json(json("6/14"))) ==
        json("3/7"));
  CHECK_THROWS_AS(ScalarCodec<RationalSemiring>::from_json(json("3/-7")),
                  value_error);
  CHECK_THROWS_AS(ScalarCodec<RationalSemiring>::from_json(json("1/0")),
                  value_error);
  CHECK_THROWS_AS(ScalarCodec<RationalSemiring>::from_json(json("")),
                  value_error);

  check_scalar_roundtrip<ComplexSemiring>({0.5, -1.25});
  CHECK(ScalarCodec<ComplexSemiring>::to_json({0.5, -1.25}) ==
        json::array({0.5, -1.25}));
  CHECK_THROWS_AS(ScalarCodec<ComplexSemiring>::from_json(json("1")),
                  value_error);
  CHECK_THROWS_AS(
      ScalarCodec<ComplexSemiring>::from_json(json::array({1.0})),
      value_error);

  const RationalFunction d = RationalFunction::variable();
  const RationalFunction two(Rat(2));
  check_scalar_roundtrip<RationalFunctionSemiring>(d / (two - d));
  check_scalar_roundtrip<RationalFunctionSemiring>(RationalFunction(Rat(0)));
  CHECK_THROWS_AS(ScalarCodec<RationalFunctionSemiring>::from_json(
                      json{{"num", json::array({"1"})},
                           {"den", json::array()}}),
                  value_error);
  CHECK_THROWS_AS(
      ScalarCodec<RationalFunctionSemiring>::from_json(json("d")),
      value_error);
}

TEST_CASE("hypermatrices round-trip dense and parse sparse") {
  Rng rng(2024);
  for (int rep = 0; rep < 5; ++rep) {
    check_hypermatrix_roundtrip(random_hypermatrix<NaturalSemiring>(
        rng, 2, rng.uniform(0, 2), rng.uniform(0, 2)));
    check_hypermatrix_roundtrip(
        random_hypermatrix<RationalSemiring>(rng, 3, 1, 1));
    check_hypermatrix_roundtrip(
        random_hypermatrix<BooleanSemiring>(rng, 2, 2, 1));
  }
  check_hypermatrix_roundtrip(standard_rep().assignment("cup"));
  check_hypermatrix_roundtrip(cv_gate());

  // Sparse form: unlisted entries are zero, indices are 1-based.
  const json sparse = {{"N", 2},
                       {"out_rank", 1},
                       {"in_rank", 1},
                       {"sparse", json::array({json{{"out", json::array({1})},
                                                    {"in", json::array({2})},
                                                    {"val", "5"}}})}};
  const auto h = hypermatrix_from_json<NaturalSemiring>(sparse);
  CHECK(h.at({1}, {2}) == 5);
  CHECK(h.at({1}, {1}) == 0);
  CHECK(h.at({2}, {2}) == 0);

  json bad = hypermatrix_to_json<NaturalSemiring>(h);
  bad["entries"].erase(0);
  CHECK_THROWS_AS(hypermatrix_from_json<NaturalSemiring>(bad), shape_error);
  json out_of_range = sparse;
  out_of_range["sparse"][0]["out"][0] = 3;
  CHECK_THROWS_AS(hypermatrix_from_json<NaturalSemiring>(out_of_range),
                  shape_error);
  CHECK_THROWS_AS(hypermatrix_from_json<NaturalSemiring>(
                      json{{"N", 2}, {"out_rank", 1}, {"in_rank", 1}}),
                  value_error);
  CHECK_THROWS_AS(
      hypermatrix_from_json<NaturalSemiring>(json{{"N", 2}, {"in_rank", 1}}),
      value_error);
}

TEST_CASE("circuit terms round-trip through the term grammar") {
  const Signature sig = tl_signature();
  const std::vector<CircuitPtr> terms = {
      u_word_term(3, {1, 2, 1}), left_snake_term(),   right_snake_term(),
      loop_term(),               wires(3),            empty_circuit(),
      hcomp(cup_chip(), hcomp(wires(1), cap_chip())),
  };
  for (const CircuitPtr& t : terms) {
    const json j = circuit_to_json(*t);
    CHECK(same_circuit(*circuit_from_json(j, sig), *t));
  }

  CHECK(circuit_to_json(*wires(3)) ==
        json{{"h", json::array({"wire", "wire", "wire"})}});
  CHECK(circuit_to_json(*cup_chip()) == json{{"chip", "cup"}});

  // Both association orders of a stack serialize to the same flattened list.
  // The factor is kept horizontal so it contributes exactly one list slot.
  const CircuitPtr a = hcomp(cup_chip(), cap_chip());
  const json left = circuit_to_json(*vcomp(vcomp(a, a), a));
  const json right = circuit_to_json(*vcomp(a, vcomp(a, a)));
  CHECK(left.dump() == right.dump());
  CHECK(left["v"].size() == 3);
  CHECK(same_circuit(*circuit_from_json(left, sig),
                     *vcomp(a, vcomp(a, a))));

  CHECK_THROWS_AS(circuit_from_json(json{{"chip", "nand"}}, sig),
                  value_error);
  CHECK_THROWS_AS(circuit_from_json(json("wires"), sig), value_error);
  CHECK_THROWS_AS(circuit_from_json(json{{"h", json::array()}}, sig),
                  value_error);
  // Factor shapes still have to fit when stacking.
  CHECK_THROWS_AS(
      circuit_from_json(
          json{{"v", json::array({json{{"chip", "cup"}},
                                  json{{"chip", "cup"}}})}},
          sig),
      shape_error);

  const Signature round = signature_from_json(signature_to_json(sig));
  REQUIRE(round.chips().size() == sig.chips().size());
  for (std::size_t i = 0; i < sig.chips().size(); ++i) {
    CHECK(round.chips()[i].name == sig.chips()[i].name);
    CHECK(round.chips()[i].out == sig.chips()[i].out);
    CHECK(round.chips()[i].in == sig.chips()[i].in);
  }
}

TEST_CASE("labelings serialize with one color per wire") {
  const auto labelings =
      enumerate_labelings(vcomp(half_brick(), half_brick()), 3);
  REQUIRE(!labelings.empty());
  const json j = labeling_to_json(labelings.front());
  CHECK(j.contains("term"));
  REQUIRE(j.contains("colors"));
  CHECK(j["colors"].size() == labelings.front().colors.size());
  CHECK(j["colors"].contains("1"));
}

TEST_CASE("representations round-trip with their semiring tag") {
  const auto mu = standard_rep();
  const json j = representation_to_json(mu);
  CHECK(j["semiring"] == "rational_function");
  const auto back = representation_from_json<RationalFunctionSemiring>(j);
  CHECK(back.base_dim() == mu.base_dim());
  for (const auto& [name, h] : mu.assignments())
    CHECK(equal(back.assignment(name), h));

  const auto q = quantum_rep();
  const auto q_back =
      representation_from_json<ComplexSemiring>(representation_to_json(q));
  for (const auto& [name, h] : q.assignments())
    CHECK(equal(q_back.assignment(name), h));

  CHECK_THROWS_AS(representation_from_json<RationalSemiring>(j), value_error);
  CHECK(semiring_tag(j) == "rational_function");
  CHECK(semiring_tag(json::object()) == "boolean");
  CHECK(with_semiring("natural", [](auto s) {
          using S = typename decltype(s)::type;
          return std::string(S::name());
        }) == "natural");
  CHECK_THROWS_AS(with_semiring("octonion", [](auto) { return 0; }),
                  value_error);
}

TEST_CASE("word automata round-trip with source-indexed rows") {
  using Bit = BooleanSemiring::value_type;
  // One transition 1 -> 2 on 'a'; rows in the file are source-indexed.
  const WordAutomaton<BooleanSemiring> tiny(
      2, std::vector<Bit>{1, 0},
      std::map<Letter, std::vector<std::vector<Bit>>>{
          {"a", {{0, 1}, {0, 0}}}},
      std::vector<Bit>{0, 1});
  const json j = word_automaton_to_json(tiny);
  CHECK(j["rho"]["a"][0][1] == json(true));
  CHECK(j["rho"]["a"][1][0] == json(false));
  CHECK(j["lambda"][0] == json(true));
  CHECK(j["gamma"][1] == json(true));

  const auto back = word_automaton_from_json<BooleanSemiring>(j);
  CHECK(equal(back.initial(), tiny.initial()));
  CHECK(equal(back.final_weights(), tiny.final_weights()));
  CHECK(equal(back.transition("a"), tiny.transition("a")));

  // An untagged file defaults to the boolean reading.
  json untagged = j;
  untagged.erase("semiring");
  CHECK(semiring_tag(untagged) == "boolean");
  const auto again = word_automaton_from_json<BooleanSemiring>(untagged);
  CHECK(behavior_coeff(again, {Letter("a")}) == 1);

  // A weighted automaton keeps its exact weights.
  const WordAutomaton<NaturalSemiring> weighted(
      1, {NaturalSemiring::value_type(3)},
      {{"a", {{NaturalSemiring::value_type(7)}}}},
      {NaturalSemiring::value_type(2)});
  const auto w_back = word_automaton_from_json<NaturalSemiring>(
      word_automaton_to_json(weighted));
  CHECK(behavior_coeff(w_back, {Letter("a"), Letter("a")}) ==
        behavior_coeff(weighted, {Letter("a"), Letter("a")}));

  json bad = j;
  bad["gamma"].erase(0);
  CHECK_THROWS_AS(word_automaton_from_json<BooleanSemiring>(bad),
                  shape_error);
  json bad_row = j;
  bad_row["rho"]["a"][0].erase(0);
  CHECK_THROWS_AS(word_automaton_from_json<BooleanSemiring>(bad_row),
                  shape_error);
  CHECK_THROWS_AS(word_automaton_from_json<NaturalSemiring>(j), value_error);
}

TEST_CASE("tree automata round-trip and infer the state count") {
  const TreeAutomaton A(
      3, {{"a", 2}, {"b", 0}, {"c", 0}},
      {TreeRule{"b", {}, 1}, TreeRule{"c", {}, 2},
       TreeRule{"a", {1, 2}, 3}, TreeRule{"a", {3, 3}, 3}},
      {3});
  const json j = tree_automaton_to_json(A);
  const TreeAutomaton back = tree_automaton_from_json(j);
  CHECK(back.n_states() == 3);
  CHECK(back.arities() == A.arities());
  CHECK(back.finals() == A.finals());
  REQUIRE(back.rules().size() == A.rules().size());
  for (std::size_t i = 0; i < A.rules().size(); ++i) {
    CHECK(back.rules()[i].letter == A.rules()[i].letter);
    CHECK(back.rules()[i].children == A.rules()[i].children);
    CHECK(back.rules()[i].to == A.rules()[i].to);
  }

  json untagged = j;
  untagged.erase("n");
  CHECK(tree_automaton_from_json(untagged).n_states() == 3);

  const Tree leaf_b{"b", {}};
  const Tree leaf_c{"c", {}};
  const Tree t{"a", {leaf_b, leaf_c}};
  CHECK(tree_delta_star(back, t) == tree_delta_star(A, t));
  CHECK_THROWS_AS(tree_automaton_from_json(json{{"arities", json::object()}}),
                  value_error);
}

TEST_CASE("circuit automata round-trip and accept the same terms") {
  const BoolPro A = wall_automaton();
  const json j = pro_automaton_to_json(A);
  const BoolPro back = pro_automaton_from_json<BooleanSemiring>(j);
  CHECK(back.base_dim() == 3);
  const std::vector<CircuitPtr> probes = {
      vcomp(half_brick(), half_brick()), brick_wall(4, 4, 0),
      half_brick(), brick_row(2, 0)};
  for (const CircuitPtr& t : probes)
    CHECK(accepts(back, t) == accepts(A, t));

  json bad = j;
  bad["N"] = 4;
  CHECK_THROWS_AS(pro_automaton_from_json<BooleanSemiring>(bad), value_error);
  json no_mu = j;
  no_mu.erase("mu");
  CHECK_THROWS_AS(pro_automaton_from_json<BooleanSemiring>(no_mu),
                  value_error);
}

TEST_CASE("files load and save with parse errors reported") {
  const std::string path = "test_json_io_tmp.json";
  const json j = representation_to_json(standard_rep());
  save_json_file(path, j);
  CHECK(load_json_file(path) == j);
  save_json_file(path, j, false);
  CHECK(load_json_file(path) == j);

  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("{not json", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(load_json_file(path), parse_error);
  CHECK_THROWS_AS(load_json_file("no_such_directory/missing.json"),
                  parse_error);
  std::remove(path.c_str());
}
