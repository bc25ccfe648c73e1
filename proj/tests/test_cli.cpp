// End-to-end tests for the command-line binary: every subcommand is run as a
// child process on files written through the JSON layer, and both the output
// and the exit-code contract (0 ok / 1 reject / 2 parse / 3 shape-semantic)
// are pinned down.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "prokit/automata.hpp"
#include "prokit/circuit.hpp"
#include "prokit/hypermat.hpp"
#include "prokit/json_io.hpp"
#include "prokit/semiring.hpp"
#include "prokit/temperley_lieb.hpp"

#include "automata_examples.hpp"

using namespace prokit;
using namespace examples;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::string out_path = "cli_stdout_" + tag + ".txt";
  const std::string err_path = "cli_stderr_" + tag + ".txt";
  const std::string cmd = std::string(PROKIT_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// Two states, start = final = 1, reading "a" then "b" returns to the start:
// the series of (ab)* with natural weight one per accepted word.
WordAutomaton<NaturalSemiring> ab_star_natural() {
  using V = NaturalSemiring::value_type;
  return WordAutomaton<NaturalSemiring>(
      2, {V(1), V(0)},
      {{"a", {{V(0), V(1)}, {V(0), V(0)}}},
       {"b", {{V(0), V(0)}, {V(1), V(0)}}}},
      {V(1), V(0)});
}

}  // namespace

TEST_CASE("eval prints full matrices and single entries") {
  save_json_file("cli_rep.json", representation_to_json(standard_rep()));
  save_json_file("cli_snake.json", circuit_to_json(*left_snake_term()));

  auto full = run_cli("eval cli_rep.json cli_snake.json --format json");
  CHECK(full.exit_code == 0);
  const json want =
      hypermatrix_to_json(identity<RationalFunctionSemiring>(2, 1));
  CHECK(json::parse(full.out) == want);

  auto diag = run_cli("eval cli_rep.json cli_snake.json --out 1 --in 1");
  CHECK(diag.exit_code == 0);
  CHECK(json::parse(diag.out) ==
        ScalarCodec<RationalFunctionSemiring>::to_json(
            RationalFunctionSemiring::one()));

  auto off = run_cli("eval cli_rep.json cli_snake.json --out 2 --in 1");
  CHECK(off.exit_code == 0);
  CHECK(json::parse(off.out) ==
        ScalarCodec<RationalFunctionSemiring>::to_json(
            RationalFunctionSemiring::zero()));

  // Index digit outside the base dimension: shape class, exit 3.
  auto range = run_cli("eval cli_rep.json cli_snake.json --out 3 --in 1");
  CHECK(range.exit_code == 3);

  // A circuit naming a chip the representation lacks: semantic, exit 3.
  write_text("cli_missing_chip.json", "{\"chip\": \"zeta\"}");
  auto missing = run_cli("eval cli_rep.json cli_missing_chip.json");
  CHECK(missing.exit_code == 3);
  CHECK(missing.err.find("zeta") != std::string::npos);

  // Unreadable and unparsable files: exit 2.
  auto absent = run_cli("eval cli_rep.json cli_no_such_file.json");
  CHECK(absent.exit_code == 2);
  write_text("cli_garbage.json", "{not json");
  auto garbage = run_cli("eval cli_rep.json cli_garbage.json");
  CHECK(garbage.exit_code == 2);

  std::remove("cli_missing_chip.json");
  std::remove("cli_garbage.json");
}

TEST_CASE("check reports suites deterministically") {
  auto first = run_cli("check kronecker --seed 5 --format json");
  auto second = run_cli("check kronecker --seed 5 --format json");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  const json report = json::parse(first.out);
  CHECK(report.at("seed") == 5);
  CHECK(report.at("total").get<int>() > 0);
  CHECK(report.at("passed") == report.at("total"));
  for (const auto& row : report.at("results")) {
    CHECK(row.at("suite") == "kronecker");
    CHECK(row.at("passed") == true);
  }
  CHECK(first.err.find("seed 5") != std::string::npos);

  auto unknown = run_cli("check bogus");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("accept separates walls from near-walls") {
  save_json_file("cli_wall_aut.json", pro_automaton_to_json(wall_automaton()));
  save_json_file("cli_wall.json", circuit_to_json(*brick_wall(8, 4, 0)));
  save_json_file("cli_near_wall.json", circuit_to_json(*near_walls().front()));

  auto yes = run_cli(
      "accept --automaton cli_wall_aut.json --circuit cli_wall.json");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "accept\n");

  auto no = run_cli(
      "accept --automaton cli_wall_aut.json --circuit cli_near_wall.json");
  CHECK(no.exit_code == 1);
  CHECK(no.out == "reject\n");

  // A word-automaton file is not a branching automaton: semantic, exit 3.
  save_json_file("cli_abstar.json", word_automaton_to_json(ab_star_natural()));
  auto wrong_kind = run_cli(
      "accept --automaton cli_abstar.json --circuit cli_wall.json");
  CHECK(wrong_kind.exit_code == 3);
}

TEST_CASE("behavior prints the coefficient of a word") {
  save_json_file("cli_abstar.json", word_automaton_to_json(ab_star_natural()));

  auto hit = run_cli("behavior --automaton cli_abstar.json --word ab");
  CHECK(hit.exit_code == 0);
  CHECK(hit.out == "\"1\"\n");

  auto miss = run_cli("behavior --automaton cli_abstar.json --word aba");
  CHECK(miss.exit_code == 0);
  CHECK(miss.out == "\"0\"\n");

  auto empty = run_cli("behavior --automaton cli_abstar.json");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "\"1\"\n");

  auto bad_letter = run_cli("behavior --automaton cli_abstar.json --word axb");
  CHECK(bad_letter.exit_code == 3);
}

TEST_CASE("lang output feeds back into accept and behavior") {
  save_json_file("cli_wall_aut.json", pro_automaton_to_json(wall_automaton()));
  save_json_file("cli_all_aut.json",
                 pro_automaton_to_json(all_accepting_automaton()));
  save_json_file("cli_wall.json", circuit_to_json(*brick_wall(8, 4, 0)));
  save_json_file("cli_near_wall.json", circuit_to_json(*near_walls().front()));

  auto inter = run_cli(
      "lang --op intersect cli_wall_aut.json cli_all_aut.json -o "
      "cli_inter.json");
  CHECK(inter.exit_code == 0);

  // Intersecting with the all-accepting automaton keeps the language.
  auto yes =
      run_cli("accept --automaton cli_inter.json --circuit cli_wall.json");
  CHECK(yes.exit_code == 0);
  auto no = run_cli(
      "accept --automaton cli_inter.json --circuit cli_near_wall.json");
  CHECK(no.exit_code == 1);

  // Union of a word automaton with itself doubles natural coefficients.
  save_json_file("cli_abstar.json", word_automaton_to_json(ab_star_natural()));
  auto uni = run_cli(
      "lang --op union cli_abstar.json cli_abstar.json -o cli_double.json");
  CHECK(uni.exit_code == 0);
  auto doubled = run_cli("behavior --automaton cli_double.json --word ab");
  CHECK(doubled.exit_code == 0);
  CHECK(doubled.out == "\"2\"\n");

  // Mixing file kinds is a semantic error.
  auto mixed = run_cli(
      "lang --op union cli_abstar.json cli_wall_aut.json -o cli_bad.json");
  CHECK(mixed.exit_code == 3);
}

TEST_CASE("tl-conjecture reports the sweep with its disagreements") {
  auto report = run_cli("tl-conjecture --max-gens 3 --max-n 3 --format json");
  CHECK(report.exit_code == 0);
  const json r = json::parse(report.out);
  CHECK(r.at("total") == 20);
  CHECK(r.at("agreed") == 14);
  bool found_counterexample = false;
  for (const auto& row : r.at("rows")) {
    if (row.at("term") == json::array({1, 2}) && row.at("strands") == 3) {
      found_counterexample = true;
      CHECK(row.at("agree") == false);
      CHECK(row.at("trace") ==
            ScalarCodec<RationalFunctionSemiring>::to_json(
                RationalFunctionSemiring::from_unsigned(2)));
    }
  }
  CHECK(found_counterexample);
  CHECK(report.err.find("14/20") != std::string::npos);

  auto table = run_cli("tl-conjecture --max-gens 2 --max-n 3");
  CHECK(table.exit_code == 0);
  CHECK(table.out.find("U1*U2") != std::string::npos);
  CHECK(table.out.find("NO") != std::string::npos);
}

TEST_CASE("quantum-demo builds the controlled flip") {
  auto demo = run_cli("quantum-demo --format json");
  CHECK(demo.exit_code == 0);
  const json r = json::parse(demo.out);
  CHECK(r.at("max_unitarity_residual").get<double>() < 1e-12);
  CHECK(r.at("input_is_product") == true);
  CHECK(r.at("output_is_product") == false);

  auto text = run_cli("quantum-demo");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("entangled") != std::string::npos);
}

TEST_CASE("enumerate lists circuit classes by arity") {
  save_json_file("cli_sig.json",
                 signature_to_json(Signature({ChipDecl{"f", 1, 1}})));
  auto r = run_cli(
      "enumerate --signature cli_sig.json --max-chips 2 --out-arity 1 "
      "--in-arity 1 --format json");
  CHECK(r.exit_code == 0);
  const json arr = json::parse(r.out);
  REQUIRE(arr.is_array());
  // Isomorphism classes with at most two chips of arity (1, 1): the wire,
  // the chip, and the chip stacked on itself.
  CHECK(arr.size() == 3);

  // Every emitted term reparses to the same circuit.
  const Signature sig({ChipDecl{"f", 1, 1}});
  const auto classes = enumerate_circuits(sig, 2, 1, 1);
  REQUIRE(classes.size() == arr.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    CHECK(same_circuit(*circuit_from_json(arr[i], sig), *classes[i]));
}

TEST_CASE("bare invocation and help follow the exit contract") {
  auto bare = run_cli("");
  CHECK(bare.exit_code == 2);
  auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("eval") != std::string::npos);
}
