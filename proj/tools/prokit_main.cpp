// prokit: command-line front end for the hypermatrix circuit library.
//
// Subcommands: eval, check, accept, behavior, lang, tl-conjecture,
// quantum-demo, enumerate.  Global flags pick the seed, the comparison
// tolerance for complex weights, the fallback weight semiring for untagged
// files, and the output format.
//
// Exit codes: 0 success (or accepted), 1 rejected input / failed checks,
// 2 command-line or file parse errors, 3 shape and semantic errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prokit/automata.hpp"
#include "prokit/checks.hpp"
#include "prokit/circuit.hpp"
#include "prokit/errors.hpp"
#include "prokit/hypermat.hpp"
#include "prokit/json_io.hpp"
#include "prokit/quantum_gates.hpp"
#include "prokit/represent.hpp"
#include "prokit/semiring.hpp"
#include "prokit/temperley_lieb.hpp"

namespace {

using nlohmann::json;
using namespace prokit;

// The workspace configuration shared by every subcommand: the fallback weight
// semiring for files without a tag, the tolerance for complex comparisons,
// and the seed recorded in every report.
struct Workspace {
  std::uint64_t seed = 42;
  double tolerance = 1e-12;
  std::string semiring = "boolean";
  std::string format = "pretty";

  bool pretty() const { return format == "pretty"; }
  std::string dump(const json& j) const {
    return pretty() ? j.dump(2) : j.dump();
  }
  void apply() const { ComplexSemiring::tolerance = tolerance; }
};

// "1,2,2" -> {1, 2, 2}; the empty string is the empty index.
Index parse_index(const std::string& text, const char* what) {
  Index out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty() && out.empty() && comma == text.size()) break;
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error(std::string(what) + ": index digit '" + tok +
                        "' is not a positive integer");
    out.push_back(std::stoi(tok));
    pos = comma + 1;
  }
  return out;
}

int cmd_eval(const Workspace& ws, const std::string& rep_file,
             const std::string& circuit_file, bool have_index,
             const std::string& out_text, const std::string& in_text) {
  const json rep_j = load_json_file(rep_file);
  const json circ_j = load_json_file(circuit_file);
  return with_semiring(semiring_tag(rep_j, ws.semiring), [&](auto tag) -> int {
    using S = typename decltype(tag)::type;
    const auto mu = representation_from_json<S>(rep_j);
    const auto t = circuit_from_json(circ_j, mu.signature());
    const auto h = eval(mu, *t);
    if (have_index) {
      const Index I = parse_index(out_text, "--out");
      const Index J = parse_index(in_text, "--in");
      std::cout << ws.dump(ScalarCodec<S>::to_json(h.at(I, J))) << "\n";
    } else {
      std::cout << ws.dump(hypermatrix_to_json<S>(h)) << "\n";
    }
    return 0;
  });
}

int cmd_check(const Workspace& ws, const std::string& suite) {
  const auto results = run_check_suite(suite, ws.seed);
  json rows = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    rows.push_back({{"suite", r.suite},
                    {"invariant", r.invariant},
                    {"passed", r.passed},
                    {"witness", r.witness}});
    if (r.passed) ++passed;
  }
  const json report{{"command", "check"},
                    {"suite", suite},
                    {"seed", ws.seed},
                    {"passed", passed},
                    {"total", results.size()},
                    {"results", rows}};
  std::cout << ws.dump(report) << "\n";
  std::cerr << passed << "/" << results.size() << " invariants passed (suite '"
            << suite << "', seed " << ws.seed << ")\n";
  for (const auto& r : results)
    if (!r.passed)
      std::cerr << "  FAIL [" << r.suite << "] " << r.invariant << ": "
                << r.witness << "\n";
  return passed == results.size() ? 0 : 1;
}

int cmd_accept(const Workspace& ws, const std::string& automaton_file,
               const std::string& circuit_file) {
  const json aj = load_json_file(automaton_file);
  const json cj = load_json_file(circuit_file);
  if (!aj.is_object() || !aj.contains("mu"))
    throw value_error(
        "accept: the automaton file is not a branching automaton (no 'mu')");
  const std::string tag = semiring_tag(aj.at("mu"), ws.semiring);
  return with_semiring(tag, [&](auto t) -> int {
    using S = typename decltype(t)::type;
    const auto A = pro_automaton_from_json<S>(aj);
    const auto term = circuit_from_json(cj, A.rep().signature());
    if constexpr (std::is_same_v<S, BooleanSemiring>) {
      const bool ok = accepts(A, term);
      std::cout << (ok ? "accept" : "reject") << "\n";
      return ok ? 0 : 1;
    } else {
      const auto w = weighted_accept(A, term);
      std::cout << ws.dump(ScalarCodec<S>::to_json(w)) << "\n";
      return S::eq(w, S::zero()) ? 1 : 0;
    }
  });
}

int cmd_behavior(const Workspace& ws, const std::string& automaton_file,
                 const std::string& word_text) {
  const json aj = load_json_file(automaton_file);
  return with_semiring(semiring_tag(aj, ws.semiring), [&](auto t) -> int {
    using S = typename decltype(t)::type;
    const auto A = word_automaton_from_json<S>(aj);
    Word w;
    for (char c : word_text) w.emplace_back(1, c);
    std::cout << ws.dump(ScalarCodec<S>::to_json(behavior_coeff(A, w)))
              << "\n";
    return 0;
  });
}

int cmd_lang(const Workspace& ws, const std::string& op,
             const std::string& a_file, const std::string& b_file,
             const std::string& out_file) {
  const json aj = load_json_file(a_file);
  const json bj = load_json_file(b_file);
  const bool a_branching = aj.is_object() && aj.contains("mu");
  const bool b_branching = bj.is_object() && bj.contains("mu");
  if (a_branching != b_branching)
    throw value_error(
        "lang: cannot combine a word automaton with a branching automaton");
  const json& a_tagged = a_branching ? aj.at("mu") : aj;
  const json& b_tagged = b_branching ? bj.at("mu") : bj;
  const std::string tag = semiring_tag(a_tagged, ws.semiring);
  if (tag != semiring_tag(b_tagged, ws.semiring))
    throw value_error("lang: the two automata use different weight semirings");
  return with_semiring(tag, [&](auto t) -> int {
    using S = typename decltype(t)::type;
    json result;
    if (a_branching) {
      const auto A = pro_automaton_from_json<S>(aj);
      const auto B = pro_automaton_from_json<S>(bj);
      result = pro_automaton_to_json<S>(op == "intersect"
                                            ? intersect(A, B)
                                            : union_automaton(A, B));
    } else {
      const auto A = word_automaton_from_json<S>(aj);
      const auto B = word_automaton_from_json<S>(bj);
      result = word_automaton_to_json<S>(
          op == "intersect" ? word_hadamard(A, B) : word_sum(A, B));
    }
    save_json_file(out_file, result, ws.pretty());
    std::cerr << "wrote " << out_file << "\n";
    return 0;
  });
}

std::string word_label(const std::vector<int>& word) {
  if (word.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += "*";
    out += "U" + std::to_string(word[i]);
  }
  return out;
}

int cmd_tl_conjecture(const Workspace& ws, int max_gens, int max_n) {
  const auto mu = standard_rep();
  const auto rows = conjecture_sweep(mu, max_gens, max_n);
  std::size_t agreed = 0;
  const ConjectureRow<RationalFunctionSemiring>* first_bad = nullptr;
  for (const auto& r : rows) {
    if (r.equal)
      ++agreed;
    else if (!first_bad)
      first_bad = &r;
  }
  if (ws.pretty()) {
    std::vector<std::vector<std::string>> table{{"term", "strands",
                                                 "wire-cycles", "gen-cycles",
                                                 "loops", "trace",
                                                 "prediction", "agree"}};
    for (const auto& r : rows)
      table.push_back({word_label(r.word), std::to_string(r.n),
                       std::to_string(r.cycles.triv),
                       std::to_string(r.cycles.ntriv),
                       std::to_string(r.loops), r.lhs.str(), r.rhs.str(),
                       r.equal ? "yes" : "NO"});
    std::vector<std::size_t> width(table[0].size(), 0);
    for (const auto& row : table)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    for (const auto& row : table) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size())
          line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      std::cout << line << "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(
          {{"term", r.word},
           {"strands", r.n},
           {"wire_cycles", r.cycles.triv},
           {"gen_cycles", r.cycles.ntriv},
           {"loops", r.loops},
           {"trace", ScalarCodec<RationalFunctionSemiring>::to_json(r.lhs)},
           {"prediction",
            ScalarCodec<RationalFunctionSemiring>::to_json(r.rhs)},
           {"agree", r.equal}});
    const json report{{"command", "tl-conjecture"},
                      {"seed", ws.seed},
                      {"max_generators", max_gens},
                      {"max_strands", max_n},
                      {"agreed", agreed},
                      {"total", rows.size()},
                      {"rows", arr}};
    std::cout << ws.dump(report) << "\n";
  }
  std::cerr << "trace prediction agreed on " << agreed << "/" << rows.size()
            << " terms";
  if (first_bad)
    std::cerr << "; first disagreement: " << word_label(first_bad->word)
              << " on " << first_bad->n << " strands (trace "
              << first_bad->lhs.str() << ", predicted "
              << first_bad->rhs.str() << ")";
  std::cerr << "\n";
  return 0;
}

int cmd_quantum_demo(const Workspace& ws) {
  using C = ComplexSemiring;
  const auto h = hadamard_gate();
  const auto v = cv_gate();
  const auto cnot = cnot_matrix();
  const double residual = std::max(
      {unitarity_residual(h), unitarity_residual(v), unitarity_residual(cnot)});
  const auto plus =
      QubitState(2, scale(std::complex<double>(1.0 / std::sqrt(2.0)),
                          add(basis_state({0, 0}).amplitudes(),
                              basis_state({0, 1}).amplitudes())));
  const auto bell = apply_state(plus, cnot);
  if (ws.pretty()) {
    std::cout << "controlled-not as a two-layer network (mixing gate, two "
                 "phase gates, mixing gate):\n"
              << ws.dump(hypermatrix_to_json<C>(cnot)) << "\n"
              << "largest unitarity residual across the three gates: "
              << residual << "\n"
              << "input (a balanced two-qubit product state):\n"
              << ws.dump(hypermatrix_to_json<C>(plus.amplitudes())) << "\n"
              << "output after the controlled flip:\n"
              << ws.dump(hypermatrix_to_json<C>(bell.amplitudes())) << "\n"
              << "input is a product state: "
              << (is_product_state(plus) ? "yes" : "no") << "\n"
              << "output is a product state: "
              << (is_product_state(bell) ? "yes" : "no (entangled)") << "\n";
  } else {
    const json report{{"command", "quantum-demo"},
                      {"seed", ws.seed},
                      {"controlled_not", hypermatrix_to_json<C>(cnot)},
                      {"max_unitarity_residual", residual},
                      {"input", hypermatrix_to_json<C>(plus.amplitudes())},
                      {"output", hypermatrix_to_json<C>(bell.amplitudes())},
                      {"input_is_product", is_product_state(plus)},
                      {"output_is_product", is_product_state(bell)}};
    std::cout << ws.dump(report) << "\n";
  }
  return 0;
}

int cmd_enumerate(const Workspace& ws, const std::string& sig_file,
                  int max_chips, int out_arity, int in_arity) {
  const Signature sig = signature_from_json(load_json_file(sig_file));
  const auto terms = enumerate_circuits(sig, max_chips, out_arity, in_arity);
  json arr = json::array();
  for (const auto& t : terms) arr.push_back(circuit_to_json(*t));
  std::cout << ws.dump(arr) << "\n";
  std::cerr << terms.size() << " circuit(s) with arity (" << out_arity << ", "
            << in_arity << ") and at most " << max_chips << " chip(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypermatrix circuits: evaluation, invariant checks, automata, "
               "and experiments"};
  app.require_subcommand(1);

  Workspace ws;
  app.add_option("--seed", ws.seed, "seed for randomized checks")
      ->capture_default_str();
  app.add_option("--tolerance", ws.tolerance,
                 "comparison tolerance for complex weights")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--semiring", ws.semiring,
                 "fallback weight semiring for untagged files")
      ->check(CLI::IsMember(
          {"boolean", "natural", "rational", "complex", "rational_function"}))
      ->capture_default_str();
  app.add_option("--format", ws.format, "output format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();

  int rc = 0;

  auto* eval_cmd = app.add_subcommand(
      "eval", "evaluate a representation file on a circuit term file");
  eval_cmd->fallthrough();
  std::string rep_file, eval_circuit, out_text, in_text;
  eval_cmd->add_option("representation", rep_file, "representation file")
      ->required();
  eval_cmd->add_option("circuit", eval_circuit, "circuit term file")
      ->required();
  auto* out_opt = eval_cmd->add_option(
      "--out", out_text, "upper index digits, comma separated");
  auto* in_opt = eval_cmd->add_option("--in", in_text,
                                      "lower index digits, comma separated");
  eval_cmd->callback([&] {
    ws.apply();
    rc = cmd_eval(ws, rep_file, eval_circuit,
                  out_opt->count() > 0 || in_opt->count() > 0, out_text,
                  in_text);
  });

  auto* check_cmd =
      app.add_subcommand("check", "replay a seeded invariant suite");
  check_cmd->fallthrough();
  std::string suite;
  check_cmd->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(check_suite_names()));
  check_cmd->callback([&] {
    ws.apply();
    rc = cmd_check(ws, suite);
  });

  auto* accept_cmd = app.add_subcommand(
      "accept", "run a branching automaton on a circuit term");
  accept_cmd->fallthrough();
  std::string accept_aut, accept_circuit;
  accept_cmd->add_option("--automaton", accept_aut, "branching automaton file")
      ->required();
  accept_cmd->add_option("--circuit", accept_circuit, "circuit term file")
      ->required();
  accept_cmd->callback([&] {
    ws.apply();
    rc = cmd_accept(ws, accept_aut, accept_circuit);
  });

  auto* behavior_cmd = app.add_subcommand(
      "behavior", "coefficient of a word in a word automaton's series");
  behavior_cmd->fallthrough();
  std::string behavior_aut, behavior_word;
  behavior_cmd
      ->add_option("--automaton", behavior_aut, "word automaton file")
      ->required();
  behavior_cmd->add_option("--word", behavior_word,
                           "the word, one letter per character");
  behavior_cmd->callback([&] {
    ws.apply();
    rc = cmd_behavior(ws, behavior_aut, behavior_word);
  });

  auto* lang_cmd = app.add_subcommand(
      "lang", "combine two automaton files into a new one");
  lang_cmd->fallthrough();
  std::string lang_op, lang_a, lang_b, lang_out;
  lang_cmd->add_option("--op", lang_op, "combination")
      ->required()
      ->check(CLI::IsMember({"intersect", "union"}));
  lang_cmd->add_option("first", lang_a, "first automaton file")->required();
  lang_cmd->add_option("second", lang_b, "second automaton file")->required();
  lang_cmd->add_option("-o,--output", lang_out, "output file")->required();
  lang_cmd->callback([&] {
    ws.apply();
    rc = cmd_lang(ws, lang_op, lang_a, lang_b, lang_out);
  });

  auto* tl_cmd = app.add_subcommand(
      "tl-conjecture",
      "compare closed-diagram traces with the loop-counting prediction");
  tl_cmd->fallthrough();
  int max_gens = 6, max_n = 5;
  tl_cmd->add_option("--max-gens", max_gens,
                     "largest generator word length")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  tl_cmd->add_option("--max-n", max_n, "largest strand count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tl_cmd->callback([&] {
    ws.apply();
    rc = cmd_tl_conjecture(ws, max_gens, max_n);
  });

  auto* quantum_cmd = app.add_subcommand(
      "quantum-demo", "build the controlled flip and entangle a product state");
  quantum_cmd->fallthrough();
  quantum_cmd->callback([&] {
    ws.apply();
    rc = cmd_quantum_demo(ws);
  });

  auto* enum_cmd = app.add_subcommand(
      "enumerate", "list circuit terms over a signature by size and arity");
  enum_cmd->fallthrough();
  std::string enum_sig;
  int enum_chips = 3, enum_out = 1, enum_in = 1;
  enum_cmd->add_option("--signature", enum_sig, "signature file")->required();
  enum_cmd->add_option("--max-chips", enum_chips, "largest chip count")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  enum_cmd->add_option("--out-arity", enum_out, "upper arity")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  enum_cmd->add_option("--in-arity", enum_in, "lower arity")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  enum_cmd->callback([&] {
    ws.apply();
    rc = cmd_enumerate(ws, enum_sig, enum_chips, enum_out, enum_in);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const shape_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const value_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
