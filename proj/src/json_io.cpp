#include "prokit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace prokit {

namespace {

// Collects the maximal run of nested compositions of one kind, in display
// order (left to right, top to bottom).
void collect_spine(const Circuit& t, CircuitKind kind,
                   nlohmann::json& parts) {
  if (t.kind == kind) {
    collect_spine(*t.first, kind, parts);
    collect_spine(*t.second, kind, parts);
    return;
  }
  parts.push_back(circuit_to_json(t));
}

}  // namespace

nlohmann::json circuit_to_json(const Circuit& t) {
  switch (t.kind) {
    case CircuitKind::Empty:
      return "empty";
    case CircuitKind::Wire:
      return "wire";
    case CircuitKind::Chip:
      return {{"chip", t.chip_name}};
    case CircuitKind::HComp: {
      nlohmann::json parts = nlohmann::json::array();
      collect_spine(t, CircuitKind::HComp, parts);
      return {{"h", std::move(parts)}};
    }
    case CircuitKind::VComp: {
      nlohmann::json parts = nlohmann::json::array();
      collect_spine(t, CircuitKind::VComp, parts);
      return {{"v", std::move(parts)}};
    }
  }
  throw value_error("circuit: unknown term kind");
}

CircuitPtr circuit_from_json(const nlohmann::json& j, const Signature& sig) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "wire") return wires(1);
    if (s == "empty") return empty_circuit();
    throw value_error("circuit: unknown token '" + s +
                      "' (expected \"wire\" or \"empty\")");
  }
  if (j.is_object()) {
    if (j.contains("chip")) {
      const nlohmann::json& f = j.at("chip");
      if (!f.is_string())
        throw value_error("circuit: 'chip' must name a chip");
      const std::string name = f.get<std::string>();
      if (!sig.has(name))
        throw value_error("circuit: unknown chip '" + name + "'");
      return chip(sig.chip(name));
    }
    const auto fold = [&](const char* key, auto combine) {
      const nlohmann::json& parts = j.at(key);
      if (!parts.is_array() || parts.empty())
        throw value_error(std::string("circuit: '") + key +
                          "' needs a non-empty factor list");
      CircuitPtr acc = circuit_from_json(parts[0], sig);
      for (std::size_t i = 1; i < parts.size(); ++i)
        acc = combine(acc, circuit_from_json(parts[i], sig));
      return acc;
    };
    if (j.contains("h"))
      return fold("h", [](const CircuitPtr& a, const CircuitPtr& b) {
        return hcomp(a, b);
      });
    if (j.contains("v"))
      return fold("v", [](const CircuitPtr& a, const CircuitPtr& b) {
        return vcomp(a, b);
      });
  }
  throw value_error("circuit: unrecognized term " + j.dump());
}

nlohmann::json signature_to_json(const Signature& sig) {
  nlohmann::json chips = nlohmann::json::array();
  for (const ChipDecl& c : sig.chips())
    chips.push_back(
        {{"name", c.name}, {"out", c.out}, {"in", c.in}});
  return {{"chips", std::move(chips)}};
}

Signature signature_from_json(const nlohmann::json& j) {
  const nlohmann::json& chips =
      detail::require_field(j, "chips", "signature");
  if (!chips.is_array())
    throw value_error("signature: 'chips' must be an array");
  std::vector<ChipDecl> decls;
  decls.reserve(chips.size());
  for (const nlohmann::json& c : chips)
    decls.push_back(ChipDecl{detail::require_string(c, "name", "signature"),
                             detail::require_int(c, "out", "signature"),
                             detail::require_int(c, "in", "signature")});
  return Signature(std::move(decls));
}

nlohmann::json labeling_to_json(const LabeledCircuit& q) {
  nlohmann::json colors = nlohmann::json::object();
  for (std::size_t w = 0; w < q.colors.size(); ++w)
    colors[std::to_string(w + 1)] = q.colors[w];
  return {{"term", circuit_to_json(*q.wires->base)},
          {"colors", std::move(colors)}};
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("'" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const nlohmann::json& j,
                    bool pretty) {
  std::ofstream out(path);
  if (!out) throw value_error("cannot write '" + path + "'");
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
  if (!out) throw value_error("failed writing '" + path + "'");
}

nlohmann::json tree_automaton_to_json(const TreeAutomaton& A) {
  nlohmann::json arities = nlohmann::json::object();
  for (const auto& [a, k] : A.arities()) arities[a] = k;
  nlohmann::json delta = nlohmann::json::array();
  for (const TreeRule& r : A.rules())
    delta.push_back({{"letter", r.letter},
                     {"children", r.children},
                     {"to", r.to}});
  return {{"n", A.n_states()},
          {"arities", std::move(arities)},
          {"delta", std::move(delta)},
          {"finals", A.finals()}};
}

TreeAutomaton tree_automaton_from_json(const nlohmann::json& j) {
  const char* what = "tree automaton";
  const nlohmann::json& arities_j = detail::require_field(j, "arities", what);
  if (!arities_j.is_object())
    throw value_error("tree automaton: 'arities' must map letters to counts");
  std::map<Letter, int> arities;
  for (const auto& [a, k] : arities_j.items()) {
    if (!k.is_number_integer())
      throw value_error("tree automaton: arity of '" + a +
                        "' must be an integer");
    arities[a] = k.get<int>();
  }
  const auto int_list = [](const nlohmann::json& arr, const char* where) {
    if (!arr.is_array())
      throw value_error(std::string("tree automaton: ") + where +
                        " must be an integer array");
    std::vector<int> out;
    out.reserve(arr.size());
    for (const nlohmann::json& v : arr) {
      if (!v.is_number_integer())
        throw value_error(std::string("tree automaton: ") + where +
                          " must contain integers only");
      out.push_back(v.get<int>());
    }
    return out;
  };
  std::vector<TreeRule> rules;
  const nlohmann::json& delta = detail::require_field(j, "delta", what);
  if (!delta.is_array())
    throw value_error("tree automaton: 'delta' must be a rule array");
  for (const nlohmann::json& r : delta)
    rules.push_back(TreeRule{detail::require_string(r, "letter", what),
                             int_list(detail::require_field(r, "children", what),
                                      "rule children"),
                             detail::require_int(r, "to", what)});
  std::vector<int> finals =
      int_list(detail::require_field(j, "finals", what), "'finals'");
  int n = 1;  // states are numbered 1..n
  if (j.contains("n")) {
    n = detail::require_int(j, "n", what);
  } else {
    for (const TreeRule& r : rules) {
      n = std::max(n, r.to);
      for (int q : r.children) n = std::max(n, q);
    }
    for (int q : finals) n = std::max(n, q);
  }
  return TreeAutomaton(n, std::move(arities), std::move(rules),
                       std::move(finals));
}

}  // namespace prokit
