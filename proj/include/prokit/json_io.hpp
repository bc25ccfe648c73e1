#pragma once
// JSON readers and writers for everything the tool exchanges on disk:
// semiring scalars, dense and sparse hypermatrices, circuit terms and
// signatures, representations, and the three automaton file kinds.
//
// Scalar encodings: booleans as true/false; naturals and rationals as
// decimal strings ("42", "-3/7"); complex numbers as [re, im] pairs; and
// rational functions as {"num":[...],"den":[...]} coefficient lists in
// ascending powers of the variable, with rational-string entries.
//
// Malformed or out-of-range content raises value_error; well-formed data
// whose pieces disagree in shape raises shape_error.

#include <json.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "prokit/automata.hpp"
#include "prokit/circuit.hpp"
#include "prokit/errors.hpp"
#include "prokit/hypermat.hpp"
#include "prokit/paths.hpp"
#include "prokit/polynomial.hpp"
#include "prokit/represent.hpp"
#include "prokit/semiring.hpp"

namespace prokit {

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j,
                                           const char* key,
                                           const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw value_error(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

inline int require_int(const nlohmann::json& j, const char* key,
                       const char* what) {
  const nlohmann::json& f = require_field(j, key, what);
  if (!f.is_number_integer())
    throw value_error(std::string(what) + ": field '" + key +
                      "' must be an integer");
  return f.get<int>();
}

inline std::string require_string(const nlohmann::json& j, const char* key,
                                  const char* what) {
  const nlohmann::json& f = require_field(j, key, what);
  if (!f.is_string())
    throw value_error(std::string(what) + ": field '" + key +
                      "' must be a string");
  return f.get<std::string>();
}

// A signed integer or ratio in decimal notation, sign up front only.
inline void check_rational_text(const std::string& s, const char* what) {
  std::size_t i = 0;
  const auto digits = [&]() {
    const std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return i > start;
  };
  if (i < s.size() && s[i] == '-') ++i;
  bool ok = digits();
  if (ok && i < s.size() && s[i] == '/') {
    ++i;
    ok = digits();
  }
  if (!ok || i != s.size())
    throw value_error(std::string(what) + ": '" + s +
                      "' is not an integer or ratio");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

template <class S>
struct ScalarCodec;

template <>
struct ScalarCodec<BooleanSemiring> {
  static nlohmann::json to_json(BooleanSemiring::value_type v) {
    return v != 0;
  }
  static BooleanSemiring::value_type from_json(const nlohmann::json& j) {
    if (!j.is_boolean())
      throw value_error("boolean scalar must be true or false, got " +
                        j.dump());
    return j.get<bool>() ? 1 : 0;
  }
};

template <>
struct ScalarCodec<NaturalSemiring> {
  static nlohmann::json to_json(const NaturalSemiring::value_type& v) {
    return v.str();
  }
  static NaturalSemiring::value_type from_json(const nlohmann::json& j) {
    if (!j.is_string())
      throw value_error("natural scalar must be a decimal string, got " +
                        j.dump());
    const std::string s = j.get<std::string>();
    if (s.empty()) throw value_error("natural scalar string is empty");
    for (char c : s)
      if (c < '0' || c > '9')
        throw value_error("natural scalar '" + s +
                          "' must contain digits only");
    return NaturalSemiring::value_type(s);
  }
};

template <>
struct ScalarCodec<RationalSemiring> {
  static nlohmann::json to_json(const RationalSemiring::value_type& v) {
    return v.str();
  }
  static RationalSemiring::value_type from_json(const nlohmann::json& j) {
    if (!j.is_string())
      throw value_error("rational scalar must be a string, got " + j.dump());
    const std::string s = j.get<std::string>();
    detail::check_rational_text(s, "rational scalar");
    using Int = NaturalSemiring::value_type;
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos)
      return RationalSemiring::value_type(Int(s));
    const Int den(s.substr(slash + 1));
    if (den == 0)
      throw value_error("rational scalar '" + s +
                        "' has a zero denominator");
    return RationalSemiring::value_type(Int(s.substr(0, slash)), den);
  }
};

template <>
struct ScalarCodec<ComplexSemiring> {
  static nlohmann::json to_json(ComplexSemiring::value_type v) {
    return nlohmann::json::array({v.real(), v.imag()});
  }
  static ComplexSemiring::value_type from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number())
      throw value_error("complex scalar must be a [re, im] number pair, got " +
                        j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
  }
};

template <>
struct ScalarCodec<RationalFunctionSemiring> {
  static nlohmann::json to_json(const RationalFunction& v) {
    const auto poly = [](const Polynomial& p) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rat& c : p.coeffs()) coeffs.push_back(c.str());
      return coeffs;
    };
    return {{"num", poly(v.num())}, {"den", poly(v.den())}};
  }
  static RationalFunction from_json(const nlohmann::json& j) {
    const auto poly = [](const nlohmann::json& f, const char* what) {
      if (!f.is_array())
        throw value_error(std::string(what) +
                          " must be a coefficient array, got " + f.dump());
      std::vector<Rat> coeffs;
      coeffs.reserve(f.size());
      for (const nlohmann::json& c : f)
        coeffs.push_back(ScalarCodec<RationalSemiring>::from_json(c));
      return Polynomial(std::move(coeffs));
    };
    if (!j.is_object())
      throw value_error(
          "rational-function scalar must be a {num, den} object, got " +
          j.dump());
    return RationalFunction(
        poly(detail::require_field(j, "num", "rational function"),
             "rational-function numerator"),
        poly(detail::require_field(j, "den", "rational function"),
             "rational-function denominator"));
  }
};

// ---------------------------------------------------------------------------
// Hypermatrices
// ---------------------------------------------------------------------------

template <class S>
nlohmann::json hypermatrix_to_json(const Hypermatrix<S>& h) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < h.size(); ++i)
    entries.push_back(ScalarCodec<S>::to_json(h[i]));
  return {{"N", h.base_dim()},
          {"out_rank", h.out_rank()},
          {"in_rank", h.in_rank()},
          {"entries", std::move(entries)}};
}

template <class S>
Hypermatrix<S> hypermatrix_from_json(const nlohmann::json& j) {
  const char* what = "hypermatrix";
  Hypermatrix<S> h(detail::require_int(j, "N", what),
                   detail::require_int(j, "out_rank", what),
                   detail::require_int(j, "in_rank", what));
  if (j.contains("entries")) {
    const nlohmann::json& entries = j.at("entries");
    if (!entries.is_array())
      throw value_error("hypermatrix: 'entries' must be an array");
    if (entries.size() != h.size())
      throw shape_error("hypermatrix: " + std::to_string(entries.size()) +
                        " entries listed where the shape holds " +
                        std::to_string(h.size()));
    for (std::size_t i = 0; i < h.size(); ++i)
      h[i] = ScalarCodec<S>::from_json(entries[i]);
    return h;
  }
  if (j.contains("sparse")) {
    const nlohmann::json& cells = j.at("sparse");
    if (!cells.is_array())
      throw value_error("hypermatrix: 'sparse' must be an array");
    for (const nlohmann::json& cell : cells) {
      const auto read_index = [&](const char* key) {
        const nlohmann::json& f = detail::require_field(cell, key, what);
        if (!f.is_array())
          throw value_error("hypermatrix: sparse '" + std::string(key) +
                            "' must be an index array");
        Index idx;
        for (const nlohmann::json& d : f) {
          if (!d.is_number_integer())
            throw value_error("hypermatrix: sparse indices must be integers");
          idx.push_back(d.get<int>());
        }
        return idx;
      };
      h.at(read_index("out"), read_index("in")) =
          ScalarCodec<S>::from_json(detail::require_field(cell, "val", what));
    }
    return h;
  }
  throw value_error("hypermatrix: needs an 'entries' or 'sparse' field");
}

// ---------------------------------------------------------------------------
// Circuits, signatures, labelings (defined in the library source)
// ---------------------------------------------------------------------------

nlohmann::json circuit_to_json(const Circuit& t);
// Chip arities come from `sig`; unknown chip names are rejected.
CircuitPtr circuit_from_json(const nlohmann::json& j, const Signature& sig);

nlohmann::json signature_to_json(const Signature& sig);
Signature signature_from_json(const nlohmann::json& j);

// Annotated-diagram output: the term plus one color per wire in canonical
// order, keyed "1", "2", ...
nlohmann::json labeling_to_json(const LabeledCircuit& q);

// Read a whole file as JSON / write JSON to a file.  Unreadable files and
// syntax errors raise value_error.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j,
                    bool pretty = true);

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

template <class S>
nlohmann::json representation_to_json(const Representation<S>& mu) {
  nlohmann::json chips = nlohmann::json::object();
  for (const auto& [name, h] : mu.assignments())
    chips[name] = hypermatrix_to_json<S>(h);
  return {{"N", mu.base_dim()},
          {"semiring", S::name()},
          {"chips", std::move(chips)}};
}

// Confirms a declared "semiring" tag against the requested one.
template <class S>
void check_semiring_tag(const nlohmann::json& j, const char* what) {
  if (!j.is_object() || !j.contains("semiring")) return;
  const nlohmann::json& f = j.at("semiring");
  if (!f.is_string())
    throw value_error(std::string(what) + ": 'semiring' must be a string");
  if (f.get<std::string>() != S::name())
    throw value_error(std::string(what) + ": file declares semiring '" +
                      f.get<std::string>() + "' but '" + S::name() +
                      "' was requested");
}

template <class S>
Representation<S> representation_from_json(const nlohmann::json& j) {
  const char* what = "representation";
  check_semiring_tag<S>(j, what);
  const int N = detail::require_int(j, "N", what);
  const nlohmann::json& chips = detail::require_field(j, "chips", what);
  if (!chips.is_object())
    throw value_error("representation: 'chips' must map names to tables");
  std::vector<ChipDecl> decls;
  std::map<std::string, Hypermatrix<S>> mu;
  for (const auto& [name, table] : chips.items()) {
    Hypermatrix<S> h = hypermatrix_from_json<S>(table);
    decls.push_back(ChipDecl{name, h.out_rank(), h.in_rank()});
    mu.emplace(name, std::move(h));
  }
  return Representation<S>(N, Signature(std::move(decls)), std::move(mu));
}

// ---------------------------------------------------------------------------
// Automata
// ---------------------------------------------------------------------------

template <class S>
nlohmann::json word_automaton_to_json(const WordAutomaton<S>& A) {
  const int n = A.n_states();
  nlohmann::json lambda = nlohmann::json::array();
  nlohmann::json gamma = nlohmann::json::array();
  for (int q = 1; q <= n; ++q) {
    lambda.push_back(ScalarCodec<S>::to_json(A.initial_weight(q)));
    gamma.push_back(ScalarCodec<S>::to_json(A.final_weight(q)));
  }
  nlohmann::json rho = nlohmann::json::object();
  for (const Letter& a : A.letters()) {
    nlohmann::json rows = nlohmann::json::array();
    for (int from = 1; from <= n; ++from) {
      nlohmann::json row = nlohmann::json::array();
      for (int to = 1; to <= n; ++to)
        row.push_back(ScalarCodec<S>::to_json(A.weight(a, from, to)));
      rows.push_back(std::move(row));
    }
    rho[a] = std::move(rows);
  }
  return {{"semiring", S::name()},
          {"lambda", std::move(lambda)},
          {"rho", std::move(rho)},
          {"gamma", std::move(gamma)}};
}

template <class S>
WordAutomaton<S> word_automaton_from_json(const nlohmann::json& j) {
  const char* what = "word automaton";
  check_semiring_tag<S>(j, what);
  const nlohmann::json& lambda = detail::require_field(j, "lambda", what);
  const nlohmann::json& rho = detail::require_field(j, "rho", what);
  const nlohmann::json& gamma = detail::require_field(j, "gamma", what);
  if (!lambda.is_array() || !gamma.is_array())
    throw value_error("word automaton: 'lambda' and 'gamma' must be arrays");
  if (!rho.is_object())
    throw value_error("word automaton: 'rho' must map letters to matrices");
  const std::size_t n = lambda.size();
  if (gamma.size() != n)
    throw shape_error("word automaton: 'gamma' lists " +
                      std::to_string(gamma.size()) + " weights for " +
                      std::to_string(n) + " states");
  using value_type = typename S::value_type;
  const auto vec = [&](const nlohmann::json& arr) {
    std::vector<value_type> out;
    out.reserve(arr.size());
    for (const nlohmann::json& v : arr)
      out.push_back(ScalarCodec<S>::from_json(v));
    return out;
  };
  std::map<Letter, std::vector<std::vector<value_type>>> rows;
  for (const auto& [a, table] : rho.items()) {
    if (!table.is_array() || table.size() != n)
      throw shape_error("word automaton: transition table for '" + a +
                        "' must list one row per state");
    std::vector<std::vector<value_type>> m;
    for (const nlohmann::json& row : table) {
      if (!row.is_array() || row.size() != n)
        throw shape_error("word automaton: transition row for '" + a +
                          "' must list one weight per state");
      m.push_back(vec(row));
    }
    rows.emplace(a, std::move(m));
  }
  return WordAutomaton<S>(static_cast<int>(n), vec(lambda), rows, vec(gamma));
}

nlohmann::json tree_automaton_to_json(const TreeAutomaton& A);
TreeAutomaton tree_automaton_from_json(const nlohmann::json& j);

template <class S>
nlohmann::json pro_automaton_to_json(const ProAutomaton<S>& A) {
  return {{"N", A.base_dim()},
          {"mu", representation_to_json(A.rep())},
          {"I", word_automaton_to_json(A.upper_language())},
          {"J", word_automaton_to_json(A.lower_language())}};
}

template <class S>
ProAutomaton<S> pro_automaton_from_json(const nlohmann::json& j) {
  const char* what = "circuit automaton";
  const int N = detail::require_int(j, "N", what);
  Representation<S> mu =
      representation_from_json<S>(detail::require_field(j, "mu", what));
  if (mu.base_dim() != N)
    throw value_error(
        "circuit automaton: 'N' disagrees with the representation");
  WordAutomaton<S> upper =
      word_automaton_from_json<S>(detail::require_field(j, "I", what));
  WordAutomaton<S> lower =
      word_automaton_from_json<S>(detail::require_field(j, "J", what));
  return ProAutomaton<S>(std::move(mu), std::move(upper), std::move(lower));
}

// ---------------------------------------------------------------------------
// Semiring selection by tag
// ---------------------------------------------------------------------------

// Calls f with std::type_identity<S> for the semiring named by `tag`.
template <class F>
decltype(auto) with_semiring(const std::string& tag, F&& f) {
  if (tag == BooleanSemiring::name())
    return f(std::type_identity<BooleanSemiring>{});
  if (tag == NaturalSemiring::name())
    return f(std::type_identity<NaturalSemiring>{});
  if (tag == RationalSemiring::name())
    return f(std::type_identity<RationalSemiring>{});
  if (tag == ComplexSemiring::name())
    return f(std::type_identity<ComplexSemiring>{});
  if (tag == RationalFunctionSemiring::name())
    return f(std::type_identity<RationalFunctionSemiring>{});
  throw value_error("unknown semiring tag '" + tag + "'");
}

// The "semiring" field of a file, or `fallback` when absent.
inline std::string semiring_tag(const nlohmann::json& j,
                                const std::string& fallback = "boolean") {
  if (j.is_object() && j.contains("semiring")) {
    const nlohmann::json& f = j.at("semiring");
    if (!f.is_string())
      throw value_error("'semiring' must be a string, got " + f.dump());
    return f.get<std::string>();
  }
  return fallback;
}

}  // namespace prokit
