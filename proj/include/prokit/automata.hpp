// Automata presented through circuit representations.
//
//   * weighted word automata, whose letter-by-letter behavior is recovered by
//     evaluating a three-chip-alphabet representation on a vertical stack;
//   * bottom-up tree automata, whose acceptance is recovered by evaluating a
//     boolean representation on the circuit drawn from the tree;
//   * branching automata with fork and join transitions, queried on
//     arity-(1,1) circuits closed off by the start/finish chips;
//   * hypermatrix circuit automata over pluggable signatures: a
//     representation plus weighted word automata for the two boundary words,
//     with boolean and weighted acceptance, intersection, and union.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "prokit/circuit.hpp"
#include "prokit/errors.hpp"
#include "prokit/hypermat.hpp"
#include "prokit/multiindex.hpp"
#include "prokit/represent.hpp"
#include "prokit/semiring.hpp"

namespace prokit {

using Letter = std::string;
using Word = std::vector<Letter>;

// One single-character letter per input character (test and CLI convenience).
Word make_word(const std::string& s);

// Digit word over [N] as decimal letters: [1,12,2] -> {"1","12","2"}.
Word word_from_digits(const Index& u);

// The start and finish chips every automaton signature carries.  Letter
// alphabets must avoid these two names.
inline const char* kStartChip = "bot";   // arity (1,0): injects a state
inline const char* kFinishChip = "top";  // arity (0,1): reads a state off

namespace detail {
void check_letter(const Letter& a);
}  // namespace detail

// ---------------------------------------------------------------------------
// Weighted word automata
// ---------------------------------------------------------------------------
//
// States are 1..n.  The initial weights form a K(n,1,0) hypermatrix (one
// upper index), the final weights a K(n,0,1), and each letter a K(n,1,1)
// whose UPPER index is the target state and LOWER index the source state —
// exactly the shapes a representation assigns to the start chip, the finish
// chip, and a letter chip, so word_rep below is the identity on the stored
// data.
template <class S>
class WordAutomaton {
 public:
  using value_type = typename S::value_type;
  using matrix_type = Hypermatrix<S>;

  WordAutomaton(matrix_type initial, std::map<Letter, matrix_type> transitions,
                matrix_type final_weights)
      : lambda_(std::move(initial)),
        rho_(std::move(transitions)),
        gamma_(std::move(final_weights)) {
    if (lambda_.out_rank() != 1 || lambda_.in_rank() != 0)
      throw value_error("word automaton: initial weights must have shape (1,0)");
    if (gamma_.out_rank() != 0 || gamma_.in_rank() != 1)
      throw value_error("word automaton: final weights must have shape (0,1)");
    const int n = lambda_.base_dim();
    if (gamma_.base_dim() != n)
      throw value_error("word automaton: initial/final state counts differ");
    for (const auto& [a, R] : rho_) {
      detail::check_letter(a);
      if (R.base_dim() != n || R.out_rank() != 1 || R.in_rank() != 1)
        throw value_error("word automaton: transition matrix for '" + a +
                          "' must have shape (1,1) over the state count");
    }
  }

  // Row-wise convenience: transition_rows[a][source-1][target-1] is the
  // weight of the 'a'-transition source -> target, the way transition tables
  // are usually written down.  Stored transposed so a chip's upper index is
  // the target state.
  WordAutomaton(int n_states, const std::vector<value_type>& initial,
                const std::map<Letter, std::vector<std::vector<value_type>>>&
                    transition_rows,
                const std::vector<value_type>& final_weights)
      : WordAutomaton(pack_column(n_states, initial),
                      pack_transposed(n_states, transition_rows),
                      pack_row(n_states, final_weights)) {}

  int n_states() const { return lambda_.base_dim(); }
  const matrix_type& initial() const { return lambda_; }
  const matrix_type& final_weights() const { return gamma_; }
  const std::map<Letter, matrix_type>& transitions() const { return rho_; }

  const matrix_type& transition(const Letter& a) const {
    auto it = rho_.find(a);
    if (it == rho_.end())
      throw value_error("word automaton: unknown letter '" + a + "'");
    return it->second;
  }

  bool has_letter(const Letter& a) const { return rho_.count(a) != 0; }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(rho_.size());
    for (const auto& [a, R] : rho_) out.push_back(a);
    return out;
  }

  value_type initial_weight(int q) const {
    return lambda_.entry(static_cast<std::size_t>(q - 1), 0);
  }
  value_type final_weight(int q) const {
    return gamma_.entry(0, static_cast<std::size_t>(q - 1));
  }
  // Weight of the 'a'-transition from -> to.
  value_type weight(const Letter& a, int from, int to) const {
    return transition(a).entry(static_cast<std::size_t>(to - 1),
                               static_cast<std::size_t>(from - 1));
  }

 private:
  static matrix_type pack_column(int n, const std::vector<value_type>& v) {
    if (n <= 0) throw value_error("word automaton: state count must be positive");
    if (static_cast<int>(v.size()) != n)
      throw value_error("word automaton: initial weight vector has wrong length");
    matrix_type h(n, 1, 0);
    for (int q = 0; q < n; ++q) h.entry(static_cast<std::size_t>(q), 0) = v[q];
    return h;
  }
  static matrix_type pack_row(int n, const std::vector<value_type>& v) {
    if (static_cast<int>(v.size()) != n)
      throw value_error("word automaton: final weight vector has wrong length");
    matrix_type h(n, 0, 1);
    for (int q = 0; q < n; ++q) h.entry(0, static_cast<std::size_t>(q)) = v[q];
    return h;
  }
  static std::map<Letter, matrix_type> pack_transposed(
      int n,
      const std::map<Letter, std::vector<std::vector<value_type>>>& rows) {
    std::map<Letter, matrix_type> out;
    for (const auto& [a, rs] : rows) {
      if (static_cast<int>(rs.size()) != n)
        throw value_error("word automaton: transition table for '" + a +
                          "' has wrong row count");
      matrix_type h(n, 1, 1);
      for (int s = 0; s < n; ++s) {
        if (static_cast<int>(rs[s].size()) != n)
          throw value_error("word automaton: transition table for '" + a +
                            "' has a row of wrong length");
        for (int t = 0; t < n; ++t)
          h.entry(static_cast<std::size_t>(t), static_cast<std::size_t>(s)) =
              rs[s][t];
      }
      out.emplace(a, std::move(h));
    }
    return out;
  }

  matrix_type lambda_;
  std::map<Letter, matrix_type> rho_;
  matrix_type gamma_;
};

// Coefficient of a word: initial row times one transition matrix per letter
// times the final column.  Throws on a letter outside the alphabet.
template <class S>
typename S::value_type behavior_coeff(const WordAutomaton<S>& A,
                                      const Word& w) {
  const int n = A.n_states();
  std::vector<typename S::value_type> row(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q)
    row[static_cast<std::size_t>(q - 1)] = A.initial_weight(q);
  for (const Letter& a : w) {
    const auto& R = A.transition(a);
    std::vector<typename S::value_type> next(static_cast<std::size_t>(n),
                                             S::zero());
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s)
        next[static_cast<std::size_t>(t)] =
            S::add(next[static_cast<std::size_t>(t)],
                   S::mul(row[static_cast<std::size_t>(s)],
                          R.entry(static_cast<std::size_t>(t),
                                  static_cast<std::size_t>(s))));
    row = std::move(next);
  }
  auto acc = S::zero();
  for (int q = 1; q <= n; ++q)
    acc = S::add(acc, S::mul(row[static_cast<std::size_t>(q - 1)],
                             A.final_weight(q)));
  return acc;
}

// Signature with the start chip (1,0), the finish chip (0,1), and one (1,1)
// chip per letter.
Signature word_signature(const std::vector<Letter>& letters);

// The vertical stack for a word: start chip at the bottom, the letters in
// reading order above it, the finish chip on top; arity (0,0).
CircuitPtr word_to_circuit(const Word& w);

// The representation whose evaluation on word_to_circuit(w) is the scalar
// behavior_coeff(A, w): start chip -> initial weights, finish chip -> final
// weights, letter chips -> transition matrices.
template <class S>
Representation<S> word_rep(const WordAutomaton<S>& A) {
  std::map<std::string, Hypermatrix<S>> mu;
  mu.emplace(kStartChip, A.initial());
  mu.emplace(kFinishChip, A.final_weights());
  for (const auto& [a, R] : A.transitions()) mu.emplace(a, R);
  return Representation<S>(A.n_states(), word_signature(A.letters()),
                           std::move(mu));
}

namespace detail {
template <class S>
void check_same_alphabet(const WordAutomaton<S>& A, const WordAutomaton<S>& B,
                         const char* what) {
  if (A.letters() != B.letters())
    throw value_error(std::string(what) + ": alphabets differ");
}
}  // namespace detail

// Disjoint sum: states concatenate, every stored hypermatrix combines by the
// block embedding.  Coefficients add; this is the word shadow of quasi_sum.
template <class S>
WordAutomaton<S> word_sum(const WordAutomaton<S>& A, const WordAutomaton<S>& B) {
  detail::check_same_alphabet(A, B, "word_sum");
  std::map<Letter, Hypermatrix<S>> rho;
  for (const auto& [a, R] : A.transitions())
    rho.emplace(a, quasi_direct_sum(R, B.transition(a)));
  return WordAutomaton<S>(quasi_direct_sum(A.initial(), B.initial()),
                          std::move(rho),
                          quasi_direct_sum(A.final_weights(), B.final_weights()));
}

// Pairing product: states pair up, every stored hypermatrix combines by the
// base-dimension Kronecker product.  Coefficients multiply; this is the word
// shadow of the pointwise product of representations.
template <class S>
WordAutomaton<S> word_hadamard(const WordAutomaton<S>& A,
                               const WordAutomaton<S>& B) {
  detail::check_same_alphabet(A, B, "word_hadamard");
  std::map<Letter, Hypermatrix<S>> rho;
  for (const auto& [a, R] : A.transitions())
    rho.emplace(a, kronecker(R, B.transition(a)));
  return WordAutomaton<S>(kronecker(A.initial(), B.initial()), std::move(rho),
                          kronecker(A.final_weights(), B.final_weights()));
}

// For automata whose alphabet is exactly the decimal digits "1".."M", the
// alphabet size M; throws otherwise.  Boundary-word automata of circuit
// automata are of this shape.
template <class S>
int digit_alphabet_size(const WordAutomaton<S>& A) {
  const int M = static_cast<int>(A.transitions().size());
  for (int d = 1; d <= M; ++d)
    if (!A.has_letter(std::to_string(d)))
      throw value_error(
          "word automaton: alphabet is not a full digit range 1..M");
  return M;
}

// Weights of every digit word of the given length at once, indexed by the
// word's big-endian linear offset.  Built by `length` synchronized automaton
// steps (one table of size M^k per state), never by per-word runs.
template <class S>
std::vector<typename S::value_type> forward_weights(const WordAutomaton<S>& A,
                                                    int length) {
  if (length < 0) throw value_error("forward_weights: negative length");
  const int M = digit_alphabet_size(A);
  const int n = A.n_states();
  std::vector<std::vector<typename S::value_type>> f(
      static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q)
    f[static_cast<std::size_t>(q - 1)] = {A.initial_weight(q)};
  std::size_t sz = 1;
  for (int step = 0; step < length; ++step) {
    const std::size_t next_sz = sz * static_cast<std::size_t>(M);
    std::vector<std::vector<typename S::value_type>> g(
        static_cast<std::size_t>(n),
        std::vector<typename S::value_type>(next_sz, S::zero()));
    for (int d = 1; d <= M; ++d) {
      const auto& R = A.transition(std::to_string(d));
      for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s) {
          const auto w = R.entry(static_cast<std::size_t>(t),
                                 static_cast<std::size_t>(s));
          if (S::eq(w, S::zero())) continue;
          auto& gt = g[static_cast<std::size_t>(t)];
          const auto& fs = f[static_cast<std::size_t>(s)];
          for (std::size_t off = 0; off < sz; ++off)
            gt[off * static_cast<std::size_t>(M) +
               static_cast<std::size_t>(d - 1)] =
                S::add(gt[off * static_cast<std::size_t>(M) +
                          static_cast<std::size_t>(d - 1)],
                       S::mul(fs[off], w));
        }
    }
    f = std::move(g);
    sz = next_sz;
  }
  std::vector<typename S::value_type> out(sz, S::zero());
  for (int q = 1; q <= n; ++q)
    for (std::size_t off = 0; off < sz; ++off)
      out[off] = S::add(out[off], S::mul(f[static_cast<std::size_t>(q - 1)][off],
                                         A.final_weight(q)));
  return out;
}

// Digit pairing of two equal-length words, u over [M]: digitwise
// (v_i - 1) * M + u_i.  mod_div with base M inverts it.
Index word_odot(const Index& u, const Index& v, int M);

// Pairing product on digit alphabets: A over "1".."M" and B over "1".."N"
// give an automaton over "1".."M*N" whose coefficient on word_odot(u, v, M)
// is the product of the two coefficients (for commutative weights).
template <class S>
WordAutomaton<S> lang_odot(const WordAutomaton<S>& A,
                           const WordAutomaton<S>& B) {
  const int M = digit_alphabet_size(A);
  const int N = digit_alphabet_size(B);
  std::map<Letter, Hypermatrix<S>> rho;
  for (int beta = 1; beta <= N; ++beta)
    for (int alpha = 1; alpha <= M; ++alpha)
      rho.emplace(std::to_string((beta - 1) * M + alpha),
                  kronecker(A.transition(std::to_string(alpha)),
                            B.transition(std::to_string(beta))));
  return WordAutomaton<S>(kronecker(A.initial(), B.initial()), std::move(rho),
                          kronecker(A.final_weights(), B.final_weights()));
}

// Disjoint sum over the concatenated digit alphabet: digits "1".."M" keep A's
// transitions, digits "M+1".."M+N" carry B's (shifted by M); states embed as
// blocks.  Coefficient of a pure-low word = A's coefficient, of a pure-high
// word = B's coefficient of the unshifted word; mixed words get weight zero.
template <class S>
WordAutomaton<S> shifted_union(const WordAutomaton<S>& A,
                               const WordAutomaton<S>& B) {
  const int M = digit_alphabet_size(A);
  const int N = digit_alphabet_size(B);
  const Hypermatrix<S> zero_a(A.n_states(), 1, 1);
  const Hypermatrix<S> zero_b(B.n_states(), 1, 1);
  std::map<Letter, Hypermatrix<S>> rho;
  for (int d = 1; d <= M; ++d)
    rho.emplace(std::to_string(d),
                quasi_direct_sum(A.transition(std::to_string(d)), zero_b));
  for (int d = 1; d <= N; ++d)
    rho.emplace(std::to_string(M + d),
                quasi_direct_sum(zero_a, B.transition(std::to_string(d))));
  return WordAutomaton<S>(quasi_direct_sum(A.initial(), B.initial()),
                          std::move(rho),
                          quasi_direct_sum(A.final_weights(), B.final_weights()));
}

// ---------------------------------------------------------------------------
// Bottom-up tree automata
// ---------------------------------------------------------------------------

// Ordered tree over a ranked alphabet.  An empty letter marks an unlabeled
// leaf slot (a hole); labeled nodes carry one child per arity position.
struct Tree {
  Letter letter;
  std::vector<Tree> children;

  bool is_slot() const { return letter.empty(); }

  static Tree slot() { return Tree{}; }
  static Tree leaf(Letter a) { return Tree{std::move(a), {}}; }
  static Tree node(Letter a, std::vector<Tree> ch) {
    return Tree{std::move(a), std::move(ch)};
  }
};

int count_slots(const Tree& t);

// delta rule: reading `letter` with the children in these states can move to
// state `to`.
struct TreeRule {
  Letter letter;
  std::vector<int> children;
  int to = 0;
};

class TreeAutomaton {
 public:
  TreeAutomaton(int n_states, std::map<Letter, int> arities,
                std::vector<TreeRule> rules, std::vector<int> finals);

  int n_states() const { return n_; }
  const std::map<Letter, int>& arities() const { return arities_; }
  const std::vector<TreeRule>& rules() const { return rules_; }
  const std::vector<int>& finals() const { return finals_; }
  bool is_final(int q) const;

  int arity(const Letter& a) const;
  // States reachable by reading `a` over the given child states.
  const std::set<int>& targets(const Letter& a,
                               const std::vector<int>& children) const;

 private:
  int n_;
  std::map<Letter, int> arities_;
  std::vector<TreeRule> rules_;
  std::vector<int> finals_;
  std::map<std::pair<Letter, std::vector<int>>, std::set<int>> table_;
  std::set<int> empty_;
};

// All states the automaton can reach at the root of a fully labeled tree
// (bottom-up, union over child-state choices).  Throws on slots, unknown
// letters, and arity mismatches.
std::set<int> tree_delta_star(const TreeAutomaton& A, const Tree& t);

// delta_star meets the final states.
bool tree_accepts(const TreeAutomaton& A, const Tree& t);

// Signature with the start chip (1,0), the finish chip (0,1), and one
// (arity, 1) chip per letter: a letter's upper legs face its children, the
// lower leg faces the root.
Signature tree_signature(const std::map<Letter, int>& arities);

// The circuit drawn from a tree: each node becomes its letter chip with the
// children stacked above it, each slot becomes a wire capped by a finish
// chip, and the root feeds a start chip at the bottom; arity (0,0).
CircuitPtr tree_to_circuit(const Tree& t);

// Boolean-style representation of a tree automaton: a letter entry is one
// exactly when the rule (letter; child states) -> state exists; the start
// chip and the slot caps weight final states.  Evaluating it on
// tree_to_circuit(t) for a fully labeled t yields one exactly when the
// automaton accepts t.
template <class S = BooleanSemiring>
Representation<S> tree_rep(const TreeAutomaton& A) {
  const int n = A.n_states();
  std::map<std::string, Hypermatrix<S>> mu;
  Hypermatrix<S> start(n, 1, 0);
  Hypermatrix<S> finish(n, 0, 1);
  for (int q = 1; q <= n; ++q) {
    if (A.is_final(q)) {
      start.at({q}, {}) = S::one();
      finish.at({}, {q}) = S::one();
    }
  }
  mu.emplace(kStartChip, std::move(start));
  mu.emplace(kFinishChip, std::move(finish));
  for (const auto& [a, k] : A.arities()) {
    Hypermatrix<S> h(n, k, 1);
    mu.try_emplace(a, std::move(h));
  }
  for (const auto& r : A.rules()) {
    auto it = mu.find(r.letter);
    it->second.at(r.children, {r.to}) = S::one();
  }
  return Representation<S>(n, tree_signature(A.arities()), std::move(mu));
}

// ---------------------------------------------------------------------------
// Branching automata
// ---------------------------------------------------------------------------

struct SeqEdge {
  int from = 0;
  Letter letter;
  int to = 0;
};

// One state splits into a multiset of parallel states (width >= 2).
struct ForkEdge {
  int from = 0;
  std::vector<int> to;
};

// A multiset of parallel states (width >= 2) merges into one.
struct JoinEdge {
  std::vector<int> from;
  int to = 0;
};

class BranchingAutomaton {
 public:
  BranchingAutomaton(int n_states, std::vector<Letter> alphabet,
                     std::vector<SeqEdge> seq, std::vector<ForkEdge> forks,
                     std::vector<JoinEdge> joins, std::vector<int> initials,
                     std::vector<int> finals);

  int n_states() const { return n_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  const std::vector<SeqEdge>& seq_edges() const { return seq_; }
  const std::vector<ForkEdge>& fork_edges() const { return forks_; }
  const std::vector<JoinEdge>& join_edges() const { return joins_; }
  const std::vector<int>& initials() const { return initials_; }
  const std::vector<int>& finals() const { return finals_; }
  std::set<int> fork_widths() const;
  std::set<int> join_widths() const;

 private:
  int n_;
  std::vector<Letter> alphabet_;
  std::vector<SeqEdge> seq_;
  std::vector<ForkEdge> forks_;
  std::vector<JoinEdge> joins_;
  std::vector<int> initials_;
  std::vector<int> finals_;
};

std::string fork_chip_name(int width);
std::string join_chip_name(int width);

// Start chip, finish chip, the (1,1) letter chips, one (width,1) fork chip
// per fork width in use, and one (1,width) join chip per join width.
Signature branching_signature(const BranchingAutomaton& A);

// Fork and join entries are symmetric: an edge with branch multiset
// {q_1..q_w} sets the entry at every arrangement of the branches.  Letters
// sit like word transitions (upper index = target), the start chip weights
// initial states, the finish chip final states.
template <class S = BooleanSemiring>
Representation<S> branching_rep(const BranchingAutomaton& A) {
  const int n = A.n_states();
  std::map<std::string, Hypermatrix<S>> mu;
  Hypermatrix<S> start(n, 1, 0);
  for (int q : A.initials()) start.at({q}, {}) = S::one();
  Hypermatrix<S> finish(n, 0, 1);
  for (int q : A.finals()) finish.at({}, {q}) = S::one();
  mu.emplace(kStartChip, std::move(start));
  mu.emplace(kFinishChip, std::move(finish));
  for (const Letter& a : A.alphabet()) mu.emplace(a, Hypermatrix<S>(n, 1, 1));
  for (const auto& e : A.seq_edges())
    mu.find(e.letter)->second.at({e.to}, {e.from}) = S::one();
  for (int w : A.fork_widths())
    mu.emplace(fork_chip_name(w), Hypermatrix<S>(n, w, 1));
  for (int w : A.join_widths())
    mu.emplace(join_chip_name(w), Hypermatrix<S>(n, 1, w));
  for (const auto& e : A.fork_edges()) {
    auto& h = mu.find(fork_chip_name(static_cast<int>(e.to.size())))->second;
    Index branches = e.to;
    std::sort(branches.begin(), branches.end());
    do h.at(branches, {e.from}) = S::one();
    while (std::next_permutation(branches.begin(), branches.end()));
  }
  for (const auto& e : A.join_edges()) {
    auto& h = mu.find(join_chip_name(static_cast<int>(e.from.size())))->second;
    Index branches = e.from;
    std::sort(branches.begin(), branches.end());
    do h.at({e.to}, branches) = S::one();
    while (std::next_permutation(branches.begin(), branches.end()));
  }
  return Representation<S>(n, branching_signature(A), std::move(mu));
}

// Language query: t must have arity (1,1) and use only letter/fork/join
// chips; it is closed off by the finish chip above and the start chip below,
// and accepted exactly when the boolean evaluation of that scalar is one.
bool branching_accepts(const BranchingAutomaton& A, const CircuitPtr& t);

// ---------------------------------------------------------------------------
// Hypermatrix circuit automata
// ---------------------------------------------------------------------------

// Basis selectors for boundary words.  For a digit word w over [N]:
//   in_matrix(w, N)  has shape (0,|w|) with a single one at lower index w;
//   out_matrix(w, N) has shape (|w|,0) with a single one at upper index w.
// Placing in_matrix(u, N) above a (m,n)-shaped value and out_matrix(v, N)
// below it contracts the value to its single entry at (u, v).
template <class S>
Hypermatrix<S> in_matrix(const Index& w, int N) {
  return basis_e<S>(N, 0, static_cast<int>(w.size()), {}, w);
}

template <class S>
Hypermatrix<S> out_matrix(const Index& w, int N) {
  return basis_e<S>(N, static_cast<int>(w.size()), 0, w, {});
}

// A circuit automaton: a representation over a pluggable signature plus two
// weighted word automata over the digit alphabet "1".."N", one scoring the
// word read along the upper (output) boundary, one the lower (input)
// boundary.  A circuit's weight sums, over all boundary-word pairs (u, v),
// the product of the two boundary scores with the evaluation entry at (u,v).
template <class S>
class ProAutomaton {
 public:
  ProAutomaton(Representation<S> mu, WordAutomaton<S> upper,
               WordAutomaton<S> lower)
      : mu_(std::move(mu)),
        upper_(std::move(upper)),
        lower_(std::move(lower)) {
    if (!mu_.signature().all_pluggable())
      throw value_error(
          "circuit automaton: every chip needs at least one leg on each side");
    if (digit_alphabet_size(upper_) != mu_.base_dim() ||
        digit_alphabet_size(lower_) != mu_.base_dim())
      throw value_error(
          "circuit automaton: boundary alphabets must be the digits 1..N");
  }

  int base_dim() const { return mu_.base_dim(); }
  const Representation<S>& rep() const { return mu_; }
  const WordAutomaton<S>& upper_language() const { return upper_; }
  const WordAutomaton<S>& lower_language() const { return lower_; }

 private:
  Representation<S> mu_;
  WordAutomaton<S> upper_;
  WordAutomaton<S> lower_;
};

namespace detail {
// All (upper offset, lower offset) pairs at which the boolean evaluation of
// `t` under `mu` is true, sorted; offsets follow the big-endian linear
// convention of the dense tables.  Works relation-by-relation, so wide
// wire-heavy circuits stay affordable where a dense table would not.
std::vector<std::pair<std::size_t, std::size_t>> boolean_support(
    const Representation<BooleanSemiring>& mu, const Circuit& t);
}  // namespace detail

// Boolean acceptance: some true entry (u, v) of the evaluation has u scored
// nonzero by the upper automaton and v by the lower one.
bool accepts(const ProAutomaton<BooleanSemiring>& aut, const CircuitPtr& t);

// Weighted acceptance: the full double sum, computed as (upper forward-weight
// vector) . evaluation . (lower forward-weight vector) without enumerating
// boundary words one by one.
template <class S>
typename S::value_type weighted_accept(const ProAutomaton<S>& aut,
                                       const CircuitPtr& t) {
  if (!t) throw value_error("weighted_accept: null circuit");
  const Hypermatrix<S> E = eval(aut.rep(), *t);
  const auto iv = forward_weights(aut.upper_language(), t->out_arity);
  const auto jv = forward_weights(aut.lower_language(), t->in_arity);
  auto acc = S::zero();
  for (std::size_t i = 0; i < E.out_size(); ++i) {
    if (S::eq(iv[i], S::zero())) continue;
    auto row = S::zero();
    for (std::size_t j = 0; j < E.in_size(); ++j)
      row = S::add(row, S::mul(E.entry(i, j), jv[j]));
    acc = S::add(acc, S::mul(iv[i], row));
  }
  return acc;
}

// Intersection: state pairs, pointwise-product representation, digit-paired
// boundary automata.  Over booleans the language is the intersection; over
// commutative weights the circuit weights multiply.
template <class S>
ProAutomaton<S> intersect(const ProAutomaton<S>& a, const ProAutomaton<S>& b) {
  if (!detail::same_signature(a.rep().signature(), b.rep().signature()))
    throw value_error("intersect: automata have different signatures");
  return ProAutomaton<S>(hadamard(a.rep(), b.rep()),
                         lang_odot(a.upper_language(), b.upper_language()),
                         lang_odot(a.lower_language(), b.lower_language()));
}

// Union (boolean only): block-embedded representation over N+N' states with
// the boundary automata summed over the concatenated digit alphabet.  Every
// chip keeps a leg on each side, so a connected circuit can never mix the two
// blocks, and the language is exactly the union.  Weighted sums are exposed
// through quasi_sum instead; a non-boolean call throws.
template <class S>
ProAutomaton<S> union_automaton(const ProAutomaton<S>& a,
                                const ProAutomaton<S>& b) {
  if constexpr (std::is_same_v<S, BooleanSemiring>) {
    if (!detail::same_signature(a.rep().signature(), b.rep().signature()))
      throw value_error("union: automata have different signatures");
    return ProAutomaton<S>(
        quasi_sum(a.rep(), b.rep()),
        shifted_union(a.upper_language(), b.upper_language()),
        shifted_union(a.lower_language(), b.lower_language()));
  } else {
    throw value_error(
        "union: defined over the boolean semiring; use quasi_sum for weighted "
        "sums");
  }
}

}  // namespace prokit
