#include "prokit/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "prokit/automata.hpp"
#include "prokit/circuit.hpp"
#include "prokit/errors.hpp"
#include "prokit/hypermat.hpp"
#include "prokit/paths.hpp"
#include "prokit/quantum_gates.hpp"
#include "prokit/random_gen.hpp"
#include "prokit/represent.hpp"
#include "prokit/semiring.hpp"
#include "prokit/temperley_lieb.hpp"

namespace prokit {
namespace {

using Nat = NaturalSemiring;
using RatS = RationalSemiring;

class Reporter {
 public:
  Reporter(std::string suite, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), out_(&out) {}

  void record(const std::string& invariant, bool passed,
              const std::string& witness = "") {
    out_->push_back({suite_, invariant, passed, passed ? "" : witness});
  }

  // Runs `body(k, fail)` for k in [0, trials); the body reports a failure by
  // calling fail(description), which stops the loop.
  template <class Body>
  void trial_loop(const std::string& invariant, int trials, Body body) {
    bool ok = true;
    std::string witness;
    for (int k = 0; k < trials && ok; ++k) {
      body(k, [&](const std::string& what) {
        ok = false;
        witness = "instance " + std::to_string(k) + ": " + what;
      });
    }
    record(invariant, ok, witness);
  }

 private:
  std::string suite_;
  std::vector<CheckResult>* out_;
};

// ---------------------------------------------------------------------------
// pro-axioms: the composition laws of hypermatrices under stacking and
// side-by-side placement.
// ---------------------------------------------------------------------------

void suite_pro_axioms(std::uint64_t seed, std::vector<CheckResult>& out) {
  Reporter rep("pro-axioms", out);
  Rng rng(seed);

  rep.trial_loop("stacking is associative", 200, [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const int m = rng.uniform(0, 2), p = rng.uniform(0, 2);
    const int q = rng.uniform(0, 2), r = rng.uniform(0, 2);
    const auto a = random_hypermatrix<Nat>(rng, N, m, p);
    const auto b = random_hypermatrix<Nat>(rng, N, p, q);
    const auto c = random_hypermatrix<Nat>(rng, N, q, r);
    if (!equal(vcomp(vcomp(a, b), c), vcomp(a, vcomp(b, c))))
      fail("shapes (" + std::to_string(m) + "," + std::to_string(p) + "," +
           std::to_string(q) + "," + std::to_string(r) + ") at N=" +
           std::to_string(N));
  });

  rep.trial_loop("side-by-side placement is associative", 200,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const auto a = random_hypermatrix<Nat>(rng, N, rng.uniform(0, 2),
                                           rng.uniform(0, 2));
    const auto b = random_hypermatrix<Nat>(rng, N, rng.uniform(0, 2),
                                           rng.uniform(0, 2));
    const auto c = random_hypermatrix<Nat>(rng, N, rng.uniform(0, 2),
                                           rng.uniform(0, 2));
    if (!equal(hcomp(hcomp(a, b), c), hcomp(a, hcomp(b, c))))
      fail("N=" + std::to_string(N));
  });

  rep.trial_loop("identity hypermatrices are neutral for stacking", 200,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const int m = rng.uniform(0, 2), n = rng.uniform(0, 2);
    const auto a = random_hypermatrix<Nat>(rng, N, m, n);
    if (!equal(vcomp(identity<Nat>(N, m), a), a) ||
        !equal(vcomp(a, identity<Nat>(N, n)), a))
      fail("shape (" + std::to_string(m) + "," + std::to_string(n) +
           ") at N=" + std::to_string(N));
  });

  rep.trial_loop("the scalar one is neutral for side-by-side placement", 200,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const auto a = random_hypermatrix<Nat>(rng, N, rng.uniform(0, 2),
                                           rng.uniform(0, 2));
    const auto one = Hypermatrix<Nat>::scalar(N, Nat::one());
    if (!equal(hcomp(one, a), a) || !equal(hcomp(a, one), a))
      fail("N=" + std::to_string(N));
  });

  rep.trial_loop("stacking and placement satisfy the interchange law", 200,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const int m1 = rng.uniform(0, 2), p1 = rng.uniform(0, 2),
              n1 = rng.uniform(0, 2);
    const int m2 = rng.uniform(0, 2), p2 = rng.uniform(0, 2),
              n2 = rng.uniform(0, 2);
    const auto a = random_hypermatrix<Nat>(rng, N, m1, p1);
    const auto b = random_hypermatrix<Nat>(rng, N, m2, p2);
    const auto c = random_hypermatrix<Nat>(rng, N, p1, n1);
    const auto d = random_hypermatrix<Nat>(rng, N, p2, n2);
    if (!equal(vcomp(hcomp(a, b), hcomp(c, d)),
               hcomp(vcomp(a, c), vcomp(b, d))))
      fail("N=" + std::to_string(N) + " shapes (" + std::to_string(m1) + "," +
           std::to_string(p1) + "," + std::to_string(n1) + ")x(" +
           std::to_string(m2) + "," + std::to_string(p2) + "," +
           std::to_string(n2) + ")");
  });
}

// ---------------------------------------------------------------------------
// modpro: the linear structure and its compatibility with both compositions.
// ---------------------------------------------------------------------------

void suite_modpro(std::uint64_t seed, std::vector<CheckResult>& out) {
  Reporter rep("modpro", out);
  Rng rng(seed);

  rep.trial_loop("entrywise sum is commutative, associative, with zero", 200,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const int m = rng.uniform(0, 2), n = rng.uniform(0, 2);
    const auto a = random_hypermatrix<Nat>(rng, N, m, n);
    const auto b = random_hypermatrix<Nat>(rng, N, m, n);
    const auto c = random_hypermatrix<Nat>(rng, N, m, n);
    const Hypermatrix<Nat> zero(N, m, n);
    if (!equal(add(a, b), add(b, a)) ||
        !equal(add(add(a, b), c), add(a, add(b, c))) ||
        !equal(add(a, zero), a))
      fail("shape (" + std::to_string(m) + "," + std::to_string(n) + ")");
  });

  rep.trial_loop("stacking distributes over sums on both sides", 200,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const int m = rng.uniform(0, 2), p = rng.uniform(0, 2),
              n = rng.uniform(0, 2);
    const auto a = random_hypermatrix<Nat>(rng, N, m, p);
    const auto b = random_hypermatrix<Nat>(rng, N, m, p);
    const auto c = random_hypermatrix<Nat>(rng, N, p, n);
    const auto d = random_hypermatrix<Nat>(rng, N, p, n);
    if (!equal(vcomp(add(a, b), c), add(vcomp(a, c), vcomp(b, c))) ||
        !equal(vcomp(a, add(c, d)), add(vcomp(a, c), vcomp(a, d))))
      fail("shapes (" + std::to_string(m) + "," + std::to_string(p) + "," +
           std::to_string(n) + ")");
  });

  rep.trial_loop("side-by-side placement distributes over sums", 200,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const int m = rng.uniform(0, 2), n = rng.uniform(0, 2);
    const auto a = random_hypermatrix<Nat>(rng, N, m, n);
    const auto b = random_hypermatrix<Nat>(rng, N, m, n);
    const auto c = random_hypermatrix<Nat>(rng, N, rng.uniform(0, 2),
                                           rng.uniform(0, 2));
    if (!equal(hcomp(add(a, b), c), add(hcomp(a, c), hcomp(b, c))) ||
        !equal(hcomp(c, add(a, b)), add(hcomp(c, a), hcomp(c, b))))
      fail("N=" + std::to_string(N));
  });

  rep.trial_loop("scalar factors slide through both compositions", 200,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    const int m = rng.uniform(0, 2), p = rng.uniform(0, 2),
              n = rng.uniform(0, 2);
    const auto a = random_hypermatrix<RatS>(rng, N, m, p);
    const auto b = random_hypermatrix<RatS>(rng, N, p, n);
    const auto s = RatS::value_type(3, 2);
    if (!equal(scale(s, vcomp(a, b)), vcomp(scale(s, a), b)) ||
        !equal(scale(s, vcomp(a, b)), vcomp(a, scale(s, b))) ||
        !equal(scale(s, hcomp(a, b)), hcomp(scale(s, a), b)) ||
        !equal(scale(s, hcomp(a, b)), hcomp(a, scale(s, b))))
      fail("shapes (" + std::to_string(m) + "," + std::to_string(p) + "," +
           std::to_string(n) + ")");
  });
}

// ---------------------------------------------------------------------------
// kronecker: the digit-pairing product is a morphism for both compositions.
// ---------------------------------------------------------------------------

void suite_kronecker(std::uint64_t seed, std::vector<CheckResult>& out) {
  Reporter rep("kronecker", out);
  Rng rng(seed);
  const int M = 2, N = 2;

  rep.trial_loop("pairing commutes with stacking", 100, [&](int, auto fail) {
    const int m = rng.uniform(0, 2), p = rng.uniform(0, 2),
              n = rng.uniform(0, 2);
    const auto a1 = random_hypermatrix<Nat>(rng, M, m, p);
    const auto a2 = random_hypermatrix<Nat>(rng, M, p, n);
    const auto b1 = random_hypermatrix<Nat>(rng, N, m, p);
    const auto b2 = random_hypermatrix<Nat>(rng, N, p, n);
    if (!equal(kronecker(vcomp(a1, a2), vcomp(b1, b2)),
               vcomp(kronecker(a1, b1), kronecker(a2, b2))))
      fail("shapes (" + std::to_string(m) + "," + std::to_string(p) + "," +
           std::to_string(n) + ")");
  });

  rep.trial_loop("pairing commutes with side-by-side placement", 100,
                 [&](int, auto fail) {
    const int m1 = rng.uniform(0, 2), n1 = rng.uniform(0, 2);
    const int m2 = rng.uniform(0, 2), n2 = rng.uniform(0, 2);
    const auto a1 = random_hypermatrix<Nat>(rng, M, m1, n1);
    const auto a2 = random_hypermatrix<Nat>(rng, M, m2, n2);
    const auto b1 = random_hypermatrix<Nat>(rng, N, m1, n1);
    const auto b2 = random_hypermatrix<Nat>(rng, N, m2, n2);
    if (!equal(kronecker(hcomp(a1, a2), hcomp(b1, b2)),
               hcomp(kronecker(a1, b1), kronecker(a2, b2))))
      fail("shapes (" + std::to_string(m1) + "," + std::to_string(n1) +
           ")x(" + std::to_string(m2) + "," + std::to_string(n2) + ")");
  });

  bool id_ok = true;
  for (int n = 0; n <= 2 && id_ok; ++n)
    id_ok = equal(kronecker(identity<Nat>(M, n), identity<Nat>(N, n)),
                  identity<Nat>(M * N, n));
  rep.record("pairing sends identities to identities", id_ok,
             "identity pairing mismatch");
}

// ---------------------------------------------------------------------------
// quasisum: the block sum commutes with stacking but not with side-by-side
// placement; the suite checks the law where it holds and demands the known
// counterexample where it does not.
// ---------------------------------------------------------------------------

void suite_quasisum(std::uint64_t seed, std::vector<CheckResult>& out) {
  Reporter rep("quasisum", out);
  Rng rng(seed);

  rep.trial_loop("block sum commutes with stacking", 100, [&](int, auto fail) {
    const int M = rng.uniform(1, 2), N = rng.uniform(1, 2);
    const int m = rng.uniform(0, 2), n = rng.uniform(0, 2);
    const int p = rng.uniform(1, 2);  // inner rank at least one
    const auto a1 = random_hypermatrix<Nat>(rng, M, m, p);
    const auto a2 = random_hypermatrix<Nat>(rng, M, p, n);
    const auto b1 = random_hypermatrix<Nat>(rng, N, m, p);
    const auto b2 = random_hypermatrix<Nat>(rng, N, p, n);
    if (!equal(quasi_direct_sum(vcomp(a1, a2), vcomp(b1, b2)),
               vcomp(quasi_direct_sum(a1, b1), quasi_direct_sum(a2, b2))))
      fail("bases " + std::to_string(M) + "+" + std::to_string(N) +
           " shapes (" + std::to_string(m) + "," + std::to_string(p) + "," +
           std::to_string(n) + ")");
  });

  {
    // Only the single-wire identity survives: with two or more wires the
    // mixed-block diagonal entries vanish in the sum, and for scalars the
    // blocks add.
    const bool id_ok =
        equal(quasi_direct_sum(identity<Nat>(2, 1), identity<Nat>(3, 1)),
              identity<Nat>(5, 1)) &&
        !equal(quasi_direct_sum(identity<Nat>(2, 2), identity<Nat>(3, 2)),
               identity<Nat>(5, 2));
    rep.record("block sum preserves exactly the single-wire identity", id_ok,
               "identity block sum mismatch");
  }

  {
    // Four single-entry matrices with value one over base one.  Placing then
    // summing keeps the blocks separate (mixed entries vanish), while summing
    // then placing multiplies across blocks, so the mixed entry comes out one.
    Hypermatrix<Nat> a(1, 1, 1);
    a[0] = Nat::one();
    const auto lhs = quasi_direct_sum(hcomp(a, a), hcomp(a, a));
    const auto rhs = hcomp(quasi_direct_sum(a, a), quasi_direct_sum(a, a));
    const bool differ = !equal(lhs, rhs);
    const bool mixed = Nat::eq(lhs.at({1, 2}, {1, 2}), Nat::zero()) &&
                       Nat::eq(rhs.at({1, 2}, {1, 2}), Nat::one());
    rep.record(
        "block sum fails for side-by-side placement on the known example",
        differ && mixed,
        "expected inequality did not materialize");
  }
}

// ---------------------------------------------------------------------------
// paths-oracle: evaluation agrees with the sum of labeling weights.
// ---------------------------------------------------------------------------

void suite_paths_oracle(std::uint64_t seed, std::vector<CheckResult>& out) {
  Reporter rep("paths-oracle", out);
  Rng rng(seed);
  const Signature sig({ChipDecl{"f", 1, 1}, ChipDecl{"g", 2, 1},
                       ChipDecl{"h", 1, 2}});

  rep.trial_loop("evaluation equals the sum of labeling weights", 10,
                 [&](int, auto fail) {
    const int N = rng.uniform(2, 3);
    std::map<std::string, Hypermatrix<Nat>> assign;
    for (const auto& c : sig.chips())
      assign.emplace(c.name, random_hypermatrix<Nat>(rng, N, c.out, c.in));
    const Representation<Nat> mu(N, sig, std::move(assign));
    const auto t = random_circuit_term(rng, sig, rng.uniform(1, 4),
                                       rng.uniform(1, 3));
    const auto h = eval(mu, *t);
    for (std::size_t oi = 0; oi < h.out_size(); ++oi)
      for (std::size_t ii = 0; ii < h.in_size(); ++ii) {
        Index I(static_cast<std::size_t>(h.out_rank()));
        Index J(static_cast<std::size_t>(h.in_rank()));
        std::size_t rem = oi;
        for (int k = h.out_rank() - 1; k >= 0; --k) {
          I[static_cast<std::size_t>(k)] = static_cast<int>(rem % static_cast<std::size_t>(N)) + 1;
          rem /= static_cast<std::size_t>(N);
        }
        rem = ii;
        for (int k = h.in_rank() - 1; k >= 0; --k) {
          J[static_cast<std::size_t>(k)] = static_cast<int>(rem % static_cast<std::size_t>(N)) + 1;
          rem /= static_cast<std::size_t>(N);
        }
        if (!Nat::eq(h.at(I, J), path_sum_oracle(t, mu, I, J))) {
          fail("entry mismatch on a random term at N=" + std::to_string(N));
          return;
        }
      }
  });

  {
    // A term with no chips has exactly one labeling per diagonal boundary.
    const auto t = wires(2);
    std::map<std::string, Hypermatrix<Nat>> assign;
    for (const auto& c : sig.chips())
      assign.emplace(c.name, random_hypermatrix<Nat>(rng, 2, c.out, c.in));
    const Representation<Nat> mu(2, sig, std::move(assign));
    rep.record("chip-free terms evaluate to identities",
               equal(eval(mu, *t), identity<Nat>(2, 2)),
               "wire pair did not evaluate to the identity");
  }
}

// ---------------------------------------------------------------------------
// automata: word behavior, tree acceptance, and the digit-pairing product.
// ---------------------------------------------------------------------------

// Direct vector-times-matrix reference for word coefficients.
Nat::value_type word_coeff_reference(const WordAutomaton<Nat>& A,
                                     const Word& w) {
  const int n = A.n_states();
  std::vector<Nat::value_type> v(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q)
    v[static_cast<std::size_t>(q - 1)] = A.initial_weight(q);
  for (const auto& a : w) {
    std::vector<Nat::value_type> next(static_cast<std::size_t>(n),
                                      Nat::zero());
    for (int from = 1; from <= n; ++from)
      for (int to = 1; to <= n; ++to)
        next[static_cast<std::size_t>(to - 1)] =
            Nat::add(next[static_cast<std::size_t>(to - 1)],
                     Nat::mul(v[static_cast<std::size_t>(from - 1)],
                              A.weight(a, from, to)));
    v = std::move(next);
  }
  auto acc = Nat::zero();
  for (int q = 1; q <= n; ++q)
    acc = Nat::add(acc, Nat::mul(v[static_cast<std::size_t>(q - 1)],
                                 A.final_weight(q)));
  return acc;
}

WordAutomaton<Nat> random_word_automaton(Rng& rng, int n_states,
                                         const std::vector<Letter>& letters) {
  std::vector<Nat::value_type> init, fin;
  for (int q = 0; q < n_states; ++q) {
    init.push_back(Nat::value_type(rng.uniform(0, 2)));
    fin.push_back(Nat::value_type(rng.uniform(0, 2)));
  }
  std::map<Letter, std::vector<std::vector<Nat::value_type>>> rows;
  for (const auto& a : letters) {
    std::vector<std::vector<Nat::value_type>> r;
    for (int from = 0; from < n_states; ++from) {
      std::vector<Nat::value_type> row;
      for (int to = 0; to < n_states; ++to)
        row.push_back(Nat::value_type(rng.uniform(0, 2)));
      r.push_back(std::move(row));
    }
    rows.emplace(a, std::move(r));
  }
  return WordAutomaton<Nat>(n_states, std::move(init), std::move(rows),
                            std::move(fin));
}

WordAutomaton<BooleanSemiring> random_digit_automaton(Rng& rng, int n_states,
                                                      int M) {
  std::vector<BooleanSemiring::value_type> init, fin;
  for (int q = 0; q < n_states; ++q) {
    init.push_back(rng.coin() ? 1 : 0);
    fin.push_back(rng.coin() ? 1 : 0);
  }
  std::map<Letter, std::vector<std::vector<BooleanSemiring::value_type>>> rows;
  for (int d = 1; d <= M; ++d) {
    std::vector<std::vector<BooleanSemiring::value_type>> r;
    for (int from = 0; from < n_states; ++from) {
      std::vector<BooleanSemiring::value_type> row;
      for (int to = 0; to < n_states; ++to)
        row.push_back(rng.coin() ? 1 : 0);
      r.push_back(std::move(row));
    }
    rows.emplace(std::to_string(d), std::move(r));
  }
  return WordAutomaton<BooleanSemiring>(n_states, std::move(init),
                                        std::move(rows), std::move(fin));
}

void suite_automata(std::uint64_t seed, std::vector<CheckResult>& out) {
  Reporter rep("automata", out);
  Rng rng(seed);
  const std::vector<Letter> ab{"a", "b"};

  rep.trial_loop("word coefficients match direct matrix products", 5,
                 [&](int, auto fail) {
    const auto A = random_word_automaton(rng, 3, ab);
    std::vector<Word> words{{}};
    for (std::size_t start = 0, len = 1; len <= 4; ++len) {
      const std::size_t stop = words.size();
      for (std::size_t i = start; i < stop; ++i)
        for (const auto& a : ab) {
          Word w = words[i];
          w.push_back(a);
          words.push_back(std::move(w));
        }
      start = stop;
    }
    for (const auto& w : words)
      if (!Nat::eq(behavior_coeff(A, w), word_coeff_reference(A, w))) {
        std::string text;
        for (const auto& a : w) text += a;
        fail("word '" + text + "'");
        return;
      }
  });

  rep.trial_loop("sum and product constructions act on coefficients", 10,
                 [&](int, auto fail) {
    const auto A = random_word_automaton(rng, 2, ab);
    const auto B = random_word_automaton(rng, 3, ab);
    const auto S = word_sum(A, B);
    const auto H = word_hadamard(A, B);
    Word w;
    const int len = rng.uniform(0, 4);
    for (int i = 0; i < len; ++i) w.push_back(ab[static_cast<std::size_t>(rng.uniform(0, 1))]);
    const auto ca = behavior_coeff(A, w);
    const auto cb = behavior_coeff(B, w);
    if (!Nat::eq(behavior_coeff(S, w), Nat::add(ca, cb)))
      fail("sum coefficient mismatch at length " + std::to_string(len));
    else if (!Nat::eq(behavior_coeff(H, w), Nat::mul(ca, cb)))
      fail("product coefficient mismatch at length " + std::to_string(len));
  });

  {
    // Fixed ranked alphabet {a/2, b/0, c/0}; targets are states 1..3.
    const TreeAutomaton A(
        3, {{"a", 2}, {"b", 0}, {"c", 0}},
        {TreeRule{"b", {}, 1}, TreeRule{"c", {}, 2}, TreeRule{"a", {1, 2}, 3},
         TreeRule{"a", {3, 3}, 3}, TreeRule{"a", {2, 1}, 1}},
        {3});
    std::vector<Tree> trees{Tree::leaf("b"), Tree::leaf("c")};
    const std::size_t n_leaves = trees.size();
    for (std::size_t i = 0; i < n_leaves; ++i)
      for (std::size_t j = 0; j < n_leaves; ++j)
        trees.push_back(Tree::node("a", {trees[i], trees[j]}));
    const std::size_t n_small = trees.size();
    for (std::size_t i = n_leaves; i < n_small; ++i)
      for (std::size_t j = 0; j < n_leaves; ++j) {
        trees.push_back(Tree::node("a", {trees[i], trees[j]}));
        trees.push_back(Tree::node("a", {trees[j], trees[i]}));
      }
    const auto mu = tree_rep(A);
    bool ok = true;
    std::string witness;
    for (const auto& t : trees) {
      const bool direct = tree_accepts(A, t);
      const auto h = eval(mu, *tree_to_circuit(t));
      const bool via_rep = !BooleanSemiring::eq(h.entry(0, 0),
                                                BooleanSemiring::zero());
      if (direct != via_rep) {
        ok = false;
        witness = "tree acceptance disagrees with evaluation";
        break;
      }
    }
    rep.record("tree acceptance matches circuit evaluation", ok, witness);
  }

  rep.trial_loop("digit pairing multiplies coefficients", 3,
                 [&](int, auto fail) {
    const auto A = random_digit_automaton(rng, 2, 2);
    const auto B = random_digit_automaton(rng, 2, 3);
    const auto C = lang_odot(A, B);
    std::vector<Index> words{{}};
    for (std::size_t start = 0, len = 1; len <= 3; ++len) {
      const std::size_t stop = words.size();
      for (std::size_t i = start; i < stop; ++i)
        for (int d = 1; d <= 6; ++d) {
          Index w = words[i];
          w.push_back(d);
          words.push_back(std::move(w));
        }
      start = stop;
    }
    for (const auto& w : words) {
      Index u, v;
      Word wc, uc, vc;
      for (int d : w) {
        const int alpha = (d - 1) % 2 + 1;
        const int beta = (d - 1) / 2 + 1;
        u.push_back(alpha);
        v.push_back(beta);
        wc.push_back(std::to_string(d));
        uc.push_back(std::to_string(alpha));
        vc.push_back(std::to_string(beta));
      }
      if (word_odot(u, v, 2) != w) {
        fail("digit pairing round trip broke");
        return;
      }
      const bool paired = behavior_coeff(C, wc) != 0;
      const bool both =
          behavior_coeff(A, uc) != 0 && behavior_coeff(B, vc) != 0;
      if (paired != both) {
        fail("membership mismatch on a paired word of length " +
             std::to_string(w.size()));
        return;
      }
    }
  });
}

// ---------------------------------------------------------------------------
// tl: planar matchings, their relations, and the loop-counting experiment.
// ---------------------------------------------------------------------------

void suite_tl(std::uint64_t seed, std::vector<CheckResult>& out) {
  Reporter rep("tl", out);
  (void)seed;

  {
    bool ok = true;
    std::string witness;
    for (int n = 2; n <= 6 && ok; ++n)
      for (int i = 1; i <= n - 1 && ok; ++i) {
        const auto u = u_generator(n, i);
        const auto sq = tl_compose(u, u);
        if (sq.matching() != u.matching() || sq.loops() != u.loops() + 1) {
          ok = false;
          witness = "square law failed at n=" + std::to_string(n) +
                    " i=" + std::to_string(i);
        }
        if (ok && i + 1 <= n - 1) {
          const auto v = u_generator(n, i + 1);
          if (tl_compose(tl_compose(u, v), u) != u) {
            ok = false;
            witness = "braid law failed at n=" + std::to_string(n) +
                      " i=" + std::to_string(i);
          }
        }
        for (int j = i + 2; j <= n - 1 && ok; ++j) {
          const auto v = u_generator(n, j);
          if (tl_compose(u, v) != tl_compose(v, u)) {
            ok = false;
            witness = "distant generators failed to commute at n=" +
                      std::to_string(n);
          }
        }
      }
    rep.record("generator relations hold for up to six strands", ok, witness);
  }

  {
    const auto mu = standard_rep();
    const auto left = eval(mu, *left_snake_term());
    const auto right = eval(mu, *right_snake_term());
    const auto id1 = identity<RationalFunctionSemiring>(2, 1);
    rep.record("snake terms evaluate to the single wire",
               equal(left, id1) && equal(right, id1),
               "a snake did not straighten");

    const auto d = check_tl_rep(mu);
    const auto loop = eval(mu, *loop_term());
    rep.record("the closed circle evaluates to the loop scalar",
               RationalFunctionSemiring::eq(loop.entry(0, 0), d),
               "circle value is not the loop scalar");
  }

  {
    bool ok = true;
    std::string witness;
    const auto check = [&](const CircuitPtr& t, int ntriv, int triv,
                           const char* what) {
      if (!ok) return;
      const auto c = cycle_close(*t);
      if (c.ntriv != ntriv || c.triv != triv) {
        ok = false;
        witness = std::string("closure count wrong for ") + what;
      }
    };
    check(wires(3), 0, 3, "three plain strands");
    check(u_term(4, 2), 1, 2, "one generator on four strands");
    check(u_word_term(3, {1, 2}), 1, 0, "a two-generator word");
    rep.record("closing a term counts its cycles", ok, witness);
  }

  {
    const auto mu = standard_rep();
    const auto res = conjecture_check(u_word_term(3, {1, 2}), mu);
    rep.record(
        "the known counterexample to the trace prediction still disagrees",
        !res.equal, "expected disagreement vanished");

    const auto rows = conjecture_sweep(mu, 3, 3);
    std::size_t agreed = 0;
    for (const auto& r : rows)
      if (r.equal) ++agreed;
    rep.record("the three-strand sweep reproduces its frozen tally",
               rows.size() == 20 && agreed == 14,
               "sweep tally changed: " + std::to_string(agreed) + "/" +
                   std::to_string(rows.size()));
  }
}

// ---------------------------------------------------------------------------
// quantum: gate algebra over complex amplitudes.
// ---------------------------------------------------------------------------

void suite_quantum(std::uint64_t seed, std::vector<CheckResult>& out) {
  Reporter rep("quantum", out);
  (void)seed;
  using C = ComplexSemiring;

  const auto h = hadamard_gate();
  const auto v = cv_gate();
  const auto cnot = cnot_matrix();

  {
    const double r = std::max({unitarity_residual(h), unitarity_residual(v),
                               unitarity_residual(cnot)});
    rep.record("all three gates are unitary within tolerance",
               r <= C::tolerance,
               "largest residual " + std::to_string(r));
  }

  {
    bool ok = true;
    for (int a = 0; a <= 1 && ok; ++a)
      for (int b = 0; b <= 1 && ok; ++b)
        for (int c = 0; c <= 1 && ok; ++c)
          for (int d = 0; d <= 1 && ok; ++d) {
            const std::complex<double> want =
                (b == d && c == (a + b) % 2) ? 1.0 : 0.0;
            ok = std::abs(gate_entry(cnot, {c, d}, {a, b}) - want) <=
                 C::tolerance;
          }
    rep.record("the two-layer network realizes the controlled flip", ok,
               "matrix entry off the delta pattern");
  }

  {
    const auto hh = vcomp(h, h);
    const auto vv = vcomp(v, v);
    bool cz_ok = true;
    for (int a = 0; a <= 1 && cz_ok; ++a)
      for (int b = 0; b <= 1 && cz_ok; ++b)
        for (int c = 0; c <= 1 && cz_ok; ++c)
          for (int d = 0; d <= 1 && cz_ok; ++d) {
            const std::complex<double> want =
                (a == c && b == d) ? ((a == 1 && b == 1)
                                          ? std::complex<double>(-1.0)
                                          : std::complex<double>(1.0))
                                   : std::complex<double>(0.0);
            cz_ok = std::abs(gate_entry(vv, {c, d}, {a, b}) - want) <=
                    C::tolerance;
          }
    rep.record("the mixing gate squares to identity, the phase gate to a sign "
               "flip",
               equal(hh, identity<C>(2, 1)) && cz_ok,
               "gate square mismatch");
  }

  {
    const auto plus = QubitState(
        2, scale(std::complex<double>(1.0 / std::sqrt(2.0)),
                 add(basis_state({0, 0}).amplitudes(),
                     basis_state({0, 1}).amplitudes())));
    const auto bell = apply_state(plus, cnot);
    const auto want = scale(std::complex<double>(1.0 / std::sqrt(2.0)),
                            add(basis_state({0, 0}).amplitudes(),
                                basis_state({1, 1}).amplitudes()));
    rep.record("a product state becomes entangled",
               is_product_state(plus) && !is_product_state(bell) &&
                   equal(bell.amplitudes(), want),
               "entangling map produced the wrong state");
  }
}

using SuiteFn = void (*)(std::uint64_t, std::vector<CheckResult>&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"pro-axioms", suite_pro_axioms}, {"modpro", suite_modpro},
      {"kronecker", suite_kronecker},   {"quasisum", suite_quasisum},
      {"paths-oracle", suite_paths_oracle},
      {"automata", suite_automata},     {"tl", suite_tl},
      {"quantum", suite_quantum},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_check_suite(const std::string& suite,
                                         std::uint64_t seed) {
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const auto& [name, fn] : suite_table()) fn(seed, out);
    return out;
  }
  for (const auto& [name, fn] : suite_table())
    if (name == suite) {
      fn(seed, out);
      return out;
    }
  std::string known;
  for (const auto& name : check_suite_names()) {
    if (!known.empty()) known += ", ";
    known += name;
  }
  throw value_error("unknown check suite '" + suite + "' (known: " + known +
                    ")");
}

}  // namespace prokit
