// Planar cup/cap diagrams: crossingless matchings with an extracted-loop
// counter, their composition algebra, the two-dimensional cup/cap
// representation over rational functions of the loop value d, and the
// closed-trace experiment comparing matrix traces against loop counting.
//
// A diagram has n_bottom boundary points below and n_top above, numbered left
// to right: bottom points are 0..n_bottom-1, top points follow.  `matching`
// pairs every boundary point with its strand partner; the pairing must be
// planar (drawable without crossings inside the rectangle).  Closed strands
// produced while composing are not drawn: they are counted in `loops`, so
// diagram arithmetic stays integral and the scalar d^loops is applied only
// when evaluating through a representation.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prokit/circuit.hpp"
#include "prokit/errors.hpp"
#include "prokit/hypermat.hpp"
#include "prokit/polynomial.hpp"
#include "prokit/represent.hpp"
#include "prokit/semiring.hpp"

namespace prokit {

class TlDiagram {
 public:
  TlDiagram(int n_bottom, int n_top, std::vector<int> matching,
            long long loops = 0);

  // n parallel strands, bottom i to top i.
  static TlDiagram wires(int n);
  // The two generators: cup has both strand ends on top, cap on the bottom.
  static TlDiagram cup_diagram();  // 0 bottom points, 2 top points
  static TlDiagram cap_diagram();  // 2 bottom points, 0 top points

  int n_bottom() const { return n_bottom_; }
  int n_top() const { return n_top_; }
  long long loops() const { return loops_; }
  const std::vector<int>& matching() const { return matching_; }
  int partner(int point) const { return matching_.at(static_cast<std::size_t>(point)); }

  bool is_bottom(int point) const { return point < n_bottom_; }

  friend bool operator==(const TlDiagram& a, const TlDiagram& b) {
    return a.n_bottom_ == b.n_bottom_ && a.n_top_ == b.n_top_ &&
           a.matching_ == b.matching_ && a.loops_ == b.loops_;
  }
  friend bool operator!=(const TlDiagram& a, const TlDiagram& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  int n_bottom_ = 0;
  int n_top_ = 0;
  std::vector<int> matching_;
  long long loops_ = 0;
};

// Vertical composition, `a` drawn above `b`: requires a.n_bottom == b.n_top.
// Newly closed strands are added to the loop count.
TlDiagram tl_compose(const TlDiagram& a, const TlDiagram& b);

// Horizontal juxtaposition, `a` drawn to the left of `b`.
TlDiagram tl_tensor(const TlDiagram& a, const TlDiagram& b);

// The generator with a cap joining bottom points i, i+1 and a cup joining top
// points i, i+1 (1-based), wires elsewhere; requires 1 <= i < n.
TlDiagram u_generator(int n, int i);

// Collapse a circuit term built from cup, cap, and wires to its diagram.
TlDiagram reduce_term(const Circuit& t);

// ---- circuit-term builders -------------------------------------------------

Signature tl_signature();          // {cup: (2,0), cap: (0,2)}
CircuitPtr cup_chip();
CircuitPtr cap_chip();
CircuitPtr loop_term();            // cap over cup: the closed circle
CircuitPtr left_snake_term();      // (cap <-> |) over (| <-> cup)
CircuitPtr right_snake_term();     // (| <-> cap) over (cup <-> |)
CircuitPtr u_term(int n, int i);   // circuit term for u_generator(n, i)
// The stacked product u_term(n, word[0]) over ... over u_term(n, word.back());
// an empty word gives the n-strand identity.
CircuitPtr u_word_term(int n, const std::vector<int>& word);

// Close a (n,n) cup/cap term by joining its ith input to its ith output and
// count the resulting closed components: those containing at least one
// generator (equivalently a top-top or bottom-bottom arc, or a strand closed
// during reduction) versus pure wire cycles.
struct CycleCount {
  int ntriv = 0;  // components through at least one generator
  int triv = 0;   // pure wire cycles
};
CycleCount cycle_close(const Circuit& t);

// The dimension-2 representation over rational functions of d:
//   cap -> row [2-d, 0, d-2, 1] on lower indices 11,12,21,22
//   cup -> column [1/(2-d), 0, 1, 1] on upper indices 11,12,21,22
// It satisfies both snake identities exactly and sends the closed circle to d.
Representation<RationalFunctionSemiring> standard_rep();

// Verify that `mu` assigns cup (2,0) and cap (0,2) and satisfies both snake
// identities; returns the value of the closed circle.  Throws value_error when
// a defining relation fails.
template <class S>
typename S::value_type check_tl_rep(const Representation<S>& mu) {
  const Signature& sig = mu.signature();
  if (!sig.has("cup") || !sig.has("cap"))
    throw value_error("tl representation: signature must provide cup and cap");
  const ChipDecl& cup = sig.chip("cup");
  const ChipDecl& cap = sig.chip("cap");
  if (cup.out != 2 || cup.in != 0 || cap.out != 0 || cap.in != 2)
    throw value_error("tl representation: cup must be (2,0) and cap (0,2)");
  const Hypermatrix<S> id = identity<S>(mu.base_dim(), 1);
  if (!equal(eval(mu, *left_snake_term()), id) ||
      !equal(eval(mu, *right_snake_term()), id))
    throw value_error("tl representation: a snake identity fails");
  return eval(mu, *loop_term()).entry(0, 0);
}

template <class S>
struct ConjectureOutcome {
  typename S::value_type lhs;  // trace of the evaluated term
  typename S::value_type rhs;  // N^triv * d^ntriv
  bool equal = false;
  CycleCount cycles;
};

// Compare the matrix trace of eval(mu, t) with the loop-counting prediction
// N^triv * d^ntriv.  The representation is validated first; the term must be
// square.  A mismatch is reported, not an error: whether the two sides agree
// for every diagram is exactly the open question this probes.
template <class S>
ConjectureOutcome<S> conjecture_check(const CircuitPtr& t,
                                      const Representation<S>& mu) {
  const typename S::value_type d = check_tl_rep(mu);
  if (!t) throw value_error("conjecture_check: null term");
  if (t->out_arity != t->in_arity)
    throw shape_error("conjecture_check: term is not square");
  const CycleCount cycles = cycle_close(*t);
  ConjectureOutcome<S> out;
  out.cycles = cycles;
  out.lhs = trace(eval(mu, *t));
  auto rhs = S::one();
  const auto n_val = S::from_unsigned(static_cast<unsigned long long>(mu.base_dim()));
  for (int k = 0; k < cycles.triv; ++k) rhs = S::mul(rhs, n_val);
  for (int k = 0; k < cycles.ntriv; ++k) rhs = S::mul(rhs, d);
  out.rhs = std::move(rhs);
  out.equal = S::eq(out.lhs, out.rhs);
  return out;
}

template <class S>
struct ConjectureRow {
  int n = 0;
  std::vector<int> word;  // generator subscripts, top factor first
  long long loops = 0;    // closed strands extracted while reducing
  CycleCount cycles;
  typename S::value_type lhs;
  typename S::value_type rhs;
  bool equal = false;
};

namespace detail {

// Components of the i-th-input-to-i-th-output closure of a square matching.
CycleCount closure_components(int n, const std::vector<int>& matching);

}  // namespace detail

// Run the trace experiment over all products of at most max_gens generators
// for every strand count up to max_n, one row per product (the empty product
// included).  Traces are computed once per reduced diagram: each newly reached
// matching gets its matrix by one vertical composition, with the extracted
// loop factor divided back out — so S must support division by the circle
// value d (exact semirings with S::div; d must be nonzero when loops occur).
template <class S>
std::vector<ConjectureRow<S>> conjecture_sweep(const Representation<S>& mu,
                                               int max_gens, int max_n) {
  if (max_gens < 0 || max_n < 0)
    throw value_error("conjecture_sweep: negative bound");
  const typename S::value_type d = check_tl_rep(mu);
  const int N = mu.base_dim();
  const auto n_val = S::from_unsigned(static_cast<unsigned long long>(N));
  std::vector<ConjectureRow<S>> rows;

  for (int n = 1; n <= max_n; ++n) {
    // mu-images and traces of the reduced (loop-free) diagrams seen so far.
    std::map<std::vector<int>, Hypermatrix<S>> images;
    std::map<std::vector<int>, typename S::value_type> traces;
    std::vector<Hypermatrix<S>> gen_image;  // index i-1 holds mu(u_generator(n,i))
    for (int i = 1; i < n; ++i) gen_image.push_back(eval(mu, *u_term(n, i)));

    const TlDiagram start = TlDiagram::wires(n);
    images.emplace(start.matching(), identity<S>(N, n));
    traces.emplace(start.matching(), trace(images.at(start.matching())));

    std::vector<int> word;
    auto emit = [&](const TlDiagram& diag) {
      ConjectureRow<S> row;
      row.n = n;
      row.word = word;
      row.loops = diag.loops();
      row.cycles = detail::closure_components(n, diag.matching());
      row.cycles.ntriv += static_cast<int>(diag.loops());
      auto lhs = traces.at(diag.matching());
      for (long long k = 0; k < diag.loops(); ++k) lhs = S::mul(lhs, d);
      row.lhs = std::move(lhs);
      auto rhs = S::one();
      for (int k = 0; k < row.cycles.triv; ++k) rhs = S::mul(rhs, n_val);
      for (int k = 0; k < row.cycles.ntriv; ++k) rhs = S::mul(rhs, d);
      row.rhs = std::move(rhs);
      row.equal = S::eq(row.lhs, row.rhs);
      rows.push_back(std::move(row));
    };

    auto dfs = [&](auto&& self, const TlDiagram& diag) -> void {
      emit(diag);
      if (static_cast<int>(word.size()) == max_gens) return;
      for (int i = 1; i < n; ++i) {
        const TlDiagram next = tl_compose(diag, u_generator(n, i));
        if (!images.count(next.matching())) {
          Hypermatrix<S> img =
              vcomp(images.at(diag.matching()),
                    gen_image[static_cast<std::size_t>(i - 1)]);
          const long long extra = next.loops() - diag.loops();
          if (extra > 0) {
            if (S::eq(d, S::zero()))
              throw value_error(
                  "conjecture_sweep: circle value is zero, cannot normalize");
            for (long long k = 0; k < extra; ++k)
              for (std::size_t e = 0; e < img.size(); ++e)
                img[e] = S::div(img[e], d);
          }
          traces.emplace(next.matching(), trace(img));
          images.emplace(next.matching(), std::move(img));
        }
        word.push_back(i);
        self(self, next);
        word.pop_back();
      }
    };
    dfs(dfs, start);
  }
  return rows;
}

}  // namespace prokit
