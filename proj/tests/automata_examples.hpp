// Example automata and circuit builders shared by the automaton tests and
// the acceptance gate:
//
//   * a six-state branching automaton over {a, b} whose accepted arity-(1,1)
//     circuits are exactly the nested side-by-side a/b pairs;
//   * a three-state circuit automaton over a half-brick chip b (1,1) and a
//     full-brick chip B (2,2) accepting staggered brick walls, plus variants
//     with other boundary languages used by the closure tests;
//   * row/wall circuit builders and the structure-perturbed near-walls.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "prokit/automata.hpp"
#include "prokit/circuit.hpp"
#include "prokit/hypermat.hpp"
#include "prokit/represent.hpp"
#include "prokit/semiring.hpp"

namespace examples {

using namespace prokit;
using BoolAut = WordAutomaton<BooleanSemiring>;
using BoolPro = ProAutomaton<BooleanSemiring>;
using Bit = BooleanSemiring::value_type;
using BitRows = std::map<Letter, std::vector<std::vector<Bit>>>;

// ---------------------------------------------------------------------------
// Branching example
// ---------------------------------------------------------------------------

// States 1..6 over {a, b}: 2 -a-> 4 and 3 -b-> 5; state 1 forks into {1,1} or
// {2,3}; {4,5} and {6,6} join into 6; start {1}, accept {1,6}.
inline BranchingAutomaton pair_branching_automaton() {
  return BranchingAutomaton(
      6, {"a", "b"}, {{2, "a", 4}, {3, "b", 5}},
      {{1, {1, 1}}, {1, {2, 3}}}, {{{6, 6}, 6}, {{4, 5}, 6}}, {1}, {1, 6});
}

inline CircuitPtr letter_chip(const std::string& name) {
  return chip(ChipDecl{name, 1, 1});
}

inline CircuitPtr fork2() { return chip(ChipDecl{fork_chip_name(2), 2, 1}); }
inline CircuitPtr join2() { return chip(ChipDecl{join_chip_name(2), 1, 2}); }

// Two (1,1) circuits run side by side between a fork below and a join above.
inline CircuitPtr side_by_side(const CircuitPtr& left, const CircuitPtr& right) {
  return vcomp(join2(), vcomp(hcomp(left, right), fork2()));
}

// Bottom-up stack of letters: the pure-word degenerate case.
inline CircuitPtr letter_stack(const Word& w) {
  CircuitPtr c = wire();
  for (const Letter& a : w) c = vcomp(letter_chip(a), c);
  return c;
}

// No-fork automaton accepting exactly the (ab)* stacks: 1 -a-> 2 -b-> 1.
inline BranchingAutomaton alternating_letters_automaton() {
  return BranchingAutomaton(2, {"a", "b"}, {{1, "a", 2}, {2, "b", 1}}, {}, {},
                            {1}, {1});
}

// The same two-state machine as a weighted word automaton.
inline BoolAut alternating_letters_word_automaton() {
  BitRows rows;
  rows["a"] = {{0, 1}, {0, 0}};
  rows["b"] = {{0, 0}, {1, 0}};
  return BoolAut(2, {1, 0}, rows, {1, 0});
}

// ---------------------------------------------------------------------------
// Brick-wall circuit automaton
// ---------------------------------------------------------------------------

inline Signature wall_signature() {
  return Signature({{"b", 1, 1}, {"B", 2, 2}});
}

inline CircuitPtr half_brick() { return chip(ChipDecl{"b", 1, 1}); }
inline CircuitPtr full_brick() { return chip(ChipDecl{"B", 2, 2}); }

// Three wall states: 1 marks a brick boundary at the row edge, 2/3 mark the
// left/right half of a brick in progress.  The half-brick chip either starts
// a row edge (1 below, 2 or 3 above) or closes one (2 or 3 below, 1 above);
// the full brick always reads a staggered pair below and emits (2,3) above.
inline Representation<BooleanSemiring> wall_representation() {
  Hypermatrix<BooleanSemiring> b(3, 1, 1);
  b.at({2}, {1}) = 1;
  b.at({3}, {1}) = 1;
  b.at({1}, {2}) = 1;
  b.at({1}, {3}) = 1;
  Hypermatrix<BooleanSemiring> B(3, 2, 2);
  B.at({2, 3}, {1, 2}) = 1;
  B.at({2, 3}, {3, 1}) = 1;
  B.at({2, 3}, {3, 2}) = 1;
  std::map<std::string, Hypermatrix<BooleanSemiring>> mu;
  mu.emplace("b", std::move(b));
  mu.emplace("B", std::move(B));
  return Representation<BooleanSemiring>(3, wall_signature(), std::move(mu));
}

// Boundary words of walls: either edge-anchored, 1 {2,3}* 1, or fully
// interior, {2,3}+.  Four states: start, after the leading 1, inside a
// {2,3}+ run (accepting), after the closing 1 (accepting).
inline BoolAut wall_boundary_language() {
  BitRows rows;
  rows["1"] = {{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  rows["2"] = {{0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}};
  rows["3"] = rows["2"];
  return BoolAut(4, {1, 0, 0, 0}, rows, {0, 0, 1, 1});
}

inline BoolPro wall_automaton() {
  return BoolPro(wall_representation(), wall_boundary_language(),
                 wall_boundary_language());
}

// All digit words over 1..base.
inline BoolAut all_words_language(int base) {
  BitRows rows;
  for (int d = 1; d <= base; ++d) rows[std::to_string(d)] = {{1}};
  return BoolAut(1, {1}, rows, {1});
}

// No digit word at all.
inline BoolAut no_words_language(int base) {
  BitRows rows;
  for (int d = 1; d <= base; ++d) rows[std::to_string(d)] = {{1}};
  return BoolAut(1, {1}, rows, {0});
}

// {2,3}+ over the digits 1..3: interior boundary words only.
inline BoolAut interior_boundary_language() {
  BitRows rows;
  rows["1"] = {{0, 0}, {0, 0}};
  rows["2"] = {{0, 1}, {0, 1}};
  rows["3"] = rows["2"];
  return BoolAut(2, {1, 0}, rows, {0, 1});
}

// Same bricks, unconstrained boundary words: a strictly larger language.
inline BoolPro open_boundary_automaton() {
  return BoolPro(wall_representation(), all_words_language(3),
                 all_words_language(3));
}

// Same bricks, interior-only boundary words.
inline BoolPro interior_boundary_automaton() {
  return BoolPro(wall_representation(), interior_boundary_language(),
                 interior_boundary_language());
}

// One state, every entry one: accepts every circuit over the wall signature.
inline BoolPro all_accepting_automaton() {
  Hypermatrix<BooleanSemiring> b(1, 1, 1);
  b.at({1}, {1}) = 1;
  Hypermatrix<BooleanSemiring> B(1, 2, 2);
  B.at({1, 1}, {1, 1}) = 1;
  std::map<std::string, Hypermatrix<BooleanSemiring>> mu;
  mu.emplace("b", std::move(b));
  mu.emplace("B", std::move(B));
  return BoolPro(
      Representation<BooleanSemiring>(1, wall_signature(), std::move(mu)),
      all_words_language(1), all_words_language(1));
}

// Wall bricks with an empty upper boundary language: accepts nothing.
inline BoolPro empty_language_automaton() {
  return BoolPro(wall_representation(), no_words_language(3),
                 no_words_language(3));
}

// ---------------------------------------------------------------------------
// Rows, walls, and near-walls
// ---------------------------------------------------------------------------

// One row of bricks of the given even width.  Parity 0: half bricks at both
// edges with full bricks between; parity 1: full bricks across.
inline CircuitPtr brick_row(int width, int parity) {
  CircuitPtr row = empty_circuit();
  if (parity == 0) {
    row = hcomp(row, half_brick());
    for (int i = 0; i < (width - 2) / 2; ++i) row = hcomp(row, full_brick());
    row = hcomp(row, half_brick());
  } else {
    for (int i = 0; i < width / 2; ++i) row = hcomp(row, full_brick());
  }
  return row;
}

// Rows stacked bottom-up with the given parities (first entry = bottom row).
inline CircuitPtr row_stack(int width, const std::vector<int>& parities) {
  CircuitPtr c = brick_row(width, parities.front());
  for (std::size_t k = 1; k < parities.size(); ++k)
    c = vcomp(brick_row(width, parities[k]), c);
  return c;
}

// Alternating wall: `rows` rows of the given width, bottom row of the given
// parity.  brick_wall(8, 4, 0) is the displayed four-row wall.
inline CircuitPtr brick_wall(int width, int rows, int bottom_parity = 0) {
  std::vector<int> ps;
  for (int r = 0; r < rows; ++r) ps.push_back((bottom_parity + r) % 2);
  return row_stack(width, ps);
}

// Parity-1 row with full brick #k (1-based) replaced by two half bricks.
inline CircuitPtr split_brick_row(int width, int k) {
  CircuitPtr row = empty_circuit();
  for (int i = 1; i <= width / 2; ++i)
    row = (i == k) ? hcomp(hcomp(row, half_brick()), half_brick())
                   : hcomp(row, full_brick());
  return row;
}

// Parity-1 row with full brick #k (1-based) knocked out to two plain wires.
inline CircuitPtr holed_row_parity1(int width, int k) {
  CircuitPtr row = empty_circuit();
  for (int i = 1; i <= width / 2; ++i)
    row = (i == k) ? hcomp(row, wires(2)) : hcomp(row, full_brick());
  return row;
}

// Parity-0 row with interior full brick #k (1-based) knocked out.
inline CircuitPtr holed_row_parity0(int width, int k) {
  CircuitPtr row = hcomp(empty_circuit(), half_brick());
  for (int i = 1; i <= (width - 2) / 2; ++i)
    row = (i == k) ? hcomp(row, wires(2)) : hcomp(row, full_brick());
  return hcomp(row, half_brick());
}

// Structure-perturbed near-walls, all rejected by the wall automaton:
//   * stacks with a repeated row parity (the staggering constraint breaks at
//     the repeated seam);
//   * the four-row wall with one top-row full brick split into two half
//     bricks (a half-brick boundary state surfaces in the middle of the
//     upper boundary word);
//   * the four-row wall with one covered brick knocked out to wires (the
//     staggered pair below passes through and misfeeds the brick above).
inline std::vector<CircuitPtr> near_walls() {
  std::vector<CircuitPtr> out;
  const std::vector<std::vector<int>> bad_stacks = {
      {0, 0},       {1, 1},       {0, 0, 1},    {0, 1, 1},
      {1, 0, 0},    {0, 0, 0},    {0, 1, 1, 0}, {1, 1, 0, 1}};
  for (const auto& ps : bad_stacks) out.push_back(row_stack(8, ps));
  for (int k = 1; k <= 4; ++k) {
    CircuitPtr c = brick_row(8, 0);
    c = vcomp(brick_row(8, 1), c);
    c = vcomp(brick_row(8, 0), c);
    c = vcomp(split_brick_row(8, k), c);
    out.push_back(c);
  }
  for (int k = 1; k <= 4; ++k) {
    CircuitPtr c = brick_row(8, 0);
    c = vcomp(holed_row_parity1(8, k), c);
    c = vcomp(brick_row(8, 0), c);
    c = vcomp(brick_row(8, 1), c);
    out.push_back(c);
  }
  for (int k = 1; k <= 3; ++k) {
    CircuitPtr c = brick_row(8, 0);
    c = vcomp(brick_row(8, 1), c);
    c = vcomp(holed_row_parity0(8, k), c);
    c = vcomp(brick_row(8, 1), c);
    out.push_back(c);
  }
  return out;
}

// Every circuit class over the wall chips with at most max_chips chips and
// width at most max_width.  Both chips preserve width, so only square
// arities occur.
inline std::vector<CircuitPtr> wall_circuit_classes(int max_chips,
                                                    int max_width) {
  std::vector<CircuitPtr> all;
  for (int m = 0; m <= max_width; ++m) {
    auto v = enumerate_circuits(wall_signature(), max_chips, m, m);
    all.insert(all.end(), v.begin(), v.end());
  }
  return all;
}

}  // namespace examples
