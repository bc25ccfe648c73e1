// Wire-labeled circuits: colorings of every wire of a circuit's diagram by a
// color in 1..N, together with the brute-force entry oracle that sums the
// product of chip entries over all labelings with a prescribed boundary.
// This is the reference semantics that structural evaluation must reproduce
// entry by entry.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "prokit/circuit.hpp"
#include "prokit/represent.hpp"

namespace prokit {

// The wires of a circuit's diagram in a canonical order: one wire per upper
// end, interface output slots first, then the input ports of each chip in
// canonical traversal order.  Every wire also has a unique lower end, making
// both chip output colors and interface input colors recoverable.
struct CircuitWires {
  CircuitPtr base;
  PortGraph graph;
  std::vector<PortEnd> upper;               // wire -> its upper end
  std::vector<PortEnd> source;              // wire -> its lower end
  std::vector<int> in_slot_wire;            // interface input slot -> wire
  std::vector<std::vector<int>> node_in_wire;   // per node (graph order)
  std::vector<std::vector<int>> node_out_wire;  // per node (graph order)
  int wire_count() const { return static_cast<int>(upper.size()); }
};

// Builds the wire table.  Requires every chip to have at least one input and
// one output; boundary-only generators are out of scope here and handled by
// direct hypermatrix contraction elsewhere.
std::shared_ptr<const CircuitWires> circuit_wires(const CircuitPtr& t);

struct LabeledCircuit {
  std::shared_ptr<const CircuitWires> wires;
  std::vector<int> colors;  // per wire in canonical order, each in 1..N

  Index out_colors() const;  // colors at the interface output slots
  Index in_colors() const;   // colors at the interface input slots
};

CircuitPtr unlabel(const LabeledCircuit& q);

// Calls fn once per coloring consistent with the optional boundary
// constraints, in lexicographic order over the canonical wire order (earlier
// wires most significant).  Conflicting constraints on a through-wire yield
// no colorings.  Throws value_error on constraint length mismatch.
void for_each_labeling(const CircuitWires& w, int N,
                       const std::optional<Index>& out_colors,
                       const std::optional<Index>& in_colors,
                       const std::function<void(const std::vector<int>&)>& fn);

// Materialized version of for_each_labeling; all labelings share one wire
// table.  Count is N^(#unconstrained wires) when no constraint conflicts.
std::vector<LabeledCircuit> enumerate_labelings(
    const CircuitPtr& t, int N,
    const std::optional<Index>& out_colors = std::nullopt,
    const std::optional<Index>& in_colors = std::nullopt);

// Product over all chips of the assigned entry selected by the chip's wire
// colors.  A circuit with no chips has weight one.
template <class S>
typename S::value_type weight(const CircuitWires& w,
                              const std::vector<int>& colors,
                              const Representation<S>& mu) {
  auto acc = S::one();
  for (std::size_t c = 0; c < w.graph.nodes.size(); ++c) {
    const auto& nd = w.graph.nodes[c];
    Index out_cols, in_cols;
    out_cols.reserve(w.node_out_wire[c].size());
    in_cols.reserve(w.node_in_wire[c].size());
    for (int wi : w.node_out_wire[c])
      out_cols.push_back(colors[static_cast<std::size_t>(wi)]);
    for (int wi : w.node_in_wire[c])
      in_cols.push_back(colors[static_cast<std::size_t>(wi)]);
    acc = S::mul(acc, mu.assignment(nd.name).at(out_cols, in_cols));
  }
  return acc;
}

template <class S>
typename S::value_type weight(const LabeledCircuit& q,
                              const Representation<S>& mu) {
  return weight(*q.wires, q.colors, mu);
}

// Entry of the evaluated circuit computed the slow way: sum of labeling
// weights over every coloring with boundary (I, J).
template <class S>
typename S::value_type path_sum_oracle(const CircuitPtr& t,
                                       const Representation<S>& mu,
                                       const Index& I, const Index& J) {
  const auto w = circuit_wires(t);
  auto acc = S::zero();
  for_each_labeling(*w, mu.base_dim(), I, J,
                    [&](const std::vector<int>& colors) {
                      acc = S::add(acc, weight(*w, colors, mu));
                    });
  return acc;
}

}  // namespace prokit
