#include "prokit/paths.hpp"

#include <algorithm>

namespace prokit {

std::shared_ptr<const CircuitWires> circuit_wires(const CircuitPtr& t) {
  auto w = std::make_shared<CircuitWires>();
  w->base = t;
  w->graph = to_port_graph(*t);
  const auto& g = w->graph;
  for (const auto& nd : g.nodes)
    if (nd.in == 0 || nd.out == 0)
      throw value_error("circuit_wires: chip '" + nd.name +
                        "' lacks an input or an output; wire labelings are "
                        "only defined when every chip has both");

  // one wire per upper end: interface output slots, then chip input ports in
  // canonical chip order
  std::map<std::pair<int, int>, int> by_source;
  auto add_wire = [&](PortEnd up, PortEnd src) {
    const int id = w->wire_count();
    w->upper.push_back(up);
    w->source.push_back(src);
    by_source[{src.chip, src.port}] = id;
    return id;
  };
  for (int i = 0; i < g.out_arity; ++i)
    add_wire({-1, i}, g.output_src[static_cast<std::size_t>(i)]);
  const auto canon = canonical_node_order(g);
  for (int c : canon) {
    const auto& ports = g.node_in_src[static_cast<std::size_t>(c)];
    for (std::size_t k = 0; k < ports.size(); ++k)
      add_wire({c, static_cast<int>(k)}, ports[k]);
  }

  w->node_in_wire.resize(g.nodes.size());
  w->node_out_wire.resize(g.nodes.size());
  for (int wi = 0; wi < w->wire_count(); ++wi) {
    const PortEnd up = w->upper[static_cast<std::size_t>(wi)];
    if (up.chip >= 0) {
      auto& ins = w->node_in_wire[static_cast<std::size_t>(up.chip)];
      ins.resize(g.nodes[static_cast<std::size_t>(up.chip)].in);
      ins[static_cast<std::size_t>(up.port)] = wi;
    }
  }
  for (std::size_t c = 0; c < g.nodes.size(); ++c) {
    w->node_out_wire[c].resize(g.nodes[c].out);
    for (int p = 0; p < g.nodes[c].out; ++p)
      w->node_out_wire[c][static_cast<std::size_t>(p)] =
          by_source.at({static_cast<int>(c), p});
  }
  w->in_slot_wire.resize(g.in_arity);
  for (int j = 0; j < g.in_arity; ++j)
    w->in_slot_wire[static_cast<std::size_t>(j)] = by_source.at({-1, j});
  return w;
}

Index LabeledCircuit::out_colors() const {
  Index out;
  for (int i = 0; i < wires->graph.out_arity; ++i)
    out.push_back(colors[static_cast<std::size_t>(i)]);
  return out;
}

Index LabeledCircuit::in_colors() const {
  Index in;
  for (int wi : wires->in_slot_wire)
    in.push_back(colors[static_cast<std::size_t>(wi)]);
  return in;
}

CircuitPtr unlabel(const LabeledCircuit& q) { return q.wires->base; }

void for_each_labeling(const CircuitWires& w, int N,
                       const std::optional<Index>& out_colors,
                       const std::optional<Index>& in_colors,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (N <= 0) throw value_error("for_each_labeling: color bound must be positive");
  std::vector<int> fixed(static_cast<std::size_t>(w.wire_count()), 0);
  auto constrain = [&](int wi, int color) {
    auto& f = fixed[static_cast<std::size_t>(wi)];
    if (f != 0 && f != color) return false;
    f = color;
    return true;
  };
  auto check_colors = [&](const Index& cols, const char* side, int expected) {
    if (static_cast<int>(cols.size()) != expected)
      throw value_error(std::string("for_each_labeling: ") + side +
                        " constraint has length " +
                        std::to_string(cols.size()) + ", interface has " +
                        std::to_string(expected));
    for (int c : cols)
      if (c < 1 || c > N)
        throw value_error("for_each_labeling: constraint color out of range");
  };
  if (out_colors) {
    check_colors(*out_colors, "output", w.graph.out_arity);
    for (int i = 0; i < w.graph.out_arity; ++i)
      if (!constrain(i, (*out_colors)[static_cast<std::size_t>(i)])) return;
  }
  if (in_colors) {
    check_colors(*in_colors, "input", w.graph.in_arity);
    for (int j = 0; j < w.graph.in_arity; ++j)
      if (!constrain(w.in_slot_wire[static_cast<std::size_t>(j)],
                     (*in_colors)[static_cast<std::size_t>(j)]))
        return;
  }

  std::vector<int> free_wires;
  std::vector<int> colors(fixed);
  for (int wi = 0; wi < w.wire_count(); ++wi)
    if (fixed[static_cast<std::size_t>(wi)] == 0) {
      free_wires.push_back(wi);
      colors[static_cast<std::size_t>(wi)] = 1;
    }
  // odometer over the free wires, earlier wires most significant
  for (;;) {
    fn(colors);
    int pos = static_cast<int>(free_wires.size()) - 1;
    while (pos >= 0) {
      auto& c = colors[static_cast<std::size_t>(
          free_wires[static_cast<std::size_t>(pos)])];
      if (c < N) {
        ++c;
        break;
      }
      c = 1;
      --pos;
    }
    if (pos < 0) break;
  }
}

std::vector<LabeledCircuit> enumerate_labelings(
    const CircuitPtr& t, int N, const std::optional<Index>& out_colors,
    const std::optional<Index>& in_colors) {
  const auto w = circuit_wires(t);
  std::vector<LabeledCircuit> out;
  for_each_labeling(*w, N, out_colors, in_colors,
                    [&](const std::vector<int>& colors) {
                      out.push_back({w, colors});
                    });
  return out;
}

}  // namespace prokit
