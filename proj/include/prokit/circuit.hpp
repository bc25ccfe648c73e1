// Free circuit terms over a chip signature, their wiring diagrams, and a
// canonical key deciding circuit equality.
//
// A circuit term is an immutable tree built from the empty circuit, single
// wires, chips, horizontal juxtaposition, and vertical connection.  Unit
// absorption happens at construction: composing with the empty circuit or
// with a stack of plain wires returns the other operand unchanged, so terms
// never contain redundant units.
//
// Equality of circuits is wiring-diagram identity with ordered interfaces.
// For signatures whose chips all have at least one input and one output
// ("pluggable"), this is exactly free equality: no term can produce crossing
// wires, so no planarity bookkeeping is needed.  Terms containing 0-legged
// chips get the same diagram equality, which is coarser than free equality;
// the modules that use such chips only ever evaluate circuits, never compare
// them finely.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "prokit/errors.hpp"
#include "prokit/random_gen.hpp"

namespace prokit {

struct ChipDecl {
  std::string name;
  int out = 0;  // number of output legs (top)
  int in = 0;   // number of input legs (bottom)
  bool pluggable() const { return out >= 1 && in >= 1; }
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<ChipDecl> chips);
  const ChipDecl& chip(const std::string& name) const;
  bool has(const std::string& name) const;
  const std::vector<ChipDecl>& chips() const { return chips_; }
  // True when every chip has at least one input and one output.
  bool all_pluggable() const;

 private:
  std::vector<ChipDecl> chips_;
  std::map<std::string, std::size_t> index_;
};

enum class CircuitKind { Empty, Wire, Chip, HComp, VComp };

class Circuit;
using CircuitPtr = std::shared_ptr<const Circuit>;

class Circuit {
 public:
  CircuitKind kind;
  int out_arity = 0;
  int in_arity = 0;
  // Chip nodes
  std::string chip_name;
  int chip_out = 0, chip_in = 0;
  // HComp: first=left, second=right.  VComp: first=top, second=bottom.
  CircuitPtr first, second;
  bool wire_stack = false;  // term is syntactically a stack of plain wires
  int chip_count = 0;

  static CircuitPtr make_empty();
  static CircuitPtr make_wire();
  static CircuitPtr make_chip(const ChipDecl& decl);
};

CircuitPtr empty_circuit();
CircuitPtr wire();
CircuitPtr wires(int n);
CircuitPtr chip(const ChipDecl& decl);
CircuitPtr chip(const Signature& sig, const std::string& name);
// Juxtaposition; absorbs the empty circuit.
CircuitPtr hcomp(const CircuitPtr& a, const CircuitPtr& b);
// Connection (top over bottom); absorbs plain wire stacks; throws shape_error
// when in_arity(top) != out_arity(bottom).
CircuitPtr vcomp(const CircuitPtr& top, const CircuitPtr& bottom);

// One end of a wire.  chip == -1 addresses an interface slot, otherwise the
// port of a chip instance.  Ports are 0-based internally.
struct PortEnd {
  int chip = -1;
  int port = 0;
  friend bool operator==(const PortEnd&, const PortEnd&) = default;
};

// Wiring diagram: every upper wire end (interface output slot or chip input
// port) stores the lower end that feeds it (interface input slot or chip
// output port).  Wires flow bottom to top.
struct PortGraph {
  struct Node {
    std::string name;
    int out = 0;
    int in = 0;
  };
  int out_arity = 0;
  int in_arity = 0;
  std::vector<Node> nodes;
  std::vector<PortEnd> output_src;                // per interface output slot
  std::vector<std::vector<PortEnd>> node_in_src;  // per node, per input port
};

PortGraph to_port_graph(const Circuit& t);

// Deterministic serialization such that two diagrams get the same key exactly
// when they are isomorphic respecting interface order and port order.  The
// traversal numbers chips breadth-first from the interface output slots in
// order, then from the interface input slots; components touching no
// interface are serialized from their lexicographically best entry point.
std::string canonical_key(const PortGraph& g);
std::string canonical_key(const Circuit& t);
bool same_circuit(const Circuit& a, const Circuit& b);

// Chip visit order of the canonical traversal (indices into g.nodes);
// canonical_key numbers chips in exactly this order.  Isomorphic diagrams
// list corresponding chips at corresponding positions.
std::vector<int> canonical_node_order(const PortGraph& g);

// Maximal decomposition t = p1 <-> ... <-> pk into non-empty horizontally
// inseparable circuits, in interface order.  For pluggable signatures these
// are exactly the connected components of the wiring diagram.  A 0-legged
// chip whose strip lies strictly inside another component's span cannot be
// separated from it and is kept with that component (coarser than graph
// connectivity; documented limitation).
std::vector<CircuitPtr> connected_components(const CircuitPtr& t);

// Every isomorphism class of circuits over `sig` with at most max_chips chips
// and arity exactly (m, n), each produced once, in a deterministic order.
// Built from one-chip-per-layer stacks, which reach every class, then
// deduplicated by canonical key.
std::vector<CircuitPtr> enumerate_circuits(const Signature& sig, int max_chips,
                                           int m, int n);

// ---- randomized term generators (test support) ----

// Random layered term with `chips` chip layers over base width `width`.
CircuitPtr random_circuit_term(Rng& rng, const Signature& sig, int chips,
                               int width);

// Applies up to `moves` random axiom moves (associativity of either
// composition in both directions, the interchange law in both directions) at
// random positions.  The result denotes the same circuit.
CircuitPtr random_axiom_variant(Rng& rng, const CircuitPtr& t, int moves);

}  // namespace prokit
