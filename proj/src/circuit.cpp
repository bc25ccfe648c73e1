#include "prokit/circuit.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>
#include <utility>

namespace prokit {

// ---- signature ----

Signature::Signature(std::vector<ChipDecl> chips) : chips_(std::move(chips)) {
  for (std::size_t i = 0; i < chips_.size(); ++i) {
    const auto& c = chips_[i];
    if (c.name.empty()) throw value_error("signature: chip with empty name");
    if (c.out < 0 || c.in < 0)
      throw value_error("signature: negative arity for chip '" + c.name + "'");
    if (!index_.emplace(c.name, i).second)
      throw value_error("signature: duplicate chip name '" + c.name + "'");
  }
}

const ChipDecl& Signature::chip(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw value_error("signature: unknown chip '" + name + "'");
  return chips_[it->second];
}

bool Signature::has(const std::string& name) const {
  return index_.count(name) != 0;
}

bool Signature::all_pluggable() const {
  return std::all_of(chips_.begin(), chips_.end(),
                     [](const ChipDecl& c) { return c.pluggable(); });
}

// ---- terms ----

CircuitPtr Circuit::make_empty() {
  auto c = std::make_shared<Circuit>();
  c->kind = CircuitKind::Empty;
  c->wire_stack = true;
  return c;
}

CircuitPtr Circuit::make_wire() {
  auto c = std::make_shared<Circuit>();
  c->kind = CircuitKind::Wire;
  c->out_arity = c->in_arity = 1;
  c->wire_stack = true;
  return c;
}

CircuitPtr Circuit::make_chip(const ChipDecl& decl) {
  auto c = std::make_shared<Circuit>();
  c->kind = CircuitKind::Chip;
  c->chip_name = decl.name;
  c->chip_out = c->out_arity = decl.out;
  c->chip_in = c->in_arity = decl.in;
  c->chip_count = 1;
  return c;
}

CircuitPtr empty_circuit() {
  static const CircuitPtr e = Circuit::make_empty();
  return e;
}

CircuitPtr wire() {
  static const CircuitPtr w = Circuit::make_wire();
  return w;
}

CircuitPtr wires(int n) {
  if (n < 0) throw value_error("wires: negative count");
  CircuitPtr t = empty_circuit();
  for (int i = 0; i < n; ++i) t = hcomp(t, wire());
  return t;
}

CircuitPtr chip(const ChipDecl& decl) { return Circuit::make_chip(decl); }

CircuitPtr chip(const Signature& sig, const std::string& name) {
  return Circuit::make_chip(sig.chip(name));
}

CircuitPtr hcomp(const CircuitPtr& a, const CircuitPtr& b) {
  if (a->kind == CircuitKind::Empty) return b;
  if (b->kind == CircuitKind::Empty) return a;
  auto c = std::make_shared<Circuit>();
  c->kind = CircuitKind::HComp;
  c->out_arity = a->out_arity + b->out_arity;
  c->in_arity = a->in_arity + b->in_arity;
  c->first = a;
  c->second = b;
  c->wire_stack = a->wire_stack && b->wire_stack;
  c->chip_count = a->chip_count + b->chip_count;
  return c;
}

CircuitPtr vcomp(const CircuitPtr& top, const CircuitPtr& bottom) {
  if (top->in_arity != bottom->out_arity)
    throw shape_error("vcomp: inner arity mismatch (" +
                      std::to_string(top->in_arity) + " vs " +
                      std::to_string(bottom->out_arity) + ")");
  if (top->wire_stack) return bottom;
  if (bottom->wire_stack) return top;
  auto c = std::make_shared<Circuit>();
  c->kind = CircuitKind::VComp;
  c->out_arity = top->out_arity;
  c->in_arity = bottom->in_arity;
  c->first = top;
  c->second = bottom;
  c->chip_count = top->chip_count + bottom->chip_count;
  return c;
}

// ---- wiring diagrams ----

PortGraph to_port_graph(const Circuit& t) {
  switch (t.kind) {
    case CircuitKind::Empty:
      return {};
    case CircuitKind::Wire: {
      PortGraph g;
      g.out_arity = g.in_arity = 1;
      g.output_src = {{-1, 0}};
      return g;
    }
    case CircuitKind::Chip: {
      PortGraph g;
      g.out_arity = t.chip_out;
      g.in_arity = t.chip_in;
      g.nodes.push_back({t.chip_name, t.chip_out, t.chip_in});
      for (int i = 0; i < t.chip_out; ++i) g.output_src.push_back({0, i});
      g.node_in_src.emplace_back();
      for (int j = 0; j < t.chip_in; ++j) g.node_in_src[0].push_back({-1, j});
      return g;
    }
    case CircuitKind::HComp: {
      PortGraph a = to_port_graph(*t.first);
      PortGraph b = to_port_graph(*t.second);
      const int chip_off = static_cast<int>(a.nodes.size());
      const int in_off = a.in_arity;
      auto shift = [&](PortEnd e) {
        if (e.chip < 0) return PortEnd{-1, e.port + in_off};
        return PortEnd{e.chip + chip_off, e.port};
      };
      PortGraph g;
      g.out_arity = a.out_arity + b.out_arity;
      g.in_arity = a.in_arity + b.in_arity;
      g.nodes = std::move(a.nodes);
      g.nodes.insert(g.nodes.end(), b.nodes.begin(), b.nodes.end());
      g.output_src = std::move(a.output_src);
      for (const auto& e : b.output_src) g.output_src.push_back(shift(e));
      g.node_in_src = std::move(a.node_in_src);
      for (const auto& ports : b.node_in_src) {
        std::vector<PortEnd> shifted;
        shifted.reserve(ports.size());
        for (const auto& e : ports) shifted.push_back(shift(e));
        g.node_in_src.push_back(std::move(shifted));
      }
      return g;
    }
    case CircuitKind::VComp: {
      PortGraph p = to_port_graph(*t.first);   // drawn above
      PortGraph q = to_port_graph(*t.second);  // drawn below
      const int chip_off = static_cast<int>(p.nodes.size());
      auto shift_q = [&](PortEnd e) {
        if (e.chip < 0) return e;  // q's inputs become the result's inputs
        return PortEnd{e.chip + chip_off, e.port};
      };
      // A source that was one of p's interface inputs is really fed by the
      // corresponding output of q: substitute through the connection.
      auto subst = [&](PortEnd e) {
        if (e.chip < 0) return shift_q(q.output_src[e.port]);
        return e;
      };
      PortGraph g;
      g.out_arity = p.out_arity;
      g.in_arity = q.in_arity;
      g.nodes = std::move(p.nodes);
      g.nodes.insert(g.nodes.end(), q.nodes.begin(), q.nodes.end());
      for (const auto& e : p.output_src) g.output_src.push_back(subst(e));
      for (const auto& ports : p.node_in_src) {
        std::vector<PortEnd> fused;
        fused.reserve(ports.size());
        for (const auto& e : ports) fused.push_back(subst(e));
        g.node_in_src.push_back(std::move(fused));
      }
      for (const auto& ports : q.node_in_src) {
        std::vector<PortEnd> shifted;
        shifted.reserve(ports.size());
        for (const auto& e : ports) shifted.push_back(shift_q(e));
        g.node_in_src.push_back(std::move(shifted));
      }
      return g;
    }
  }
  throw value_error("to_port_graph: unknown node kind");
}

namespace {

// Destination of every lower wire end (interface input slot or chip output
// port).  Together with the stored sources this makes wires walkable in both
// directions.
std::map<std::pair<int, int>, PortEnd> destination_map(const PortGraph& g) {
  std::map<std::pair<int, int>, PortEnd> dest;
  for (int i = 0; i < g.out_arity; ++i) {
    const PortEnd& s = g.output_src[i];
    dest[{s.chip, s.port}] = {-1, i};
  }
  for (std::size_t c = 0; c < g.nodes.size(); ++c)
    for (std::size_t k = 0; k < g.node_in_src[c].size(); ++k) {
      const PortEnd& s = g.node_in_src[c][k];
      dest[{s.chip, s.port}] = {static_cast<int>(c), static_cast<int>(k)};
    }
  return dest;
}

void append_end(std::ostringstream& os, const PortEnd& e,
                const std::vector<int>& id) {
  if (e.chip < 0)
    os << 'i' << e.port;
  else
    os << 'n' << id[static_cast<std::size_t>(e.chip)] << '.' << e.port;
  os << ',';
}

// Serialize the nodes listed in `order` (discovery numbering `id`), without
// the interface part.  Used to pick a canonical entry into closed components.
std::string serialize_nodes(const PortGraph& g, const std::vector<int>& order,
                            const std::vector<int>& id) {
  std::ostringstream os;
  for (int orig : order) {
    const auto& nd = g.nodes[static_cast<std::size_t>(orig)];
    os << nd.name.size() << ':' << nd.name << '/' << nd.out << '/' << nd.in
       << ';';
  }
  for (int orig : order) {
    os << "I:";
    for (const auto& e : g.node_in_src[static_cast<std::size_t>(orig)])
      append_end(os, e, id);
    os << ';';
  }
  return os.str();
}

}  // namespace

std::vector<int> canonical_node_order(const PortGraph& g) {
  const auto dest = destination_map(g);
  const int chips = static_cast<int>(g.nodes.size());
  std::vector<int> id(static_cast<std::size_t>(chips), -1);
  std::vector<int> order;
  std::deque<int> queue;

  auto discover = [&](int c) {
    if (id[static_cast<std::size_t>(c)] < 0) {
      id[static_cast<std::size_t>(c)] = static_cast<int>(order.size());
      order.push_back(c);
      queue.push_back(c);
    }
  };
  // Breadth-first over wires in both directions; a chip's ports are visited
  // in order, inputs before outputs, so the numbering depends only on the
  // wiring and the interface order.
  auto drain = [&]() {
    while (!queue.empty()) {
      const int c = queue.front();
      queue.pop_front();
      const auto& nd = g.nodes[static_cast<std::size_t>(c)];
      for (int k = 0; k < nd.in; ++k) {
        const PortEnd& s = g.node_in_src[static_cast<std::size_t>(c)]
                                        [static_cast<std::size_t>(k)];
        if (s.chip >= 0) discover(s.chip);
      }
      for (int k = 0; k < nd.out; ++k) {
        const PortEnd& d = dest.at({c, k});
        if (d.chip >= 0) discover(d.chip);
      }
    }
  };

  for (int i = 0; i < g.out_arity; ++i) {
    if (g.output_src[static_cast<std::size_t>(i)].chip >= 0)
      discover(g.output_src[static_cast<std::size_t>(i)].chip);
    drain();
  }
  for (int j = 0; j < g.in_arity; ++j) {
    const PortEnd& d = dest.at({-1, j});
    if (d.chip >= 0) discover(d.chip);
    drain();
  }

  // Components touching no interface slot: serialize each from the entry
  // chip giving the lexicographically smallest description, then order the
  // components by that description.
  std::vector<std::pair<std::string, std::vector<int>>> closed;
  std::vector<char> grouped(static_cast<std::size_t>(chips), 0);
  for (int c0 = 0; c0 < chips; ++c0) {
    if (id[static_cast<std::size_t>(c0)] >= 0 ||
        grouped[static_cast<std::size_t>(c0)])
      continue;
    // collect the weakly connected component of c0 among leftovers
    std::vector<int> members;
    std::deque<int> bfs{c0};
    grouped[static_cast<std::size_t>(c0)] = 1;
    while (!bfs.empty()) {
      const int c = bfs.front();
      bfs.pop_front();
      members.push_back(c);
      const auto& nd = g.nodes[static_cast<std::size_t>(c)];
      auto touch = [&](int other) {
        if (other >= 0 && !grouped[static_cast<std::size_t>(other)]) {
          grouped[static_cast<std::size_t>(other)] = 1;
          bfs.push_back(other);
        }
      };
      for (int k = 0; k < nd.in; ++k)
        touch(g.node_in_src[static_cast<std::size_t>(c)]
                           [static_cast<std::size_t>(k)]
                  .chip);
      for (int k = 0; k < nd.out; ++k) touch(dest.at({c, k}).chip);
    }
    std::string best;
    std::vector<int> best_order;
    for (int start : members) {
      std::vector<int> lid(static_cast<std::size_t>(chips), -1);
      std::vector<int> lorder;
      std::deque<int> lqueue;
      auto ldiscover = [&](int c) {
        if (c >= 0 && id[static_cast<std::size_t>(c)] < 0 &&
            lid[static_cast<std::size_t>(c)] < 0) {
          lid[static_cast<std::size_t>(c)] = static_cast<int>(lorder.size());
          lorder.push_back(c);
          lqueue.push_back(c);
        }
      };
      ldiscover(start);
      while (!lqueue.empty()) {
        const int c = lqueue.front();
        lqueue.pop_front();
        const auto& nd = g.nodes[static_cast<std::size_t>(c)];
        for (int k = 0; k < nd.in; ++k)
          ldiscover(g.node_in_src[static_cast<std::size_t>(c)]
                                 [static_cast<std::size_t>(k)]
                        .chip);
        for (int k = 0; k < nd.out; ++k) ldiscover(dest.at({c, k}).chip);
      }
      std::string ser = serialize_nodes(g, lorder, lid);
      if (best.empty() || ser < best) {
        best = std::move(ser);
        best_order = std::move(lorder);
      }
    }
    closed.emplace_back(std::move(best), std::move(best_order));
  }
  std::sort(closed.begin(), closed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [ser, comp_order] : closed)
    for (int c : comp_order) {
      id[static_cast<std::size_t>(c)] = static_cast<int>(order.size());
      order.push_back(c);
    }
  return order;
}

std::string canonical_key(const PortGraph& g) {
  const auto order = canonical_node_order(g);
  std::vector<int> id(g.nodes.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k)
    id[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  std::ostringstream os;
  os << g.out_arity << ',' << g.in_arity << ';';
  os << serialize_nodes(g, order, id);
  os << "O:";
  for (const auto& e : g.output_src) append_end(os, e, id);
  os << ';';
  return os.str();
}

std::string canonical_key(const Circuit& t) {
  return canonical_key(to_port_graph(t));
}

bool same_circuit(const Circuit& a, const Circuit& b) {
  if (a.out_arity != b.out_arity || a.in_arity != b.in_arity) return false;
  return canonical_key(a) == canonical_key(b);
}

// ---- components ----

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

CircuitPtr hcomp_fold(const std::vector<CircuitPtr>& xs) {
  CircuitPtr acc = empty_circuit();
  for (const auto& x : xs) acc = hcomp(acc, x);
  return acc;
}

}  // namespace

std::vector<CircuitPtr> connected_components(const CircuitPtr& t) {
  switch (t->kind) {
    case CircuitKind::Empty:
      return {};
    case CircuitKind::Wire:
    case CircuitKind::Chip:
      return {t};
    case CircuitKind::HComp: {
      auto left = connected_components(t->first);
      auto right = connected_components(t->second);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    case CircuitKind::VComp:
      break;
  }
  const auto tops = connected_components(t->first);
  const auto bottoms = connected_components(t->second);
  const int K = t->first->in_arity;  // width of the connecting line

  struct Item {
    CircuitPtr term;
    int start = 0;   // position of the item's strip on the connecting line
    int width = 0;   // wires consumed (top row) or produced (bottom row)
    bool top_row = false;
    int orig = 0;    // order within its row
  };
  std::vector<Item> items;
  {
    int pos = 0, orig = 0;
    for (const auto& p : tops) {
      items.push_back({p, pos, p->in_arity, true, orig++});
      pos += p->in_arity;
    }
    pos = 0;
    orig = 0;
    for (const auto& q : bottoms) {
      items.push_back({q, pos, q->out_arity, false, orig++});
      pos += q->out_arity;
    }
  }

  // Merge items whose strips share a wire.
  Dsu dsu(static_cast<int>(items.size()));
  {
    std::vector<int> cover_top(static_cast<std::size_t>(K), -1);
    std::vector<int> cover_bot(static_cast<std::size_t>(K), -1);
    for (std::size_t i = 0; i < items.size(); ++i)
      for (int w = items[i].start; w < items[i].start + items[i].width; ++w)
        (items[i].top_row ? cover_top : cover_bot)[static_cast<std::size_t>(w)] =
            static_cast<int>(i);
    for (int w = 0; w < K; ++w)
      dsu.unite(cover_top[static_cast<std::size_t>(w)],
                cover_bot[static_cast<std::size_t>(w)]);
  }

  struct Group {
    std::vector<int> members;
    int lo = 0, hi = 0;  // strip span
  };
  std::map<int, Group> groups;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].width == 0) continue;
    auto& grp = groups[dsu.find(static_cast<int>(i))];
    if (grp.members.empty()) {
      grp.lo = items[i].start;
      grp.hi = items[i].start + items[i].width;
    } else {
      grp.lo = std::min(grp.lo, items[i].start);
      grp.hi = std::max(grp.hi, items[i].start + items[i].width);
    }
    grp.members.push_back(static_cast<int>(i));
  }

  // A 0-width item strictly inside a group's span cannot be moved out
  // horizontally; keep it with that group.
  std::vector<int> standalone;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].width != 0) continue;
    bool absorbed = false;
    for (auto& [root, grp] : groups) {
      if (grp.lo < items[i].start && items[i].start < grp.hi) {
        grp.members.push_back(static_cast<int>(i));
        absorbed = true;
        break;
      }
    }
    if (!absorbed) standalone.push_back(static_cast<int>(i));
  }

  // Order everything along the line: a group spanning [a,b) sorts by 2a+1; a
  // standalone item sitting at point x sorts by 2x, so it lands between the
  // group ending at x and the group starting at x.
  struct Entry {
    long key = 0;
    int tie1 = 0, tie2 = 0;
    CircuitPtr term;
  };
  std::vector<Entry> entries;
  for (auto& [root, grp] : groups) {
    std::vector<CircuitPtr> row_top, row_bot;
    std::sort(grp.members.begin(), grp.members.end(), [&](int a, int b) {
      if (items[static_cast<std::size_t>(a)].top_row !=
          items[static_cast<std::size_t>(b)].top_row)
        return items[static_cast<std::size_t>(a)].top_row;
      return items[static_cast<std::size_t>(a)].orig <
             items[static_cast<std::size_t>(b)].orig;
    });
    for (int m : grp.members)
      (items[static_cast<std::size_t>(m)].top_row ? row_top : row_bot)
          .push_back(items[static_cast<std::size_t>(m)].term);
    entries.push_back(
        {2L * grp.lo + 1, 0, 0, vcomp(hcomp_fold(row_top), hcomp_fold(row_bot))});
  }
  for (int i : standalone) {
    const auto& it = items[static_cast<std::size_t>(i)];
    entries.push_back({2L * it.start, it.top_row ? 0 : 1, it.orig, it.term});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.key, a.tie1, a.tie2) < std::tie(b.key, b.tie1, b.tie2);
  });

  std::vector<CircuitPtr> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.term));
  return out;
}

// ---- enumeration ----

std::vector<CircuitPtr> enumerate_circuits(const Signature& sig, int max_chips,
                                           int m, int n) {
  if (m < 0 || n < 0) throw value_error("enumerate_circuits: negative arity");
  if (max_chips < 0) throw value_error("enumerate_circuits: negative chip bound");
  int max_out = 0, max_in = 0;
  for (const auto& c : sig.chips()) {
    max_out = std::max(max_out, c.out);
    max_in = std::max(max_in, c.in);
  }
  const int width_cap = n + max_chips * std::max(1, max_out);

  std::vector<CircuitPtr> result;
  std::map<std::string, CircuitPtr> level;
  {
    auto base = wires(n);
    level.emplace(canonical_key(*base), base);
    if (m == n) result.push_back(base);
  }
  for (int k = 1; k <= max_chips; ++k) {
    std::map<std::string, CircuitPtr> next;
    const int remaining = max_chips - k;
    for (const auto& [key, t] : level) {
      const int w = t->out_arity;
      for (const auto& c : sig.chips()) {
        if (c.in > w) continue;
        for (int l = 0; l + c.in <= w; ++l) {
          auto layer = hcomp(hcomp(wires(l), chip(c)), wires(w - c.in - l));
          auto grown = vcomp(layer, t);
          const int gw = grown->out_arity;
          if (gw > width_cap) continue;
          if (gw > m + remaining * max_in) continue;   // cannot shrink enough
          if (gw + remaining * max_out < m) continue;  // cannot grow enough
          if (next.emplace(canonical_key(*grown), grown).second &&
              gw == m)
            result.push_back(grown);
        }
      }
    }
    level = std::move(next);
  }
  return result;
}

// ---- randomized generators ----

CircuitPtr random_circuit_term(Rng& rng, const Signature& sig, int chips,
                               int width) {
  auto t = wires(width);
  for (int i = 0; i < chips; ++i) {
    const int w = t->out_arity;
    std::vector<const ChipDecl*> fits;
    for (const auto& c : sig.chips())
      if (c.in <= w) fits.push_back(&c);
    if (fits.empty()) break;
    const auto& c = *fits[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(fits.size()) - 1))];
    const int l = rng.uniform(0, w - c.in);
    t = vcomp(hcomp(hcomp(wires(l), chip(c)), wires(w - c.in - l)), t);
  }
  return t;
}

namespace {

void collect_paths(const CircuitPtr& t, std::vector<std::vector<int>>& out,
                   std::vector<int>& cur) {
  out.push_back(cur);
  if (t->first) {
    cur.push_back(0);
    collect_paths(t->first, out, cur);
    cur.pop_back();
  }
  if (t->second) {
    cur.push_back(1);
    collect_paths(t->second, out, cur);
    cur.pop_back();
  }
}

CircuitPtr get_at(const CircuitPtr& t, const std::vector<int>& path,
                  std::size_t i) {
  if (i == path.size()) return t;
  return get_at(path[i] == 0 ? t->first : t->second, path, i + 1);
}

CircuitPtr rebuild(const CircuitPtr& t, const std::vector<int>& path,
                   std::size_t i, const CircuitPtr& repl) {
  if (i == path.size()) return repl;
  CircuitPtr f = t->first, s = t->second;
  if (path[i] == 0)
    f = rebuild(f, path, i + 1, repl);
  else
    s = rebuild(s, path, i + 1, repl);
  return t->kind == CircuitKind::HComp ? hcomp(f, s) : vcomp(f, s);
}

CircuitPtr try_axiom_move(Rng& rng, const CircuitPtr& t) {
  switch (rng.uniform(0, 5)) {
    case 0:  // reassociate juxtaposition rightward
      if (t->kind == CircuitKind::HComp && t->first->kind == CircuitKind::HComp)
        return hcomp(t->first->first, hcomp(t->first->second, t->second));
      break;
    case 1:  // reassociate juxtaposition leftward
      if (t->kind == CircuitKind::HComp && t->second->kind == CircuitKind::HComp)
        return hcomp(hcomp(t->first, t->second->first), t->second->second);
      break;
    case 2:  // reassociate connection downward
      if (t->kind == CircuitKind::VComp && t->first->kind == CircuitKind::VComp)
        return vcomp(t->first->first, vcomp(t->first->second, t->second));
      break;
    case 3:  // reassociate connection upward
      if (t->kind == CircuitKind::VComp && t->second->kind == CircuitKind::VComp)
        return vcomp(vcomp(t->first, t->second->first), t->second->second);
      break;
    case 4:  // interchange: split one connection into two side by side
      if (t->kind == CircuitKind::VComp &&
          t->first->kind == CircuitKind::HComp &&
          t->second->kind == CircuitKind::HComp) {
        const auto &a = t->first->first, &b = t->first->second;
        const auto &c = t->second->first, &d = t->second->second;
        if (a->in_arity == c->out_arity)
          return hcomp(vcomp(a, c), vcomp(b, d));
      }
      break;
    case 5:  // interchange: merge two side-by-side connections
      if (t->kind == CircuitKind::HComp &&
          t->first->kind == CircuitKind::VComp &&
          t->second->kind == CircuitKind::VComp)
        return vcomp(hcomp(t->first->first, t->second->first),
                     hcomp(t->first->second, t->second->second));
      break;
  }
  return nullptr;
}

}  // namespace

CircuitPtr random_axiom_variant(Rng& rng, const CircuitPtr& t0, int moves) {
  auto t = t0;
  int applied = 0;
  for (int attempts = 0; applied < moves && attempts < moves * 25; ++attempts) {
    std::vector<std::vector<int>> paths;
    std::vector<int> cur;
    collect_paths(t, paths, cur);
    const auto& path = paths[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(paths.size()) - 1))];
    auto sub = get_at(t, path, 0);
    auto repl = try_axiom_move(rng, sub);
    if (!repl) continue;
    t = path.empty() ? repl : rebuild(t, path, 0, repl);
    ++applied;
  }
  return t;
}

}  // namespace prokit
