#include "prokit/temperley_lieb.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace prokit {

namespace {

std::string point_name(int p, int n_bottom) {
  return p < n_bottom ? "b" + std::to_string(p + 1)
                      : "t" + std::to_string(p - n_bottom + 1);
}

}  // namespace

TlDiagram::TlDiagram(int n_bottom, int n_top, std::vector<int> matching,
                     long long loops)
    : n_bottom_(n_bottom),
      n_top_(n_top),
      matching_(std::move(matching)),
      loops_(loops) {
  if (n_bottom_ < 0 || n_top_ < 0)
    throw value_error("diagram: negative boundary size");
  if (loops_ < 0) throw value_error("diagram: negative loop count");
  const int total = n_bottom_ + n_top_;
  if (total % 2 != 0)
    throw value_error("diagram: odd number of boundary points");
  if (static_cast<int>(matching_.size()) != total)
    throw value_error("diagram: matching size does not fit the boundary");
  for (int p = 0; p < total; ++p) {
    const int q = matching_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= total)
      throw value_error("diagram: matching partner out of range");
    if (q == p) throw value_error("diagram: point matched to itself");
    if (matching_[static_cast<std::size_t>(q)] != p)
      throw value_error("diagram: matching is not an involution");
  }
  // Planarity: walking the rectangle boundary (bottom left-to-right, then top
  // right-to-left) must nest the strands like balanced parentheses.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(total));
  for (int p = 0; p < n_bottom_; ++p) order.push_back(p);
  for (int p = total - 1; p >= n_bottom_; --p) order.push_back(p);
  std::vector<char> open(static_cast<std::size_t>(total), 0);
  std::vector<int> stack;
  for (int p : order) {
    const int q = matching_[static_cast<std::size_t>(p)];
    if (!open[static_cast<std::size_t>(q)]) {
      open[static_cast<std::size_t>(p)] = 1;
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q)
        throw value_error("diagram: matching has crossing strands");
      stack.pop_back();
    }
  }
}

TlDiagram TlDiagram::wires(int n) {
  if (n < 0) throw value_error("diagram: negative strand count");
  std::vector<int> match(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    match[static_cast<std::size_t>(j)] = n + j;
    match[static_cast<std::size_t>(n + j)] = j;
  }
  return TlDiagram(n, n, std::move(match));
}

TlDiagram TlDiagram::cup_diagram() { return TlDiagram(0, 2, {1, 0}); }

TlDiagram TlDiagram::cap_diagram() { return TlDiagram(2, 0, {1, 0}); }

std::string TlDiagram::str() const {
  std::string out;
  for (int p = 0; p < n_bottom_ + n_top_; ++p) {
    const int q = matching_[static_cast<std::size_t>(p)];
    if (q < p) continue;
    if (!out.empty()) out += " ";
    out += point_name(p, n_bottom_) + "-" + point_name(q, n_bottom_);
  }
  if (out.empty()) out = "empty";
  if (loops_ > 0) out += " +" + std::to_string(loops_) + " loop(s)";
  return out;
}

TlDiagram tl_compose(const TlDiagram& a, const TlDiagram& b) {
  if (a.n_bottom() != b.n_top())
    throw shape_error("tl_compose: inner boundary sizes differ (" +
                      std::to_string(a.n_bottom()) + " vs " +
                      std::to_string(b.n_top()) + ")");
  const int m = a.n_bottom();  // glued middle strands
  const int nb = b.n_bottom(), nt = a.n_top();
  // Layer coordinates: middle j is a's bottom point j and b's top point
  // b.n_bottom()+j at once.
  std::vector<char> mid_seen(static_cast<std::size_t>(m), 0);
  const auto trace_out = [&](bool in_a, int p) {
    bool layer = in_a;
    int cur = p;
    while (true) {
      const int q = layer ? a.partner(cur) : b.partner(cur);
      if (layer) {
        if (q >= m) return nb + (q - m);  // reached a top point of a
        mid_seen[static_cast<std::size_t>(q)] = 1;
        layer = false;
        cur = b.n_bottom() + q;
      } else {
        if (q < b.n_bottom()) return q;  // reached a bottom point of b
        const int j = q - b.n_bottom();
        mid_seen[static_cast<std::size_t>(j)] = 1;
        layer = true;
        cur = j;
      }
    }
  };
  std::vector<int> match(static_cast<std::size_t>(nb + nt), -1);
  for (int p = 0; p < nb; ++p)
    match[static_cast<std::size_t>(p)] = trace_out(false, p);
  for (int k = 0; k < nt; ++k)
    match[static_cast<std::size_t>(nb + k)] = trace_out(true, m + k);
  // Unvisited middle strands belong to newly closed loops.
  long long extra = 0;
  for (int j0 = 0; j0 < m; ++j0) {
    if (mid_seen[static_cast<std::size_t>(j0)]) continue;
    ++extra;
    int j = j0;
    do {
      mid_seen[static_cast<std::size_t>(j)] = 1;
      const int k = a.partner(j);  // an arc of a between two middle points
      mid_seen[static_cast<std::size_t>(k)] = 1;
      j = b.partner(b.n_bottom() + k) - b.n_bottom();  // arc of b back down
    } while (j != j0);
  }
  return TlDiagram(nb, nt, std::move(match), a.loops() + b.loops() + extra);
}

TlDiagram tl_tensor(const TlDiagram& a, const TlDiagram& b) {
  const int nb = a.n_bottom() + b.n_bottom();
  const auto map_a = [&](int p) {
    return a.is_bottom(p) ? p : nb + (p - a.n_bottom());
  };
  const auto map_b = [&](int p) {
    return b.is_bottom(p) ? a.n_bottom() + p
                          : nb + a.n_top() + (p - b.n_bottom());
  };
  std::vector<int> match(
      static_cast<std::size_t>(nb + a.n_top() + b.n_top()), -1);
  for (int p = 0; p < a.n_bottom() + a.n_top(); ++p)
    match[static_cast<std::size_t>(map_a(p))] = map_a(a.partner(p));
  for (int p = 0; p < b.n_bottom() + b.n_top(); ++p)
    match[static_cast<std::size_t>(map_b(p))] = map_b(b.partner(p));
  return TlDiagram(nb, a.n_top() + b.n_top(), std::move(match),
                   a.loops() + b.loops());
}

TlDiagram u_generator(int n, int i) {
  if (i < 1 || i >= n)
    throw value_error("u_generator: index " + std::to_string(i) +
                      " out of range for " + std::to_string(n) + " strands");
  std::vector<int> match(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    match[static_cast<std::size_t>(j)] = n + j;
    match[static_cast<std::size_t>(n + j)] = j;
  }
  match[static_cast<std::size_t>(i - 1)] = i;
  match[static_cast<std::size_t>(i)] = i - 1;
  match[static_cast<std::size_t>(n + i - 1)] = n + i;
  match[static_cast<std::size_t>(n + i)] = n + i - 1;
  return TlDiagram(n, n, std::move(match));
}

TlDiagram reduce_term(const Circuit& t) {
  switch (t.kind) {
    case CircuitKind::Empty:
      return TlDiagram(0, 0, {});
    case CircuitKind::Wire:
      return TlDiagram::wires(1);
    case CircuitKind::Chip:
      if (t.chip_name == "cup" && t.chip_out == 2 && t.chip_in == 0)
        return TlDiagram::cup_diagram();
      if (t.chip_name == "cap" && t.chip_out == 0 && t.chip_in == 2)
        return TlDiagram::cap_diagram();
      throw value_error("reduce_term: chip '" + t.chip_name +
                        "' with arity (" + std::to_string(t.chip_out) + "," +
                        std::to_string(t.chip_in) +
                        ") is not a cup or a cap");
    case CircuitKind::HComp:
      return tl_tensor(reduce_term(*t.first), reduce_term(*t.second));
    case CircuitKind::VComp:
      return tl_compose(reduce_term(*t.first), reduce_term(*t.second));
  }
  throw value_error("reduce_term: unknown term kind");
}

Signature tl_signature() {
  return Signature({{"cup", 2, 0}, {"cap", 0, 2}});
}

CircuitPtr cup_chip() { return chip(ChipDecl{"cup", 2, 0}); }

CircuitPtr cap_chip() { return chip(ChipDecl{"cap", 0, 2}); }

CircuitPtr loop_term() { return vcomp(cap_chip(), cup_chip()); }

CircuitPtr left_snake_term() {
  return vcomp(hcomp(cap_chip(), wire()), hcomp(wire(), cup_chip()));
}

CircuitPtr right_snake_term() {
  return vcomp(hcomp(wire(), cap_chip()), hcomp(cup_chip(), wire()));
}

CircuitPtr u_term(int n, int i) {
  if (i < 1 || i >= n)
    throw value_error("u_term: index " + std::to_string(i) +
                      " out of range for " + std::to_string(n) + " strands");
  CircuitPtr t = vcomp(cup_chip(), cap_chip());
  if (i > 1) t = hcomp(wires(i - 1), t);
  if (i + 1 < n) t = hcomp(t, wires(n - i - 1));
  return t;
}

CircuitPtr u_word_term(int n, const std::vector<int>& word) {
  if (word.empty()) return wires(n);
  CircuitPtr t = u_term(n, word.back());
  for (std::size_t k = word.size() - 1; k-- > 0;)
    t = vcomp(u_term(n, word[k]), t);
  return t;
}

namespace detail {

CycleCount closure_components(int n, const std::vector<int>& matching) {
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  CycleCount out;
  for (int p0 = 0; p0 < 2 * n; ++p0) {
    if (seen[static_cast<std::size_t>(p0)]) continue;
    bool has_turnback = false;
    int p = p0;
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      const int q = matching[static_cast<std::size_t>(p)];
      seen[static_cast<std::size_t>(q)] = 1;
      if ((p < n) == (q < n)) has_turnback = true;  // same-side arc
      p = q < n ? q + n : q - n;  // closure arc joins input i to output i
    } while (p != p0);
    if (has_turnback)
      ++out.ntriv;
    else
      ++out.triv;
  }
  return out;
}

}  // namespace detail

CycleCount cycle_close(const Circuit& t) {
  if (t.out_arity != t.in_arity)
    throw shape_error("cycle_close: term has arity (" +
                      std::to_string(t.out_arity) + "," +
                      std::to_string(t.in_arity) + "), not square");
  const TlDiagram d = reduce_term(t);
  CycleCount out = detail::closure_components(d.n_bottom(), d.matching());
  out.ntriv += static_cast<int>(d.loops());
  return out;
}

Representation<RationalFunctionSemiring> standard_rep() {
  using S = RationalFunctionSemiring;
  const RationalFunction d = RationalFunction::variable();
  const RationalFunction one(Rat(1));
  const RationalFunction two(Rat(2));
  Hypermatrix<S> cap(2, 0, 2);
  cap.at({}, {1, 1}) = two - d;
  cap.at({}, {2, 1}) = d - two;
  cap.at({}, {2, 2}) = one;
  Hypermatrix<S> cup(2, 2, 0);
  cup.at({1, 1}, {}) = one / (two - d);
  cup.at({2, 1}, {}) = one;
  cup.at({2, 2}, {}) = one;
  std::map<std::string, Hypermatrix<S>> mu;
  mu.emplace("cup", std::move(cup));
  mu.emplace("cap", std::move(cap));
  return Representation<S>(2, tl_signature(), std::move(mu));
}

}  // namespace prokit
