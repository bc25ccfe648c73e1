#include "prokit/automata.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace prokit {

namespace detail {

void check_letter(const Letter& a) {
  if (a.empty()) throw value_error("automaton: empty letter name");
  if (a == kStartChip || a == kFinishChip)
    throw value_error("automaton: letter name '" + a + "' is reserved");
}

}  // namespace detail

Word make_word(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) w.push_back(std::string(1, c));
  return w;
}

Word word_from_digits(const Index& u) {
  Word w;
  w.reserve(u.size());
  for (int d : u) w.push_back(std::to_string(d));
  return w;
}

Signature word_signature(const std::vector<Letter>& letters) {
  std::vector<ChipDecl> chips{{kStartChip, 1, 0}, {kFinishChip, 0, 1}};
  for (const Letter& a : letters) {
    detail::check_letter(a);
    chips.push_back({a, 1, 1});
  }
  return Signature(std::move(chips));
}

CircuitPtr word_to_circuit(const Word& w) {
  CircuitPtr c = chip(ChipDecl{kStartChip, 1, 0});
  for (const Letter& a : w) {
    detail::check_letter(a);
    c = vcomp(chip(ChipDecl{a, 1, 1}), c);
  }
  return vcomp(chip(ChipDecl{kFinishChip, 0, 1}), c);
}

Index word_odot(const Index& u, const Index& v, int M) {
  if (M < 1) throw value_error("word_odot: base must be >= 1");
  if (u.size() != v.size()) throw value_error("word_odot: length mismatch");
  check_index(u, M, "word_odot: first word");
  for (int d : v)
    if (d < 1) throw value_error("word_odot: second word has a digit < 1");
  return combine(u, v, M);
}

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

int count_slots(const Tree& t) {
  if (t.is_slot()) {
    if (!t.children.empty())
      throw value_error("tree: an unlabeled slot cannot have children");
    return 1;
  }
  int n = 0;
  for (const Tree& c : t.children) n += count_slots(c);
  return n;
}

TreeAutomaton::TreeAutomaton(int n_states, std::map<Letter, int> arities,
                             std::vector<TreeRule> rules,
                             std::vector<int> finals)
    : n_(n_states),
      arities_(std::move(arities)),
      rules_(std::move(rules)),
      finals_(std::move(finals)) {
  if (n_ <= 0) throw value_error("tree automaton: state count must be positive");
  for (const auto& [a, k] : arities_) {
    detail::check_letter(a);
    if (k < 0) throw value_error("tree automaton: negative arity for '" + a + "'");
  }
  auto check_state = [this](int q, const char* what) {
    if (q < 1 || q > n_)
      throw value_error(std::string("tree automaton: ") + what +
                        " state out of range");
  };
  for (const auto& r : rules_) {
    auto it = arities_.find(r.letter);
    if (it == arities_.end())
      throw value_error("tree automaton: rule letter '" + r.letter +
                        "' not in the alphabet");
    if (static_cast<int>(r.children.size()) != it->second)
      throw value_error("tree automaton: rule for '" + r.letter +
                        "' has the wrong number of child states");
    for (int q : r.children) check_state(q, "rule child");
    check_state(r.to, "rule target");
    table_[{r.letter, r.children}].insert(r.to);
  }
  for (int q : finals_) check_state(q, "final");
  std::sort(finals_.begin(), finals_.end());
  finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
}

bool TreeAutomaton::is_final(int q) const {
  return std::binary_search(finals_.begin(), finals_.end(), q);
}

int TreeAutomaton::arity(const Letter& a) const {
  auto it = arities_.find(a);
  if (it == arities_.end())
    throw value_error("tree automaton: unknown letter '" + a + "'");
  return it->second;
}

const std::set<int>& TreeAutomaton::targets(
    const Letter& a, const std::vector<int>& children) const {
  auto it = table_.find({a, children});
  return it == table_.end() ? empty_ : it->second;
}

std::set<int> tree_delta_star(const TreeAutomaton& A, const Tree& t) {
  if (t.is_slot())
    throw value_error("tree_delta_star: tree has an unlabeled slot");
  const int k = A.arity(t.letter);
  if (static_cast<int>(t.children.size()) != k)
    throw value_error("tree_delta_star: '" + t.letter + "' used with " +
                      std::to_string(t.children.size()) +
                      " children, declared arity " + std::to_string(k));
  std::vector<std::set<int>> child_sets;
  child_sets.reserve(t.children.size());
  for (const Tree& c : t.children) {
    child_sets.push_back(tree_delta_star(A, c));
    if (child_sets.back().empty()) return {};
  }
  std::set<int> out;
  std::vector<std::set<int>::const_iterator> pick;
  pick.reserve(child_sets.size());
  for (const auto& s : child_sets) pick.push_back(s.begin());
  for (;;) {
    std::vector<int> children;
    children.reserve(pick.size());
    for (auto it : pick) children.push_back(*it);
    const auto& ts = A.targets(t.letter, children);
    out.insert(ts.begin(), ts.end());
    int pos = static_cast<int>(pick.size()) - 1;
    while (pos >= 0) {
      auto& it = pick[static_cast<std::size_t>(pos)];
      if (++it != child_sets[static_cast<std::size_t>(pos)].end()) break;
      it = child_sets[static_cast<std::size_t>(pos)].begin();
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

bool tree_accepts(const TreeAutomaton& A, const Tree& t) {
  for (int q : tree_delta_star(A, t))
    if (A.is_final(q)) return true;
  return false;
}

Signature tree_signature(const std::map<Letter, int>& arities) {
  std::vector<ChipDecl> chips{{kStartChip, 1, 0}, {kFinishChip, 0, 1}};
  for (const auto& [a, k] : arities) {
    detail::check_letter(a);
    chips.push_back({a, k, 1});
  }
  return Signature(std::move(chips));
}

namespace {

CircuitPtr tree_tilde(const Tree& t) {
  if (t.is_slot()) {
    if (!t.children.empty())
      throw value_error("tree: an unlabeled slot cannot have children");
    return wire();
  }
  detail::check_letter(t.letter);
  CircuitPtr kids = empty_circuit();
  for (const Tree& c : t.children) kids = hcomp(kids, tree_tilde(c));
  return vcomp(kids,
               chip(ChipDecl{t.letter, static_cast<int>(t.children.size()), 1}));
}

}  // namespace

CircuitPtr tree_to_circuit(const Tree& t) {
  const int slots = count_slots(t);
  CircuitPtr caps = empty_circuit();
  for (int i = 0; i < slots; ++i)
    caps = hcomp(caps, chip(ChipDecl{kFinishChip, 0, 1}));
  return vcomp(vcomp(caps, tree_tilde(t)), chip(ChipDecl{kStartChip, 1, 0}));
}

// ---------------------------------------------------------------------------
// Branching automata
// ---------------------------------------------------------------------------

BranchingAutomaton::BranchingAutomaton(int n_states, std::vector<Letter> alphabet,
                                       std::vector<SeqEdge> seq,
                                       std::vector<ForkEdge> forks,
                                       std::vector<JoinEdge> joins,
                                       std::vector<int> initials,
                                       std::vector<int> finals)
    : n_(n_states),
      alphabet_(std::move(alphabet)),
      seq_(std::move(seq)),
      forks_(std::move(forks)),
      joins_(std::move(joins)),
      initials_(std::move(initials)),
      finals_(std::move(finals)) {
  if (n_ <= 0)
    throw value_error("branching automaton: state count must be positive");
  auto check_state = [this](int q, const char* what) {
    if (q < 1 || q > n_)
      throw value_error(std::string("branching automaton: ") + what +
                        " state out of range");
  };
  std::set<Letter> seen;
  for (const Letter& a : alphabet_) {
    detail::check_letter(a);
    if (!seen.insert(a).second)
      throw value_error("branching automaton: duplicate letter '" + a + "'");
  }
  for (const auto& e : seq_) {
    if (!seen.count(e.letter))
      throw value_error("branching automaton: edge letter '" + e.letter +
                        "' not in the alphabet");
    check_state(e.from, "edge source");
    check_state(e.to, "edge target");
  }
  for (const auto& e : forks_) {
    if (e.to.size() < 2)
      throw value_error("branching automaton: fork width must be >= 2");
    check_state(e.from, "fork source");
    for (int q : e.to) check_state(q, "fork branch");
    if (seen.count(fork_chip_name(static_cast<int>(e.to.size()))))
      throw value_error("branching automaton: letter collides with a fork chip name");
  }
  for (const auto& e : joins_) {
    if (e.from.size() < 2)
      throw value_error("branching automaton: join width must be >= 2");
    for (int q : e.from) check_state(q, "join branch");
    check_state(e.to, "join target");
    if (seen.count(join_chip_name(static_cast<int>(e.from.size()))))
      throw value_error("branching automaton: letter collides with a join chip name");
  }
  for (int q : initials_) check_state(q, "initial");
  for (int q : finals_) check_state(q, "final");
}

std::set<int> BranchingAutomaton::fork_widths() const {
  std::set<int> out;
  for (const auto& e : forks_) out.insert(static_cast<int>(e.to.size()));
  return out;
}

std::set<int> BranchingAutomaton::join_widths() const {
  std::set<int> out;
  for (const auto& e : joins_) out.insert(static_cast<int>(e.from.size()));
  return out;
}

std::string fork_chip_name(int width) {
  return "fork" + std::to_string(width);
}

std::string join_chip_name(int width) {
  return "join" + std::to_string(width);
}

Signature branching_signature(const BranchingAutomaton& A) {
  std::vector<ChipDecl> chips{{kStartChip, 1, 0}, {kFinishChip, 0, 1}};
  for (const Letter& a : A.alphabet()) chips.push_back({a, 1, 1});
  for (int w : A.fork_widths()) chips.push_back({fork_chip_name(w), w, 1});
  for (int w : A.join_widths()) chips.push_back({join_chip_name(w), 1, w});
  return Signature(std::move(chips));
}

namespace {

bool mentions_chip(const Circuit& t, const std::string& name) {
  switch (t.kind) {
    case CircuitKind::Empty:
    case CircuitKind::Wire:
      return false;
    case CircuitKind::Chip:
      return t.chip_name == name;
    case CircuitKind::HComp:
    case CircuitKind::VComp:
      return mentions_chip(*t.first, name) || mentions_chip(*t.second, name);
  }
  return false;
}

}  // namespace

bool branching_accepts(const BranchingAutomaton& A, const CircuitPtr& t) {
  if (!t) throw value_error("branching_accepts: null circuit");
  if (t->out_arity != 1 || t->in_arity != 1)
    throw value_error("branching_accepts: circuit must have arity (1,1)");
  if (mentions_chip(*t, kStartChip) || mentions_chip(*t, kFinishChip))
    throw value_error(
        "branching_accepts: circuit may not use the start/finish chips");
  const auto mu = branching_rep<BooleanSemiring>(A);
  const CircuitPtr closed =
      vcomp(chip(ChipDecl{kFinishChip, 0, 1}),
            vcomp(t, chip(ChipDecl{kStartChip, 1, 0})));
  return !detail::boolean_support(mu, *closed).empty();
}

// ---------------------------------------------------------------------------
// Sparse boolean evaluation and circuit-automaton acceptance
// ---------------------------------------------------------------------------

namespace detail {

namespace {

using Support = std::vector<std::pair<std::size_t, std::size_t>>;

Support support_of(const Representation<BooleanSemiring>& mu, const Circuit& t) {
  const int N = mu.base_dim();
  switch (t.kind) {
    case CircuitKind::Empty:
      return {{0, 0}};
    case CircuitKind::Wire: {
      Support s;
      s.reserve(static_cast<std::size_t>(N));
      for (std::size_t i = 0; i < static_cast<std::size_t>(N); ++i)
        s.emplace_back(i, i);
      return s;
    }
    case CircuitKind::Chip: {
      const auto& h = mu.assignment(t.chip_name);
      if (h.out_rank() != t.chip_out || h.in_rank() != t.chip_in)
        throw value_error("eval: chip '" + t.chip_name +
                          "' used with an arity differing from its assignment");
      Support s;
      for (std::size_t i = 0; i < h.out_size(); ++i)
        for (std::size_t j = 0; j < h.in_size(); ++j)
          if (h.entry(i, j) != 0) s.emplace_back(i, j);
      return s;
    }
    case CircuitKind::HComp: {
      const Support a = support_of(mu, *t.first);
      const Support b = support_of(mu, *t.second);
      const std::size_t ob = pow_size(N, t.second->out_arity);
      const std::size_t ib = pow_size(N, t.second->in_arity);
      Support s;
      s.reserve(a.size() * b.size());
      for (const auto& [ia, ja] : a)
        for (const auto& [ib2, jb] : b)
          s.emplace_back(ia * ob + ib2, ja * ib + jb);
      return s;
    }
    case CircuitKind::VComp: {
      const Support a = support_of(mu, *t.first);   // top (m, k)
      Support b = support_of(mu, *t.second);        // bottom (k, p)
      std::sort(b.begin(), b.end());
      Support s;
      for (const auto& [i, mid] : a) {
        auto lo = std::lower_bound(
            b.begin(), b.end(),
            std::make_pair(mid, static_cast<std::size_t>(0)));
        for (auto it = lo; it != b.end() && it->first == mid; ++it)
          s.emplace_back(i, it->second);
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return s;
    }
  }
  throw value_error("eval: unknown node kind");
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> boolean_support(
    const Representation<BooleanSemiring>& mu, const Circuit& t) {
  Support s = support_of(mu, t);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

bool accepts(const ProAutomaton<BooleanSemiring>& aut, const CircuitPtr& t) {
  if (!t) throw value_error("accepts: null circuit");
  const auto support = detail::boolean_support(aut.rep(), *t);
  const int N = aut.base_dim();
  std::unordered_map<std::size_t, bool> upper_memo, lower_memo;
  auto scored = [&](const WordAutomaton<BooleanSemiring>& A, std::size_t off,
                    int len, std::unordered_map<std::size_t, bool>& memo) {
    auto it = memo.find(off);
    if (it != memo.end()) return it->second;
    const bool ok =
        behavior_coeff(A, word_from_digits(index_of(off, N, len))) != 0;
    memo.emplace(off, ok);
    return ok;
  };
  for (const auto& [u, v] : support)
    if (scored(aut.upper_language(), u, t->out_arity, upper_memo) &&
        scored(aut.lower_language(), v, t->in_arity, lower_memo))
      return true;
  return false;
}

}  // namespace prokit
