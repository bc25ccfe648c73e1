// Multilinear representations of free circuit PROs: a base dimension plus one
// hypermatrix per chip, evaluated over terms by structural recursion.  The
// pointwise (Kronecker) product of two representations evaluates chipwise on
// every circuit; the block-embedding sum evaluates chipwise exactly on
// connected circuits.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "prokit/circuit.hpp"
#include "prokit/hypermat.hpp"

namespace prokit {

template <class S>
class Representation {
 public:
  using matrix_type = Hypermatrix<S>;

  // Validates every shape eagerly: each chip of `sig` must be assigned a
  // hypermatrix of base dimension `base_dim` with exactly the chip's ranks,
  // and nothing else may be assigned.  eval can then never fail on shape.
  Representation(int base_dim, Signature sig,
                 std::map<std::string, matrix_type> assignments)
      : N_(base_dim), sig_(std::move(sig)), mu_(std::move(assignments)) {
    if (N_ <= 0)
      throw value_error("representation: base dimension must be positive");
    for (const auto& c : sig_.chips()) {
      auto it = mu_.find(c.name);
      if (it == mu_.end())
        throw value_error("representation: chip '" + c.name +
                          "' has no assignment");
      const auto& h = it->second;
      if (h.base_dim() != N_ || h.out_rank() != c.out || h.in_rank() != c.in)
        throw value_error("representation: assignment for '" + c.name +
                          "' has the wrong shape");
    }
    if (mu_.size() != sig_.chips().size())
      throw value_error("representation: assignment for a chip outside the signature");
  }

  int base_dim() const { return N_; }
  const Signature& signature() const { return sig_; }
  const std::map<std::string, matrix_type>& assignments() const { return mu_; }

  const matrix_type& assignment(const std::string& name) const {
    auto it = mu_.find(name);
    if (it == mu_.end())
      throw value_error("representation: no assignment for chip '" + name +
                        "'");
    return it->second;
  }

 private:
  int N_;
  Signature sig_;
  std::map<std::string, matrix_type> mu_;
};

// Structural evaluation.  Together with the constructor checks this is a PRO
// morphism: juxtaposition and connection of terms map to the corresponding
// hypermatrix compositions, units map to units, and axiom-equal terms get
// equal values.
template <class S>
Hypermatrix<S> eval(const Representation<S>& mu, const Circuit& t) {
  switch (t.kind) {
    case CircuitKind::Empty:
      return Hypermatrix<S>::scalar(mu.base_dim(), S::one());
    case CircuitKind::Wire:
      return identity<S>(mu.base_dim(), 1);
    case CircuitKind::Chip: {
      const auto& h = mu.assignment(t.chip_name);
      if (h.out_rank() != t.chip_out || h.in_rank() != t.chip_in)
        throw value_error("eval: chip '" + t.chip_name +
                          "' used with an arity differing from its assignment");
      return h;
    }
    case CircuitKind::HComp:
      return hcomp(eval(mu, *t.first), eval(mu, *t.second));
    case CircuitKind::VComp:
      return vcomp(eval(mu, *t.first), eval(mu, *t.second));
  }
  throw value_error("eval: unknown node kind");
}

namespace detail {

inline bool same_signature(const Signature& a, const Signature& b) {
  if (a.chips().size() != b.chips().size()) return false;
  for (const auto& c : a.chips()) {
    if (!b.has(c.name)) return false;
    const auto& d = b.chip(c.name);
    if (d.out != c.out || d.in != c.in) return false;
  }
  return true;
}

}  // namespace detail

// Pointwise product: base dimensions multiply, assignments combine by the
// base-dimension Kronecker product.  Evaluation commutes with it on every
// circuit.
template <class S>
Representation<S> hadamard(const Representation<S>& mu,
                           const Representation<S>& nu) {
  if (!detail::same_signature(mu.signature(), nu.signature()))
    throw value_error("hadamard: representations have different signatures");
  std::map<std::string, Hypermatrix<S>> out;
  for (const auto& [name, h] : mu.assignments())
    out.emplace(name, kronecker(h, nu.assignment(name)));
  return Representation<S>(mu.base_dim() * nu.base_dim(), mu.signature(),
                           std::move(out));
}

// Block-embedding sum: base dimensions add, assignments combine by the
// block embedding.  Evaluation commutes with it on connected circuits only;
// a pair of parallel wires already breaks the identity at a mixed index.
template <class S>
Representation<S> quasi_sum(const Representation<S>& mu,
                            const Representation<S>& nu) {
  if (!detail::same_signature(mu.signature(), nu.signature()))
    throw value_error("quasi_sum: representations have different signatures");
  std::map<std::string, Hypermatrix<S>> out;
  for (const auto& [name, h] : mu.assignments())
    out.emplace(name, quasi_direct_sum(h, nu.assignment(name)));
  return Representation<S>(mu.base_dim() + nu.base_dim(), mu.signature(),
                           std::move(out));
}

}  // namespace prokit
