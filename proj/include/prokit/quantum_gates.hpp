#pragma once
// Quantum gates over complex amplitudes: the Hadamard and controlled-phase
// gates, the four-layer network contracting to the controlled-not matrix, and
// gate application to qubit states by stacking.
//
// Qubit values are 0/1 externally, matching the usual quantum-computing
// convention; the dense core numbers digits from 1, so the accessors here
// shift by one in a single place.

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "prokit/circuit.hpp"
#include "prokit/errors.hpp"
#include "prokit/hypermat.hpp"
#include "prokit/represent.hpp"
#include "prokit/semiring.hpp"

namespace prokit {

namespace detail {

// Translate a run of qubit values (0/1) into the core's 1-based digits.
inline Index qubit_digits(const std::vector<int>& bits) {
  Index out;
  out.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw value_error("qubit values must be 0 or 1");
    out.push_back(b + 1);
  }
  return out;
}

}  // namespace detail

// A pure k-qubit system: one amplitude per bit string, stored as a
// zero-output, k-input table over base dimension 2.
class QubitState {
 public:
  QubitState(int k, Hypermatrix<ComplexSemiring> amplitudes)
      : k_(k), amplitudes_(std::move(amplitudes)) {
    if (k < 0) throw shape_error("qubit count must be >= 0");
    if (amplitudes_.base_dim() != 2 || amplitudes_.out_rank() != 0 ||
        amplitudes_.in_rank() != k)
      throw shape_error("state amplitudes must have shape (0," +
                        std::to_string(k) + ") over base dimension 2");
  }

  int k() const { return k_; }
  const Hypermatrix<ComplexSemiring>& amplitudes() const { return amplitudes_; }

 private:
  int k_;
  Hypermatrix<ComplexSemiring> amplitudes_;
};

// The basis state |bits...> (amplitude one on the given bit string).
inline QubitState basis_state(const std::vector<int>& bits) {
  Hypermatrix<ComplexSemiring> amp(2, 0, static_cast<int>(bits.size()));
  amp.at({}, detail::qubit_digits(bits)) = ComplexSemiring::one();
  return QubitState(static_cast<int>(bits.size()), std::move(amp));
}

inline std::complex<double> amplitude(const QubitState& s,
                                      const std::vector<int>& bits) {
  return s.amplitudes().at({}, detail::qubit_digits(bits));
}

// Entry accessor for gates with 0/1 qubit indices on both sides.
inline std::complex<double> gate_entry(const Hypermatrix<ComplexSemiring>& h,
                                       const std::vector<int>& out_bits,
                                       const std::vector<int>& in_bits) {
  return h.at(detail::qubit_digits(out_bits), detail::qubit_digits(in_bits));
}

// Single-qubit Hadamard gate: every entry 1/sqrt(2) except the (1,1) entry,
// which is -1/sqrt(2).
inline Hypermatrix<ComplexSemiring> hadamard_gate() {
  Hypermatrix<ComplexSemiring> h(2, 1, 1);
  const double s = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      h.at({a + 1}, {b + 1}) = (a == 1 && b == 1) ? -s : s;
  return h;
}

// Two-qubit controlled-phase gate: diagonal with entries 1,1,1,i in bit
// order 00,01,10,11.
inline Hypermatrix<ComplexSemiring> cv_gate() {
  Hypermatrix<ComplexSemiring> v(2, 2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      v.at({a + 1, b + 1}, {a + 1, b + 1}) =
          (a == 1 && b == 1) ? std::complex<double>(0.0, 1.0)
                             : std::complex<double>(1.0, 0.0);
  return v;
}

// The gate alphabet: H on one qubit, V on two.
inline Signature quantum_signature() {
  return Signature({ChipDecl{"H", 1, 1}, ChipDecl{"V", 2, 2}});
}

inline Representation<ComplexSemiring> quantum_rep() {
  std::map<std::string, Hypermatrix<ComplexSemiring>> mu;
  mu.emplace("H", hadamard_gate());
  mu.emplace("V", cv_gate());
  return Representation<ComplexSemiring>(2, quantum_signature(),
                                         std::move(mu));
}

// The controlled-not network: H on the first qubit, two controlled-phase
// layers, and H on the first qubit again, read top to bottom.
inline CircuitPtr cnot_network() {
  const CircuitPtr h_layer =
      hcomp(chip(ChipDecl{"H", 1, 1}), wires(1));
  const CircuitPtr v = chip(ChipDecl{"V", 2, 2});
  return vcomp(vcomp(vcomp(h_layer, v), v), h_layer);
}

// The evaluated network: entry at outputs (a,b), inputs (c,d) is one exactly
// when b = d and c = a + b mod 2, zero otherwise.
inline Hypermatrix<ComplexSemiring> cnot_matrix() {
  return eval(quantum_rep(), *cnot_network());
}

// Apply a k-qubit gate by stacking the state on top of the gate.
inline QubitState apply_state(const QubitState& s,
                              const Hypermatrix<ComplexSemiring>& gate) {
  if (gate.base_dim() != 2 || gate.out_rank() != s.k() ||
      gate.in_rank() != s.k())
    throw shape_error("gate shape does not match the qubit count");
  return QubitState(s.k(), vcomp(s.amplitudes(), gate));
}

// Swap the output and input index blocks and conjugate every entry.  The
// dense core is generic over semirings and has no involution of its own.
inline Hypermatrix<ComplexSemiring> conjugate_transpose(
    const Hypermatrix<ComplexSemiring>& h) {
  Hypermatrix<ComplexSemiring> out(h.base_dim(), h.in_rank(), h.out_rank());
  for (std::size_t i = 0; i < h.out_size(); ++i)
    for (std::size_t j = 0; j < h.in_size(); ++j)
      out.entry(j, i) = std::conj(h.entry(i, j));
  return out;
}

// Largest entrywise deviation of gate * gate-adjoint from the identity.
inline double unitarity_residual(const Hypermatrix<ComplexSemiring>& h) {
  if (h.out_rank() != h.in_rank())
    throw shape_error("unitarity requires as many outputs as inputs");
  const auto product = vcomp(h, conjugate_transpose(h));
  const auto id = identity<ComplexSemiring>(h.base_dim(), h.out_rank());
  double worst = 0.0;
  for (std::size_t i = 0; i < product.out_size(); ++i)
    for (std::size_t j = 0; j < product.in_size(); ++j)
      worst = std::max(worst, std::abs(product.entry(i, j) - id.entry(i, j)));
  return worst;
}

// Whether a two-qubit state factors as a product of one-qubit states: the
// 2x2 amplitude table must have a vanishing determinant.
inline bool is_product_state(const QubitState& s) {
  if (s.k() != 2)
    throw value_error("the product-state test covers two-qubit states");
  const auto a = [&](int x, int y) { return amplitude(s, {x, y}); };
  const std::complex<double> det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return std::abs(det) <= ComplexSemiring::tolerance;
}

}  // namespace prokit
