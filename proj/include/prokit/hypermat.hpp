// Hypermatrices over a commutative semiring: the bigraded family K(N,m,n) of
// entry tables a^I_J with I in [N]^m (outputs, upper) and J in [N]^n (inputs,
// lower), together with the structure that makes the family a PRO and a
// module:
//
//   hcomp  (A <-> B)   juxtaposition:  c^{II'}_{JJ'} = a^I_J * b^{I'}_{J'}
//   vcomp  (A updown B) plugging:      c^I_J = sum_K a^I_K * b^K_J
//   add / scale        entrywise module structure
//   kronecker (A . B)  base-dimension product K(M) x K(N) -> K(MN)
//   quasi_direct_sum   block embedding K(M) x K(N) -> K(M+N)
//   basis_e / identity / trace / decompose
//
// Storage is dense row-major with the output offset major:
//   linear = offset(I) * N^n + offset(J),   big-endian 1-based digits.
// K(N,0,0) is a single scalar that still remembers its base dimension N.
// All shape violations throw shape_error; there is no broadcasting.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prokit/errors.hpp"
#include "prokit/multiindex.hpp"

namespace prokit {

template <class S>
class Hypermatrix {
 public:
  using value_type = typename S::value_type;

  Hypermatrix(int N, int out_rank, int in_rank)
      : N_(N), m_(out_rank), n_(in_rank) {
    if (N < 1) throw shape_error("base dimension must be >= 1");
    if (out_rank < 0 || in_rank < 0) throw shape_error("ranks must be >= 0");
    entries_.assign(pow_size(N, m_ + n_), S::zero());
  }

  static Hypermatrix scalar(int N, value_type v) {
    Hypermatrix h(N, 0, 0);
    h.entries_[0] = std::move(v);
    return h;
  }

  int base_dim() const { return N_; }
  int out_rank() const { return m_; }
  int in_rank() const { return n_; }
  std::size_t out_size() const { return pow_size(N_, m_); }
  std::size_t in_size() const { return pow_size(N_, n_); }
  std::size_t size() const { return entries_.size(); }

  const value_type& operator[](std::size_t linear) const { return entries_[linear]; }
  value_type& operator[](std::size_t linear) { return entries_[linear]; }

  const value_type& entry(std::size_t out_off, std::size_t in_off) const {
    return entries_[out_off * in_size() + in_off];
  }
  value_type& entry(std::size_t out_off, std::size_t in_off) {
    return entries_[out_off * in_size() + in_off];
  }

  const value_type& at(const Index& I, const Index& J) const {
    check_shape(I, J);
    return entry(offset_of(I, N_), offset_of(J, N_));
  }
  value_type& at(const Index& I, const Index& J) {
    check_shape(I, J);
    return entry(offset_of(I, N_), offset_of(J, N_));
  }

  bool same_shape(const Hypermatrix& o) const {
    return N_ == o.N_ && m_ == o.m_ && n_ == o.n_;
  }

 private:
  void check_shape(const Index& I, const Index& J) const {
    if (static_cast<int>(I.size()) != m_ || static_cast<int>(J.size()) != n_)
      throw shape_error("index ranks (" + std::to_string(I.size()) + "," +
                        std::to_string(J.size()) + ") do not match shape (" +
                        std::to_string(m_) + "," + std::to_string(n_) + ")");
    check_index(I, N_, "output index");
    check_index(J, N_, "input index");
  }

  int N_, m_, n_;
  std::vector<value_type> entries_;
};

// ---- basic constructors ---------------------------------------------------

template <class S>
Hypermatrix<S> basis_e(int N, int p, int q, const Index& K, const Index& L) {
  Hypermatrix<S> h(N, p, q);
  h.at(K, L) = S::one();
  return h;
}

// I(N)^{<->n}: entry 1 exactly when the output and input indices agree.
template <class S>
Hypermatrix<S> identity(int N, int n) {
  Hypermatrix<S> h(N, n, n);
  for (std::size_t off = 0; off < h.out_size(); ++off)
    h.entry(off, off) = S::one();
  return h;
}

// ---- PRO / module operations ----------------------------------------------

template <class S>
Hypermatrix<S> hcomp(const Hypermatrix<S>& a, const Hypermatrix<S>& b) {
  if (a.base_dim() != b.base_dim())
    throw shape_error("hcomp: base dimensions differ");
  const int N = a.base_dim();
  Hypermatrix<S> c(N, a.out_rank() + b.out_rank(), a.in_rank() + b.in_rank());
  const std::size_t aU = a.out_size(), aL = a.in_size();
  const std::size_t bU = b.out_size(), bL = b.in_size();
  for (std::size_t iu = 0; iu < aU; ++iu)
    for (std::size_t ju = 0; ju < bU; ++ju)
      for (std::size_t il = 0; il < aL; ++il)
        for (std::size_t jl = 0; jl < bL; ++jl)
          c.entry(iu * bU + ju, il * bL + jl) =
              S::mul(a.entry(iu, il), b.entry(ju, jl));
  return c;
}

template <class S>
Hypermatrix<S> vcomp(const Hypermatrix<S>& a, const Hypermatrix<S>& b) {
  if (a.base_dim() != b.base_dim())
    throw shape_error("vcomp: base dimensions differ");
  if (a.in_rank() != b.out_rank())
    throw shape_error("vcomp: inner ranks differ (" +
                      std::to_string(a.in_rank()) + " vs " +
                      std::to_string(b.out_rank()) + ")");
  Hypermatrix<S> c(a.base_dim(), a.out_rank(), b.in_rank());
  const std::size_t R = a.out_size(), K = a.in_size(), C = b.in_size();
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t k = 0; k < K; ++k) {
      const auto& aik = a.entry(i, k);
      if (S::eq(aik, S::zero())) continue;
      for (std::size_t j = 0; j < C; ++j)
        c.entry(i, j) = S::add(c.entry(i, j), S::mul(aik, b.entry(k, j)));
    }
  return c;
}

template <class S>
Hypermatrix<S> add(const Hypermatrix<S>& a, const Hypermatrix<S>& b) {
  if (!a.same_shape(b)) throw shape_error("add: shapes differ");
  Hypermatrix<S> c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = S::add(c[i], b[i]);
  return c;
}

template <class S>
Hypermatrix<S> scale(const typename S::value_type& s, const Hypermatrix<S>& a) {
  Hypermatrix<S> c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = S::mul(s, c[i]);
  return c;
}

template <class S>
bool equal(const Hypermatrix<S>& a, const Hypermatrix<S>& b) {
  if (!a.same_shape(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!S::eq(a[i], b[i])) return false;
  return true;
}

// ---- base-dimension calculus ----------------------------------------------

// Kronecker product: c^I_J = a^{I%M}_{J%M} * b^{I/M}_{J/M}, result over M*N.
template <class S>
Hypermatrix<S> kronecker(const Hypermatrix<S>& a, const Hypermatrix<S>& b) {
  if (a.out_rank() != b.out_rank() || a.in_rank() != b.in_rank())
    throw shape_error("kronecker: ranks differ");
  const int M = a.base_dim(), N = b.base_dim();
  const int p = a.out_rank(), q = a.in_rank();
  Hypermatrix<S> c(M * N, p, q);
  const int MN = M * N;
  for (std::size_t up = 0; up < c.out_size(); ++up) {
    const Index I = index_of(up, MN, p);
    const auto [Ir, Iq] = mod_div(I, M);
    const std::size_t aUp = offset_of(Ir, M), bUp = offset_of(Iq, N);
    for (std::size_t lo = 0; lo < c.in_size(); ++lo) {
      const Index J = index_of(lo, MN, q);
      const auto [Jr, Jq] = mod_div(J, M);
      c.entry(up, lo) = S::mul(a.entry(aUp, offset_of(Jr, M)),
                               b.entry(bUp, offset_of(Jq, N)));
    }
  }
  return c;
}

// Quasi-direct sum: the first block keeps indices in [M], the second block is
// shifted by M, and entries mixing the two ranges are zero.  In the (0,0)
// scalar case both blocks land on the single entry and their values add.
template <class S>
Hypermatrix<S> quasi_direct_sum(const Hypermatrix<S>& a, const Hypermatrix<S>& b) {
  if (a.out_rank() != b.out_rank() || a.in_rank() != b.in_rank())
    throw shape_error("quasi_direct_sum: ranks differ");
  const int M = a.base_dim(), N = b.base_dim();
  const int p = a.out_rank(), q = a.in_rank();
  Hypermatrix<S> c(M + N, p, q);
  const int MN = M + N;
  if (p == 0 && q == 0) {
    // Fully scalar case: both block conditions hold vacuously, so the blocks
    // overlap on the single entry and their contributions add.  This is the
    // convention under which the elementary-table expansion and the vertical
    // compatibility law stay valid at rank zero.
    Hypermatrix<S> s(MN, 0, 0);
    s.entry(0, 0) = S::add(a.entry(0, 0), b.entry(0, 0));
    return s;
  }
  // An empty index on one side qualifies for both blocks vacuously; the other
  // side's digits then decide which block (or neither) supplies the entry.
  auto all_low = [&](const Index& idx) {
    for (int d : idx)
      if (d > M) return false;
    return true;
  };
  auto all_high = [&](const Index& idx) {
    for (int d : idx)
      if (d <= M) return false;
    return true;
  };
  for (std::size_t up = 0; up < c.out_size(); ++up) {
    const Index I = index_of(up, MN, p);
    const bool li = all_low(I), hi = all_high(I);
    if (!li && !hi) continue;
    for (std::size_t lo = 0; lo < c.in_size(); ++lo) {
      const Index J = index_of(lo, MN, q);
      if (li && all_low(J)) {
        c.entry(up, lo) = a.entry(offset_of(I, M), offset_of(J, M));
      } else if (hi && all_high(J)) {
        Index Is(I), Js(J);
        for (int& d : Is) d -= M;
        for (int& d : Js) d -= M;
        c.entry(up, lo) = b.entry(offset_of(Is, N), offset_of(Js, N));
      }
    }
  }
  return c;
}

// Trace of a square-graded element viewed as an N^n x N^n matrix.
template <class S>
typename S::value_type trace(const Hypermatrix<S>& a) {
  if (a.out_rank() != a.in_rank())
    throw shape_error("trace: out/in ranks differ");
  auto acc = S::zero();
  for (std::size_t off = 0; off < a.out_size(); ++off)
    acc = S::add(acc, a.entry(off, off));
  return acc;
}

// Unique expansion over the elementary tables: the nonzero entries.
template <class S>
struct BasisTerm {
  Index out;
  Index in;
  typename S::value_type coeff;
};

template <class S>
std::vector<BasisTerm<S>> decompose(const Hypermatrix<S>& a) {
  std::vector<BasisTerm<S>> terms;
  for (std::size_t up = 0; up < a.out_size(); ++up)
    for (std::size_t lo = 0; lo < a.in_size(); ++lo)
      if (!S::eq(a.entry(up, lo), S::zero()))
        terms.push_back({index_of(up, a.base_dim(), a.out_rank()),
                         index_of(lo, a.base_dim(), a.in_rank()),
                         a.entry(up, lo)});
  return terms;
}

}  // namespace prokit
