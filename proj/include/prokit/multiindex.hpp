// Multi-indices over [N] = {1..N} and their linear offsets.
//
// Conventions (fixed throughout the library):
//   * digits are 1-based, matching the written form a^I_J;
//   * a multi-index of length r addresses big-endian: the FIRST digit is the
//     most significant, offset(I) = sum (I[k]-1) * N^(r-1-k);
//   * an entry table of shape (m,n) is addressed offset(I)*N^n + offset(J).
//
// The digit codec splits one index over [M*N] into (I%M, I/M) per digit via
// i = (q-1)*M + r with 1 <= r <= M; `combine` is its inverse.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prokit/errors.hpp"

namespace prokit {

using Index = std::vector<int>;  // 1-based digits

inline void check_index(const Index& idx, int base, const char* what) {
  for (int d : idx)
    if (d < 1 || d > base)
      throw shape_error(std::string(what) + ": digit " + std::to_string(d) +
                        " out of range 1.." + std::to_string(base));
}

// N^r as a size, guarded against absurd table sizes.
inline std::size_t pow_size(int base, int rank) {
  std::size_t out = 1;
  for (int i = 0; i < rank; ++i) {
    if (out > (std::size_t(1) << 40) / static_cast<std::size_t>(base))
      throw shape_error("entry table too large: " + std::to_string(base) + "^" +
                        std::to_string(rank));
    out *= static_cast<std::size_t>(base);
  }
  return out;
}

inline std::size_t offset_of(const Index& idx, int base) {
  std::size_t off = 0;
  for (int d : idx) off = off * static_cast<std::size_t>(base) +
                          static_cast<std::size_t>(d - 1);
  return off;
}

inline Index index_of(std::size_t offset, int base, int rank) {
  Index idx(static_cast<std::size_t>(rank));
  for (int k = rank - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] =
        static_cast<int>(offset % static_cast<std::size_t>(base)) + 1;
    offset /= static_cast<std::size_t>(base);
  }
  return idx;
}

// (I%M, I/M): per digit i = (q-1)*M + r with r in 1..M.
inline std::pair<Index, Index> mod_div(const Index& idx, int M) {
  if (M < 1) throw shape_error("mod_div: base must be >= 1");
  Index rem, quot;
  rem.reserve(idx.size());
  quot.reserve(idx.size());
  for (int d : idx) {
    if (d < 1) throw shape_error("mod_div: digits must be >= 1");
    rem.push_back((d - 1) % M + 1);
    quot.push_back((d - 1) / M + 1);
  }
  return {std::move(rem), std::move(quot)};
}

// Inverse of mod_div: digitwise (quot-1)*M + rem.
inline Index combine(const Index& rem, const Index& quot, int M) {
  if (rem.size() != quot.size()) throw shape_error("combine: length mismatch");
  Index out(rem.size());
  for (std::size_t k = 0; k < rem.size(); ++k)
    out[k] = (quot[k] - 1) * M + rem[k];
  return out;
}

// I + [M^r]: add M to every digit (block shift used by the quasi-direct sum).
inline Index shifted(const Index& idx, int M) {
  Index out(idx);
  for (int& d : out) d += M;
  return out;
}

inline std::string index_str(const Index& idx) {
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k]);
  }
  return s + "]";
}

}  // namespace prokit
