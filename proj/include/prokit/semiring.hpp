// Commutative semiring instances, written as static-trait structs so that the
// hypermatrix core can be generic without virtual dispatch.
//
// Contract for a semiring S:
//   S::value_type                     element storage
//   S::zero(), S::one()               additive / multiplicative identities
//   S::add(a,b), S::mul(a,b)          commutative, associative, distributive
//   S::eq(a,b)                        equivalence compatible with add/mul
//   S::from_unsigned(k)               k-fold sum of one (used for N^n scalars)
//   S::to_string(a)                   human-readable rendering
//   S::name()                         stable tag used in file formats
//   S::exact                          true when eq is exact (not tolerance-based)
//
// Instances: Boolean, Natural (unbounded), Rational (canonical p/q),
// ComplexF64 (tolerance equality), RationalFunctionSemiring (functions of d).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

#include "prokit/polynomial.hpp"

namespace prokit {

struct BooleanSemiring {
  using value_type = std::uint8_t;  // 0 or 1; avoids vector<bool> proxies
  static constexpr bool exact = true;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(value_type a, value_type b) { return (a || b) ? 1 : 0; }
  static value_type mul(value_type a, value_type b) { return (a && b) ? 1 : 0; }
  static bool eq(value_type a, value_type b) { return (a != 0) == (b != 0); }
  static value_type from_unsigned(unsigned long long k) { return k ? 1 : 0; }
  static std::string to_string(value_type a) { return a ? "true" : "false"; }
  static const char* name() { return "boolean"; }
};

struct NaturalSemiring {
  using value_type = boost::multiprecision::cpp_int;
  static constexpr bool exact = true;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static bool eq(const value_type& a, const value_type& b) { return a == b; }
  static value_type from_unsigned(unsigned long long k) { return value_type(k); }
  static std::string to_string(const value_type& a) { return a.str(); }
  static const char* name() { return "natural"; }
};

struct RationalSemiring {
  using value_type = boost::multiprecision::cpp_rational;  // canonical lowest terms
  static constexpr bool exact = true;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type div(const value_type& a, const value_type& b) {
    if (b == 0) throw value_error("rational division by zero");
    return a / b;
  }
  static bool eq(const value_type& a, const value_type& b) { return a == b; }
  static value_type from_unsigned(unsigned long long k) { return value_type(k); }
  static std::string to_string(const value_type& a) {
    return boost::multiprecision::denominator(a) == 1
               ? boost::multiprecision::numerator(a).str()
               : a.str();
  }
  static const char* name() { return "rational"; }
};

struct ComplexSemiring {
  using value_type = std::complex<double>;
  static constexpr bool exact = false;
  // Absolute tolerance used by eq; configurable (CLI --tolerance).
  static inline double tolerance = 1e-12;
  static value_type zero() { return {0.0, 0.0}; }
  static value_type one() { return {1.0, 0.0}; }
  static value_type add(value_type a, value_type b) { return a + b; }
  static value_type mul(value_type a, value_type b) { return a * b; }
  static value_type sub(value_type a, value_type b) { return a - b; }
  static value_type div(value_type a, value_type b) { return a / b; }
  static bool eq(value_type a, value_type b) { return std::abs(a - b) <= tolerance; }
  static value_type from_unsigned(unsigned long long k) {
    return {static_cast<double>(k), 0.0};
  }
  static std::string to_string(value_type a) {
    std::ostringstream os;
    os.precision(15);
    os << "[" << a.real() << "," << a.imag() << "]";
    return os.str();
  }
  static const char* name() { return "complex"; }
};

struct RationalFunctionSemiring {
  using value_type = RationalFunction;
  static constexpr bool exact = true;
  static value_type zero() { return RationalFunction(); }
  static value_type one() { return RationalFunction(Rat(1)); }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type div(const value_type& a, const value_type& b) { return a / b; }
  static bool eq(const value_type& a, const value_type& b) { return a == b; }
  static value_type from_unsigned(unsigned long long k) {
    return RationalFunction(Rat(k));
  }
  static std::string to_string(const value_type& a) { return a.str(); }
  static const char* name() { return "rational_function"; }
};

}  // namespace prokit
