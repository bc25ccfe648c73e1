// Univariate polynomials and rational functions in one formal parameter `d`
// with exact rational coefficients.
//
// Canonical forms make structural equality a semantic equality test:
//   Polynomial  — coefficient vector in ascending powers, no trailing zeros
//                 (the zero polynomial is the empty vector).
//   RationalFunction — numerator/denominator with gcd 1 and monic denominator;
//                 the zero function is 0/1.  Construction with a zero
//                 denominator throws value_error.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prokit/errors.hpp"

namespace prokit {

using Rat = boost::multiprecision::cpp_rational;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) {
    trim();
  }

  static Polynomial variable() { return Polynomial(std::vector<Rat>{0, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rat(0);
  }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Euclidean division; denominator must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b) {
    if (b.is_zero()) throw value_error("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs_;
    const int db = b.degree();
    std::vector<Rat> quot;
    if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    for (int k = a.degree() - db; k >= 0; --k) {
      Rat factor = rem[static_cast<std::size_t>(k + db)] / b.leading();
      quot[static_cast<std::size_t>(k)] = factor;
      if (factor == 0) continue;
      for (int j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(k + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  // Monic gcd (Euclid); gcd(0,0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> out = coeffs_;
    const Rat lead = out.back();
    for (Rat& c : out) c /= lead;
    return Polynomial(std::move(out));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  // Human-readable form like "2 - d" or "d^2 + 1"; zero prints as "0".
  std::string str(const std::string& var = "d") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rat& c = coeffs_[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rat mag = neg ? Rat(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string term;
      if (i == 0) {
        term = mag.str();
      } else {
        std::string power = (i == 1) ? var : var + "^" + std::to_string(i);
        term = (mag == 1) ? power : mag.str() + "*" + power;
      }
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;  // ascending powers, no trailing zeros
};

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rat(1)) {}
  explicit RationalFunction(Rat constant) : num_(std::move(constant)), den_(Rat(1)) {}
  RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw value_error("rational function with zero denominator");
    if (num.is_zero()) {
      num_ = Polynomial();
      den_ = Polynomial(Rat(1));
      return;
    }
    Polynomial g = Polynomial::gcd(num, den);
    num = Polynomial::divmod(num, g).first;
    den = Polynomial::divmod(den, g).first;
    const Rat lead = den.leading();
    std::vector<Rat> nc = num.coeffs(), dc = den.coeffs();
    for (Rat& c : nc) c /= lead;
    for (Rat& c : dc) c /= lead;
    num_ = Polynomial(std::move(nc));
    den_ = Polynomial(std::move(dc));
  }

  static RationalFunction variable() {
    return RationalFunction(Polynomial::variable(), Polynomial(Rat(1)));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Polynomial(Rat(1)); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw value_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }

  std::string str(const std::string& var = "d") const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace prokit
