#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seidel/numbers.hpp"

namespace seidel {

// Univariate polynomial with exact integer coefficients, coeff(k) = the
// coefficient of x^k. Normalized: no stored leading zeros (zero poly has
// degree -1). Serializes as a JSON array, constant term first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPolynomial constant(Int v) { return IntPolynomial({std::move(v)}); }
  // c * x^k
  static IntPolynomial monomial(Int c, int k) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(int k) const {
    if (k < 0 || k >= int(c_.size())) return 0;
    return c_[k];
  }
  const std::vector<Int>& coeffs() const { return c_; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
  }

  IntPolynomial pow(int e) const {
    IntPolynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Division by a monic (or at least exactly dividing) polynomial; returns
  // (quotient, remainder). Throws if a coefficient division is inexact.
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Int> rem = c_;
    std::vector<Int> quot;
    if (degree() >= d.degree()) quot.assign(degree() - d.degree() + 1, Int(0));
    const Int& lead = d.c_.back();
    for (int k = int(rem.size()) - 1; k >= d.degree(); --k) {
      if (rem[k] == 0) continue;
      if (rem[k] % lead != 0)
        throw std::domain_error("inexact polynomial division");
      Int q = rem[k] / lead;
      int shift = k - d.degree();
      for (int i = 0; i <= d.degree(); ++i) rem[shift + i] -= q * d.c_[i];
      quot[shift] = std::move(q);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  bool divisible_by(const IntPolynomial& d) const { return divmod(d).second.is_zero(); }

  Int evaluate(const Int& x) const {
    Int r = 0;
    for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
    return r;
  }

  // Human-readable form, highest degree first, e.g. "x^4 + 6x^2 + 9".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (c_[k] == 0) continue;
      Int a = c_[k];
      if (out.empty()) {
        if (a < 0) out += "-";
      } else {
        out += a < 0 ? " - " : " + ";
      }
      Int mag = a < 0 ? Int(-a) : a;
      if (mag != 1 || k == 0) out += mag.str();
      if (k > 0) out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace seidel
