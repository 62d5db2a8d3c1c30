#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seidel/matrix.hpp"
#include "seidel/numbers.hpp"
#include "seidel/polynomial.hpp"

namespace seidel {

// Dense matrix of exact rationals, kept in lowest terms with positive
// denominators (cpp_rational canonicalizes). Rectangular shapes allowed.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static RationalMatrix identity(int n);
  static RationalMatrix from_seidel(const SeidelMatrix& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix block(int row0, int col0, int nrows, int ncols) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  // Debug grid of {"num": ..., "den": ...} objects.
  std::string to_json_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Exact determinant (fraction-free elimination; fixed-width fast paths for
// small orders, arbitrary precision beyond).
Int determinant(const SeidelMatrix& s);
Rational determinant(const RationalMatrix& m);

// Pfaffian via skew-symmetric fraction-free elimination. pfaffian(s)^2 equals
// determinant(s); the sign matches the perfect-matching expansion.
// Throws std::invalid_argument for odd order.
Int pfaffian(const SeidelMatrix& s);

// A pairing of {1..2m} listed with i_k < j_k and i_1 < i_2 < ...; sign is the
// sign of the permutation (i_1 j_1 i_2 j_2 ... i_m j_m).
struct PerfectMatching {
  std::vector<std::pair<int, int>> pairs;  // 0-based
  int sign = 1;
};

// All (n-1)!! perfect matchings of K_n. Throws for odd n or n > 12.
std::vector<PerfectMatching> perfect_matchings(int n);

// Signed matching-sum definition of the Pfaffian, kept as a cross-check
// oracle. Throws for odd n or n > 12.
Int pfaffian_bruteforce(const SeidelMatrix& s);

// Exact inverse; throws std::domain_error on singular input (every odd order).
RationalMatrix inverse(const SeidelMatrix& s);
RationalMatrix inverse(const RationalMatrix& m);

// det(xI - S), exact integer coefficients (division-free recurrence).
IntPolynomial char_poly(const SeidelMatrix& s);
IntPolynomial char_poly(const GraphSeidel& g);

// det(M) = det(M/D) det(D) where D is the trailing diagonal block of the
// given order. Throws std::domain_error if D is singular.
Rational schur_det(const RationalMatrix& m, int trailing);

// det(A + X Y^T) = det A * det(I_k + Y^T A^{-1} X); X, Y are n x k.
Rational smw_det_update(const Rational& det_a, const RationalMatrix& a_inv,
                        const RationalMatrix& x, const RationalMatrix& y);

// Floor of the square root; exact for perfect squares.
Int isqrt(const Int& v);

}  // namespace seidel
