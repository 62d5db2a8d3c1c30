#pragma once

#include <string>
#include <vector>

#include "seidel/matrix.hpp"
#include "seidel/numbers.hpp"
#include "seidel/polynomial.hpp"

namespace seidel {

// E[det] over all tournaments of even order n, i.e. (n-1)!!.
Int expected_det(int n);

Int double_factorial(int n);

struct MomentRow {
  int n;
  Int y;         // y_n from the recurrence y_n = (n-1) y_{n-2} + (2n-4) y_{n-4}
  Int z;         // second moment z_n = y_n (n-1)!!
  Int expected;  // (n-1)!!
  Int variance;  // (n-1)!! (y_n - (n-1)!!)
};

struct MomentTable {
  std::vector<MomentRow> rows;
  std::string to_csv() const;
  std::string to_json() const;
};

MomentTable moment_table(int max_n);

// Matchings of size k in the complete graph K_n: C(n,2k) (2k-1)!!.
Int matching_count(int n, int k);

// Matching numbers m_0, m_1, ... of an arbitrary graph.
std::vector<Int> matching_numbers(const GraphSeidel& g);

// Average characteristic polynomial over all tournaments of order n:
// sum_k C(n,2k)(2k-1)!! x^{n-2k}.
IntPolynomial expected_charpoly(int n);

// Average over all sign assignments of a fixed graph shape: coefficients
// are the graph's matching numbers.
IntPolynomial expected_charpoly_graph(const GraphSeidel& g);

// A bound of the form r^{1/4} with r rational. Comparisons against integer
// candidates go through fourth powers so no rounding is involved.
struct RadicalBound {
  Rational fourth_power;
  bool integral = false;
  Int value;  // set when integral

  static RadicalBound from_fourth_power(const Rational& fp);
  bool exceeds(const Int& candidate) const;    // bound > candidate
  bool admits(const Int& candidate) const;     // candidate <= bound
  bool equals_int(const Int& candidate) const; // bound == candidate
  double approx() const;
  std::string display() const;  // exact integer or fourth-root expression
};

struct BoundsProfile {
  int n = 0;
  RadicalBound hadamard_sqrt;  // (n-1)^{n/4}, bounds sqrt(det)
  bool has_mod2 = false;
  RadicalBound mod2_bound;     // (2n-3)^{1/2} (n-3)^{(n-2)/4}, n = 2 mod 4 only
  RadicalBound fischer_bound;  // (n-1)^{(n-2)/2} sqrt((n-1)^2-4), bounds det itself
  RadicalBound scm_minor;      // (n+1)^{(n-2)/4}
  RadicalBound gap_threshold;  // (n-1)^{(n-8)/4}
  std::string to_csv() const;
  std::string to_json() const;
};

BoundsProfile bounds_profile(int n);

// Imaginary parts of the eigenvalues of S, sorted descending, computed from
// the symmetric PSD matrix -S^2.
std::vector<double> signed_imag_spectrum(const SeidelMatrix& s);

// Cauchy-style interlacing between S and the principal submatrix on `subset`.
bool interlace_check(const SeidelMatrix& s, const std::vector<int>& subset);

// Exact identity (x^2+n-1)^{n/2-k} c_{S[a]}(x) = c_{S(a)}(x) for
// skew-conference S, where S(a) deletes the subset a.
bool jacobi_factor_check(const SeidelMatrix& s, const std::vector<int>& subset);

// Conjunction of jacobi_factor_check over all size-k subsets.
bool jacobi_factor_check_all(const SeidelMatrix& s, int k, int workers = 0);

// Every double vertex deletion of a skew-conference matrix of order N has
// sqrt(det) = (N-1)^{(N-4)/4} exactly.
bool scm_minor_check(const SeidelMatrix& s, int workers = 0);

// True when the transitive subtournament of order k cannot embed in any
// Seidel matrix of order n: sin(pi/k)/(1-cos(pi/k)) > sqrt(n-1).
bool transitive_obstruction(int n, int k);

}  // namespace seidel
