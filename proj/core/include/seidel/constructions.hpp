#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seidel/linalg.hpp"
#include "seidel/matrix.hpp"
#include "seidel/numbers.hpp"

namespace seidel {

// A construction's claim about its output, re-verifiable from the emitted
// matrix alone. Kinds: transitive, join, reversal, quadratic (bordered
// transitive hitting a target determinant), residue, bordered, hc1.
struct ConstructionCertificate {
  std::string kind;
  int n = 0, k = 0, p = 0;

  bool claims_det = false;
  Int claimed_sqrt_det;

  bool claims_eigenvalue = false;
  Int claimed_eigenvalue_sq;  // char poly divisible by x^2 + this

  bool claims_doubly_regular = false;
  bool claims_skew_conference = false;

  std::vector<int> subset_y;  // quadratic: chosen +-1 signs
  int arc_i = -1, arc_j = -1;  // reversal: oriented arc used, 0-based

  std::string to_json() const;
};

// Recomputes every claim in the certificate from the matrix. Pure
// recomputation: determinant / char poly / structure checks from scratch.
bool verify_certificate(const SeidelMatrix& m, const ConstructionCertificate& c);

// R_n: all entries above the diagonal +1. det 1 for even n, 0 for odd.
SeidelMatrix transitive(int n);

// Block matrix [[S1, J],[-J^T, S2]]; when either order is even its
// determinant is det(S1) * det(S2).
SeidelMatrix join(const SeidelMatrix& s1, const SeidelMatrix& s2);

enum class DetChange { increases, unchanged, decreases };

struct ReversalResult {
  SeidelMatrix matrix;
  Int det;           // determinant of the reversed matrix, by the update formula
  DetChange change;  // sign of the move, classified from the inverse entry
  int i = -1, j = -1;  // the orientation actually used (s_ij = +1 before the flip)
};

// det S' = det S * (1 + 2 S^{-1}_ij)^2 for the arc with s_ij = +1; the pair
// is swapped internally when s_ij = -1. Throws std::domain_error on singular
// (odd-order) input.
ReversalResult reversal_det(const SeidelMatrix& s, int i, int j);

// Order n+2 matrix [[0,1,x^T],[-1,0,y^T],[-x,-y,R_n]] with determinant
// exactly k^2, for even n and odd 1 <= k <= n^2/2 + 1. The signs y are picked
// greedily (largest weight of x^T R_n^{-1} first) to hit x^T R_n^{-1} y = k-1.
std::pair<SeidelMatrix, ConstructionCertificate> target_determinant(int n, long long k);

// Quadratic residue tournament on GF(p): arc a -> b iff b - a is a nonzero
// square mod p. Requires p prime with p = 3 (mod 4); doubly regular.
SeidelMatrix quadratic_residue(int p);

// [[0, 1...1],[-1...-1, S]]: borders with a dominant vertex. Applied to a
// doubly-regular tournament this yields a skew-conference matrix.
SeidelMatrix border_all_ones(const SeidelMatrix& s);

// S S^T = (n-1) I exactly.
bool is_skew_conference(const SeidelMatrix& s);

// |{v : i -> v and j -> v}| is the same for every ordered pair i != j.
bool is_doubly_regular(const Tournament& t);

// Order 2k+1 bordered-transitive matrix whose characteristic polynomial is
// divisible by x^2 + (4k-1), i.e. it has eigenvalues +-sqrt(4k-1) i.
SeidelMatrix bordered_transitive_hc1(int k);

// Certificate factories matching the constructions above.
ConstructionCertificate certify_transitive(int n);
ConstructionCertificate certify_join(const SeidelMatrix& s1, const SeidelMatrix& s2);
ConstructionCertificate certify_reversal(const ReversalResult& r);
ConstructionCertificate certify_residue(int p);
ConstructionCertificate certify_bordered(const SeidelMatrix& input);
ConstructionCertificate certify_hc1(int k);

}  // namespace seidel
