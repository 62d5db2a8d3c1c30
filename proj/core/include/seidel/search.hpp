#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seidel/constructions.hpp"
#include "seidel/matrix.hpp"
#include "seidel/numbers.hpp"
#include "seidel/polynomial.hpp"

namespace seidel {

enum class Coverage { exhaustive, certificates_only };

struct Provenance {
  enum class Kind { enumeration, construction, hill_climb } kind = Kind::enumeration;
  std::string detail;  // construction name when kind == construction
  std::string label() const;
};

struct DetSetEntry {
  long long sqrt_det = 0;
  Provenance prov;
  SeidelMatrix certificate;
};

// Set of sqrt(det) values known for one order, each with a witness matrix.
struct DetSet {
  int n = 0;
  Coverage coverage = Coverage::certificates_only;
  std::vector<DetSetEntry> entries;  // sorted by sqrt_det, strictly increasing

  std::vector<long long> values() const;
  bool contains(long long v) const;
};

// Closed run [lo, hi] of odd values absent between the set's min and max.
struct Gap {
  long long lo = 0, hi = 0;
  friend bool operator==(const Gap&, const Gap&) = default;
};

std::vector<Gap> gap_report(const DetSet& d);
std::vector<Gap> gap_report(const std::vector<long long>& sorted_values);

struct SearchReport {
  int n = 0;
  Coverage coverage = Coverage::exhaustive;
  DetSet dets;
  bool has_charpolys = false;
  std::vector<IntPolynomial> charpolys;
  std::vector<Gap> gaps;
  std::uint64_t visited = 0;
  std::uint64_t seed = 0;
  std::int64_t duration_ms = 0;

  // Stable-keyed JSON document; duration can be suppressed so reports are
  // byte-comparable across runs and worker counts.
  std::string to_json(bool with_duration = true) const;
  std::string to_csv() const;  // (value, provenance) rows
};

// Exhaustive determinant enumeration over the 2^((n-1)(n-2)/2) switching
// representatives with first row +1. Only n in {2, 4, 6, 8} is allowed.
// workers = 0 means all available cores; output does not depend on it.
SearchReport enumerate_dets(int n, int workers = 0);

// Exhaustive characteristic polynomial sets for n <= 8 (any parity).
SearchReport enumerate_charpolys_report(int n, int workers = 0);
std::vector<IntPolynomial> enumerate_charpolys(int n, int workers = 0);

// The single best arc reversal available from s: ((i,j), determinant factor).
std::pair<std::pair<int, int>, Rational> best_reversal_factor(const SeidelMatrix& s);

// Greedy ascent on det via arc reversals (largest factor first, ties to the
// lexicographically smallest pair), with seeded random restarts at local
// maxima. Deterministic for a fixed seed; budget counts total moves.
std::pair<SeidelMatrix, Int> hill_climb_max(int n, std::uint64_t budget, std::uint64_t seed);

struct MembershipCertificate {
  SeidelMatrix matrix;
  std::string method;  // enumeration | target-det | join | walk
  ConstructionCertificate cert;
};

// Searches for an order-n matrix with determinant k^2. Tries the bordered
// construction, then join products over the cached exhaustive sets, then
// seeded reversal walks. Absence of a certificate is not a non-membership
// proof outside the exhaustive range.
std::optional<MembershipCertificate> find_membership(int n, long long k, std::uint64_t budget,
                                                     std::uint64_t seed = 1);

struct MonteCarloStats {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Rational mean_det;
  Rational mean_det_sq;
};

// Uniform samples over all upper-triangle sign choices; deterministic per
// seed and independent of worker count (fixed logical shard layout).
MonteCarloStats monte_carlo_stats(int n, std::uint64_t samples, std::uint64_t seed,
                                  int workers = 0);

// Exact (mean det, mean det^2) by full enumeration; n in {2, 4, 6, 8}.
std::pair<Rational, Rational> exact_moments(int n, int workers = 0);

// The switching representative encoded by the free upper-triangle bits v
// (pairs not touching vertex 0, row-major); row 0 is all +1.
SeidelMatrix representative_matrix(int n, std::uint64_t v);

}  // namespace seidel
