#pragma once

#include <string>
#include <vector>

#include "seidel/matrix.hpp"
#include "seidel/polynomial.hpp"

namespace seidel {

// One-line JSON matrix record: {"n": <order>, "bits": "<hex>"} where the hex
// string encodes the upper-triangle bit array as an integer, LSB = pair (1,2),
// zero-padded lowercase, width ceil(#pairs / 4) nibbles (minimum 1).
std::string to_record(const SeidelMatrix& s);
SeidelMatrix parse_record(const std::string& line);  // throws on malformed input

std::string bits_hex(const SeidelMatrix& s);
SeidelMatrix matrix_from_hex(int n, const std::string& hex);

// Checked-in reference fixtures. Each file carries a "kind" discriminator:
//   sqrt_det_sets    rows of {n, sqrt_dets: [...]}
//   charpoly_sets    rows of {n, polys: [[c0,c1,...],...]} (constant term first)
//   charpoly_coeffs  {n, degrees: [d...], tuples: [[coeff per degree]...]}
//   moment_table     rows of {n, y, z}
struct DetRowFixture {
  int n = 0;
  std::vector<long long> sqrt_dets;
};

struct CharpolySetFixture {
  int n = 0;
  std::vector<IntPolynomial> polys;
};

struct CharpolyCoeffFixture {
  int n = 0;
  std::vector<int> degrees;
  std::vector<std::vector<long long>> tuples;
};

struct MomentRowFixture {
  int n = 0;
  Int y, z;
};

struct Fixture {
  std::string kind;
  std::vector<DetRowFixture> det_rows;
  std::vector<CharpolySetFixture> charpoly_rows;
  CharpolyCoeffFixture coeffs;
  std::vector<MomentRowFixture> moment_rows;
};

Fixture load_fixture(const std::string& path);  // throws on I/O or schema errors

}  // namespace seidel
