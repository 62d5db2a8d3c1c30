#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "seidel/constructions.hpp"
#include "seidel/linalg.hpp"
#include "seidel/matrix.hpp"
#include "seidel/polynomial.hpp"
#include "seidel/search.hpp"

using namespace seidel;

namespace {

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_even_order_det(const SeidelMatrix& s, const Int& d) {
  CHECK(d > 0);
  CHECK(d % 2 == 1);
  Int r = isqrt(d);
  CHECK(r * r == d);
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion on every small matrix") {
  for (int n = 2; n <= 4; ++n) {
    std::uint64_t total = std::uint64_t(1) << pair_count(n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      SeidelMatrix s(n);
      for (int idx = 0; idx < pair_count(n); ++idx)
        if ((bits >> idx) & 1) s.flip_pair(idx);
      Int d = determinant(s);
      CHECK(d == oracle::det_cofactor(s));
      if (n % 2 == 0)
        check_even_order_det(s, d);
      else
        CHECK(d == 0);
    }
  }
  for (std::uint64_t v = 0; v < 64; ++v) {
    SeidelMatrix s = representative_matrix(5, v);
    CHECK(determinant(s) == 0);
    CHECK(oracle::det_cofactor(s) == 0);
  }
  std::mt19937_64 rng(101);
  for (int n : {6, 7, 8}) {
    for (int trial = 0; trial < 120; ++trial) {
      SeidelMatrix s = oracle::random_seidel(n, rng);
      Int d = determinant(s);
      CHECK(d == oracle::det_cofactor(s));
      if (n % 2 == 0) check_even_order_det(s, d);
    }
  }
}

TEST_CASE("worked order-4 example: det, pfaffian, char poly, inverse") {
  SeidelMatrix s = oracle::diamond();
  CHECK(determinant(s) == 9);
  CHECK(pfaffian(s) == 3);
  CHECK(pfaffian_bruteforce(s) == 3);
  CHECK(oracle::pfaffian_expand(s) == 3);

  IntPolynomial p = char_poly(s);
  CHECK(p.coeffs() == std::vector<Int>{9, 0, 6, 0, 1});
  CHECK(p.to_string() == "x^4 + 6x^2 + 9");

  RationalMatrix inv = inverse(s);
  CHECK(inv.at(0, 1) == Rational(-1, 3));
  RationalMatrix prod = RationalMatrix::from_seidel(s) * inv;
  CHECK(prod == RationalMatrix::identity(4));
}

TEST_CASE("pfaffian agrees with the matching sum and the expansion oracle") {
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    SeidelMatrix s(4);
    for (int idx = 0; idx < 6; ++idx)
      if ((bits >> idx) & 1) s.flip_pair(idx);
    Int pf = pfaffian(s);
    CHECK(pf == pfaffian_bruteforce(s));
    CHECK(pf == oracle::pfaffian_expand(s));
    CHECK(pf * pf == determinant(s));
  }
  for (std::uint64_t v = 0; v < (std::uint64_t(1) << pair_count(5)); ++v) {
    SeidelMatrix s = representative_matrix(6, v);
    Int pf = pfaffian(s);
    CHECK(pf == pfaffian_bruteforce(s));
    CHECK(pf == oracle::pfaffian_expand(s));
    CHECK(pf * pf == determinant(s));
  }
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    SeidelMatrix s = oracle::random_seidel(8, rng);
    Int pf = pfaffian(s);
    CHECK(pf == pfaffian_bruteforce(s));
    CHECK(pf * pf == determinant(s));
  }
  for (int trial = 0; trial < 60; ++trial) {
    SeidelMatrix s = oracle::random_seidel(10, rng);
    CHECK(pfaffian(s) == pfaffian_bruteforce(s));
  }
  for (int trial = 0; trial < 20; ++trial) {
    SeidelMatrix s = oracle::random_seidel(12, rng);
    Int pf = pfaffian(s);
    CHECK(pf == pfaffian_bruteforce(s));
    CHECK(pf * pf == determinant(s));
  }
  CHECK_THROWS_AS(pfaffian(SeidelMatrix(5)), std::invalid_argument);
}

TEST_CASE("switching scales the pfaffian by the switching determinant") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 500; ++trial) {
    int n = (trial % 2) ? 4 : 6;
    SeidelMatrix s = oracle::random_seidel(n, rng);
    std::uint64_t mask = rng() & ((std::uint64_t(1) << n) - 1);
    int parity = __builtin_popcountll(mask) & 1;
    Int pf = pfaffian(s);
    Int pf2 = pfaffian(switched_mask(s, mask));
    CHECK(pf2 == (parity ? -pf : pf));
  }
}

TEST_CASE("perfect matchings of K_8: count, shape, signs") {
  CHECK(perfect_matchings(2).size() == 1);
  CHECK(perfect_matchings(4).size() == 3);
  CHECK(perfect_matchings(6).size() == 15);
  auto ms = perfect_matchings(8);
  CHECK(ms.size() == 105);
  std::set<std::vector<std::pair<int, int>>> distinct;
  for (const auto& m : ms) {
    CHECK(m.pairs.size() == 4);
    std::vector<bool> used(8, false);
    int prev_first = -1;
    for (auto [i, j] : m.pairs) {
      CHECK(i < j);
      CHECK(i > prev_first);
      prev_first = i;
      CHECK(!used[i]);
      CHECK(!used[j]);
      used[i] = used[j] = true;
    }
    CHECK((m.sign == 1 || m.sign == -1));
    distinct.insert(m.pairs);
  }
  CHECK(distinct.size() == 105);
  CHECK_THROWS_AS(perfect_matchings(7), std::invalid_argument);
  CHECK_THROWS_AS(perfect_matchings(14), std::invalid_argument);
}

TEST_CASE("transitive matrices: determinant and alternating inverse") {
  for (int n : {2, 4, 6, 8}) CHECK(determinant(transitive(n)) == 1);
  for (int n : {3, 5, 7}) CHECK(determinant(transitive(n)) == 0);
  for (int n : {4, 6, 8}) {
    RationalMatrix inv = inverse(transitive(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          CHECK(inv.at(i, j) == 0);
        else if (i < j)
          CHECK(inv.at(i, j) == ((j - i) % 2 ? -1 : 1));
        else
          CHECK(inv.at(i, j) == -inv.at(j, i));
      }
  }
  CHECK_THROWS_AS(inverse(transitive(5)), std::domain_error);
}

TEST_CASE("inverse is skew with zero diagonal whenever defined") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 * (2 + int(rng() % 3));
    SeidelMatrix s = oracle::random_seidel(n, rng);
    RationalMatrix inv = inverse(s);
    for (int i = 0; i < n; ++i) {
      CHECK(inv.at(i, i) == 0);
      for (int j = i + 1; j < n; ++j) CHECK(inv.at(i, j) == -inv.at(j, i));
    }
    CHECK(RationalMatrix::from_seidel(s) * inv == RationalMatrix::identity(n));
  }
}

TEST_CASE("char_poly matches the polynomial cofactor oracle") {
  SeidelMatrix tri(3);
  tri.set_entry(0, 1, +1);
  tri.set_entry(1, 2, +1);
  tri.set_entry(2, 0, +1);
  CHECK(char_poly(tri).coeffs() == std::vector<Int>{0, 3, 0, 1});  // x^3 + 3x
  CHECK(char_poly(transitive(6)).coeffs() == std::vector<Int>{1, 0, 15, 0, 15, 0, 1});

  for (int n = 1; n <= 5; ++n) {
    std::uint64_t reps = std::uint64_t(1) << pair_count(n - 1);
    for (std::uint64_t v = 0; v < reps; ++v) {
      SeidelMatrix s = representative_matrix(n, v);
      CHECK(oracle::to_ll(char_poly(s).coeffs()) == oracle::charpoly_cofactor(s));
    }
  }
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 150; ++trial) {
    SeidelMatrix s = oracle::random_seidel(6, rng);
    CHECK(oracle::to_ll(char_poly(s).coeffs()) == oracle::charpoly_cofactor(s));
  }
  for (int trial = 0; trial < 25; ++trial) {
    SeidelMatrix s = oracle::random_seidel(7, rng);
    CHECK(oracle::to_ll(char_poly(s).coeffs()) == oracle::charpoly_cofactor(s));
  }
}

TEST_CASE("char poly coefficient pattern over all small orders") {
  for (int n = 2; n <= 7; ++n) {
    auto polys = enumerate_charpolys(n);
    CHECK(!polys.empty());
    for (const auto& p : polys) {
      CHECK(p.degree() == n);
      CHECK(p.coeff(n) == 1);
      for (int k = 0; k <= n; ++k) {
        if (k % 2)
          CHECK(p.coeff(n - k) == 0);
        else
          CHECK(p.coeff(n - k) >= binom(n, k));
      }
      CHECK(p.coeff(n - 2) == binom(n, 2));
    }
  }
}

TEST_CASE("char_poly is switching-invariant") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 3 + int(rng() % 6);
    SeidelMatrix s = oracle::random_seidel(n, rng);
    std::uint64_t mask = rng() & ((std::uint64_t(1) << n) - 1);
    CHECK(char_poly(switched_mask(s, mask)) == char_poly(s));
  }
}

TEST_CASE("schur complement determinant factorization") {
  // block diagonal: the Schur complement is just the leading block
  RationalMatrix m(4, 4);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 3;
  m.at(2, 2) = Rational(1, 2);
  m.at(2, 3) = 1;
  m.at(3, 2) = -1;
  m.at(3, 3) = 1;
  CHECK(schur_det(m, 2) == determinant(m));
  CHECK(determinant(m) == Rational(15, 2));

  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 200; ++trial) {
    int n = (trial % 2) ? 6 : 8;
    SeidelMatrix s = oracle::random_seidel(n, rng);
    RationalMatrix r = RationalMatrix::from_seidel(s);
    int trailing = (trial % 4 < 2) ? 2 : 4;  // even trailing blocks are nonsingular
    CHECK(schur_det(r, trailing) == determinant(r));
  }

  SeidelMatrix s = oracle::random_seidel(6, rng);
  RationalMatrix r = RationalMatrix::from_seidel(s);
  CHECK_THROWS_AS(schur_det(r, 3), std::domain_error);  // odd skew block is singular
}

TEST_CASE("low-rank determinant updates") {
  SeidelMatrix d = oracle::diamond();
  Rational det_d = Rational(determinant(d));
  RationalMatrix inv = inverse(d);

  RationalMatrix zx(4, 2), zy(4, 2);
  CHECK(smw_det_update(det_d, inv, zx, zy) == det_d);

  // reversing arc (0,1) as a rank-2 update: X = [e_0 | e_1], Y = [-2e_1 | 2e_0]
  RationalMatrix x(4, 2), y(4, 2);
  x.at(0, 0) = 1;
  x.at(1, 1) = 1;
  y.at(1, 0) = -2;
  y.at(0, 1) = 2;
  CHECK(smw_det_update(det_d, inv, x, y) == 1);
  CHECK(determinant(reverse_arc(d, 0, 1)) == 1);

  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + 2 * int(rng() % 3);
    SeidelMatrix s = oracle::random_seidel(n, rng);
    RationalMatrix a = RationalMatrix::from_seidel(s);
    int k = 1 + int(rng() % 2);
    RationalMatrix rx(n, k), ry(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) {
        rx.at(i, j) = int(rng() % 5) - 2;
        ry.at(i, j) = int(rng() % 5) - 2;
      }
    Rational via_update = smw_det_update(Rational(determinant(s)), inverse(s), rx, ry);
    CHECK(via_update == determinant(a + rx * ry.transpose()));
  }
}

TEST_CASE("integer square root") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(1)) == 1);
  CHECK(isqrt(Int(3)) == 1);
  CHECK(isqrt(Int(4)) == 2);
  CHECK(isqrt(Int(2400)) == 48);
  CHECK(isqrt(Int(2401)) == 49);
  Int big = Int("123456789123456789123456789");
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(big * big - 1) == big - 1);
}
