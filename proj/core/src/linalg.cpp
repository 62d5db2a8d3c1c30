#include "seidel/linalg.hpp"

#include <sstream>
#include <stdexcept>

#include "kernels.hpp"

namespace seidel {

namespace {

Int widen(std::int64_t v) { return Int(v); }

Int widen(int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Int r(std::uint64_t(u >> 64));
  r <<= 64;
  r += std::uint64_t(u);
  return neg ? Int(-r) : r;
}

template <typename T>
std::vector<T> dense_as(const std::vector<int>& d) {
  return std::vector<T>(d.begin(), d.end());
}

}  // namespace

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_seidel(const SeidelMatrix& s) {
  int n = s.order();
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = s.entry(i, j);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::block(int row0, int col0, int nrows, int ncols) const {
  RationalMatrix b(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b.at(i, j) = at(row0 + i, col0 + j);
  return b;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  RationalMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  RationalMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

std::string RationalMatrix::to_json_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) {
      const Rational& v = at(i, j);
      out << (j ? "," : "") << "{\"num\":" << numerator(v) << ",\"den\":" << denominator(v)
          << "}";
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

Int determinant(const SeidelMatrix& s) {
  int n = s.order();
  auto d = s.dense();
  if (n <= 14) {
    auto a = dense_as<std::int64_t>(d);
    return widen(kernels::bareiss_det(a.data(), n));
  }
  if (n <= 18) {
    auto a = dense_as<int128>(d);
    return widen(kernels::bareiss_det(a.data(), n));
  }
  auto a = dense_as<Int>(d);
  return kernels::bareiss_det(a.data(), n);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
  int n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      det = -det;
    }
    det *= a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rational f = a.at(i, k) / a.at(k, k);
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

Int pfaffian(const SeidelMatrix& s) {
  int n = s.order();
  if (n % 2) throw std::invalid_argument("pfaffian needs even order");
  auto d = s.dense();
  if (n <= 14) {
    auto a = dense_as<std::int64_t>(d);
    return widen(kernels::pfaffian(a.data(), n));
  }
  if (n <= 18) {
    auto a = dense_as<int128>(d);
    return widen(kernels::pfaffian(a.data(), n));
  }
  auto a = dense_as<Int>(d);
  return kernels::pfaffian(a.data(), n);
}

std::vector<PerfectMatching> perfect_matchings(int n) {
  if (n % 2 || n > 12 || n < 0)
    throw std::invalid_argument("perfect matchings supported for even n <= 12");
  std::vector<PerfectMatching> out;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n, false);

  // Pair the smallest unused vertex with each candidate; this lists pairs
  // with increasing first coordinates automatically.
  auto rec = [&](auto&& self) -> void {
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      // sign of (i1 j1 i2 j2 ...) via inversion count
      std::vector<int> perm;
      for (auto [a, b] : pairs) {
        perm.push_back(a);
        perm.push_back(b);
      }
      int inv = 0;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) ++inv;
      out.push_back({pairs, inv % 2 ? -1 : 1});
      return;
    }
    used[i] = true;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
  return out;
}

Int pfaffian_bruteforce(const SeidelMatrix& s) {
  int n = s.order();
  if (n % 2 || n > 12) throw std::invalid_argument("pfaffian_bruteforce needs even n <= 12");
  Int sum = 0;
  for (const auto& m : perfect_matchings(n)) {
    std::int64_t wt = m.sign;
    for (auto [i, j] : m.pairs) wt *= s.entry(i, j);
    sum += wt;
  }
  return sum;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse needs a square matrix");
  int n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix is singular");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    Rational p = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= p;
      inv.at(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rational f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

RationalMatrix inverse(const SeidelMatrix& s) {
  return inverse(RationalMatrix::from_seidel(s));
}

namespace {

IntPolynomial charpoly_dense(const std::vector<int>& d, int n) {
  if (n <= 10) {
    auto a = dense_as<std::int64_t>(d);
    std::vector<std::int64_t> c;
    kernels::berkowitz_charpoly(a.data(), n, c);
    return IntPolynomial(std::vector<Int>(c.begin(), c.end()));
  }
  if (n <= 18) {
    auto a = dense_as<int128>(d);
    std::vector<int128> c;
    kernels::berkowitz_charpoly(a.data(), n, c);
    std::vector<Int> w;
    w.reserve(c.size());
    for (auto v : c) w.push_back(widen(v));
    return IntPolynomial(std::move(w));
  }
  auto a = dense_as<Int>(d);
  std::vector<Int> c;
  kernels::berkowitz_charpoly(a.data(), n, c);
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial char_poly(const SeidelMatrix& s) { return charpoly_dense(s.dense(), s.order()); }

IntPolynomial char_poly(const GraphSeidel& g) { return charpoly_dense(g.dense(), g.order); }

Rational schur_det(const RationalMatrix& m, int trailing) {
  if (m.rows() != m.cols()) throw std::invalid_argument("schur_det needs a square matrix");
  int n = m.rows();
  if (trailing < 0 || trailing > n) throw std::invalid_argument("bad trailing block size");
  int lead = n - trailing;
  RationalMatrix d = m.block(lead, lead, trailing, trailing);
  Rational det_d = determinant(d);
  if (det_d == 0) throw std::domain_error("trailing block is singular");
  RationalMatrix a = m.block(0, 0, lead, lead);
  RationalMatrix b = m.block(0, lead, lead, trailing);
  RationalMatrix c = m.block(lead, 0, trailing, lead);
  RationalMatrix complement = a - b * inverse(d) * c;
  return determinant(complement) * det_d;
}

Rational smw_det_update(const Rational& det_a, const RationalMatrix& a_inv,
                        const RationalMatrix& x, const RationalMatrix& y) {
  if (x.rows() != a_inv.rows() || y.rows() != a_inv.rows() || x.cols() != y.cols())
    throw std::invalid_argument("update factors must be n x k");
  RationalMatrix cap = RationalMatrix::identity(x.cols()) + y.transpose() * a_inv * x;
  return det_a * determinant(cap);
}

Int isqrt(const Int& v) {
  if (v < 0) throw std::domain_error("isqrt of a negative value");
  if (v == 0) return 0;
  Int x = v, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return x;
}

}  // namespace seidel
