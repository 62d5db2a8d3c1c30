#include "seidel/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <nlohmann/json.hpp>

#include "seidel/constructions.hpp"
#include "seidel/linalg.hpp"

namespace seidel {

using json = nlohmann::ordered_json;

namespace {

Int int_pow(Int base, long long e) {
  Int r = 1;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

json json_int(const Int& v) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

std::string rational_str(const Rational& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

// Evaluates pred on every index in [0, count) across threads; early exit on
// the first failure. The result is the plain conjunction, so ordering does
// not matter.
bool parallel_all(std::size_t count, int workers,
                  const std::function<bool(std::size_t)>& pred) {
  int nthreads = std::min<std::size_t>(count, resolve_workers(workers));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (!pred(i)) return false;
    return true;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> ok{true};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        if (!ok.load()) break;
        std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        if (!pred(i)) ok.store(false);
      }
    });
  for (auto& th : pool) th.join();
  return ok.load();
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

Int double_factorial(int n) {
  Int r = 1;
  for (int i = n; i >= 2; i -= 2) r *= i;
  return r;
}

Int expected_det(int n) {
  if (n < 2 || n % 2) throw std::invalid_argument("expected_det needs even n >= 2");
  return double_factorial(n - 1);
}

MomentTable moment_table(int max_n) {
  if (max_n % 2) throw std::invalid_argument("moment_table needs an even limit");
  MomentTable t;
  std::vector<Int> y;  // y[m] holds y_{2m}
  y.push_back(1);      // y_0
  for (int n = 2; n <= max_n; n += 2) {
    int m = n / 2;
    if (m == 1)
      y.push_back(1);
    else
      y.push_back(Int(n - 1) * y[m - 1] + Int(2 * n - 4) * y[m - 2]);
    MomentRow row;
    row.n = n;
    row.y = y[m];
    row.expected = double_factorial(n - 1);
    row.z = row.y * row.expected;
    row.variance = row.expected * (row.y - row.expected);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string MomentTable::to_csv() const {
  std::string out = "n,y,z,expected_det,variance\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + "," + r.y.str() + "," + r.z.str() + "," +
           r.expected.str() + "," + r.variance.str() + "\n";
  return out;
}

std::string MomentTable::to_json() const {
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["n"] = r.n;
    row["y"] = json_int(r.y);
    row["z"] = json_int(r.z);
    row["expected_det"] = json_int(r.expected);
    row["variance"] = json_int(r.variance);
    arr.push_back(std::move(row));
  }
  return arr.dump();
}

Int matching_count(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n)
    throw std::invalid_argument("matching size exceeds vertex count");
  return binomial(n, 2 * k) * double_factorial(2 * k - 1);
}

std::vector<Int> matching_numbers(const GraphSeidel& g) {
  int n = g.order;
  if (n > 30) throw std::invalid_argument("graph too large for matching enumeration");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u] |= std::uint32_t(1) << v;
    adj[v] |= std::uint32_t(1) << u;
  }
  std::map<std::uint32_t, std::vector<Int>> memo;
  // counts[k] = matchings of size k inside the vertex set `mask`
  auto rec = [&](auto&& self, std::uint32_t mask) -> const std::vector<Int>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<Int> counts{1};
    if (mask) {
      int v = std::countr_zero(mask);
      std::uint32_t rest = mask & ~(std::uint32_t(1) << v);
      counts = self(self, rest);  // v stays unmatched
      std::uint32_t nb = adj[v] & rest;
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        const auto& sub = self(self, rest & ~(std::uint32_t(1) << u));
        if (counts.size() < sub.size() + 1) counts.resize(sub.size() + 1, Int(0));
        for (std::size_t k = 0; k < sub.size(); ++k) counts[k + 1] += sub[k];
      }
    }
    return memo.emplace(mask, std::move(counts)).first->second;
  };
  std::uint32_t full = n == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1;
  return rec(rec, full);
}

IntPolynomial expected_charpoly(int n) {
  if (n < 1) throw std::invalid_argument("expected_charpoly needs n >= 1");
  std::vector<Int> c(n + 1, Int(0));
  for (int k = 0; 2 * k <= n; ++k) c[n - 2 * k] = matching_count(n, k);
  return IntPolynomial(std::move(c));
}

IntPolynomial expected_charpoly_graph(const GraphSeidel& g) {
  std::vector<Int> m = matching_numbers(g);
  std::vector<Int> c(g.order + 1, Int(0));
  for (std::size_t k = 0; k < m.size(); ++k) c[g.order - 2 * k] = m[k];
  return IntPolynomial(std::move(c));
}

RadicalBound RadicalBound::from_fourth_power(const Rational& fp) {
  RadicalBound b;
  b.fourth_power = fp;
  if (denominator(fp) == 1) {
    Int num = numerator(fp);
    Int r2 = isqrt(num);
    if (r2 * r2 == num) {
      Int r = isqrt(r2);
      if (r * r == r2) {
        b.integral = true;
        b.value = r;
      }
    }
  }
  return b;
}

bool RadicalBound::exceeds(const Int& candidate) const {
  if (candidate < 0) return true;
  Int c2 = candidate * candidate;
  return Rational(c2 * c2) < fourth_power;
}

bool RadicalBound::admits(const Int& candidate) const {
  if (candidate < 0) return true;
  Int c2 = candidate * candidate;
  return Rational(c2 * c2) <= fourth_power;
}

bool RadicalBound::equals_int(const Int& candidate) const {
  if (candidate < 0) return false;
  Int c2 = candidate * candidate;
  return Rational(c2 * c2) == fourth_power;
}

double RadicalBound::approx() const {
  return std::pow(fourth_power.convert_to<double>(), 0.25);
}

std::string RadicalBound::display() const {
  if (integral) return value.str();
  return "(" + rational_str(fourth_power) + ")^(1/4)";
}

BoundsProfile bounds_profile(int n) {
  if (n < 4 || n % 2) throw std::invalid_argument("bounds need even n >= 4");
  auto ratpow = [](Int base, int e) {
    return e >= 0 ? Rational(int_pow(base, e)) : Rational(1, int_pow(base, -e));
  };
  BoundsProfile p;
  p.n = n;
  p.hadamard_sqrt = RadicalBound::from_fourth_power(ratpow(n - 1, n));
  p.has_mod2 = n % 4 == 2;
  if (p.has_mod2)
    p.mod2_bound = RadicalBound::from_fourth_power(
        Rational(int_pow(2 * n - 3, 2) * int_pow(n - 3, n - 2)));
  Int f = int_pow(n - 1, 2) - 4;
  p.fischer_bound =
      RadicalBound::from_fourth_power(Rational(int_pow(n - 1, 2 * (n - 2)) * f * f));
  p.scm_minor = RadicalBound::from_fourth_power(ratpow(n + 1, n - 2));
  p.gap_threshold = RadicalBound::from_fourth_power(ratpow(n - 1, n - 8));
  return p;
}

namespace {

json bound_json(const RadicalBound& b) {
  json j;
  j["integral"] = b.integral;
  if (b.integral) j["value"] = json_int(b.value);
  j["fourth_power"] = rational_str(b.fourth_power);
  j["approx"] = b.approx();
  return j;
}

std::string bound_csv_row(const char* name, const RadicalBound& b) {
  return std::string(name) + "," + (b.integral ? "true" : "false") + "," +
         b.display() + "," + std::to_string(b.approx()) + "\n";
}

}  // namespace

std::string BoundsProfile::to_csv() const {
  std::string out = "bound,integral,value,approx\n";
  out += bound_csv_row("hadamard_sqrt", hadamard_sqrt);
  if (has_mod2) out += bound_csv_row("mod2_bound", mod2_bound);
  out += bound_csv_row("fischer_bound", fischer_bound);
  out += bound_csv_row("scm_minor", scm_minor);
  out += bound_csv_row("gap_threshold", gap_threshold);
  return out;
}

std::string BoundsProfile::to_json() const {
  json j;
  j["n"] = n;
  j["hadamard_sqrt"] = bound_json(hadamard_sqrt);
  j["mod2_bound"] = has_mod2 ? bound_json(mod2_bound) : json(nullptr);
  j["fischer_bound"] = bound_json(fischer_bound);
  j["scm_minor"] = bound_json(scm_minor);
  j["gap_threshold"] = bound_json(gap_threshold);
  return j.dump();
}

std::vector<double> signed_imag_spectrum(const SeidelMatrix& s) {
  int n = s.order();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = s.entry(i, j);
  Eigen::MatrixXd m2 = -(m * m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m2, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue solver did not converge");
  std::vector<double> moduli(n);
  for (int i = 0; i < n; ++i) moduli[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i]));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  // -S^2 is PSD with each positive eigenvalue of even multiplicity (conjugate
  // pairs of S), so pairing adjacent entries of the sorted list is exact.
  std::vector<double> signed_vals;
  signed_vals.reserve(n);
  std::size_t t = 0;
  while (t + 1 < moduli.size() && moduli[t] > 1e-9) {
    signed_vals.push_back(moduli[t]);
    signed_vals.push_back(-moduli[t + 1]);
    t += 2;
  }
  for (; t < moduli.size(); ++t) signed_vals.push_back(0.0);
  std::sort(signed_vals.begin(), signed_vals.end(), std::greater<>());
  return signed_vals;
}

bool interlace_check(const SeidelMatrix& s, const std::vector<int>& subset) {
  int n = s.order();
  if (subset.empty() || int(subset.size()) > n)
    throw std::invalid_argument("subset must be nonempty and at most the full order");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.front() < 0 || sorted.back() >= n)
    throw std::invalid_argument("subset must list distinct vertices of the matrix");

  std::vector<double> lambda = signed_imag_spectrum(s);
  if (int(sorted.size()) == n) return true;
  std::vector<double> theta = signed_imag_spectrum(principal_submatrix(s, sorted));
  const double tol = 1e-7;
  int m = int(theta.size());
  for (int j = 0; j < m; ++j) {
    if (theta[j] > lambda[j] + tol) return false;
    if (theta[j] < lambda[n - m + j] - tol) return false;
  }
  return true;
}

bool jacobi_factor_check(const SeidelMatrix& s, const std::vector<int>& subset) {
  if (!is_skew_conference(s))
    throw std::invalid_argument("input must be skew-conference");
  int n = s.order();
  int k = int(subset.size());
  if (2 * k > n) throw std::invalid_argument("subset larger than half the order");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (k > 0 && (sorted.front() < 0 || sorted.back() >= n)))
    throw std::invalid_argument("subset must list distinct vertices of the matrix");

  IntPolynomial factor({Int(n - 1), Int(0), Int(1)});  // x^2 + n - 1
  IntPolynomial lhs = factor.pow(n / 2 - k);
  if (k > 0) lhs = lhs * char_poly(principal_submatrix(s, sorted));

  std::vector<int> complement;
  complement.reserve(n - k);
  std::size_t pos = 0;
  for (int v = 0; v < n; ++v) {
    if (pos < sorted.size() && sorted[pos] == v) {
      ++pos;
      continue;
    }
    complement.push_back(v);
  }
  IntPolynomial rhs = char_poly(principal_submatrix(s, complement));
  return lhs == rhs;
}

bool jacobi_factor_check_all(const SeidelMatrix& s, int k, int workers) {
  if (!is_skew_conference(s))
    throw std::invalid_argument("input must be skew-conference");
  auto subsets = subsets_of_size(s.order(), k);
  return parallel_all(subsets.size(), workers,
                      [&](std::size_t i) { return jacobi_factor_check(s, subsets[i]); });
}

bool scm_minor_check(const SeidelMatrix& s, int workers) {
  if (!is_skew_conference(s))
    throw std::invalid_argument("input must be skew-conference");
  int n = s.order();
  if (n == 2) return true;
  Int expected = int_pow(n - 1, (n - 4) / 4);
  Int expected_det = expected * expected;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return parallel_all(pairs.size(), workers, [&](std::size_t idx) {
    auto [i, j] = pairs[idx];
    std::vector<int> keep;
    keep.reserve(n - 2);
    for (int v = 0; v < n; ++v)
      if (v != i && v != j) keep.push_back(v);
    return determinant(principal_submatrix(s, keep)) == expected_det;
  });
}

bool transitive_obstruction(int n, int k) {
  if (k < 2) throw std::invalid_argument("transitive order must be at least 2");
  if (n < 1) throw std::invalid_argument("host order must be at least 1");
  long double t = std::numbers::pi_v<long double> / (2.0L * k);
  long double cot = std::cos(t) / std::sin(t);
  long double diff = cot * cot - (n - 1);
  if (std::abs(diff) > 1e-6L) return diff > 0;

  // Near the threshold, redo the comparison with 100 decimal digits.
  using F = boost::multiprecision::cpp_bin_float_100;
  F pi = atan(F(1)) * 4;
  F tf = pi / (2 * k);
  F c = cos(tf) / sin(tf);
  F d = c * c - (n - 1);
  if (abs(d) < F("1e-80")) return false;  // threshold met exactly: not strict
  return d > 0;
}

}  // namespace seidel
