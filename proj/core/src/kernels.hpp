#pragma once

// Fraction-free / division-free arithmetic kernels shared by the public
// linear-algebra entry points and the enumeration hot loops. All templates
// are exact for integer types: every division below is exact by Sylvester /
// Pfaffian-minor identities, so they instantiate for int64, 128-bit and
// arbitrary-precision integers alike.

#include <utility>
#include <vector>

namespace seidel {
namespace kernels {

// Bareiss elimination, in place, row-major a[n*n]. Intermediate entries are
// minors of the input, so magnitudes stay within n^(n/2) for +-1 matrices.
template <typename T>
T bareiss_det(T* a, int n) {
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return T(0);
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      sign = -sign;
    }
    const T p = a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      const T aik = a[i * n + k];
      for (int j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * p - aik * a[k * n + j]) / prev;
      a[i * n + k] = T(0);
    }
    prev = p;
  }
  T det = a[(n - 1) * n + (n - 1)];
  return sign > 0 ? det : T(-det);
}

// Fraction-free Pfaffian elimination on a skew-symmetric a[n*n]. After the
// stage with pivot pair (k, k+1), entry (i,j) holds the Pfaffian of the
// principal submatrix on rows {0..k+1, i, j}; the update divides by the
// previous pivot exactly (Pfaffian analogue of the Sylvester identity).
template <typename T>
T pfaffian(T* a, int n) {
  if (n == 0) return T(1);
  if (n % 2) return T(0);
  T prev(1);
  int sign = 1;
  for (int k = 0; k + 2 < n; k += 2) {
    if (a[k * n + k + 1] == 0) {
      int piv = -1;
      for (int j = k + 2; j < n; ++j)
        if (a[k * n + j] != 0) {
          piv = j;
          break;
        }
      if (piv < 0) return T(0);
      for (int j = 0; j < n; ++j) std::swap(a[(k + 1) * n + j], a[piv * n + j]);
      for (int i = 0; i < n; ++i) std::swap(a[i * n + k + 1], a[i * n + piv]);
      sign = -sign;
    }
    const T p = a[k * n + k + 1];
    for (int i = k + 2; i < n; ++i) {
      const T rki = a[k * n + i], rk1i = a[(k + 1) * n + i];
      for (int j = i + 1; j < n; ++j) {
        T v = (p * a[i * n + j] + rk1i * a[k * n + j] - rki * a[(k + 1) * n + j]) / prev;
        a[i * n + j] = v;
        a[j * n + i] = T(-v);
      }
    }
    prev = p;
  }
  T pf = a[(n - 2) * n + (n - 1)];
  return sign > 0 ? pf : T(-pf);
}

// Berkowitz characteristic polynomial of a[n*n]: out[k] = coefficient of x^k,
// out has size n+1, out[n] = 1. Division-free; works over any integral type
// wide enough for the coefficients and the Toeplitz products.
template <typename T>
void berkowitz_charpoly(const T* a, int n, std::vector<T>& out) {
  std::vector<T> p{T(1)};  // descending coefficients of the leading block
  std::vector<T> t, v, w;
  for (int r = 1; r <= n; ++r) {
    t.assign(r + 1, T(0));
    t[0] = T(1);
    t[1] = T(-a[(r - 1) * n + (r - 1)]);
    if (r >= 2) {
      v.assign(r - 1, T(0));
      for (int i = 0; i < r - 1; ++i) v[i] = a[i * n + (r - 1)];
      for (int j = 2; j <= r; ++j) {
        T dot(0);
        for (int i = 0; i < r - 1; ++i) dot += a[(r - 1) * n + i] * v[i];
        t[j] = T(-dot);
        if (j == r) break;
        w.assign(r - 1, T(0));
        for (int i = 0; i < r - 1; ++i) {
          T acc(0);
          for (int l = 0; l < r - 1; ++l) acc += a[i * n + l] * v[l];
          w[i] = acc;
        }
        v.swap(w);
      }
    }
    std::vector<T> q(r + 1, T(0));
    for (int i = 0; i < int(p.size()); ++i)
      for (int j = 0; j <= r && i + j <= r; ++j) q[i + j] += p[i] * t[j];
    p.swap(q);
  }
  out.assign(n + 1, T(0));
  for (int k = 0; k <= n; ++k) out[k] = p[n - k];
}

}  // namespace kernels
}  // namespace seidel
