#include "seidel/matrix.hpp"

#include <stdexcept>

namespace seidel {

namespace detail {

PairBits::PairBits(int n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  std::size_t need = (pair_count(n) + 63) / 64;
  if (words_.size() != need) throw std::invalid_argument("pair bit array has wrong length");
  // Clear unused high bits so equality is well defined.
  int tail = pair_count(n) & 63;
  if (tail != 0 && !words_.empty())
    words_.back() &= (std::uint64_t(1) << tail) - 1;
}

}  // namespace detail

bool Tournament::has_arc(int i, int j) const {
  if (i == j) return false;
  if (i < j) return bits_.bit(pair_index(order(), i, j));
  return !bits_.bit(pair_index(order(), j, i));
}

void Tournament::set_arc(int i, int j) {
  if (i == j) throw std::invalid_argument("arc endpoints must differ");
  if (i < j)
    bits_.set_bit(pair_index(order(), i, j), true);
  else
    bits_.set_bit(pair_index(order(), j, i), false);
}

int SeidelMatrix::entry(int i, int j) const {
  if (i == j) return 0;
  if (i < j) return bits_.bit(pair_index(order(), i, j)) ? 1 : -1;
  return bits_.bit(pair_index(order(), j, i)) ? -1 : 1;
}

void SeidelMatrix::set_entry(int i, int j, int sign) {
  if (i == j) throw std::invalid_argument("diagonal entries are fixed at zero");
  if (sign != 1 && sign != -1) throw std::invalid_argument("entries must be +1 or -1");
  if (i < j)
    bits_.set_bit(pair_index(order(), i, j), sign > 0);
  else
    bits_.set_bit(pair_index(order(), j, i), sign < 0);
}

std::vector<int> SeidelMatrix::dense() const {
  int n = order();
  std::vector<int> a(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int s = bits_.bit(pair_index(n, i, j)) ? 1 : -1;
      a[std::size_t(i) * n + j] = s;
      a[std::size_t(j) * n + i] = -s;
    }
  return a;
}

int GraphSeidel::entry(int i, int j) const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == i && edges[e].second == j) return signs[e];
    if (edges[e].first == j && edges[e].second == i) return -signs[e];
  }
  return 0;
}

std::vector<int> GraphSeidel::dense() const {
  std::vector<int> a(std::size_t(order) * order, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [i, j] = edges[e];
    a[std::size_t(i) * order + j] = signs[e];
    a[std::size_t(j) * order + i] = -signs[e];
  }
  return a;
}

SeidelMatrix seidel_from_tournament(const Tournament& t) {
  return SeidelMatrix(t.order(), t.words());
}

Tournament tournament_from_seidel(const SeidelMatrix& s) {
  return Tournament(s.order(), s.words());
}

SeidelMatrix switched_mask(const SeidelMatrix& s, std::uint64_t mask) {
  int n = s.order();
  SeidelMatrix out = s;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool di = (mask >> i) & 1, dj = (mask >> j) & 1;
      if (di != dj) out.flip_pair(pair_index(n, i, j));
    }
  return out;
}

SeidelMatrix switched(const SeidelMatrix& s, const std::vector<int>& subset) {
  std::uint64_t mask = 0;
  for (int v : subset) {
    if (v < 0 || v >= s.order()) throw std::out_of_range("switch subset vertex out of range");
    mask |= std::uint64_t(1) << v;
  }
  return switched_mask(s, mask);
}

SeidelMatrix switch_normalize(const SeidelMatrix& s) {
  int n = s.order();
  std::uint64_t mask = 0;
  for (int j = 1; j < n; ++j)
    if (s.entry(0, j) < 0) mask |= std::uint64_t(1) << j;
  return switched_mask(s, mask);
}

SeidelMatrix reverse_arc(const SeidelMatrix& s, int i, int j) {
  if (i == j) throw std::invalid_argument("cannot reverse a loop");
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= s.order()) throw std::out_of_range("arc endpoint out of range");
  SeidelMatrix out = s;
  out.flip_pair(pair_index(s.order(), i, j));
  return out;
}

SeidelMatrix principal_submatrix(const SeidelMatrix& s, const std::vector<int>& vertices) {
  int m = int(vertices.size());
  SeidelMatrix sub(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      sub.set_entry(i, j, s.entry(vertices[i], vertices[j]));
  return sub;
}

}  // namespace seidel
