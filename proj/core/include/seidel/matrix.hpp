#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace seidel {

// Unordered pairs {i,j} on n vertices.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Row-major index of the pair (i,j), 0-based, i < j:
// (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1).
constexpr int pair_index(int n, int i, int j) {
  return i * (n - 1) - i * (i - 1) / 2 + (j - i - 1);
}

namespace detail {

// Packed bit array over the n(n-1)/2 vertex pairs. Both SeidelMatrix and
// Tournament store one bit per pair with the same layout, so conversions
// between them are reinterpretations of the same words.
class PairBits {
 public:
  PairBits() = default;
  explicit PairBits(int n) : n_(n), words_((pair_count(n) + 63) / 64, 0) {}
  PairBits(int n, std::vector<std::uint64_t> words);

  int order() const { return n_; }
  bool bit(int idx) const { return (words_[idx >> 6] >> (idx & 63)) & 1u; }
  void set_bit(int idx, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (idx & 63);
    if (v)
      words_[idx >> 6] |= mask;
    else
      words_[idx >> 6] &= ~mask;
  }
  void flip_bit(int idx) { words_[idx >> 6] ^= std::uint64_t(1) << (idx & 63); }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const PairBits&, const PairBits&) = default;
  friend auto operator<=>(const PairBits&, const PairBits&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

// Orientation of the complete graph K_n: bit for pair i<j set iff arc i->j.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(int n) : bits_(n) {}
  Tournament(int n, std::vector<std::uint64_t> words) : bits_(n, std::move(words)) {}

  int order() const { return bits_.order(); }
  // true iff the arc i->j is present (i != j, 0-based).
  bool has_arc(int i, int j) const;
  // Orients the pair {i,j} as i->j.
  void set_arc(int i, int j);
  const std::vector<std::uint64_t>& words() const { return bits_.words(); }
  const detail::PairBits& bits() const { return bits_; }

  friend bool operator==(const Tournament&, const Tournament&) = default;
  friend auto operator<=>(const Tournament&, const Tournament&) = default;

 private:
  detail::PairBits bits_;
};

// Skew-symmetric matrix with zero diagonal and +-1 off-diagonal entries,
// bit-packed over the upper triangle (bit = 1 means entry +1). Vertices are
// 0-based here; all file formats and CLI output are 1-based.
class SeidelMatrix {
 public:
  SeidelMatrix() = default;
  explicit SeidelMatrix(int n) : bits_(n) {}  // all off-diagonal entries -1
  SeidelMatrix(int n, std::vector<std::uint64_t> words) : bits_(n, std::move(words)) {}

  int order() const { return bits_.order(); }
  // 0 on the diagonal, otherwise +-1 with entry(j,i) = -entry(i,j).
  int entry(int i, int j) const;
  // Sets s_ij = sign (and s_ji = -sign); i != j, sign in {+1,-1}.
  void set_entry(int i, int j, int sign);
  bool upper_bit(int idx) const { return bits_.bit(idx); }
  void flip_pair(int idx) { bits_.flip_bit(idx); }
  const std::vector<std::uint64_t>& words() const { return bits_.words(); }
  const detail::PairBits& bits() const { return bits_; }

  // Dense +-1/0 copy, row-major, for the arithmetic kernels.
  std::vector<int> dense() const;

  friend bool operator==(const SeidelMatrix&, const SeidelMatrix&) = default;
  friend auto operator<=>(const SeidelMatrix&, const SeidelMatrix&) = default;

 private:
  detail::PairBits bits_;
};

// Skew-symmetric +-1 assignment supported on the edges of a graph; zero on
// non-edges and on the diagonal. Seidel matrices are the complete-graph case.
struct GraphSeidel {
  int order = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, first < second
  std::vector<int> signs;                  // +-1 per edge, sign of entry (i,j) with i < j

  int entry(int i, int j) const;
  std::vector<int> dense() const;
};

// s_ij = +1 iff the arc i->j is present (for i < j).
SeidelMatrix seidel_from_tournament(const Tournament& t);
Tournament tournament_from_seidel(const SeidelMatrix& s);

// DSD with d_i = -1 exactly for i in subset (0-based vertex list).
SeidelMatrix switched(const SeidelMatrix& s, const std::vector<int>& subset);
SeidelMatrix switched_mask(const SeidelMatrix& s, std::uint64_t mask);

// Canonical switching-class representative: first row all +1 off-diagonal
// (d_1 = +1, d_j = s_1j). Idempotent; constant on switching classes.
SeidelMatrix switch_normalize(const SeidelMatrix& s);

// Negates entries (i,j) and (j,i). Throws std::invalid_argument if i == j.
SeidelMatrix reverse_arc(const SeidelMatrix& s, int i, int j);

// Restriction S[vertices], rows/columns in the order given (0-based).
SeidelMatrix principal_submatrix(const SeidelMatrix& s, const std::vector<int>& vertices);

}  // namespace seidel
