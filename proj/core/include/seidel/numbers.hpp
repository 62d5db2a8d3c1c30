#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace seidel {

// Arbitrary-precision integers/rationals for exact linear algebra. Hot
// loops use fixed-width kernels (int64 / int128) and only fall back to
// these when the order is large enough that products could overflow.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

#if defined(__SIZEOF_INT128__)
using int128 = __int128;
#else
#error "128-bit integer support required"
#endif

// splitmix64: cheap stateless mixer, used to derive independent per-shard
// seeds from one user-facing seed so reports don't depend on worker count.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace seidel
