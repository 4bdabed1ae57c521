#ifndef BASISKIT_RANDOM_HPP
#define BASISKIT_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "basiskit/matrix.hpp"
#include "basiskit/scalar.hpp"

namespace basiskit {

using Rng = std::mt19937_64;

// Integer draws go through the raw engine output so that sequences do not
// depend on the standard library's distribution implementation.
inline long uniform_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

/// n/d with |n| <= range and 1 <= d <= den.
inline Rational random_rational(Rng& rng, long range = 9, long den = 4) {
  return Rational(uniform_int(rng, -range, range), uniform_int(rng, 1, den));
}

template <Scalar T>
T random_scalar(Rng& rng) {
  if constexpr (scalar_traits<T>::exact) {
    return random_rational(rng);
  } else {
    return uniform_real(rng, -2.0, 2.0);
  }
}

template <Scalar T>
Vector<T> random_vector(Rng& rng, std::size_t n) {
  Vector<T> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar<T>(rng));
  return v;
}

template <Scalar T>
Matrix<T> random_matrix(Rng& rng, std::size_t n) {
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar<T>(rng);
  return m;
}

/// Redraws until the determinant is clearly nonzero.
template <Scalar T>
Matrix<T> random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix<T> m = random_matrix<T>(rng, n);
    if (scalar_traits<T>::magnitude(determinant(m)) > 1e-3) return m;
  }
}

}  // namespace basiskit

#endif  // BASISKIT_RANDOM_HPP
