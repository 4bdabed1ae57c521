#ifndef BASISKIT_FIXTURES_HPP
#define BASISKIT_FIXTURES_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/finite_group.hpp"
#include "basiskit/matrix_group.hpp"

// Small groups used by tests, the self-test and the CLI (by name).
namespace basiskit::fixtures {

inline FiniteGroup cyclic(std::size_t n) {
  CayleyTable table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

// Permutations of {1,2,3} stored as 0-based image arrays; product is p(q(x)).
inline const std::vector<std::vector<std::size_t>>& s3_permutations() {
  static const std::vector<std::vector<std::size_t>> perms = {
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {1, 2, 0},  // (123): 1->2->3->1
      {2, 0, 1},  // (132)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
  };
  return perms;
}

inline FiniteGroup symmetric3() {
  return group_from_permutations(s3_permutations(), {"e", "(12)", "(123)", "(132)", "(13)", "(23)"});
}

// Symmetries of a square acting on its vertices 0..3.
inline FiniteGroup dihedral4() {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<std::size_t> p(4);
    for (std::size_t x = 0; x < 4; ++x) p[x] = (x + k) % 4;
    perms.push_back(p);
    names.push_back("r" + std::to_string(k));
  }
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<std::size_t> p(4);
    for (std::size_t x = 0; x < 4; ++x) p[x] = (4 + k - x) % 4;
    perms.push_back(p);
    names.push_back("s" + std::to_string(k));
  }
  return group_from_permutations(perms, std::move(names));
}

// Quaternion group {±1, ±i, ±j, ±k}.
inline FiniteGroup quaternion8() {
  // unit index: 0 = 1, 1 = i, 2 = j, 3 = k; element index = 2 * unit + (negative ? 1 : 0)
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  CayleyTable table(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t ua = a / 2;
      const std::size_t ub = b / 2;
      int sign = unit_sign[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      table[a][b] = 2 * static_cast<std::size_t>(unit_product[ua][ub]) + (sign < 0 ? 1 : 0);
    }
  }
  return FiniteGroup::from_table(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline std::vector<std::pair<std::string, FiniteGroup>> all_finite() {
  return {{"Z2", cyclic(2)}, {"Z3", cyclic(3)},      {"Z4", cyclic(4)},      {"Z6", cyclic(6)},
          {"S3", symmetric3()}, {"D4", dihedral4()}, {"Q8", quaternion8()}};
}

// Column-action permutation matrix: M e_x = e_{p(x)}.
template <Scalar T>
Matrix<T> permutation_matrix(const std::vector<std::size_t>& p) {
  Matrix<T> m(p.size(), p.size());
  for (std::size_t x = 0; x < p.size(); ++x) m(p[x], x) = scalar_traits<T>::one();
  return m;
}

template <Scalar T>
MatrixGroup<T> s3_permutation_matrices() {
  std::vector<Matrix<T>> mats;
  for (const auto& p : s3_permutations()) mats.push_back(permutation_matrix<T>(p));
  return MatrixGroup<T>::from_elements(Family::GL, 3, {}, std::move(mats));
}

// {I, -I} in dimension 2.
template <Scalar T>
MatrixGroup<T> z2_plus_minus_identity() {
  const Matrix<T> id = Matrix<T>::identity(2);
  return MatrixGroup<T>::from_elements(Family::GL, 2, {}, {id, -scalar_traits<T>::one() * id});
}

// Signed permutation matrices of the plane (order 8), exact.
template <Scalar T>
MatrixGroup<T> signed_permutations2() {
  const T one = scalar_traits<T>::one();
  const T zero = scalar_traits<T>::zero();
  return MatrixGroup<T>::from_generators(Family::GL, 2, {},
                                         {Matrix<T>{{zero, one}, {one, zero}}, Matrix<T>{{one, zero}, {zero, -one}}});
}

// Rotations by multiples of 2*pi/12 (float backend).
inline MatrixGroup<double> so2_rotations(std::size_t count = 12) {
  std::vector<Matrix<double>> mats;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    mats.push_back(Matrix<double>{{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}});
  }
  return MatrixGroup<double>::from_elements(Family::SO, 2, {2, 0}, std::move(mats));
}

inline Matrix<double> rotation2(double theta) {
  return Matrix<double>{{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}};
}

inline Matrix<double> boost2(double rapidity) {
  return Matrix<double>{{std::cosh(rapidity), std::sinh(rapidity)}, {std::sinh(rapidity), std::cosh(rapidity)}};
}

// Unclosed sample of GL(2, Q): useful where only stored pairs are needed.
inline MatrixGroup<Rational> gl2_sample() {
  using R = Rational;
  return MatrixGroup<Rational>::from_elements(
      Family::GL, 2, {},
      {Matrix<R>{{1, 0}, {0, 1}}, Matrix<R>{{1, 2}, {3, 4}}, Matrix<R>{{1, 1}, {0, 1}}, Matrix<R>{{2, 0}, {0, 1}},
       Matrix<R>{{0, 1}, {1, 0}}, Matrix<R>{{2, 1}, {1, 1}}, Matrix<R>{{R(1, 2), 0}, {R(-3, 4), 3}}});
}

}  // namespace basiskit::fixtures

#endif  // BASISKIT_FIXTURES_HPP
