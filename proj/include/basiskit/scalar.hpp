#ifndef BASISKIT_SCALAR_HPP
#define BASISKIT_SCALAR_HPP

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "basiskit/errors.hpp"

namespace basiskit {

inline constexpr double kDefaultTolerance = 1e-9;

// Exact rational number. GMP keeps the value canonical: positive denominator,
// numerator and denominator coprime.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator) {
    if (denominator == 0) throw Error(ErrorKind::Singular, "zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  // Accepts "n", "-n", "n/d" with optional surrounding whitespace.
  static Rational parse(std::string_view text) {
    std::string s(text);
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorKind::ParseError, "empty rational literal");
    s = s.substr(first, last - first + 1);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
      if (t.empty()) return false;
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') return false;
      }
      return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos) {
      if (!valid_int(s)) throw Error(ErrorKind::ParseError, "bad rational literal '" + s + "'");
      return Rational(mpq_class(mpz_class(strip_plus(s)), 1));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) {
      throw Error(ErrorKind::ParseError, "bad rational literal '" + s + "'");
    }
    mpz_class d(strip_plus(den));
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    return Rational(mpq_class(mpz_class(strip_plus(num)), d));
  }

  [[nodiscard]] std::string str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }
  [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::Singular, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view backend = "exact";

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_ratio(long n, long d) { return Rational(n, d); }
  static bool equal(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
  static bool is_zero(const Rational& a, double /*tol*/) { return a.is_zero(); }
  static double to_double(const Rational& a) { return a.to_double(); }
  static double magnitude(const Rational& a) { return std::fabs(a.to_double()); }
  static std::string to_string(const Rational& a) { return a.str(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view backend = "approx";

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_ratio(long n, long d) { return static_cast<double>(n) / static_cast<double>(d); }
  static bool equal(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
  static bool is_zero(double a, double tol) { return std::fabs(a) <= tol; }
  static double to_double(double a) { return a; }
  static double magnitude(double a) { return std::fabs(a); }
  static std::string to_string(double a) {
    std::ostringstream os;
    os.precision(17);
    os << a;
    return os.str();
  }
};

/// A field backend: exact rationals or float64 compared within a tolerance.
template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { scalar_traits<T>::equal(a, b, 0.0) } -> std::same_as<bool>;
  { scalar_traits<T>::zero() } -> std::convertible_to<T>;
};

template <Scalar T>
bool scalar_equal(const T& a, const T& b, double tol = kDefaultTolerance) {
  return scalar_traits<T>::equal(a, b, tol);
}

template <Scalar T>
bool scalar_is_zero(const T& a, double tol = kDefaultTolerance) {
  return scalar_traits<T>::is_zero(a, tol);
}

template <Scalar T>
T scalar_from_ratio(long n, long d = 1) {
  return scalar_traits<T>::from_ratio(n, d);
}

}  // namespace basiskit

#endif  // BASISKIT_SCALAR_HPP
