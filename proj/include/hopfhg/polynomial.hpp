#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hopfhg/rational.hpp"

namespace hopfhg {

/// Dense univariate polynomial in n over the rationals. coefficient(i) is the
/// coefficient of n^i; trailing zeros are never stored, so the zero
/// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// n(n-1)...(n-k+1).
  static Polynomial falling_factorial(unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  Rational operator()(long x) const { return (*this)(Rational(x)); }

  /// p(-n).
  Polynomial reflected() const;
  /// p(n + shift).
  Polynomial shifted(const Rational& shift) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Coefficients in ascending degree as exact fraction strings.
  std::vector<std::string> coefficient_strings() const;
  /// Human-readable form, highest degree first, e.g. "n^2 - 1/2 n".
  std::string to_text() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hopfhg
