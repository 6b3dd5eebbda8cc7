#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

/// Dense univariate polynomial with exact rational coefficients.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// The monomial x.
  static Polynomial identity();

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coefficient(std::size_t power) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// True if every odd-degree coefficient vanishes.
  bool is_even() const;
  /// True if every even-degree coefficient vanishes.
  bool is_odd() const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  /// p(x + shift), re-expanded in x.
  Polynomial shifted(const Rational& shift) const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Nonzero coefficients keyed by exponent.
  std::map<int, Rational> sparse() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace selberg
