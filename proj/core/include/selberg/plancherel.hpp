#pragma once

#include <map>
#include <string>
#include <vector>

#include "selberg/branching.hpp"
#include "selberg/polynomial.hpp"
#include "selberg/rational.hpp"

namespace selberg {

/// rational_part * pi^pi_power. The power may go negative after a quotient.
struct PiRational {
  Rational rational_part{0};
  int pi_power = 0;

  double value() const;
  std::string to_string() const;
  friend PiRational operator*(const PiRational& a, const PiRational& b) {
    return {a.rational_part * b.rational_part, a.pi_power + b.pi_power};
  }
  friend PiRational operator/(const PiRational& a, const PiRational& b);
  friend bool operator==(const PiRational& a, const PiRational& b) {
    return a.rational_part == b.rational_part && (a.rational_part == 0 || a.pi_power == b.pi_power);
  }
};

/// A polynomial with only even exponents (checked on construction).
class RationalEvenPoly {
 public:
  RationalEvenPoly() = default;
  explicit RationalEvenPoly(Polynomial p);
  const Polynomial& poly() const noexcept { return poly_; }
  int degree() const noexcept { return poly_.degree(); }
  Rational operator()(const Rational& x) const { return poly_(x); }
  double operator()(double x) const { return poly_(x); }
  /// Nonzero coefficients keyed by (even) exponent.
  std::map<int, Rational> coefficients() const { return poly_.sparse(); }
  friend bool operator==(const RationalEvenPoly&, const RationalEvenPoly&) = default;

 private:
  Polynomial poly_;
};

struct Ladder {
  Rational epsilon{0};
  RationalEvenPoly poly;
  int d = 1;

  /// m_d(lambda) for lambda in epsilon + Z, lambda >= 0; zero off the ladder.
  Rational multiplicity(const Rational& lambda) const;
  /// d * P(0) / 2; only meaningful when epsilon = 0.
  Rational zero_multiplicity() const { return Rational(d) * poly(Rational(0)) / 2; }
};

RationalEvenPoly weyl_polynomial(int n, const MType& sigma);
/// 0 for integral weights, 1/2 for half-integral ones.
Rational epsilon_sigma(const MType& sigma);
Ladder ladder(int n, const MType& sigma);

struct SphereEntry {
  /// 4 * eigenvalue^2, an integer.
  long long quad = 0;
  long long multiplicity = 0;
  /// Negative eigenvalue^2, irrational eigenvalue, or off the ladder.
  bool exceptional = false;

  /// The eigenvalue when it is a nonnegative half-integer.
  bool eigenvalue(Rational& out) const;
  double eigenvalue_squared() const { return 0.25 * static_cast<double>(quad); }
};

/// Eigenvalues of A_d on the compact dual S^n with signed multiplicities,
/// from Frobenius reciprocity against lift(sigma).gamma. Sorted by quad.
std::vector<SphereEntry> sphere_spectrum(int n, const MType& sigma, const Rational& lambda_max);

struct LadderPoint {
  Rational lambda;
  long long observed = 0;
  Rational expected;
};

struct LadderComparison {
  Ladder ladder;
  std::vector<LadderPoint> points;
  /// Ladder points where observed != expected.
  std::vector<LadderPoint> deviations;
  /// Spectrum entries that are not on the ladder at all.
  std::vector<SphereEntry> off_ladder;
  bool zero_rule_holds = true;
};

LadderComparison compare_with_ladder(int n, const MType& sigma, const Rational& lambda_max);

/// vol(S^n) = 2 pi^{(n+1)/2} / ((n-1)/2)!.
PiRational sphere_volume(int n);

struct IdentityCoefficient {
  int derivative_order = 0;
  PiRational coefficient;
};

/// Coefficients of d pi r vol omega_{n+1}^{-1} P(d/dt) delta(t).
std::vector<IdentityCoefficient> identity_coefficients(int n, const MType& sigma, const PiRational& vol, int r);

}  // namespace selberg
