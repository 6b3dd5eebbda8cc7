#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "selberg/error.hpp"
#include "selberg/zeta.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace selberg;
using selberg::testing::Rng;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

LengthSpectrum one_geodesic(double theta = 0.0, int sign = 1) {
  LengthSpectrum s;
  s.n = 3;
  s.vol = PiRational{2, 2};
  GeodesicClass g;
  g.length = 1.0;
  g.holonomy_angles = {theta};
  g.spin_lift_sign = sign;
  g.chi_angles = {0.0};
  s.primitives.push_back(g);
  return s;
}

MType mt(int n, const char* w) { return make_mtype(n, Weight::parse(w)); }

/// Double-sum oracle for log Z_S: raw powers j*theta (no reduction), spin
/// lift sign^j, the Weyl character formula, and the eigenvalue product for
/// det(1 - Ad^{-1}).
cd selberg_oracle(cd s, const MType& sigma, const LengthSpectrum& spec, int max_j = 400) {
  const double rho = 0.5 * (spec.n - 1);
  std::vector<int> hw(sigma.weight.doubled().begin(), sigma.weight.doubled().end());
  const bool half = sigma.weight.is_half_integral();
  cd total = 0;
  for (const GeodesicClass& g : spec.primitives) {
    for (int j = 1; j <= max_j; ++j) {
      const double l = j * g.length;
      std::vector<double> th;
      for (double t : g.holonomy_angles) th.push_back(j * t);
      cd tr_sigma = sigma.weight.is_zero() ? cd(1.0) : selberg::testing::weyl_character_oracle(Series::D, hw, th);
      if (half && g.spin_lift_sign < 0 && j % 2 == 1) tr_sigma = -tr_sigma;
      cd tr_chi = 0;
      for (double phi : g.chi_angles) tr_chi += std::polar(1.0, j * phi);
      cd det = 1;
      for (double t : th) det *= (1.0 - std::exp(cd(-l, t))) * (1.0 - std::exp(cd(-l, -t)));
      total += -(1.0 / j) * std::exp(-(s + rho) * l) * tr_sigma * tr_chi / det;
    }
  }
  return total;
}

cd ruelle_oracle(cd s, const LengthSpectrum& spec) {
  cd total = 0;
  for (const GeodesicClass& g : spec.primitives) {
    for (int j = 1; j <= 2000; ++j) {
      cd tr_chi = 0;
      for (double phi : g.chi_angles) tr_chi += std::polar(1.0, j * phi);
      total += (1.0 / j) * tr_chi * std::exp(-s * (j * g.length));
    }
  }
  return total;
}

cd derivative(const std::function<cd(cd)>& f, cd s, double h = 1e-4) {
  return (f(s + h) - f(s - h)) / (2 * h);
}

}  // namespace

TEST(SelbergLog, SingleGeodesicWorkedNumber) {
  // sum_j -(1/j) e^{-3j} / (1 - e^{-j})^2
  double oracle = 0;
  for (int j = 1; j < 200; ++j) oracle += -(1.0 / j) * std::exp(-3.0 * j) / std::pow(1 - std::exp(-1.0 * j), 2);
  const ZetaValue v = selberg_log(2.0, mt(3, "0"), one_geodesic());
  EXPECT_TRUE(v.converged);
  EXPECT_NEAR(v.log_value.real(), oracle, 1e-12);
  EXPECT_NEAR(v.log_value.real(), -0.126305, 1e-6);
  EXPECT_EQ(v.log_value.imag(), 0.0);
}

TEST(SelbergLog, EmptySpectrumIsZero) {
  LengthSpectrum empty;
  empty.n = 5;
  for (cd s : {cd(3, 0), cd(2.5, 4)}) {
    EXPECT_EQ(selberg_log(s, mt(5, "1,0"), empty).log_value, cd(0));
    EXPECT_EQ(selberg_euler_direct(s, mt(5, "1,0"), empty).log_value, cd(0));
    EXPECT_EQ(ruelle_log(s + 2.0, empty).log_value, cd(0));
    EXPECT_EQ(fried_factorization_log(s + 2.0, empty).log_value, cd(0));
    EXPECT_EQ(log_derivative_D(s, mt(5, "1,0"), empty).log_value, cd(0));
  }
}

TEST(SelbergLog, ConvergenceFlags) {
  const LengthSpectrum s = one_geodesic();
  EXPECT_FALSE(selberg_log(0.5, mt(3, "0"), s).converged);
  EXPECT_FALSE(selberg_log(cd(1.0, 3.0), mt(3, "0"), s).converged);
  EXPECT_TRUE(selberg_log(1.5, mt(3, "0"), s).converged);
  EXPECT_FALSE(ruelle_log(1.5, s).converged);
  EXPECT_TRUE(ruelle_log(2.5, s).converged);
  EXPECT_THROW(selberg_log(2.0, mt(5, "0,0"), s), Error);
}

TEST(SelbergLogProperty, MatchesDoubleSumOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = trial % 2 == 0 ? 3 : 5;
    const LengthSpectrum spec = selberg::testing::random_spectrum(rng, n, 4);
    const Weight w = selberg::testing::random_dominant(rng, m_root_system(n), 4, trial % 3 == 0);
    const MType sigma = make_mtype(n, w);
    const double rho = 0.5 * (n - 1);
    const cd s(rho + selberg::testing::uniform(rng, 0.5, 2.0), selberg::testing::uniform(rng, -3, 3));
    const ZetaValue v = selberg_log(s, sigma, spec);
    ASSERT_TRUE(v.converged);
    const cd want = selberg_oracle(s, sigma, spec);
    EXPECT_NEAR(std::abs(v.log_value - want), 0.0, 1e-9 * std::max(1.0, std::abs(want)) + v.tail_bound)
        << "n=" << n << " sigma=" << w.to_string();
  }
}

TEST(SelbergLogProperty, RealForTrivialData) {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    LengthSpectrum spec = one_geodesic();
    spec.primitives[0].length = selberg::testing::uniform(rng, 0.5, 3.0);
    const double s = selberg::testing::uniform(rng, 1.2, 5.0);
    EXPECT_EQ(selberg_log(s, mt(3, "0"), spec).log_value.imag(), 0.0);
  }
}

TEST(SelbergEulerDirect, AgreesOnWorkedExample) {
  TruncationPolicy policy;
  policy.max_sym = 40;
  const ZetaValue a = selberg_log(2.0, mt(3, "0"), one_geodesic());
  const ZetaValue b = selberg_euler_direct(2.0, mt(3, "0"), one_geodesic(), policy);
  EXPECT_NEAR(std::abs(a.log_value - b.log_value), 0.0, 1e-10);
}

TEST(SelbergEulerDirect, LargeSLimit) {
  for (double s : {40.0, 80.0}) {
    EXPECT_NEAR(std::abs(selberg_euler_direct(s, mt(3, "1"), one_geodesic(0.4)).log_value), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(selberg_log(s, mt(3, "1"), one_geodesic(0.4)).log_value), 0.0, 1e-15);
  }
}

TEST(SelbergEulerDirectProperty, OracleEquivalence) {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = trial % 2 == 0 ? 3 : 5;
    const LengthSpectrum spec = selberg::testing::random_spectrum(rng, n, 3);
    const MType sigma = make_mtype(n, selberg::testing::random_dominant(rng, m_root_system(n), 4, trial % 4 == 1));
    const cd s(0.5 * (n - 1) + selberg::testing::uniform(rng, 0.5, 2.0), selberg::testing::uniform(rng, -2, 2));
    const ZetaValue a = selberg_log(s, sigma, spec);
    const ZetaValue b = selberg_euler_direct(s, sigma, spec);
    EXPECT_NEAR(std::abs(a.log_value - b.log_value), 0.0, 1e-10 + a.tail_bound + b.tail_bound);
  }
}

TEST(CaseB, SymmetricAndSuperCompose) {
  const LengthSpectrum spec = one_geodesic(0.7, -1);
  for (const char* w : {"1", "1/2", "3/2"}) {
    const MType sigma = mt(3, w);
    const cd s(2.0, 0.5);
    const cd a = selberg_log(s, sigma, spec).log_value;
    const cd b = selberg_log(s, sigma.flipped(), spec).log_value;
    EXPECT_NEAR(std::abs(symmetric_selberg_log(s, sigma, spec).log_value - (a + b)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(super_selberg_log(s, sigma, spec).log_value - (a - b)), 0.0, 1e-14);
    // The literal product over sigma and w sigma is S(s).
    const cd direct = selberg_euler_direct(s, sigma, spec).log_value + selberg_euler_direct(s, sigma.flipped(), spec).log_value;
    EXPECT_NEAR(std::abs(direct - (a + b)), 0.0, 1e-10);
  }
  EXPECT_THROW(super_selberg_log(2.0, mt(3, "0"), spec), Error);
}

TEST(LogDerivativeD, EqualsMinusDerivativeOfLogZ) {
  // Measured relation: D(p) = -(d/ds) log Z_S for case a and
  // D(p) = -(d/ds) log S for case b (the sum over sigma and w sigma).
  const LengthSpectrum spec = one_geodesic(0.3, 1);
  const cd p(2.0, 0.25);
  const MType trivial = mt(3, "0");
  const auto log_z = [&](cd s) { return selberg_log(s, trivial, spec).log_value; };
  EXPECT_NEAR(std::abs(log_derivative_D(p, trivial, spec).log_value + derivative(log_z, p)), 0.0, 1e-7);

  const MType b = mt(3, "1");
  const auto log_s = [&](cd s) { return symmetric_selberg_log(s, b, spec).log_value; };
  EXPECT_NEAR(std::abs(log_derivative_D(p, b, spec).log_value + derivative(log_s, p)), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(log_derivative_D(p, b, spec).log_value - log_derivative_D(p, b.flipped(), spec).log_value), 0.0,
              1e-14);
}

TEST(SuperLogDerivativeD, Examples) {
  EXPECT_THROW(super_log_derivative_D(2.0, mt(3, "0"), one_geodesic()), Error);
  EXPECT_NEAR(std::abs(super_log_derivative_D(2.0, mt(3, "1"), one_geodesic(0.0)).log_value), 0.0, 1e-14);
  const cd v = super_log_derivative_D(2.0, mt(3, "1"), one_geodesic(pi / 2)).log_value;
  EXPECT_NEAR(v.real(), 0.0, 1e-14);
  EXPECT_GT(std::abs(v.imag()), 1e-6);
  const MType b = mt(3, "1");
  const LengthSpectrum spec = one_geodesic(0.9);
  const cd p(2.5, -0.5);
  const auto log_super = [&](cd s) { return super_selberg_log(s, b, spec).log_value; };
  EXPECT_NEAR(std::abs(super_log_derivative_D(p, b, spec).log_value + derivative(log_super, p)), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(super_log_derivative_D(p, b, spec).log_value + super_log_derivative_D(p, b.flipped(), spec).log_value),
              0.0, 1e-14);
}

TEST(RuelleLog, Examples) {
  const ZetaValue v = ruelle_log(2.0, one_geodesic());
  EXPECT_NEAR(v.log_value.real(), -std::log(1 - std::exp(-2.0)), 1e-13);
  EXPECT_NEAR(v.log_value.real(), 0.145413, 1e-6);
  EXPECT_NEAR(std::abs(ruelle_log(60.0, one_geodesic()).log_value), 0.0, 1e-20);
  LengthSpectrum twisted = one_geodesic();
  twisted.r = 2;
  twisted.primitives[0].chi_angles = {0.0, pi};
  // sum_j (1/j)(1 + (-1)^j) e^{-sj} = -log(1 - e^{-2s})
  EXPECT_NEAR(ruelle_log(3.0, twisted).log_value.real(), -std::log(1 - std::exp(-6.0)), 1e-13);
}

TEST(RuelleLogProperty, MatchesGeometricOracle) {
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = trial % 2 == 0 ? 3 : 5;
    const LengthSpectrum spec = selberg::testing::random_spectrum(rng, n, 5);
    const cd s(n - 1 + selberg::testing::uniform(rng, 0.2, 2.0), selberg::testing::uniform(rng, -5, 5));
    EXPECT_NEAR(std::abs(ruelle_log(s, spec).log_value - ruelle_oracle(s, spec)), 0.0, 1e-12);
  }
}

TEST(FriedFactorization, Examples) {
  EXPECT_NEAR(std::abs(fried_factorization_log(3.0, one_geodesic()).log_value - ruelle_log(3.0, one_geodesic()).log_value),
              0.0, 1e-10);
  Rng rng(45);
  const LengthSpectrum two = selberg::testing::random_spectrum(rng, 5, 2);
  EXPECT_NEAR(std::abs(fried_factorization_log(5.0, two).log_value - ruelle_log(5.0, two).log_value), 0.0, 1e-9);
}

TEST(FriedFactorizationProperty, RandomSpectra) {
  Rng rng(46);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = trial % 2 == 0 ? 3 : 5;
    const LengthSpectrum spec = selberg::testing::random_spectrum(rng, n, 4);
    const cd s(n - 1 + selberg::testing::uniform(rng, 0.5, 2.0), selberg::testing::uniform(rng, -2, 2));
    EXPECT_NEAR(std::abs(fried_factorization_log(s, spec).log_value - ruelle_log(s, spec).log_value), 0.0, 1e-9);
  }
}

TEST(HPolynomial, ConstantNPlusOne) {
  for (int n = 3; n <= 13; n += 2) {
    EXPECT_EQ(h_polynomial(n).coefficients(), (std::map<int, Rational>{{0, Rational(n + 1)}})) << n;
    EXPECT_EQ(euler_characteristic_grassmannian(n), n + 1);
  }
}

TEST(FunctionalRhs, Examples) {
  const std::optional<PiRational> vol = PiRational{2, 2};
  const MType trivial = mt(3, "0");
  EXPECT_NEAR(std::abs(functional_rhs(1.0, 3, trivial, vol, 1, 1) - std::exp(2 * pi / 3)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(functional_rhs(0.0, 3, trivial, vol, 1, 1) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(functional_rhs_ruelle(1.0, 3, vol, 1)) / std::exp(8 * pi), 1.0, 1e-12);
  EXPECT_THROW(functional_rhs(1.0, 3, trivial, std::nullopt, 1, 1), Error);
  EXPECT_THROW(functional_rhs_ruelle(1.0, 3, std::nullopt, 1), Error);
}

TEST(PsiTransform, Examples) {
  const std::vector<cd> two{1.0, 2.0};
  EXPECT_NEAR(std::abs(psi_transform(two, [](cd) { return cd(1.0); })), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi_transform(two, [](cd p) { return p * p; }) + 1.0), 0.0, 1e-15);
  const std::vector<cd> three{1.0, 2.0, 3.0};
  for (int m = 0; m <= 1; ++m) {
    EXPECT_NEAR(std::abs(psi_transform(three, [m](cd p) { return std::pow(p, 2 * m); })), 0.0, 1e-14);
  }
  const std::vector<cd> clash{1.0, -1.0};
  EXPECT_THROW(psi_transform(clash, [](cd) { return cd(1.0); }), Error);
}

TEST(PsiTransformProperty, AnnihilatesLowEvenPowers) {
  for (int big_n = 2; big_n <= 5; ++big_n) {
    std::vector<cd> nodes;
    for (int i = 1; i <= big_n; ++i) nodes.emplace_back(i);
    for (int m = 0; m <= big_n - 2; ++m) {
      EXPECT_NEAR(std::abs(psi_transform(nodes, [m](cd p) { return std::pow(p, 2 * m); })), 0.0, 1e-9);
    }
    // The first power not killed: sum_i p_i^{2(N-1)} / prod_{j != i}(p_j^2 - p_i^2) = (-1)^{N-1}.
    const cd top = psi_transform(nodes, [big_n](cd p) { return std::pow(p, 2 * (big_n - 1)); });
    EXPECT_NEAR(top.real(), big_n % 2 == 0 ? -1.0 : 1.0, 1e-9);
  }
}

TEST(TorsionExponents, Examples) {
  EXPECT_EQ(torsion_exponents(3), (std::vector<std::pair<int, int>>{{0, 3}, {1, -1}}));
  EXPECT_EQ(torsion_exponents(5), (std::vector<std::pair<int, int>>{{0, 5}, {1, -3}, {2, 1}}));
}

TEST(TorsionIdentity, Examples) {
  const std::vector<double> d{2, 3, 3, 2};
  const TorsionCheck c = torsion_identity_check(3, d);
  EXPECT_NEAR(c.lhs, 8.0 / 3.0, 1e-14);
  EXPECT_NEAR(c.rhs, 8.0 / 3.0, 1e-14);
  const std::vector<double> ones(6, 1.0);
  EXPECT_EQ(torsion_identity_check(5, ones).lhs, 1.0);
  EXPECT_EQ(torsion_identity_check(5, ones).rhs, 1.0);
  const std::vector<double> asym{2, 3, 4, 2};
  EXPECT_THROW(torsion_identity_check(3, asym), Error);
  const std::vector<double> neg{-2, 3, 3, -2};
  EXPECT_THROW(torsion_identity_check(3, neg), Error);
}

TEST(TorsionIdentityProperty, RandomSymmetricInputs) {
  Rng rng(47);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + 2 * (trial % 3);
    std::vector<double> d(static_cast<std::size_t>(n + 1));
    for (int l = 0; l <= n / 2; ++l) {
      const double v = std::exp(selberg::testing::uniform(rng, -2, 2));
      d[static_cast<std::size_t>(l)] = v;
      d[static_cast<std::size_t>(n - l)] = v;
    }
    const TorsionCheck c = torsion_identity_check(n, d);
    EXPECT_NEAR(c.lhs / c.rhs, 1.0, 1e-12);
  }
}
