#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "selberg/error.hpp"
#include "selberg/geodesics.hpp"
#include "support/generators.hpp"
#include "support/paths.hpp"

using namespace selberg;
using selberg::testing::Rng;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;
const double e = std::exp(1.0);

GeodesicClass cls(double length, std::vector<double> angles, std::vector<double> chi = {0.0}, int sign = 1) {
  GeodesicClass g;
  g.length = length;
  g.holonomy_angles = std::move(angles);
  g.chi_angles = std::move(chi);
  g.spin_lift_sign = sign;
  return g;
}

ErrorKind kind_of(const std::string& json) {
  try {
    parse_spectrum(json);
  } catch (const Error& err) {
    return err.kind();
  }
  return ErrorKind::internal;
}

std::string message_of(const std::string& json) {
  try {
    parse_spectrum(json);
  } catch (const Error& err) {
    return err.what();
  }
  return {};
}

}  // namespace

TEST(LoadSpectrum, MinimalFile) {
  const LengthSpectrum s = load_spectrum(selberg::testing::data_path("one_geodesic.json"));
  EXPECT_EQ(s.n, 3);
  EXPECT_EQ(s.k(), 1);
  EXPECT_EQ(s.r, 1);
  ASSERT_EQ(s.primitives.size(), 1u);
  ASSERT_TRUE(s.vol.has_value());
  EXPECT_EQ(*s.vol, (PiRational{2, 2}));
}

TEST(LoadSpectrum, RejectsEvenDimension) {
  EXPECT_EQ(kind_of(R"({"n":4,"r":1,"vol":null,"name":"x","primitives":[]})"), ErrorKind::validation);
}

TEST(LoadSpectrum, RejectsBadClasses) {
  EXPECT_EQ(kind_of(R"({"n":3,"r":1,"vol":null,"name":"x","primitives":[
      {"length":0,"holonomy_angles":[0],"spin_lift_sign":1,"chi_angles":[0]}]})"),
            ErrorKind::validation);
  EXPECT_EQ(kind_of(R"({"n":5,"r":1,"vol":null,"name":"x","primitives":[
      {"length":1,"holonomy_angles":[0],"spin_lift_sign":1,"chi_angles":[0]}]})"),
            ErrorKind::validation);
  EXPECT_EQ(kind_of(R"({"n":3,"r":1,"vol":null,"name":"x","primitives":[
      {"length":1,"holonomy_angles":[0],"spin_lift_sign":2,"chi_angles":[0]}]})"),
            ErrorKind::validation);
}

TEST(LoadSpectrum, ParseErrorsCarryFieldPath) {
  const std::string bad = R"({"n":3,"r":1,"vol":null,"name":"x","primitives":[
      {"length":"long","holonomy_angles":[0],"spin_lift_sign":1,"chi_angles":[0]}]})";
  EXPECT_EQ(kind_of(bad), ErrorKind::parse);
  EXPECT_NE(message_of(bad).find("primitives[0].length"), std::string::npos) << message_of(bad);
  EXPECT_EQ(kind_of("{not json"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"r":1,"vol":null,"name":"x","primitives":[]})"), ErrorKind::parse);
}

TEST(LoadSpectrum, TwistedChiTrace) {
  const LengthSpectrum s = parse_spectrum(R"({"n":3,"r":2,"vol":null,"name":"x","primitives":[
      {"length":1,"holonomy_angles":[0],"spin_lift_sign":1,"chi_angles":[0.0,1.2]}]})");
  const cd want = 1.0 + std::polar(1.0, 1.2);
  EXPECT_NEAR(std::abs(chi_trace(s.primitives[0]) - want), 0.0, 1e-15);
}

TEST(LoadSpectrum, JsonRoundTrip) {
  const LengthSpectrum s = load_spectrum(selberg::testing::data_path("two_geodesics_n5.json"));
  const LengthSpectrum back = parse_spectrum(spectrum_to_json(s));
  EXPECT_EQ(back.n, s.n);
  EXPECT_EQ(back.r, s.r);
  ASSERT_EQ(back.primitives.size(), s.primitives.size());
  for (std::size_t i = 0; i < s.primitives.size(); ++i) {
    EXPECT_EQ(back.primitives[i].length, s.primitives[i].length);
    EXPECT_EQ(back.primitives[i].holonomy_angles, s.primitives[i].holonomy_angles);
    EXPECT_EQ(back.primitives[i].spin_lift_sign, s.primitives[i].spin_lift_sign);
  }
}

TEST(PowerClass, Examples) {
  const GeodesicClass g = cls(1.0, {pi / 2});
  const GeodesicClass same = power_class(g, 1);
  EXPECT_EQ(same.length, g.length);
  EXPECT_EQ(same.holonomy_angles, g.holonomy_angles);
  const GeodesicClass four = power_class(g, 4);
  EXPECT_DOUBLE_EQ(four.length, 4.0);
  EXPECT_NEAR(four.holonomy_angles[0], 0.0, 1e-12);
  EXPECT_EQ(four.power, 4);
  EXPECT_FALSE(four.primitive);
  EXPECT_EQ(power_class(cls(1.0, {0.3}, {0.0}, -1), 2).spin_lift_sign, 1);
  EXPECT_THROW(power_class(g, 0), Error);
}

TEST(PowerClassProperty, SpinCharacterOfPowersMatchesHalfAngleOracle) {
  // The spin character of a rotation by theta in Spin(2) is e^{i theta / 2}
  // for the chosen lift; the j-th power of the lift is e^{i j theta / 2} times sign^j.
  Rng rng(5);
  const MType half = make_mtype(3, Weight::parse("1/2"));
  for (int trial = 0; trial < 200; ++trial) {
    const double theta = selberg::testing::random_angle(rng);
    const int sign = trial % 2 == 0 ? 1 : -1;
    const int j = selberg::testing::uniform_int(rng, 1, 12);
    const GeodesicClass g = power_class(cls(1.0, {theta}, {0.0}, sign), j);
    const cd want = std::polar(1.0, j * theta / 2) * ((sign < 0 && j % 2 == 1) ? -1.0 : 1.0);
    EXPECT_NEAR(std::abs(holonomy_trace(g, half) - want), 0.0, 1e-10) << theta << " " << j;
  }
}

TEST(PowerClassProperty, ChiTraceOfPowers) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto chi = selberg::testing::random_angles(rng, 3);
    const int j = selberg::testing::uniform_int(rng, 1, 9);
    cd want = 0;
    for (double phi : chi) want += std::polar(1.0, j * phi);
    EXPECT_NEAR(std::abs(chi_trace(power_class(cls(1.0, {0.0}, chi), j)) - want), 0.0, 1e-12);
  }
}

TEST(AdDeterminant, Examples) {
  EXPECT_NEAR(ad_determinant(cls(1.0, {0.0}), false).real(), (1 - e) * (1 - e), 1e-12);
  EXPECT_NEAR(ad_determinant(cls(1.0, {pi}), false).real(), (1 + e) * (1 + e), 1e-12);
  EXPECT_NEAR(ad_determinant(cls(1.0, {pi}), false).real(), 13.825620, 1e-6);
  EXPECT_NEAR(ad_determinant(cls(1e-9, {0.0}), false).real(), 0.0, 1e-15);
}

TEST(AdDeterminantProperty, EigenvaluePairing) {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 * selberg::testing::uniform_int(rng, 1, 4) + 1;
    const double l = selberg::testing::uniform(rng, 0.1, 4.0);
    const GeodesicClass g = cls(l, selberg::testing::random_angles(rng, static_cast<std::size_t>((n - 1) / 2)));
    // Direct product over the eigenvalues e^{+-l +- i theta} as an oracle.
    cd direct = 1.0;
    for (double t : g.holonomy_angles) direct *= (1.0 - std::exp(cd(l, t))) * (1.0 - std::exp(cd(l, -t)));
    const cd fwd = ad_determinant(g, false);
    EXPECT_NEAR(std::abs(fwd - direct) / std::abs(direct), 0.0, 1e-12);
    EXPECT_NEAR(fwd.imag(), 0.0, 1e-12 * std::abs(fwd));
    const cd paired = std::exp((n - 1) * l) * ad_determinant(g, true) * ((n - 1) % 2 == 0 ? 1.0 : -1.0);
    EXPECT_NEAR(std::abs(fwd - paired) / std::abs(fwd), 0.0, 1e-12);
  }
}

TEST(CCoefficient, Examples) {
  const MType trivial = make_mtype(3, Weight::parse("0"));
  const cd c = c_coefficient(cls(1.0, {0.0}), trivial);
  EXPECT_NEAR(c.real(), -e / (2 * (1 - e) * (1 - e)), 1e-12);
  EXPECT_NEAR(c.real(), -0.460337, 1e-6);
  EXPECT_NEAR(c.imag(), 0.0, 1e-15);
  const MType vec5 = make_mtype(5, Weight::parse("1,0"));
  // tr of the standard rep of SO(4) at (pi/2, pi/2) is 2 cos + 2 cos = 0.
  EXPECT_NEAR(std::abs(c_coefficient(cls(1.0, {pi / 2, pi / 2}), vec5)), 0.0, 1e-14);
  EXPECT_THROW(c_coefficient(cls(0.0, {0.0}), trivial), Error);
}

TEST(CCoefficientProperty, CaseBPairIsRealAndDecays) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 2 == 0 ? 3 : 5;
    const RootSystem d = m_root_system(n);
    Weight w = selberg::testing::random_dominant(rng, d, 5, trial % 3 == 0);
    if (weyl_flip(w) == w) continue;
    const MType sigma = make_mtype(n, w);
    const GeodesicClass g =
        cls(selberg::testing::uniform(rng, 0.3, 3.0), selberg::testing::random_angles(rng, d.rank()), {0.0},
            trial % 4 < 2 ? 1 : -1);
    const cd sum = c_coefficient(g, sigma) + c_coefficient(g, sigma.flipped());
    EXPECT_NEAR(sum.imag(), 0.0, 1e-10 * std::max(1.0, std::abs(sum)));
  }
  const MType trivial = make_mtype(3, Weight::parse("0"));
  for (double l = 2.0; l < 40.0; l += 2.0) {
    EXPECT_LT(std::abs(c_coefficient(cls(l, {0.0}), trivial)) * std::exp(0.5 * l), l);
  }
}

TEST(ChiTrace, Examples) {
  EXPECT_NEAR(std::abs(chi_trace(cls(1.0, {0.0}, {0.0})) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(chi_trace(cls(1.0, {0.0}, {0.0, pi}))), 0.0, 1e-15);
}

TEST(CTable, CsvShape) {
  const LengthSpectrum s = load_spectrum(selberg::testing::data_path("two_geodesics_n5.json"));
  std::ostringstream out;
  write_c_table(out, s, make_mtype(5, Weight::parse("0,0")), 3);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "index,power,length,Re C,Im C");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6);
}
