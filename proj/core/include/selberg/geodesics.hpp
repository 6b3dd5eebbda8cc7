#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selberg/branching.hpp"
#include "selberg/plancherel.hpp"

namespace selberg {

/// A closed geodesic class g = m a with l(g) = length. Holonomy and twist are
/// stored as rotation / unitary eigenangles.
struct GeodesicClass {
  double length = 1.0;
  std::vector<double> holonomy_angles;
  int spin_lift_sign = 1;
  std::vector<double> chi_angles;
  bool primitive = true;
  int power = 1;

  std::size_t k() const noexcept { return holonomy_angles.size(); }
};

struct LengthSpectrum {
  int n = 3;
  int r = 1;
  std::optional<PiRational> vol;
  std::string name;
  std::vector<GeodesicClass> primitives;

  int k() const noexcept { return (n - 1) / 2; }
};

/// Reduces an angle into (-pi, pi].
double reduce_angle(double theta);
/// Reduces holonomy angles into (-pi, pi] and flips the spin lift sign once
/// per full turn removed, so the Spin element itself is unchanged.
void reduce_holonomy(std::vector<double>& angles, int& spin_lift_sign);

/// Throws Error{parse} (with a field path) or Error{validation}.
LengthSpectrum parse_spectrum(std::string_view json_text);
LengthSpectrum load_spectrum(const std::filesystem::path& path);
/// Semantic checks shared by the loaders and synthetic generators.
void validate_spectrum(const LengthSpectrum& spec);
std::string spectrum_to_json(const LengthSpectrum& spec);

GeodesicClass power_class(const GeodesicClass& g0, int j);

/// prod_j (1 - e^{+-l} e^{i theta_j})(1 - e^{+-l} e^{-i theta_j}); the minus
/// sign in the exponent when `inverse` is set.
std::complex<double> ad_determinant(const GeodesicClass& g, bool inverse);

/// tr sigma(m), with the lift sign applied to half-integral sigma.
std::complex<double> holonomy_trace(const GeodesicClass& g, const MType& sigma);

/// -l e^{rho l} tr sigma(m) / (2 det(1 - Ad(ma)|_n)).
std::complex<double> c_coefficient(const GeodesicClass& g, const MType& sigma);

std::complex<double> chi_trace(const GeodesicClass& g);

/// CSV rows (index, power, length, Re C, Im C) for every primitive power up
/// to max_power, primitives in input order.
void write_c_table(std::ostream& out, const LengthSpectrum& spec, const MType& sigma, int max_power);

}  // namespace selberg
