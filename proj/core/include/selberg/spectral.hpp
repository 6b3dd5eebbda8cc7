#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

struct SpectralEntry {
  double lambda = 0.0;
  long long multiplicity = 1;
  std::optional<int> sign;
};

/// Finite eigenvalue data. Signed data carries a sign on every entry.
struct SpectralData {
  bool is_signed = false;
  std::vector<SpectralEntry> entries;
};

/// Positive multiplicities, nondecreasing lambdas, signs iff signed.
void validate_spectral(const SpectralData& data);
SpectralData parse_spectral(std::string_view json_text);
SpectralData load_spectral(const std::filesystem::path& path);

/// sum m e^{-t lambda}; unsigned data, Re t > 0.
std::complex<double> theta_series(const SpectralData& data, std::complex<double> t);
/// sum sign m e^{-t |lambda|}; signed data, Re t > 0.
std::complex<double> super_theta_series(const SpectralData& data, std::complex<double> t);
/// sum sign m |lambda|^{-s}; signed data without zero eigenvalues.
std::complex<double> eta_series(const SpectralData& data, std::complex<double> s);
/// Exact eta at an integer argument s >= 0 for data whose |lambda| are
/// integers (or half-integers); s = 0 gives the signed count.
Rational eta_exact(const SpectralData& data, int s);
/// sum m prod_i (lambda^2 + p_i^2)^{-1}.
std::complex<double> resolvent_product_trace(const SpectralData& data, std::span<const std::complex<double>> points);

}  // namespace selberg
