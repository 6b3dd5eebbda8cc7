#include "selberg/spectral.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>
#include "selberg/error.hpp"

namespace selberg {

void validate_spectral(const SpectralData& data) {
  for (std::size_t i = 0; i < data.entries.size(); ++i) {
    const auto& e = data.entries[i];
    const std::string at = "entries[" + std::to_string(i) + "]";
    if (!std::isfinite(e.lambda)) fail(ErrorKind::validation, at + ": eigenvalue must be finite");
    if (e.multiplicity <= 0) fail(ErrorKind::validation, at + ": multiplicity must be positive");
    if (i > 0 && e.lambda < data.entries[i - 1].lambda) fail(ErrorKind::validation, at + ": eigenvalues must be nondecreasing");
    if (e.sign.has_value() != data.is_signed) {
      fail(ErrorKind::validation, at + (data.is_signed ? ": signed data needs a sign" : ": sign given for unsigned data"));
    }
    if (e.sign && *e.sign != 1 && *e.sign != -1) fail(ErrorKind::validation, at + ": sign must be 1 or -1");
  }
}

SpectralData parse_spectral(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse, std::string("spectral data: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::parse, "$: expected an object");
  SpectralData data;
  if (const auto it = doc.find("signed"); it != doc.end()) {
    if (!it->is_boolean()) fail(ErrorKind::parse, "$.signed: expected a boolean");
    data.is_signed = it->get<bool>();
  }
  const auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array()) fail(ErrorKind::parse, "$.entries: expected an array");
  for (std::size_t i = 0; i < entries->size(); ++i) {
    const std::string at = "$.entries[" + std::to_string(i) + "]";
    const auto& row = (*entries)[i];
    if (!row.is_array() || row.size() < 2 || row.size() > 3) fail(ErrorKind::parse, at + ": expected [lambda, mult, sign?]");
    if (!row[0].is_number()) fail(ErrorKind::parse, at + "[0]: expected a number");
    if (!row[1].is_number_integer()) fail(ErrorKind::parse, at + "[1]: expected an integer");
    SpectralEntry e{row[0].get<double>(), row[1].get<long long>(), std::nullopt};
    if (row.size() == 3) {
      if (!row[2].is_number_integer()) fail(ErrorKind::parse, at + "[2]: expected 1 or -1");
      e.sign = row[2].get<int>();
    }
    data.entries.push_back(e);
  }
  validate_spectral(data);
  return data;
}

SpectralData load_spectral(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open spectral file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spectral(buf.str());
}

namespace {

void require_right_half_plane(std::complex<double> t) {
  if (!(t.real() > 0)) fail(ErrorKind::domain, "theta series need Re t > 0");
}

void require_signed(const SpectralData& data, const char* what) {
  if (!data.is_signed) fail(ErrorKind::domain, std::string(what) + " needs signed spectral data");
}

// Net signed multiplicity per |lambda|, so that +-lambda pairs cancel exactly
// before any floating-point weight is applied.
std::map<double, long long> net_by_modulus(const SpectralData& data) {
  std::map<double, long long> net;
  for (const auto& e : data.entries) net[std::abs(e.lambda)] += *e.sign * e.multiplicity;
  return net;
}

}  // namespace

std::complex<double> theta_series(const SpectralData& data, std::complex<double> t) {
  require_right_half_plane(t);
  if (data.is_signed) fail(ErrorKind::domain, "theta_series needs unsigned spectral data");
  std::complex<double> acc = 0;
  for (const auto& e : data.entries) acc += static_cast<double>(e.multiplicity) * std::exp(-t * e.lambda);
  return acc;
}

std::complex<double> super_theta_series(const SpectralData& data, std::complex<double> t) {
  require_right_half_plane(t);
  require_signed(data, "super_theta_series");
  std::complex<double> acc = 0;
  for (const auto& [lam, m] : net_by_modulus(data)) {
    if (m != 0) acc += static_cast<double>(m) * std::exp(-t * lam);
  }
  return acc;
}

std::complex<double> eta_series(const SpectralData& data, std::complex<double> s) {
  require_signed(data, "eta_series");
  std::complex<double> acc = 0;
  for (const auto& [lam, m] : net_by_modulus(data)) {
    if (lam == 0.0) fail(ErrorKind::domain, "eta_series is undefined with a zero eigenvalue");
    if (m != 0) acc += static_cast<double>(m) * std::exp(-s * std::log(lam));
  }
  return acc;
}

Rational eta_exact(const SpectralData& data, int s) {
  require_signed(data, "eta_exact");
  if (s < 0) fail(ErrorKind::domain, "eta_exact needs s >= 0");
  Rational acc(0);
  for (const auto& e : data.entries) {
    if (e.lambda == 0.0) fail(ErrorKind::domain, "eta_exact is undefined with a zero eigenvalue");
    const double twice = 2.0 * std::abs(e.lambda);
    if (twice != std::floor(twice) || twice > 1e15) {
      fail(ErrorKind::domain, "eta_exact needs integer or half-integer eigenvalues");
    }
    const Rational lam = ratio(static_cast<long>(twice), 2);
    Rational power(1);
    for (int i = 0; i < s; ++i) power *= lam;
    acc += Rational(Integer(static_cast<long>(*e.sign * e.multiplicity))) / power;
  }
  return acc;
}

std::complex<double> resolvent_product_trace(const SpectralData& data, std::span<const std::complex<double>> points) {
  if (points.empty()) fail(ErrorKind::domain, "resolvent_product_trace needs at least one point");
  std::complex<double> acc = 0;
  for (const auto& e : data.entries) {
    std::complex<double> term = static_cast<double>(e.multiplicity);
    for (const auto& p : points) {
      const auto den = e.lambda * e.lambda + p * p;
      if (den == 0.0) fail(ErrorKind::singular, "resolvent pole: lambda^2 + p^2 = 0");
      term /= den;
    }
    acc += term;
  }
  return acc;
}

}  // namespace selberg
