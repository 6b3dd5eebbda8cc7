#include "selberg/geodesics.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "selberg/characters.hpp"
#include "selberg/error.hpp"

namespace selberg {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(ErrorKind::parse, path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorKind::parse, path + "." + key + ": missing");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(ErrorKind::parse, path + ": expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(ErrorKind::parse, path + ": expected an integer");
  return v.get<int>();
}

std::vector<double> numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(ErrorKind::parse, path + ": expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

double reduce_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double y = std::remainder(theta, two_pi);
  if (y <= -std::numbers::pi) y += two_pi;
  return y;
}

void reduce_holonomy(std::vector<double>& angles, int& spin_lift_sign) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  long long turns = 0;
  for (double& a : angles) {
    const double reduced = reduce_angle(a);
    turns += std::llround((a - reduced) / two_pi);
    a = reduced;
  }
  if (turns % 2 != 0) spin_lift_sign = -spin_lift_sign;
}

void validate_spectrum(const LengthSpectrum& spec) {
  if (spec.n < 3 || spec.n % 2 == 0) fail(ErrorKind::validation, "n must be odd and >= 3, got " + std::to_string(spec.n));
  if (spec.r < 1) fail(ErrorKind::validation, "r must be positive");
  const std::size_t k = static_cast<std::size_t>(spec.k());
  for (std::size_t i = 0; i < spec.primitives.size(); ++i) {
    const auto& g = spec.primitives[i];
    const std::string at = "primitives[" + std::to_string(i) + "]";
    if (!(g.length > 0) || !std::isfinite(g.length)) fail(ErrorKind::validation, at + ".length must be positive");
    if (g.holonomy_angles.size() != k) {
      fail(ErrorKind::validation, at + ".holonomy_angles must have " + std::to_string(k) + " entries");
    }
    if (g.chi_angles.size() != static_cast<std::size_t>(spec.r)) {
      fail(ErrorKind::validation, at + ".chi_angles must have r = " + std::to_string(spec.r) + " entries");
    }
    if (g.spin_lift_sign != 1 && g.spin_lift_sign != -1) fail(ErrorKind::validation, at + ".spin_lift_sign must be 1 or -1");
    if (!g.primitive || g.power != 1) fail(ErrorKind::validation, at + " must be primitive");
  }
}

LengthSpectrum parse_spectrum(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, std::string("spectrum: ") + e.what());
  }
  LengthSpectrum spec;
  spec.n = integer(field(doc, "n", "$"), "$.n");
  spec.r = integer(field(doc, "r", "$"), "$.r");
  if (const auto it = doc.find("vol"); it != doc.end() && !it->is_null()) {
    const json& rat = field(*it, "rational", "$.vol");
    if (!rat.is_string()) fail(ErrorKind::parse, "$.vol.rational: expected a string");
    spec.vol = PiRational{parse_rational(rat.get<std::string>()), integer(field(*it, "pi_power", "$.vol"), "$.vol.pi_power")};
  }
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail(ErrorKind::parse, "$.name: expected a string");
    spec.name = it->get<std::string>();
  }
  const json& prims = field(doc, "primitives", "$");
  if (!prims.is_array()) fail(ErrorKind::parse, "$.primitives: expected an array");
  for (std::size_t i = 0; i < prims.size(); ++i) {
    const std::string at = "$.primitives[" + std::to_string(i) + "]";
    const json& p = prims[i];
    GeodesicClass g;
    g.length = number(field(p, "length", at), at + ".length");
    g.holonomy_angles = numbers(field(p, "holonomy_angles", at), at + ".holonomy_angles");
    g.spin_lift_sign = p.contains("spin_lift_sign") ? integer(p["spin_lift_sign"], at + ".spin_lift_sign") : 1;
    if (g.spin_lift_sign == 1 || g.spin_lift_sign == -1) reduce_holonomy(g.holonomy_angles, g.spin_lift_sign);
    g.chi_angles = numbers(field(p, "chi_angles", at), at + ".chi_angles");
    for (double& a : g.chi_angles) a = reduce_angle(a);
    spec.primitives.push_back(std::move(g));
  }
  validate_spectrum(spec);
  return spec;
}

LengthSpectrum load_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open spectrum file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spectrum(buf.str());
}

std::string spectrum_to_json(const LengthSpectrum& spec) {
  json doc;
  doc["n"] = spec.n;
  doc["r"] = spec.r;
  doc["vol"] = spec.vol ? json{{"rational", to_string(spec.vol->rational_part)}, {"pi_power", spec.vol->pi_power}} : json(nullptr);
  doc["name"] = spec.name;
  doc["primitives"] = json::array();
  for (const auto& g : spec.primitives) {
    doc["primitives"].push_back({{"length", g.length},
                                 {"holonomy_angles", g.holonomy_angles},
                                 {"spin_lift_sign", g.spin_lift_sign},
                                 {"chi_angles", g.chi_angles}});
  }
  return doc.dump(2);
}

GeodesicClass power_class(const GeodesicClass& g0, int j) {
  if (j < 1) fail(ErrorKind::domain, "power must be >= 1, got " + std::to_string(j));
  if (!g0.primitive) fail(ErrorKind::domain, "power_class expects a primitive class");
  GeodesicClass g = g0;
  g.length = j * g0.length;
  for (double& a : g.holonomy_angles) a *= j;
  g.spin_lift_sign = (g0.spin_lift_sign < 0 && j % 2 == 1) ? -1 : 1;
  reduce_holonomy(g.holonomy_angles, g.spin_lift_sign);
  for (double& a : g.chi_angles) a = reduce_angle(j * a);
  g.primitive = j == 1;
  g.power = j;
  return g;
}

std::complex<double> ad_determinant(const GeodesicClass& g, bool inverse) {
  const double e = std::exp(inverse ? -g.length : g.length);
  double det = 1.0;
  for (double theta : g.holonomy_angles) det *= 1.0 - 2.0 * e * std::cos(theta) + e * e;
  return det;
}

std::complex<double> holonomy_trace(const GeodesicClass& g, const MType& sigma) {
  if (sigma.weight.rank() != g.k()) {
    fail(ErrorKind::dimension, "sigma rank " + std::to_string(sigma.weight.rank()) + " does not match " +
                                   std::to_string(g.k()) + " holonomy angles");
  }
  const auto table = freudenthal_weights(build_root_system(Series::D, static_cast<int>(g.k())), sigma.weight);
  return char_eval(*table, g.holonomy_angles, g.spin_lift_sign);
}

std::complex<double> c_coefficient(const GeodesicClass& g, const MType& sigma) {
  if (!(g.length > 0)) fail(ErrorKind::singular, "C(g, sigma) is undefined for a class of length 0");
  const std::complex<double> det = ad_determinant(g, false);
  if (det == 0.0) fail(ErrorKind::singular, "det(1 - Ad(ma)|_n) vanishes");
  const double rho = static_cast<double>(g.k());
  return -g.length * std::exp(rho * g.length) * holonomy_trace(g, sigma) / (2.0 * det);
}

std::complex<double> chi_trace(const GeodesicClass& g) {
  std::complex<double> acc = 0;
  for (double phi : g.chi_angles) acc += std::polar(1.0, phi);
  return acc;
}

void write_c_table(std::ostream& out, const LengthSpectrum& spec, const MType& sigma, int max_power) {
  if (max_power < 1) fail(ErrorKind::domain, "max_power must be positive");
  out << "index,power,length,Re C,Im C\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < spec.primitives.size(); ++i) {
    for (int j = 1; j <= max_power; ++j) {
      const GeodesicClass g = power_class(spec.primitives[i], j);
      const auto c = c_coefficient(g, sigma);
      out << i << ',' << j << ',' << g.length << ',' << c.real() << ',' << c.imag() << '\n';
    }
  }
}

}  // namespace selberg
