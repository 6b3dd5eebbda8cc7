#include "selberg/zeta.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include <nlohmann/json.hpp>
#include "selberg/characters.hpp"
#include "selberg/error.hpp"

namespace selberg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_matching(const MType& sigma, const LengthSpectrum& spec) {
  if (sigma.n != spec.n || static_cast<int>(sigma.weight.rank()) != spec.k()) {
    fail(ErrorKind::dimension, "sigma " + sigma.weight.to_string() + " does not fit a spectrum with n = " +
                                   std::to_string(spec.n));
  }
}

ZetaValue divergent() { return ZetaValue{{0.0, 0.0}, kInf, false}; }

// A finite spectrum makes the series converge past the Euler-product
// abscissa; such values are returned but never marked converged.
ZetaValue within(ZetaValue v, bool inside_abscissa) {
  if (!inside_abscissa) v.converged = false;
  return v;
}

std::shared_ptr<const WeightMultiplicityTable> m_table(const MType& sigma) {
  return freudenthal_weights(m_root_system(sigma.n), sigma.weight);
}

double m_dimension(const MType& sigma) {
  return static_cast<double>(weyl_dim(m_root_system(sigma.n), sigma.weight));
}

// Sum over primitive powers with a per-primitive geometric tail bound. `term`
// returns the j-th contribution; `tail(j)` bounds the sum of terms past j.
template <class Term, class Tail>
ZetaValue power_sum(const LengthSpectrum& spec, const TruncationPolicy& policy, Term term, Tail tail) {
  ZetaValue out;
  if (spec.primitives.empty()) return out;
  const double per = policy.tail_tolerance / static_cast<double>(spec.primitives.size());
  for (const GeodesicClass& g0 : spec.primitives) {
    double bound = kInf;
    for (int j = 1; j <= policy.max_power; ++j) {
      out.log_value += term(g0, j);
      bound = tail(g0, j);
      if (bound <= per) break;
    }
    out.tail_bound += bound;
  }
  out.converged = out.tail_bound <= policy.tail_tolerance;
  return out;
}

// Geometric tail sum_{j > J} C q^j / j <= C q^{J+1} / ((J+1)(1-q)).
double log_tail(double c, double q, int j) { return c * std::pow(q, j + 1) / ((j + 1) * (1.0 - q)); }

// Multiplicities of the weights of S^K(C^{2m}) acting on m rotation planes,
// keyed by doubled rotation charges. Memoized per (m, K).
using ChargeTable = std::vector<std::pair<std::vector<int>, long long>>;

std::shared_ptr<const ChargeTable> symmetric_charges(int planes, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const ChargeTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({planes, degree}); it != cache.end()) return it->second;
  }
  std::map<std::vector<int>, long long> acc;
  if (planes == 0) {
    if (degree == 0) acc[{}] = 1;
  } else {
    for (int d = 0; d <= degree; ++d) {
      const auto rest = symmetric_charges(planes - 1, degree - d);
      for (int c = -d; c <= d; c += 2) {
        for (const auto& [charges, mult] : *rest) {
          std::vector<int> key;
          key.reserve(charges.size() + 1);
          key.push_back(2 * c);
          key.insert(key.end(), charges.begin(), charges.end());
          acc[key] += mult;
        }
      }
    }
  }
  auto table = std::make_shared<const ChargeTable>(acc.begin(), acc.end());
  std::lock_guard lock(mutex);
  return cache.try_emplace({planes, degree}, table).first->second;
}

// The same table convolved with the weights of sigma.
std::shared_ptr<const ChargeTable> twisted_charges(const MType& sigma, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<Weight, int>, std::shared_ptr<const ChargeTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({sigma.weight, degree}); it != cache.end()) return it->second;
  }
  const auto sym = symmetric_charges(sigma.k(), degree);
  const auto weights = m_table(sigma);
  std::map<std::vector<int>, long long> acc;
  for (const auto& [charges, mult] : *sym) {
    for (const auto& [mu, m] : weights->multiplicities) {
      std::vector<int> key = charges;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] += mu.doubled(i);
      acc[key] += mult * m;
    }
  }
  auto table = std::make_shared<const ChargeTable>(acc.begin(), acc.end());
  std::lock_guard lock(mutex);
  return cache.try_emplace({sigma.weight, degree}, table).first->second;
}

double binomial(int top, int bottom) {
  return std::exp(std::lgamma(top + 1.0) - std::lgamma(bottom + 1.0) - std::lgamma(top - bottom + 1.0));
}

// Bound on sum_{K' > K} |log det(1 - x S^{K'}(...) (x) sigma (x) chi)|, using
// |log(1 - z)| <= |z| / (1 - |z|) and the eigenvalue count of each level.
double euler_tail(double x_abs, double length, int planes, double dim, int degree) {
  double sum = 0.0;
  for (int kk = degree + 1; kk < degree + 100000; ++kk) {
    const double z = x_abs * std::exp(-kk * length);
    const double term = binomial(kk + 2 * planes - 1, 2 * planes - 1) * dim * z / (1.0 - z);
    sum += term;
    if (term < 1e-18 * sum || term < 1e-300) break;
  }
  return sum;
}

}  // namespace

std::string to_json(const ZetaValue& value, std::complex<double> s) {
  nlohmann::ordered_json doc;
  doc["s"] = {s.real(), s.imag()};
  doc["log"] = {value.log_value.real(), value.log_value.imag()};
  doc["tail"] = std::isfinite(value.tail_bound) ? nlohmann::ordered_json(value.tail_bound) : nlohmann::ordered_json(nullptr);
  doc["converged"] = value.converged;
  return doc.dump();
}

ZetaValue selberg_log(std::complex<double> s, const MType& sigma, const LengthSpectrum& spec,
                      const TruncationPolicy& policy) {
  require_matching(sigma, spec);
  const double rho = spec.k();
  if (!(s.real() + rho > 0)) return divergent();
  const auto table = m_table(sigma);
  const double dim = m_dimension(sigma) * spec.r;
  const int planes = spec.k();
  return within(power_sum(
      spec, policy,
      [&](const GeodesicClass& g0, int j) {
        const GeodesicClass g = power_class(g0, j);
        const auto tr = char_eval(*table, g.holonomy_angles, g.spin_lift_sign) * chi_trace(g);
        return -std::exp(-(s + rho) * g.length) * tr / (static_cast<double>(j) * ad_determinant(g, true));
      },
      [&](const GeodesicClass& g0, int j) {
        const double c = dim / std::pow(1.0 - std::exp(-g0.length), 2 * planes);
        return log_tail(c, std::exp(-(s.real() + rho) * g0.length), j);
      }), s.real() > rho);
}

ZetaValue selberg_euler_direct(std::complex<double> s, const MType& sigma, const LengthSpectrum& spec,
                               const TruncationPolicy& policy) {
  require_matching(sigma, spec);
  const double rho = spec.k();
  if (!(s.real() + rho > 0)) return divergent();
  ZetaValue out;
  if (spec.primitives.empty()) return out;
  const double dim = m_dimension(sigma) * spec.r;
  const int planes = spec.k();
  const double per = policy.tail_tolerance / static_cast<double>(spec.primitives.size());
  const bool half = sigma.weight.is_half_integral();
  for (const GeodesicClass& g0 : spec.primitives) {
    const std::complex<double> x = std::exp(-(s + rho) * g0.length);
    const double lift_phase = half && g0.spin_lift_sign < 0 ? std::numbers::pi : 0.0;
    double bound = kInf;
    for (int degree = 0; degree <= policy.max_sym; ++degree) {
      const std::complex<double> level = x * std::exp(-degree * g0.length);
      for (const auto& [charges, mult] : *twisted_charges(sigma, degree)) {
        double psi = lift_phase;
        for (int i = 0; i < planes; ++i) psi += 0.5 * charges[static_cast<std::size_t>(i)] * g0.holonomy_angles[static_cast<std::size_t>(i)];
        for (double phi : g0.chi_angles) {
          out.log_value += static_cast<double>(mult) * std::log(1.0 - level * std::polar(1.0, psi + phi));
        }
      }
      bound = euler_tail(std::abs(x), g0.length, planes, dim, degree);
      if (bound <= per) break;
    }
    out.tail_bound += bound;
  }
  out.converged = out.tail_bound <= policy.tail_tolerance && s.real() > rho;
  return out;
}

namespace {

ZetaValue combine(const ZetaValue& a, const ZetaValue& b, double sign) {
  return ZetaValue{a.log_value + sign * b.log_value, a.tail_bound + b.tail_bound, a.converged && b.converged};
}

void require_case_b(const MType& sigma) {
  if (lift_case(sigma) != LiftCase::b) {
    fail(ErrorKind::domain, "sigma " + sigma.weight.to_string() + " is fixed by w; the super quantities need case b");
  }
}

ZetaValue d_series(std::complex<double> p, const MType& sigma, const LengthSpectrum& spec,
                   const TruncationPolicy& policy, int partner_sign) {
  require_matching(sigma, spec);
  const double rho = spec.k();
  if (!(p.real() + rho > 0)) return divergent();
  const bool pair = lift_case(sigma) == LiftCase::b;
  const MType partner = sigma.flipped();
  const double dim = m_dimension(sigma) * spec.r * (pair ? 2.0 : 1.0);
  const int planes = spec.k();
  return within(power_sum(
      spec, policy,
      [&](const GeodesicClass& g0, int j) {
        const GeodesicClass g = power_class(g0, j);
        std::complex<double> c = c_coefficient(g, sigma);
        if (pair) c += static_cast<double>(partner_sign) * c_coefficient(g, partner);
        return 2.0 * c * chi_trace(g) * std::exp(-p * g.length) / static_cast<double>(j);
      },
      [&](const GeodesicClass& g0, int j) {
        // |2C / j| <= l0 e^{-rho j l0} dim / (1 - e^{-l0})^{2k}
        const double c = g0.length * dim / std::pow(1.0 - std::exp(-g0.length), 2 * planes);
        const double q = std::exp(-(p.real() + rho) * g0.length);
        return c * std::pow(q, j + 1) / (1.0 - q);
      }), p.real() > rho);
}

}  // namespace

ZetaValue symmetric_selberg_log(std::complex<double> s, const MType& sigma, const LengthSpectrum& spec,
                                const TruncationPolicy& policy) {
  return combine(selberg_log(s, sigma, spec, policy), selberg_log(s, sigma.flipped(), spec, policy), 1.0);
}

ZetaValue super_selberg_log(std::complex<double> s, const MType& sigma, const LengthSpectrum& spec,
                            const TruncationPolicy& policy) {
  require_case_b(sigma);
  return combine(selberg_log(s, sigma, spec, policy), selberg_log(s, sigma.flipped(), spec, policy), -1.0);
}

ZetaValue log_derivative_D(std::complex<double> p, const MType& sigma, const LengthSpectrum& spec,
                           const TruncationPolicy& policy) {
  return d_series(p, sigma, spec, policy, +1);
}

ZetaValue super_log_derivative_D(std::complex<double> p, const MType& sigma, const LengthSpectrum& spec,
                                 const TruncationPolicy& policy) {
  require_case_b(sigma);
  return d_series(p, sigma, spec, policy, -1);
}

ZetaValue ruelle_log(std::complex<double> s, const LengthSpectrum& spec, const TruncationPolicy& policy) {
  const double two_rho = spec.n - 1;
  if (!(s.real() > 0)) return divergent();
  return within(power_sum(
      spec, policy,
      [&](const GeodesicClass& g0, int j) {
        const GeodesicClass g = power_class(g0, j);
        return chi_trace(g) * std::exp(-s * g.length) / static_cast<double>(j);
      },
      [&](const GeodesicClass& g0, int j) {
        return log_tail(static_cast<double>(spec.r), std::exp(-s.real() * g0.length), j);
      }), s.real() > two_rho);
}

ZetaValue fried_factorization_log(std::complex<double> s, const LengthSpectrum& spec, const TruncationPolicy& policy) {
  if (!(s.real() > 0)) return divergent();
  const ExteriorMTypes ext = exterior_mtypes(spec.n);
  const int k = spec.k();
  ZetaValue acc;
  for (int p = 0; p <= spec.n - 1; ++p) {
    const std::complex<double> shifted = s + static_cast<double>(k - p);
    const ZetaValue term = p == k ? symmetric_selberg_log(shifted, ext.plus, spec, policy)
                                  : selberg_log(shifted, ext.lower[static_cast<std::size_t>(ext.dual_index(p))], spec, policy);
    acc = combine(acc, term, p % 2 == 0 ? 1.0 : -1.0);
  }
  // Z_R carries the inverse determinant, so its logarithm is minus the
  // alternating sum of Selberg logarithms.
  acc.log_value = -acc.log_value;
  return within(acc, s.real() > spec.n - 1);
}

RationalEvenPoly h_polynomial(int n) {
  require_odd_dimension(n);
  const int k = (n - 1) / 2;
  const ExteriorMTypes ext = exterior_mtypes(n);
  Polynomial h = weyl_polynomial(n, ext.plus).poly() * Rational(k % 2 == 0 ? 2 : -2);
  for (int p = 0; p < k; ++p) {
    const Polynomial poly = weyl_polynomial(n, ext.lower[static_cast<std::size_t>(p)]).poly();
    const Polynomial both = poly.shifted(Rational(k - p)) + poly.shifted(Rational(p - k));
    if (p % 2 == 0) {
      h += both;
    } else {
      h -= both;
    }
  }
  return RationalEvenPoly(h);
}

long long euler_characteristic_grassmannian(int n) {
  require_odd_dimension(n);
  const auto big = build_root_system(Series::D, (n + 1) / 2).weyl_group_order();
  const auto small = build_root_system(Series::D, (n - 1) / 2).weyl_group_order();
  if (big % small != 0) fail(ErrorKind::internal, "Weyl group orders do not divide");
  return static_cast<long long>(big / small);
}

std::complex<double> functional_rhs(std::complex<double> s, int n, const MType& sigma,
                                    const std::optional<PiRational>& vol, int r, int d) {
  if (!vol) fail(ErrorKind::configuration, "functional equation needs vol(M)");
  if (d != 1 && d != 2) fail(ErrorKind::domain, "d must be 1 or 2");
  const PiRational scale = PiRational{Rational(2 * d * r), 1} * *vol / sphere_volume(n);
  const Polynomial integral = weyl_polynomial(n, sigma).poly().antiderivative();
  return std::exp(scale.value() * integral(s));
}

std::complex<double> functional_rhs_ruelle(std::complex<double> s, int n, const std::optional<PiRational>& vol, int r) {
  if (!vol) fail(ErrorKind::configuration, "functional equation needs vol(M)");
  const PiRational scale = PiRational{Rational(2 * r * (n + 1)), 1} * *vol / sphere_volume(n);
  return std::exp(scale.value() * s);
}

std::complex<double> psi_transform(std::span<const std::complex<double>> points,
                                   const std::function<std::complex<double>(std::complex<double>)>& f) {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto pi2 = points[i] * points[i];
    std::complex<double> weight = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const auto diff = points[j] * points[j] - pi2;
      if (std::abs(diff) <= 1e-14 * std::max(1.0, std::abs(pi2))) {
        fail(ErrorKind::singular, "psi_transform needs pairwise distinct p_i^2");
      }
      weight /= diff;
    }
    acc += weight * f(points[i]);
  }
  return acc;
}

std::vector<std::pair<int, int>> torsion_exponents(int n) {
  require_odd_dimension(n);
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l <= (n - 1) / 2; ++l) out.emplace_back(l, (l % 2 == 0 ? 1 : -1) * (n - 2 * l));
  return out;
}

TorsionCheck torsion_identity_check(int n, std::span<const double> dets) {
  require_odd_dimension(n);
  if (dets.size() != static_cast<std::size_t>(n + 1)) {
    fail(ErrorKind::validation, "expected " + std::to_string(n + 1) + " determinants, got " + std::to_string(dets.size()));
  }
  for (std::size_t l = 0; l < dets.size(); ++l) {
    const double a = dets[l];
    const double b = dets[static_cast<std::size_t>(n) - l];
    if (!(a > 0) || !std::isfinite(a)) fail(ErrorKind::validation, "determinants must be positive and finite");
    if (std::abs(a - b) > 1e-12 * std::max(a, b)) {
      fail(ErrorKind::validation, "determinants violate Delta_l = Delta_{n-l} at l = " + std::to_string(l));
    }
  }
  double log_lhs = 0.0;
  for (const auto& [l, e] : torsion_exponents(n)) log_lhs += e * std::log(dets[static_cast<std::size_t>(l)]);
  double log_rhs = 0.0;
  for (int l = 1; l <= n; ++l) log_rhs += -(l % 2 == 0 ? 1 : -1) * l * std::log(dets[static_cast<std::size_t>(l)]);
  return TorsionCheck{std::exp(log_lhs), std::exp(log_rhs)};
}

}  // namespace selberg
