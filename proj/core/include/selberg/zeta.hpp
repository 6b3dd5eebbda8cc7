#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "selberg/branching.hpp"
#include "selberg/geodesics.hpp"
#include "selberg/plancherel.hpp"

namespace selberg {

struct TruncationPolicy {
  /// Largest j in sums over primitive powers g0^j.
  int max_power = 400;
  /// Largest symmetric power S^k in the literal Euler product.
  int max_sym = 400;
  double tail_tolerance = 1e-13;
};

struct ZetaValue {
  std::complex<double> log_value{0.0, 0.0};
  double tail_bound = 0.0;
  bool converged = true;
};

/// {"s": [re, im], "log": [re, im], "tail": x, "converged": b}
std::string to_json(const ZetaValue& value, std::complex<double> s);

/// log Z_S(s, sigma) resummed over symmetric powers into a sum over
/// primitive powers. Every sum here is finite past the Euler-product
/// abscissa for a finite spectrum; such values come back with
/// converged = false (Re s <= rho here, Re s <= n - 1 for Ruelle).
ZetaValue selberg_log(std::complex<double> s, const MType& sigma, const LengthSpectrum& spec,
                      const TruncationPolicy& policy = {});

/// The same quantity from the double product over primitives and S^k,
/// evaluated eigenvalue by eigenvalue.
ZetaValue selberg_euler_direct(std::complex<double> s, const MType& sigma, const LengthSpectrum& spec,
                               const TruncationPolicy& policy = {});

/// log S(s) = log Z_S(s, sigma) + log Z_S(s, w sigma).
ZetaValue symmetric_selberg_log(std::complex<double> s, const MType& sigma, const LengthSpectrum& spec,
                                const TruncationPolicy& policy = {});
/// log S^s(s) = log Z_S(s, sigma) - log Z_S(s, w sigma); case b only.
ZetaValue super_selberg_log(std::complex<double> s, const MType& sigma, const LengthSpectrum& spec,
                            const TruncationPolicy& policy = {});

/// D(p): 2 C tr chi e^{-pl} / n_Gamma summed over nontrivial classes, with
/// C(g, sigma) + C(g, w sigma) in case b. Classes are primitive powers with
/// n_Gamma(g0^j) = j.
ZetaValue log_derivative_D(std::complex<double> p, const MType& sigma, const LengthSpectrum& spec,
                           const TruncationPolicy& policy = {});
/// D^s(p) with C(g, sigma) - C(g, w sigma); throws Error{domain} in case a.
ZetaValue super_log_derivative_D(std::complex<double> p, const MType& sigma, const LengthSpectrum& spec,
                                 const TruncationPolicy& policy = {});

/// log Z_R(s) for Z_R(s) = prod det(1 - chi(g) e^{-s l(g)})^{-1}. Needs Re s > n - 1.
ZetaValue ruelle_log(std::complex<double> s, const LengthSpectrum& spec, const TruncationPolicy& policy = {});

/// log Z_R(s) rebuilt from shifted Selberg zetas of the exterior M-types.
/// The sign is fixed so that the result agrees with ruelle_log.
ZetaValue fried_factorization_log(std::complex<double> s, const LengthSpectrum& spec,
                                  const TruncationPolicy& policy = {});

/// 2(-1)^k P(s, sigma^+) + sum_{p<k} (-1)^p (P(s + k - p, sigma^p) + P(s - (k - p), sigma^p)).
RationalEvenPoly h_polynomial(int n);
/// |W(SO(n+1))| / |W(SO(n-1) x SO(2))|, read off the D-series Weyl group orders.
long long euler_characteristic_grassmannian(int n);

/// exp(2 d pi r vol / omega_{n+1} * int_0^s P(p, sigma) dp).
std::complex<double> functional_rhs(std::complex<double> s, int n, const MType& sigma,
                                    const std::optional<PiRational>& vol, int r, int d);
/// exp(2 pi r (n+1) vol / omega_{n+1} * s).
std::complex<double> functional_rhs_ruelle(std::complex<double> s, int n, const std::optional<PiRational>& vol,
                                           int r);

/// sum_i prod_{j != i} (p_j^2 - p_i^2)^{-1} f(p_i).
std::complex<double> psi_transform(std::span<const std::complex<double>> points,
                                   const std::function<std::complex<double>(std::complex<double>)>& f);

/// (l, (n - 2l)(-1)^l) for l = 0 .. (n-1)/2.
std::vector<std::pair<int, int>> torsion_exponents(int n);

struct TorsionCheck {
  double lhs = 1.0;
  double rhs = 1.0;
};

/// dets = (Delta_0, ..., Delta_n), positive and symmetric under l <-> n - l.
TorsionCheck torsion_identity_check(int n, std::span<const double> dets);

}  // namespace selberg
