#include "selberg/plancherel.hpp"

#include <cmath>
#include <numbers>

#include "selberg/error.hpp"

namespace selberg {

double PiRational::value() const { return to_double(rational_part) * std::pow(std::numbers::pi, pi_power); }

std::string PiRational::to_string() const {
  const std::string r = selberg::to_string(rational_part);
  if (pi_power == 0 || rational_part == 0) return r;
  return r + "*pi^" + std::to_string(pi_power);
}

PiRational operator/(const PiRational& a, const PiRational& b) {
  if (b.rational_part == 0) fail(ErrorKind::singular, "division by a zero PiRational");
  return {a.rational_part / b.rational_part, a.pi_power - b.pi_power};
}

RationalEvenPoly::RationalEvenPoly(Polynomial p) : poly_(std::move(p)) {
  if (!poly_.is_even()) fail(ErrorKind::internal, "polynomial is not even: " + poly_.to_string("s"));
}

Rational Ladder::multiplicity(const Rational& lambda) const {
  if (lambda < 0) return 0;
  const Rational offset = lambda - epsilon;
  if (offset.get_den() != 1) return 0;
  if (lambda == 0) return zero_multiplicity();
  return Rational(d) * poly(lambda);
}

RationalEvenPoly weyl_polynomial(int n, const MType& sigma) {
  require_odd_dimension(n);
  const int k = (n - 1) / 2;
  if (static_cast<int>(sigma.weight.rank()) != k) {
    fail(ErrorKind::domain, "sigma " + sigma.weight.to_string() + " has the wrong rank for n = " + std::to_string(n));
  }
  // a_0 = lambda (the variable), a_i = nu_i + k - i; d_i = k - i.
  std::vector<Polynomial> a(static_cast<std::size_t>(k + 1));
  a[0] = Polynomial::identity();
  for (int i = 1; i <= k; ++i) {
    a[static_cast<std::size_t>(i)] =
        Polynomial::constant(sigma.weight.entry(static_cast<std::size_t>(i - 1)) + Rational(k - i));
  }
  Polynomial num = Polynomial::constant(1);
  Rational den(1);
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const auto& ai = a[static_cast<std::size_t>(i)];
      const auto& aj = a[static_cast<std::size_t>(j)];
      num *= ai * ai - aj * aj;
      den *= Rational((k - i) * (k - i) - (k - j) * (k - j));
    }
  }
  return RationalEvenPoly(num * (Rational(1) / den));
}

Rational epsilon_sigma(const MType& sigma) {
  return sigma.weight.is_half_integral() ? ratio(1, 2) : Rational(0);
}

Ladder ladder(int n, const MType& sigma) {
  return Ladder{epsilon_sigma(sigma), weyl_polynomial(n, sigma), lift_case(sigma) == LiftCase::a ? 1 : 2};
}

bool SphereEntry::eigenvalue(Rational& out) const {
  if (quad < 0) return false;
  Rational root;
  if (!exact_sqrt(Rational(Integer(static_cast<long>(quad))), root)) return false;
  out = root / 2;
  return true;
}

std::vector<SphereEntry> sphere_spectrum(int n, const MType& sigma, const Rational& lambda_max) {
  require_odd_dimension(n);
  if (lambda_max < 0) fail(ErrorKind::domain, "lambda_max must be nonnegative");
  const int k = (n - 1) / 2;
  const RootSystem big = build_root_system(Series::D, k + 1);
  const RootSystem m = m_root_system(n);
  const LiftResult lifted = lift(sigma);
  const long long base = (sigma.weight + m.rho()).norm4();
  const Rational quad_max_q = 4 * lambda_max * lambda_max;
  const long long quad_max = Integer(quad_max_q.get_num() / quad_max_q.get_den()).get_si();
  const int two_k = 2 * k;

  std::map<Weight, long long> lambdas;
  for (const auto& [c, coeff] : lifted.gamma.terms()) {
    std::vector<int> cd(c.doubled().begin(), c.doubled().end());
    std::vector<int> cur(static_cast<std::size_t>(k + 1));
    // Slot 0 is unbounded above; later slots live between c_{i-1} and c_i,
    // and the last one in [-c_{k-1}, c_{k-1}] (doubled indices).
    auto fill = [&](auto&& self, std::size_t i) -> void {
      if (i == cur.size()) {
        lambdas[Weight::from_doubled(cur)] += coeff;
        return;
      }
      const int hi = cd[i - 1];
      const int lo = i < cd.size() ? cd[i] : -cd[i - 1];
      for (int x = hi; x >= lo; x -= 2) {
        cur[i] = x;
        self(self, i + 1);
      }
    };
    for (int first = cd[0];; first += 2) {
      const long long lead = static_cast<long long>(first + two_k) * (first + two_k);
      if (lead - base > quad_max) break;
      cur[0] = first;
      fill(fill, 1);
    }
  }

  std::map<long long, long long> by_quad;
  for (const auto& [lam, coeff] : lambdas) {
    if (coeff == 0) continue;
    const long long quad = (lam + big.rho()).norm4() - base;
    if (quad > quad_max) continue;
    by_quad[quad] += coeff * weyl_dim(big, lam);
  }

  const bool half = sigma.weight.is_half_integral();
  std::vector<SphereEntry> out;
  for (const auto& [quad, mult] : by_quad) {
    if (mult == 0) continue;
    SphereEntry e{quad, mult, false};
    Rational lam;
    if (!e.eigenvalue(lam)) {
      e.exceptional = true;
    } else {
      const Rational twice = 2 * lam;
      const bool lam_half = twice.get_num() % 2 != 0;
      e.exceptional = lam_half != half;
    }
    out.push_back(e);
  }
  return out;
}

LadderComparison compare_with_ladder(int n, const MType& sigma, const Rational& lambda_max) {
  LadderComparison report{ladder(n, sigma), {}, {}, {}, true};
  std::map<Rational, long long> observed;
  for (const SphereEntry& e : sphere_spectrum(n, sigma, lambda_max)) {
    Rational lam;
    if (e.exceptional || !e.eigenvalue(lam)) {
      report.off_ladder.push_back(e);
      continue;
    }
    observed[lam] += e.multiplicity;
  }
  for (Rational lam = report.ladder.epsilon; lam <= lambda_max; lam += 1) {
    const auto it = observed.find(lam);
    LadderPoint pt{lam, it == observed.end() ? 0 : it->second, report.ladder.multiplicity(lam)};
    if (Rational(Integer(static_cast<long>(pt.observed))) != pt.expected) {
      report.deviations.push_back(pt);
      if (lam == 0) report.zero_rule_holds = false;
    }
    report.points.push_back(pt);
  }
  return report;
}

PiRational sphere_volume(int n) {
  require_odd_dimension(n);
  Integer fact(1);
  for (int i = 2; i <= (n - 1) / 2; ++i) fact *= i;
  return PiRational{ratio(Integer(2), fact), (n + 1) / 2};
}

std::vector<IdentityCoefficient> identity_coefficients(int n, const MType& sigma, const PiRational& vol, int r) {
  if (r < 1) fail(ErrorKind::domain, "twist dimension r must be positive");
  const Ladder lad = ladder(n, sigma);
  const PiRational scale = PiRational{Rational(lad.d * r), 1} * vol / sphere_volume(n);
  std::vector<IdentityCoefficient> out;
  for (const auto& [power, c] : lad.poly.coefficients()) {
    out.push_back({power, PiRational{scale.rational_part * c, scale.pi_power}});
  }
  return out;
}

}  // namespace selberg
