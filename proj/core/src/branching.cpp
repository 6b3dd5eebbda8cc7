#include "selberg/branching.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "selberg/error.hpp"

namespace selberg {

namespace {

// Interlacing patterns hi_0 >= x_0 >= hi_1 >= x_1 >= ... in doubled
// coordinates, stepping by 2 so parity is preserved. `tail_floor` bounds the
// last entry from below; a signed last slot instead ranges over [-hi, hi].
void interlace(std::span<const int> upper, std::size_t count, int tail_floor, bool last_signed,
               std::vector<int>& prefix, std::vector<Weight>& out) {
  const std::size_t i = prefix.size();
  if (i == count) {
    out.push_back(Weight::from_doubled(prefix));
    return;
  }
  const int hi = upper[i];
  const bool last = i + 1 == count;
  const int lo_bound = i + 1 < upper.size() ? upper[i + 1] : tail_floor;
  if (last && last_signed) {
    for (int x = hi; x >= -hi; x -= 2) {
      prefix.push_back(x);
      interlace(upper, count, tail_floor, last_signed, prefix, out);
      prefix.pop_back();
    }
    return;
  }
  for (int x = hi; x >= lo_bound; x -= 2) {
    prefix.push_back(x);
    interlace(upper, count, tail_floor, last_signed, prefix, out);
    prefix.pop_back();
  }
}

// Key for the greedy back-substitution: (nu_1, ..., nu_{k-1}, |nu_k|).
std::vector<int> padded_key(const Weight& w) {
  std::vector<int> key(w.doubled().begin(), w.doubled().end());
  key.back() = std::abs(key.back());
  return key;
}

}  // namespace

void require_odd_dimension(int n) {
  if (n < 3 || n % 2 == 0) fail(ErrorKind::domain, "n must be an odd integer >= 3, got " + std::to_string(n));
}

RootSystem k_root_system(int n) {
  require_odd_dimension(n);
  return build_root_system(Series::B, (n - 1) / 2);
}

RootSystem m_root_system(int n) {
  require_odd_dimension(n);
  return build_root_system(Series::D, (n - 1) / 2);
}

MType make_mtype(int n, const Weight& weight, std::optional<GroupFlavor> flavor) {
  require_odd_dimension(n);
  const auto rs = m_root_system(n);
  if (weight.rank() != rs.rank()) {
    fail(ErrorKind::domain, "M-type weight " + weight.to_string() + " must have " + std::to_string(rs.rank()) +
                                " entries for n = " + std::to_string(n));
  }
  if (!is_dominant(rs, weight)) fail(ErrorKind::domain, weight.to_string() + " is not dominant for " + rs.name());
  const GroupFlavor f = flavor.value_or(weight.is_half_integral() ? GroupFlavor::Spin : GroupFlavor::SO);
  if (weight.is_half_integral() && f == GroupFlavor::SO) {
    fail(ErrorKind::domain, "half-integral weight " + weight.to_string() + " requires the Spin flavor");
  }
  return MType{weight, n, f};
}

VirtualRep restrict_B_to_D(const VirtualRep& gamma) {
  const RootSystem& b = gamma.root_system();
  if (b.series() != Series::B) fail(ErrorKind::domain, "restrict_B_to_D expects a B_k representation");
  const RootSystem d = build_root_system(Series::D, static_cast<int>(b.rank()));
  VirtualRep out(d);
  for (const auto& [lambda, c] : gamma.terms()) {
    std::vector<Weight> patterns;
    std::vector<int> prefix;
    interlace(lambda.doubled(), lambda.rank(), 0, true, prefix, patterns);
    for (const Weight& nu : patterns) out.add(nu, c);
  }
  return out;
}

VirtualRep restrict_D_to_B(const Weight& lambda) {
  if (lambda.rank() < 2) fail(ErrorKind::domain, "restrict_D_to_B needs a D_{k+1} weight with k >= 1");
  const RootSystem d = build_root_system(Series::D, static_cast<int>(lambda.rank()));
  if (!is_dominant(d, lambda)) fail(ErrorKind::domain, lambda.to_string() + " is not dominant for " + d.name());
  const std::size_t k = lambda.rank() - 1;
  const RootSystem b = build_root_system(Series::B, static_cast<int>(k));
  std::vector<int> upper(lambda.doubled().begin(), lambda.doubled().begin() + static_cast<long>(k));
  std::vector<Weight> patterns;
  std::vector<int> prefix;
  interlace(upper, k, std::abs(lambda.doubled(k)), false, prefix, patterns);
  VirtualRep out(b);
  for (const Weight& nu : patterns) out.add(nu, 1);
  return out;
}

LiftCase lift_case(const MType& sigma) { return sigma.is_self_dual() ? LiftCase::a : LiftCase::b; }

VirtualRep back_substitute(const VirtualRep& target) {
  const RootSystem& d = target.root_system();
  const RootSystem b = build_root_system(Series::B, static_cast<int>(d.rank()));
  VirtualRep remaining = target;
  VirtualRep gamma(b);
  // Each step clears the lexicographically largest key, and restriction only
  // produces keys at or below the input, so the loop is bounded by the
  // number of keys below the initial maximum.
  std::size_t guard = 0;
  while (!remaining.empty()) {
    const auto top = std::max_element(remaining.terms().begin(), remaining.terms().end(),
                                      [](const auto& x, const auto& y) {
                                        return padded_key(x.first) < padded_key(y.first);
                                      });
    const Weight mu = top->first;
    const long long c = top->second;
    const Weight lambda = Weight::from_doubled(padded_key(mu));
    gamma.add(lambda, c);
    remaining -= restrict_B_to_D(VirtualRep::irreducible(b, lambda, c));
    if (remaining.coefficient(mu) != 0 || remaining.coefficient(weyl_flip(mu)) != 0) {
      fail(ErrorKind::internal, "back-substitution stalled at " + mu.to_string() +
                                    "; the target is not in the image of restriction");
    }
    if (++guard > 100000) fail(ErrorKind::internal, "back-substitution did not terminate");
  }
  return gamma;
}

std::pair<VirtualRep, VirtualRep> gamma_pm(const RootSystem& b_rs, const Weight& nu) {
  if (b_rs.series() != Series::B) fail(ErrorKind::domain, "gamma_pm expects B_k");
  if (!is_dominant(b_rs, nu)) fail(ErrorKind::domain, nu.to_string() + " is not dominant for " + b_rs.name());
  const std::size_t k = b_rs.rank();
  VirtualRep plus(b_rs), minus(b_rs);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> shift(k);
    int det_v = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const bool negative = (mask >> i) & 1u;
      shift[i] = negative ? -1 : 1;
      if (negative) det_v = -det_v;
    }
    const Weight candidate = nu + Weight::from_doubled(shift);
    const auto reflected = reflect_to_dominant(b_rs, candidate + b_rs.rho());
    if (!reflected) continue;  // singular: the alternating sum vanishes
    const Weight hw = reflected->first - b_rs.rho();
    (det_v > 0 ? plus : minus).add(hw, reflected->second);
  }
  return {plus, minus};
}

LiftResult lift(const MType& sigma) {
  const RootSystem d = m_root_system(sigma.n);
  const RootSystem b = k_root_system(sigma.n);
  if (!is_dominant(d, sigma.weight)) fail(ErrorKind::domain, sigma.weight.to_string() + " is not dominant");

  if (lift_case(sigma) == LiftCase::a) {
    return LiftResult{LiftCase::a, back_substitute(VirtualRep::irreducible(d, sigma.weight)), std::nullopt,
                      std::nullopt, std::nullopt, std::nullopt};
  }

  const int sign = sigma.weight.doubled(d.rank() - 1) > 0 ? 1 : -1;
  const Weight positive = sign > 0 ? sigma.weight : weyl_flip(sigma.weight);
  const Weight nu = positive - Weight::half_ones(d.rank());
  auto [plus, minus] = gamma_pm(b, nu);
  VirtualRep gamma = plus - minus;

  VirtualRep target = VirtualRep::irreducible(d, sigma.weight);
  target.add(weyl_flip(sigma.weight), 1);
  if (!(restrict_B_to_D(gamma) == target)) {
    fail(ErrorKind::internal, "gamma^+ - gamma^- does not restrict to sigma + w sigma for " + sigma.weight.to_string());
  }
  return LiftResult{LiftCase::b, std::move(gamma), nu, sign, std::move(plus), std::move(minus)};
}

VirtualRep spin_representation(int k) {
  const RootSystem b = build_root_system(Series::B, k);
  return VirtualRep::irreducible(b, Weight::half_ones(static_cast<std::size_t>(k)));
}

VirtualRep half_spin_representation(int k, int sign) {
  const RootSystem d = build_root_system(Series::D, k);
  Weight w = Weight::half_ones(static_cast<std::size_t>(k));
  if (sign < 0) w = weyl_flip(w);
  return VirtualRep::irreducible(d, w);
}

ExteriorMTypes exterior_mtypes(int n) {
  require_odd_dimension(n);
  const int k = (n - 1) / 2;
  ExteriorMTypes out;
  out.n = n;
  for (int p = 0; p < k; ++p) {
    std::vector<int> w(static_cast<std::size_t>(k), 0);
    std::fill(w.begin(), w.begin() + p, 1);
    out.lower.push_back(make_mtype(n, Weight::integral(w), GroupFlavor::SO));
  }
  std::vector<int> ones(static_cast<std::size_t>(k), 1);
  out.plus = make_mtype(n, Weight::integral(ones), GroupFlavor::SO);
  out.minus = out.plus.flipped();
  return out;
}

Weight exterior_k_weight(int n, int l) {
  require_odd_dimension(n);
  const int k = (n - 1) / 2;
  if (l < 0 || l > k) fail(ErrorKind::domain, "exterior power index out of range: " + std::to_string(l));
  std::vector<int> w(static_cast<std::size_t>(k), 0);
  std::fill(w.begin(), w.begin() + l, 1);
  return Weight::integral(w);
}

VirtualRep exterior_lift_identity(int n, int p) {
  require_odd_dimension(n);
  const int k = (n - 1) / 2;
  if (p < 0 || p > k) {
    fail(ErrorKind::domain, "p must lie in [0, " + std::to_string(k) + "], got " + std::to_string(p));
  }
  const RootSystem b = k_root_system(n);
  VirtualRep sum(b);
  for (int l = 0; l <= p; ++l) sum.add(exterior_k_weight(n, l), (p - l) % 2 == 0 ? 1 : -1);

  const auto ext = exterior_mtypes(n);
  const RootSystem d = m_root_system(n);
  VirtualRep expected(d);
  if (p < k) {
    expected.add(ext.lower[static_cast<std::size_t>(p)].weight, 1);
  } else {
    expected.add(ext.plus.weight, 1);
    expected.add(ext.minus.weight, 1);
  }
  if (!(restrict_B_to_D(sum) == expected)) {
    fail(ErrorKind::internal, "exterior lift identity fails for n = " + std::to_string(n) + ", p = " + std::to_string(p));
  }
  return sum;
}

bool check_lift_restriction(const MType& sigma) {
  const RootSystem d = m_root_system(sigma.n);
  VirtualRep expected = VirtualRep::irreducible(d, sigma.weight);
  if (!sigma.is_self_dual()) expected.add(weyl_flip(sigma.weight), 1);
  return restrict_B_to_D(lift(sigma).gamma) == expected;
}

bool check_super_difference(const MType& sigma) {
  if (sigma.is_self_dual()) return true;
  const RootSystem d = m_root_system(sigma.n);
  const RootSystem b = k_root_system(sigma.n);
  const int k = sigma.k();
  const int sign = sigma.weight.doubled(static_cast<std::size_t>(k - 1)) > 0 ? 1 : -1;
  const Weight positive = sign > 0 ? sigma.weight : weyl_flip(sigma.weight);
  VirtualRep lhs = VirtualRep::irreducible(d, sigma.weight);
  lhs.add(weyl_flip(sigma.weight), -1);
  const VirtualRep gamma = VirtualRep::irreducible(b, positive - Weight::half_ones(static_cast<std::size_t>(k)));
  const VirtualRep rhs = (half_spin_representation(k, 1) - half_spin_representation(k, -1)) * restrict_B_to_D(gamma);
  return lhs == rhs * sign;
}

bool check_spin_split(const RootSystem& b_rs, const Weight& nu) {
  const auto [plus, minus] = gamma_pm(b_rs, nu);
  const VirtualRep product = spin_representation(static_cast<int>(b_rs.rank())) * VirtualRep::irreducible(b_rs, nu);
  return product == plus + minus;
}

}  // namespace selberg
