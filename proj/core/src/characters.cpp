#include "selberg/characters.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <tuple>
#include <utility>

#include "selberg/error.hpp"
#include "selberg/rational.hpp"

namespace selberg {

namespace {

void require_dominant(const RootSystem& rs, const Weight& hw) {
  if (!is_dominant(rs, hw)) {
    fail(ErrorKind::domain, hw.to_string() + " is not dominant for " + rs.name());
  }
}

// lambda - mu lies in the cone spanned by simple roots (doubled coordinates).
bool below(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const std::size_t k = rs.rank();
  std::vector<long long> d(k);
  long long total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = lambda.doubled(i) - mu.doubled(i);
    if (d[i] % 2 != 0) return false;
    d[i] /= 2;
    total += d[i];
  }
  if (rs.series() == Series::B) {
    long long s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      s += d[i];
      if (s < 0) return false;
    }
    return true;
  }
  if (k == 1) return d[0] == 0;
  if (total % 2 != 0) return false;
  long long s = 0;
  for (std::size_t i = 0; i + 2 < k; ++i) {
    s += d[i];
    if (s < 0) return false;
  }
  const long long s_km1 = s + d[k - 2];
  const long long s_k = s_km1 + d[k - 1];
  return s_k >= 0 && s_km1 - d[k - 1] >= 0;
}

void enumerate_dominant(const RootSystem& rs, int bound, int parity, std::vector<int>& prefix,
                        std::vector<Weight>& out) {
  const std::size_t k = rs.rank();
  const std::size_t i = prefix.size();
  if (i == k) {
    out.push_back(Weight::from_doubled(prefix));
    return;
  }
  const int upper = i == 0 ? bound : prefix.back();
  int lower = 0;
  if (rs.series() == Series::D && i == k - 1) lower = -upper;
  for (int x = upper; x >= lower; --x) {
    if (std::abs(x) % 2 != parity) continue;
    prefix.push_back(x);
    enumerate_dominant(rs, bound, parity, prefix, out);
    prefix.pop_back();
  }
}

struct TableKey {
  int series;
  std::size_t rank;
  Weight hw;
  friend bool operator<(const TableKey& a, const TableKey& b) {
    return std::tie(a.series, a.rank, a.hw) < std::tie(b.series, b.rank, b.hw);
  }
};

std::shared_ptr<const WeightMultiplicityTable> compute_table(const RootSystem& rs, const Weight& hw) {
  auto table = std::make_shared<WeightMultiplicityTable>(WeightMultiplicityTable{rs, hw, {}});
  const std::size_t k = rs.rank();
  if (rs.series() == Series::D && k == 1) {
    table->multiplicities.emplace(hw, 1);
    return table;
  }

  std::vector<Weight> dominant;
  std::vector<int> prefix;
  enumerate_dominant(rs, hw.doubled(0), std::abs(hw.doubled(0)) % 2, prefix, dominant);
  std::erase_if(dominant, [&](const Weight& mu) { return !below(rs, hw, mu); });

  const Weight& rho = rs.rho();
  const long long top = (hw + rho).norm4();
  std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
    return (a + rho).norm4() > (b + rho).norm4();
  });

  std::map<Weight, long long> dom_mult;
  const int max_steps = std::abs(hw.doubled(0)) + 2;
  for (const Weight& mu : dominant) {
    if (mu == hw) {
      dom_mult[mu] = 1;
      continue;
    }
    const long long denom = top - (mu + rho).norm4();
    if (denom <= 0) fail(ErrorKind::internal, "Freudenthal denominator vanished at " + mu.to_string());
    long long numer = 0;
    for (const Weight& alpha : rs.positive_roots()) {
      for (int j = 1; j <= max_steps; ++j) {
        const Weight shifted = mu + alpha.scaled(j);
        const auto it = dom_mult.find(dominant_representative(rs, shifted));
        if (it == dom_mult.end()) continue;
        numer += it->second * shifted.inner4(alpha);
      }
    }
    numer *= 2;
    if (numer % denom != 0) fail(ErrorKind::internal, "Freudenthal recursion produced a non-integer multiplicity");
    const long long m = numer / denom;
    if (m != 0) dom_mult[mu] = m;
  }

  for (const auto& [mu, m] : dom_mult) {
    for (const Weight& p : orbit_points(rs, mu)) table->multiplicities.emplace(p, m);
  }
  return table;
}

}  // namespace

// ---------------------------------------------------------------- VirtualRep

VirtualRep::VirtualRep(RootSystem rs) : rs_(std::move(rs)) {}

VirtualRep VirtualRep::irreducible(const RootSystem& rs, const Weight& hw, long long coefficient) {
  VirtualRep r(rs);
  r.add(hw, coefficient);
  return r;
}

long long VirtualRep::coefficient(const Weight& hw) const {
  const auto it = terms_.find(hw);
  return it == terms_.end() ? 0 : it->second;
}

void VirtualRep::add(const Weight& hw, long long c) {
  require_dominant(rs_, hw);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(hw, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long VirtualRep::dimension() const {
  long long acc = 0;
  for (const auto& [hw, c] : terms_) acc += c * weyl_dim(rs_, hw);
  return acc;
}

long long VirtualRep::absolute_dimension() const {
  long long acc = 0;
  for (const auto& [hw, c] : terms_) acc += std::llabs(c) * weyl_dim(rs_, hw);
  return acc;
}

void VirtualRep::require_same(const VirtualRep& other) const {
  if (!(rs_ == other.rs_)) {
    fail(ErrorKind::domain, "virtual representations over " + rs_.name() + " and " + other.rs_.name());
  }
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
  require_same(other);
  for (const auto& [hw, c] : other.terms_) add(hw, c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& other) {
  require_same(other);
  for (const auto& [hw, c] : other.terms_) add(hw, -c);
  return *this;
}

VirtualRep& VirtualRep::operator*=(long long scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [hw, c] : terms_) c *= scalar;
  return *this;
}

VirtualRep operator*(const VirtualRep& a, const VirtualRep& b) {
  a.require_same(b);
  VirtualRep out(a.rs_);
  for (const auto& [h1, c1] : a.terms_) {
    for (const auto& [h2, c2] : b.terms_) {
      out += tensor_decompose(a.rs_, h1, h2) * (c1 * c2);
    }
  }
  return out;
}

std::string VirtualRep::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [hw, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (std::llabs(c) != 1) os << std::llabs(c) << "*";
    os << hw.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------- tables

long long WeightMultiplicityTable::total() const {
  long long acc = 0;
  for (const auto& [mu, m] : multiplicities) acc += m;
  return acc;
}

long long weyl_dim(const RootSystem& rs, const Weight& hw) {
  require_dominant(rs, hw);
  const Weight shifted = hw + rs.rho();
  Rational dim(1);
  for (const Weight& alpha : rs.positive_roots()) {
    dim *= ratio(static_cast<long>(shifted.inner4(alpha)), static_cast<long>(rs.rho().inner4(alpha)));
  }
  if (dim.get_den() != 1 || !dim.get_num().fits_slong_p()) {
    fail(ErrorKind::internal, "Weyl dimension is not a machine integer for " + hw.to_string());
  }
  return dim.get_num().get_si();
}

std::vector<Weight> orbit_points(const RootSystem& rs, const Weight& dominant) {
  const std::size_t k = rs.rank();
  std::vector<int> abs_vals(k);
  for (std::size_t i = 0; i < k; ++i) abs_vals[i] = std::abs(dominant.doubled(i));
  // The orbit of a D-weight with nonzero last entry keeps the sign parity
  // of the product of entries; B orbits and zero-containing D orbits do not.
  const bool has_zero = std::find(abs_vals.begin(), abs_vals.end(), 0) != abs_vals.end();
  const int target_negatives_parity = dominant.doubled(k - 1) < 0 ? 1 : 0;
  std::sort(abs_vals.begin(), abs_vals.end());
  std::set<Weight> points;
  do {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < k; ++i) {
      if (abs_vals[i] != 0) nonzero.push_back(i);
    }
    for (std::uint32_t mask = 0; mask < (1u << nonzero.size()); ++mask) {
      const int negatives = std::popcount(mask);
      if (rs.series() == Series::D && !has_zero && negatives % 2 != target_negatives_parity) continue;
      std::vector<int> v(abs_vals);
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if ((mask >> b) & 1u) v[nonzero[b]] = -v[nonzero[b]];
      }
      points.insert(Weight::from_doubled(std::move(v)));
    }
  } while (std::next_permutation(abs_vals.begin(), abs_vals.end()));
  return {points.begin(), points.end()};
}

std::shared_ptr<const WeightMultiplicityTable> freudenthal_weights(const RootSystem& rs, const Weight& hw) {
  require_dominant(rs, hw);
  static std::shared_mutex mutex;
  static std::map<TableKey, std::shared_ptr<const WeightMultiplicityTable>> cache;
  const TableKey key{rs.series() == Series::B ? 0 : 1, rs.rank(), hw};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = compute_table(rs, hw);
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(table)).first->second;
}

VirtualRep tensor_decompose(const RootSystem& rs, const Weight& hw1, const Weight& hw2) {
  require_dominant(rs, hw1);
  require_dominant(rs, hw2);
  const bool swap = weyl_dim(rs, hw2) > weyl_dim(rs, hw1);
  const Weight& big = swap ? hw2 : hw1;
  const Weight& small = swap ? hw1 : hw2;
  const auto table = freudenthal_weights(rs, small);
  const Weight base = big + rs.rho();
  std::map<Weight, long long> acc;
  for (const auto& [mu, m] : table->multiplicities) {
    const auto reflected = reflect_to_dominant(rs, base + mu);
    if (!reflected) continue;
    acc[reflected->first - rs.rho()] += reflected->second * m;
  }
  VirtualRep out(rs);
  for (const auto& [hw, c] : acc) {
    if (c != 0) out.add(hw, c);
  }
  return out;
}

std::complex<double> char_eval(const WeightMultiplicityTable& table, std::span<const double> angles, int lift_sign) {
  if (angles.size() != table.root_system.rank()) {
    fail(ErrorKind::dimension, "expected " + std::to_string(table.root_system.rank()) + " angles, got " +
                                   std::to_string(angles.size()));
  }
  std::complex<double> acc = 0.0;
  for (const auto& [mu, m] : table.multiplicities) {
    double phase = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) phase += mu.entry_d(i) * angles[i];
    acc += static_cast<double>(m) * std::polar(1.0, phase);
  }
  if (table.parity() == Parity::half_integral && lift_sign < 0) acc = -acc;
  return acc;
}

std::complex<double> char_eval(const VirtualRep& rep, std::span<const double> angles, int lift_sign) {
  std::complex<double> acc = 0.0;
  for (const auto& [hw, c] : rep.terms()) {
    acc += static_cast<double>(c) * char_eval(*freudenthal_weights(rep.root_system(), hw), angles, lift_sign);
  }
  return acc;
}

FormalCharacter formal_character(const VirtualRep& rep) {
  FormalCharacter out;
  for (const auto& [hw, c] : rep.terms()) {
    out = add_scaled(std::move(out), freudenthal_weights(rep.root_system(), hw)->multiplicities, c);
  }
  return out;
}

FormalCharacter convolve(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      auto& slot = out[wa + wb];
      slot += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FormalCharacter add_scaled(FormalCharacter a, const FormalCharacter& b, long long scale) {
  for (const auto& [w, c] : b) a[w] += scale * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

}  // namespace selberg
