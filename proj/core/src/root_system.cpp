#include "selberg/root_system.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

#include "selberg/error.hpp"

namespace selberg {

struct RootSystem::Data {
  Series series;
  std::size_t rank;
  std::vector<Weight> positive_roots;
  Weight rho;
  std::uint64_t order;
  mutable std::once_flag group_once;
  mutable std::vector<WeylElement> group;
};

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

void require_rank(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank()) {
    fail(ErrorKind::dimension, "weight " + w.to_string() + " does not have rank " + std::to_string(rs.rank()));
  }
}

}  // namespace

Weight WeylElement::apply(const Weight& w) const {
  std::vector<int> out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[i] = signs[i] * w.doubled(static_cast<std::size_t>(perm[i]));
  return Weight::from_doubled(std::move(out));
}

Series RootSystem::series() const noexcept { return data_->series; }
std::size_t RootSystem::rank() const noexcept { return data_->rank; }
const std::vector<Weight>& RootSystem::positive_roots() const noexcept { return data_->positive_roots; }
const Weight& RootSystem::rho() const noexcept { return data_->rho; }
std::uint64_t RootSystem::weyl_group_order() const noexcept { return data_->order; }

std::string RootSystem::name() const {
  return std::string(series() == Series::B ? "B" : "D") + std::to_string(rank());
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
  std::call_once(data_->group_once, [d = data_.get()] {
    const std::size_t k = d->rank;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const int psign = permutation_sign(perm);
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        const int flips = std::popcount(mask);
        if (d->series == Series::D && flips % 2 != 0) continue;
        WeylElement e;
        e.perm = perm;
        e.signs.resize(k);
        for (std::size_t i = 0; i < k; ++i) e.signs[i] = (mask >> i) & 1u ? -1 : 1;
        e.det = psign * (flips % 2 == 0 ? 1 : -1);
        d->group.push_back(std::move(e));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return data_->group;
}

RootSystem build_root_system(Series series, int rank) {
  if (rank < 1) fail(ErrorKind::invalid_rank, "root system rank must be at least 1, got " + std::to_string(rank));

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const RootSystem::Data>> cache;
  const std::pair<int, int> key{series == Series::B ? 0 : 1, rank};
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return RootSystem(it->second);

  auto data = std::make_shared<RootSystem::Data>();
  data->series = series;
  data->rank = static_cast<std::size_t>(rank);
  const auto k = data->rank;
  auto unit = [k](std::size_t i, int scale) {
    std::vector<int> v(k, 0);
    v[i] = 2 * scale;
    return v;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      auto minus = unit(i, 1);
      minus[j] = -2;
      auto plus = unit(i, 1);
      plus[j] = 2;
      data->positive_roots.push_back(Weight::from_doubled(std::move(minus)));
      data->positive_roots.push_back(Weight::from_doubled(std::move(plus)));
    }
    if (series == Series::B) data->positive_roots.push_back(Weight::from_doubled(unit(i, 1)));
  }
  // rho = half the sum of positive roots, accumulated in doubled coordinates.
  std::vector<int> sum(k, 0);
  for (const auto& a : data->positive_roots) {
    for (std::size_t i = 0; i < k; ++i) sum[i] += a.doubled(i);
  }
  for (int& s : sum) s /= 2;
  data->rho = Weight::from_doubled(std::move(sum));

  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= i;
  data->order = (series == Series::B ? (std::uint64_t{1} << k) : (std::uint64_t{1} << (k - 1))) * fact;

  cache.emplace(key, data);
  return RootSystem(std::move(data));
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  require_rank(rs, w);
  const std::size_t k = rs.rank();
  if (rs.series() == Series::B) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (w.doubled(i) < w.doubled(i + 1)) return false;
    }
    return w.doubled(k - 1) >= 0;
  }
  for (std::size_t i = 0; i + 2 < k; ++i) {
    if (w.doubled(i) < w.doubled(i + 1)) return false;
  }
  if (k >= 2 && w.doubled(k - 2) < std::abs(w.doubled(k - 1))) return false;
  return true;
}

bool is_regular(const RootSystem& rs, const Weight& w) {
  require_rank(rs, w);
  for (const auto& a : rs.positive_roots()) {
    if (w.inner4(a) == 0) return false;
  }
  return true;
}

std::vector<std::pair<Weight, int>> weyl_orbit_signed(const RootSystem& rs, const Weight& w) {
  require_rank(rs, w);
  std::vector<std::pair<Weight, int>> out;
  out.reserve(rs.weyl_group().size());
  for (const auto& e : rs.weyl_group()) out.emplace_back(e.apply(w), e.det);
  return out;
}

Weight dominant_representative(const RootSystem& rs, const Weight& w) {
  require_rank(rs, w);
  std::vector<int> a(w.doubled().begin(), w.doubled().end());
  int negatives = 0;
  bool has_zero = false;
  for (int& x : a) {
    if (x < 0) ++negatives;
    if (x == 0) has_zero = true;
    x = std::abs(x);
  }
  std::sort(a.begin(), a.end(), std::greater<>());
  if (rs.series() == Series::D && negatives % 2 != 0 && !has_zero) a.back() = -a.back();
  return Weight::from_doubled(std::move(a));
}

std::optional<std::pair<Weight, int>> reflect_to_dominant(const RootSystem& rs, const Weight& w) {
  require_rank(rs, w);
  if (!is_regular(rs, w)) return std::nullopt;
  const std::size_t k = rs.rank();
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  // Regular weights have pairwise distinct absolute values, so the sort is strict.
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return std::abs(w.doubled(static_cast<std::size_t>(i))) > std::abs(w.doubled(static_cast<std::size_t>(j)));
  });
  std::vector<int> out(k);
  int flips = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const int x = w.doubled(static_cast<std::size_t>(order[i]));
    if (x < 0) ++flips;
    out[i] = std::abs(x);
  }
  int det = permutation_sign(order);
  if (rs.series() == Series::B) {
    if (flips % 2 != 0) det = -det;
  } else if (flips % 2 != 0) {
    // An even number of sign changes is forced; the smallest entry keeps a
    // sign. If it is zero the extra flip is invisible.
    out.back() = -out.back();
  }
  return std::make_pair(Weight::from_doubled(std::move(out)), det);
}

std::vector<Weight> dominant_weights(const RootSystem& rs, int max_doubled, Parity parity) {
  const std::size_t k = rs.rank();
  const int start = parity == Parity::half_integral ? 1 : 0;
  std::vector<Weight> out;
  std::vector<int> cur(k);
  // Entries are generated nonincreasing in absolute value; only the last one
  // may be negative (D) and dominance is checked at the leaf.
  auto fill = [&](auto&& self, std::size_t i, int cap) -> void {
    if (i == k) {
      for (int flip = 0; flip < 2; ++flip) {
        if (flip == 1 && (rs.series() == Series::B || cur[k - 1] == 0)) break;
        std::vector<int> v = cur;
        if (flip == 1) v[k - 1] = -v[k - 1];
        Weight w = Weight::from_doubled(v);
        if (is_dominant(rs, w)) out.push_back(std::move(w));
      }
      return;
    }
    for (int x = start; x <= cap; x += 2) {
      cur[i] = x;
      self(self, i + 1, x);
    }
  };
  if (max_doubled >= start) {
    for (int x = start; x <= max_doubled; x += 2) {
      cur[0] = x;
      fill(fill, 1, x);
    }
  }
  return out;
}

}  // namespace selberg
