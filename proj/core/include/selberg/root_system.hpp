#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "selberg/weight.hpp"

namespace selberg {

/// B_k is the root system of Spin(2k+1) / SO(2k+1), D_k that of Spin(2k) / SO(2k).
enum class Series { B, D };

/// A signed permutation acting by (s.w)_i = signs[i] * w_{perm[i]}.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> signs;
  int det = 1;

  Weight apply(const Weight& w) const;
};

/// Immutable, cheaply copyable handle to a root system of type B_k or D_k.
/// Instances with equal (series, rank) share their data.
class RootSystem {
 public:
  Series series() const noexcept;
  std::size_t rank() const noexcept;
  const std::vector<Weight>& positive_roots() const noexcept;
  const Weight& rho() const noexcept;
  std::uint64_t weyl_group_order() const noexcept;
  /// Every element of the Weyl group, enumerated once on first use.
  const std::vector<WeylElement>& weyl_group() const;

  std::string name() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) noexcept {
    return a.series() == b.series() && a.rank() == b.rank();
  }

 private:
  struct Data;
  explicit RootSystem(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend RootSystem build_root_system(Series series, int rank);
};

/// Throws Error{invalid_rank} for rank < 1.
RootSystem build_root_system(Series series, int rank);

/// Chain condition of the series: B_k needs w_1 >= ... >= w_k >= 0,
/// D_k needs w_1 >= ... >= w_{k-1} >= |w_k|.
bool is_dominant(const RootSystem& rs, const Weight& w);

/// True if no root is orthogonal to w.
bool is_regular(const RootSystem& rs, const Weight& w);

/// The orbit of w listed once per group element, with det of that element.
std::vector<std::pair<Weight, int>> weyl_orbit_signed(const RootSystem& rs, const Weight& w);

/// The unique dominant weight in the Weyl orbit of w.
Weight dominant_representative(const RootSystem& rs, const Weight& w);

/// For regular w, the pair (s.w, det s) with s.w strictly dominant; nullopt for singular w.
std::optional<std::pair<Weight, int>> reflect_to_dominant(const RootSystem& rs, const Weight& w);

/// Dominant weights of one parity whose entries satisfy |w_i| <= max_doubled / 2.
std::vector<Weight> dominant_weights(const RootSystem& rs, int max_doubled, Parity parity);

}  // namespace selberg
