#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>

#include "selberg/root_system.hpp"
#include "selberg/weight.hpp"

namespace selberg {

/// A finite Z-linear combination of irreducible representations, keyed by
/// dominant highest weight. Zero coefficients are never stored.
class VirtualRep {
 public:
  explicit VirtualRep(RootSystem rs);
  static VirtualRep irreducible(const RootSystem& rs, const Weight& hw, long long coefficient = 1);

  const RootSystem& root_system() const noexcept { return rs_; }
  const std::map<Weight, long long>& terms() const noexcept { return terms_; }
  long long coefficient(const Weight& hw) const;
  bool empty() const noexcept { return terms_.empty(); }

  /// Adds c copies of the irreducible with highest weight hw (which must be dominant).
  void add(const Weight& hw, long long c);

  /// Signed total dimension: sum of coefficient * weyl_dim.
  long long dimension() const;

  /// Total dimension counted with |coefficient|.
  long long absolute_dimension() const;

  VirtualRep& operator+=(const VirtualRep& other);
  VirtualRep& operator-=(const VirtualRep& other);
  VirtualRep& operator*=(long long scalar);

  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(VirtualRep a, long long s) { return a *= s; }
  VirtualRep operator-() const { return VirtualRep(*this) *= -1; }
  /// Tensor product, extended bilinearly.
  friend VirtualRep operator*(const VirtualRep& a, const VirtualRep& b);
  friend bool operator==(const VirtualRep& a, const VirtualRep& b) {
    return a.rs_ == b.rs_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void require_same(const VirtualRep& other) const;
  RootSystem rs_;
  std::map<Weight, long long> terms_;
};

/// All weights of one irreducible representation with their multiplicities.
struct WeightMultiplicityTable {
  RootSystem root_system;
  Weight highest_weight;
  std::map<Weight, long long> multiplicities;

  Parity parity() const noexcept { return highest_weight.parity(); }
  long long total() const;
};

/// Weyl dimension formula; throws Error{domain} for non-dominant hw.
long long weyl_dim(const RootSystem& rs, const Weight& hw);

/// Weight multiplicities by Freudenthal's recursion. Results are memoized in
/// a process-wide cache guarded by a shared mutex; the returned table is
/// immutable.
std::shared_ptr<const WeightMultiplicityTable> freudenthal_weights(const RootSystem& rs, const Weight& hw);

/// Distinct points of the Weyl orbit of a dominant weight.
std::vector<Weight> orbit_points(const RootSystem& rs, const Weight& dominant);

/// Klimyk's formula run over the weights of the smaller factor.
VirtualRep tensor_decompose(const RootSystem& rs, const Weight& hw1, const Weight& hw2);

/// sum_mu mult(mu) exp(i <mu, angles>), times lift_sign when the weights are
/// half-integral (the character of a Spin element depends on its lift).
std::complex<double> char_eval(const WeightMultiplicityTable& table, std::span<const double> angles, int lift_sign = 1);
std::complex<double> char_eval(const VirtualRep& rep, std::span<const double> angles, int lift_sign = 1);

/// A finite Laurent sum: weight -> integer coefficient.
using FormalCharacter = std::map<Weight, long long>;

FormalCharacter formal_character(const VirtualRep& rep);
FormalCharacter convolve(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter add_scaled(FormalCharacter a, const FormalCharacter& b, long long scale);

}  // namespace selberg
