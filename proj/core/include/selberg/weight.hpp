#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

enum class Parity { integral, half_integral };

/// A k-tuple of half-integers in the orthonormal coordinates e_1..e_k.
///
/// Entries are stored doubled so that (3/2, 1/2) is held as {3, 1}. All
/// entries share one parity; the parity tag is derived on construction and
/// checked against any tag the caller supplies.
class Weight {
 public:
  Weight() = default;

  static Weight from_doubled(std::vector<int> doubled);
  static Weight from_doubled(std::vector<int> doubled, Parity expected);
  static Weight integral(std::vector<int> entries);
  static Weight zero(std::size_t rank);
  /// (1/2, ..., 1/2) of the given rank.
  static Weight half_ones(std::size_t rank);
  /// Comma-separated entries, each an integer or a fraction with denominator 2.
  static Weight parse(std::string_view text);

  std::size_t rank() const noexcept { return doubled_.size(); }
  Parity parity() const noexcept { return parity_; }
  bool is_half_integral() const noexcept { return parity_ == Parity::half_integral; }
  bool is_zero() const noexcept;

  int doubled(std::size_t i) const { return doubled_.at(i); }
  std::span<const int> doubled() const noexcept { return doubled_; }
  Rational entry(std::size_t i) const { return ratio(doubled_.at(i), 2); }
  double entry_d(std::size_t i) const { return 0.5 * doubled_.at(i); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(int factor) const;

  /// Standard inner product, times four (so it is an integer).
  long long inner4(const Weight& o) const;
  long long norm4() const { return inner4(*this); }

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.doubled_ <=> b.doubled_; }

 private:
  explicit Weight(std::vector<int> doubled);
  std::vector<int> doubled_;
  Parity parity_ = Parity::integral;
};

/// Negates the last coordinate: the action of the nontrivial restricted Weyl
/// element on highest weights of Spin(2k) / SO(2k).
Weight weyl_flip(const Weight& w);

}  // namespace selberg
