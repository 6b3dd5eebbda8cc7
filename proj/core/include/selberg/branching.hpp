#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "selberg/characters.hpp"
#include "selberg/root_system.hpp"
#include "selberg/weight.hpp"

namespace selberg {

enum class GroupFlavor { SO, Spin };

/// An irreducible representation of M = SO(n-1) or Spin(n-1), n odd.
struct MType {
  Weight weight;
  int n = 3;
  GroupFlavor flavor = GroupFlavor::SO;

  int k() const noexcept { return (n - 1) / 2; }
  /// The M-type with the last weight coordinate negated.
  MType flipped() const { return MType{weyl_flip(weight), n, flavor}; }
  bool is_self_dual() const { return weyl_flip(weight) == weight; }

  friend bool operator==(const MType&, const MType&) = default;
};

/// Validates n (odd, >= 3), the rank (n-1)/2, dominance for D_k and the
/// flavor. Without an explicit flavor, half-integral weights pick Spin.
MType make_mtype(int n, const Weight& weight, std::optional<GroupFlavor> flavor = std::nullopt);

/// Checks that n is odd and at least 3; throws Error{domain} otherwise.
void require_odd_dimension(int n);

/// B_k for K = Spin(n), D_k for M = Spin(n-1), with k = (n-1)/2.
RootSystem k_root_system(int n);
RootSystem m_root_system(int n);

enum class LiftCase { a, b };

struct LiftResult {
  LiftCase case_tag = LiftCase::a;
  VirtualRep gamma;
  std::optional<Weight> super_gamma_prime;
  std::optional<int> super_sign;
  std::optional<VirtualRep> gamma_plus;
  std::optional<VirtualRep> gamma_minus;
};

/// Spin(2k+1) -> Spin(2k) by the interlacing rule, extended linearly.
VirtualRep restrict_B_to_D(const VirtualRep& gamma);

/// Spin(2k+2) -> Spin(2k+1) by the interlacing rule. lambda is a dominant
/// weight of D_{k+1}; the result lives over B_k and is multiplicity free.
VirtualRep restrict_D_to_B(const Weight& lambda);

LiftCase lift_case(const MType& sigma);

/// The unique gamma in R(K) with r(gamma) = sigma (case a) or sigma + w sigma
/// (case b). Case b also carries gamma^+ / gamma^- and the super lift data.
LiftResult lift(const MType& sigma);

/// Greedy inversion of restrict_B_to_D against the lexicographic order.
/// `target` must be fixed by weyl_flip; throws Error{internal} otherwise.
VirtualRep back_substitute(const VirtualRep& target);

/// Splitting s (x) gamma_nu = gamma^+(nu) + gamma^-(nu) by the parity of det v.
std::pair<VirtualRep, VirtualRep> gamma_pm(const RootSystem& b_rs, const Weight& nu);

/// The spin representation s of Spin(2k+1).
VirtualRep spin_representation(int k);
/// The half-spin representations s^+ (sign > 0) and s^- of Spin(2k).
VirtualRep half_spin_representation(int k, int sign);

struct ExteriorMTypes {
  int n = 3;
  /// sigma^0 .. sigma^{k-1}; sigma^p is isomorphic to sigma^{n-1-p}.
  std::vector<MType> lower;
  MType plus;
  MType minus;

  /// Index in `lower` carrying sigma^p for p != k.
  int dual_index(int p) const { return p < (n - 1) / 2 ? p : n - 1 - p; }
};

ExteriorMTypes exterior_mtypes(int n);

/// r(lift(sigma).gamma) == sigma (case a) or sigma + w sigma (case b).
bool check_lift_restriction(const MType& sigma);
/// Case b: sigma - w sigma == +-(s^+ - s^-) r(gamma_{|sigma| - (1/2,...,1/2)}),
/// the sign being that of the last entry of sigma. True in case a.
bool check_super_difference(const MType& sigma);
/// s (x) gamma_nu == gamma^+(nu) + gamma^-(nu) over B_k.
bool check_spin_split(const RootSystem& b_rs, const Weight& nu);

/// Highest weight (1,...,1,0,...,0) of the l-th exterior power of the
/// standard representation of SO(n), l <= (n-1)/2.
Weight exterior_k_weight(int n, int l);

/// sum_{l=0}^p (-1)^{l-p} lambda^l over B_k, after checking that its
/// restriction is sigma^p (for p = k: sigma^+ + sigma^-).
VirtualRep exterior_lift_identity(int n, int p);

}  // namespace selberg
