#pragma once

#include <compare>
#include <map>
#include <vector>

#include "qhess/polynomial.hpp"

namespace qhess {

/// e_i(x_1..x_n); 1 for i = 0 (also when n = 0), 0 outside 0 <= i <= n.
Polynomial elementary(RegistryPtr reg, int i, int n);

/// h_i(x_1..x_n); 1 for i = 0, 0 for i < 0.
Polynomial complete(RegistryPtr reg, int i, int n);

/// x_1^k + ... + x_n^k.
Polynomial power_sum(RegistryPtr reg, int k, int n);

/// (p - s_k p) / (x_k - x_{k+1}). Requires p to involve x variables only and
/// the registry to contain x_{k+1}. The division is asserted to be exact.
Polynomial divided_difference(const Polynomial& p, int k);

/// Index (i_1,...,i_m) of the product e_{i_1}^{(1)} ... e_{i_m}^{(m)},
/// with 0 <= i_k <= k.
struct StdElemIndex {
  std::vector<int> levels;

  bool valid() const;
  long weighted_degree() const;
  auto operator<=>(const StdElemIndex&) const = default;
};

Polynomial std_elem_monomial(RegistryPtr reg, const StdElemIndex& idx);

/// All indices with m levels and level sum `total`.
std::vector<StdElemIndex> std_elem_indices(int m, int total);

struct ExpansionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unique coefficients c with p = sum c * e_{i_1..i_m}. Inhomogeneous input
/// is split by weighted degree and merged. Throws ExpansionError when the
/// exact linear system is singular or inconsistent (p outside the span).
std::map<StdElemIndex, Rational> expand_standard(const Polynomial& p, int m);

/// Expand p in standard elementary monomials and replace every factor
/// e_i^{(k)} by its quantized counterpart. Not a ring map; setting all q to 0
/// in the result recovers p. The registry must contain the q variables.
Polynomial quantize(const Polynomial& p, int m);

}  // namespace qhess
