#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qhess/registry.hpp"

namespace qhess {

/// Sparse power product: factors sorted by VarId, exponents > 0, with the
/// weighted and total degrees cached. The empty product is the unit.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;

  // Normalizes: sorts by id, merges duplicates, drops zero exponents.
  // Negative exponents are rejected.
  Monomial(const Registry& reg, std::vector<Factor> factors);

  static Monomial variable(const Registry& reg, VarId id, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int exponent(VarId id) const;
  long weighted_degree() const { return wdeg_; }
  int total_degree() const { return tdeg_; }

  Monomial times(const Monomial& other) const;
  bool divisible_by(const Monomial& d) const;
  std::optional<Monomial> divided_by(const Monomial& d) const;
  bool coprime_with(const Monomial& other) const;
  static Monomial lcm(const Registry& reg, const Monomial& a, const Monomial& b);

  // Power product with variable `id` removed.
  Monomial without(VarId id, const Registry& reg) const;

  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<Factor> factors_;
  long wdeg_ = 0;
  int tdeg_ = 0;
};

/// Total orders compatible with multiplication on the registry's declared
/// variable order (smaller VarId = bigger variable).
struct MonomialOrder {
  enum class Kind { grevlex, grlex };
  enum class Grading { weighted, standard };

  Kind kind = Kind::grevlex;
  Grading grading = Grading::weighted;

  // -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// The canonical term order used for storage and serialization:
/// weighted graded reverse lexicographic.
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    static constexpr MonomialOrder order{};
    return order.compare(a, b) < 0;
  }
};

}  // namespace qhess
