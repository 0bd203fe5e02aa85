#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "qhess/monomial.hpp"
#include "qhess/rational.hpp"
#include "qhess/registry.hpp"

namespace qhess {

/// Exact sparse multivariate polynomial over the rationals.
///
/// Terms are stored in canonical (weighted grevlex) order with no zero
/// coefficients, so two polynomials are equal iff their term maps are equal.
/// Values are immutable in spirit: every operation returns a fresh value and
/// shared instances are safe to read concurrently.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, CanonicalLess>;

  explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}

  static Polynomial zero(RegistryPtr reg) { return Polynomial(std::move(reg)); }
  static Polynomial constant(RegistryPtr reg, Rational c);
  static Polynomial variable(RegistryPtr reg, VarId id);
  static Polynomial term(RegistryPtr reg, Rational c, Monomial m);

  const RegistryPtr& registry() const { return reg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& other) const {
    return reg_.get() == other.reg_.get() && terms_ == other.terms_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// Common weighted degree of all terms, or nullopt when inhomogeneous.
  /// The zero polynomial reports degree 0.
  std::optional<long> homogeneous_degree() const;

  std::set<VarId> support() const;

  /// Simultaneous substitution; unassigned variables pass through.
  Polynomial substitute(const std::map<VarId, Polynomial>& assignment) const;
  Polynomial substitute_values(const std::map<VarId, Rational>& assignment) const;
  Polynomial swap_variables(VarId a, VarId b) const;

  /// Polynomial coefficient of id^k (the variable is stripped from the result).
  Polynomial coefficient_of(VarId id, int k) const;

  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;

  // term-level mutation used by constructors and arithmetic
  void add_term(const Monomial& m, const Rational& c);

 private:
  RegistryPtr reg_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial pow(const Polynomial& base, unsigned exp);

/// Exact quotient num/den, or nullopt when den does not divide num.
std::optional<Polynomial> try_divide_exact(const Polynomial& num, const Polynomial& den);

}  // namespace qhess
