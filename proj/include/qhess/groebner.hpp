#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qhess/polynomial.hpp"

namespace qhess {

/// Hard budget for Buchberger runs; exceeding it throws ResourceLimitError
/// rather than returning a truncated basis.
struct GroebnerLimits {
  std::size_t max_pair_reductions = 200000;
  long max_lcm_degree = 400;  // cap on the (graded) degree of treated S-pairs
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis: generators are monic, inter-reduced and sorted by
/// leading term. Immutable once constructed; safe to share across threads.
class GroebnerBasis {
 public:
  const std::vector<Polynomial>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const RegistryPtr& registry() const { return reg_; }

 private:
  friend GroebnerBasis buchberger(std::vector<Polynomial>, MonomialOrder, GroebnerLimits);
  friend Polynomial normal_form(const Polynomial&, const GroebnerBasis&);

  GroebnerBasis(RegistryPtr reg, MonomialOrder order, std::vector<Polynomial> gens);

  RegistryPtr reg_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leads_;
};

GroebnerBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order = {},
                         GroebnerLimits limits = {});

/// Unique remainder of p modulo gb; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Mutual membership of generators.
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 MonomialOrder order = {}, GroebnerLimits limits = {});

/// Number of standard monomials in the given variables (all registry
/// variables when omitted), or nullopt when infinite. Every basis element
/// must be supported on the given variables.
std::optional<std::uint64_t> quotient_dimension(
    const GroebnerBasis& gb, std::optional<std::vector<VarId>> vars = std::nullopt);

struct HilbertSeries {
  std::vector<std::int64_t> coeffs;  // coeffs[d] = dim of the weighted-degree-d piece
  long degree_bound;
};

/// Graded dimensions of the quotient up to degree_bound, computed by counting
/// standard monomials of the leading-term ideal.
HilbertSeries hilbert_series(const GroebnerBasis& gb, long degree_bound,
                             std::optional<std::vector<VarId>> vars = std::nullopt);

}  // namespace qhess
