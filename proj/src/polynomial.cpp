#include "qhess/polynomial.hpp"

#include <stdexcept>

namespace qhess {

namespace {
void check_same_registry(const Polynomial& a, const Polynomial& b) {
  if (a.registry().get() != b.registry().get()) throw RegistryMismatchError();
}
}  // namespace

Polynomial Polynomial::constant(RegistryPtr reg, Rational c) {
  Polynomial p(std::move(reg));
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(RegistryPtr reg, VarId id) {
  Monomial m = Monomial::variable(*reg, id);
  Polynomial p(std::move(reg));
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::term(RegistryPtr reg, Rational c, Monomial m) {
  Polynomial p(std::move(reg));
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_registry(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_registry(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_registry(*this, other);
  Polynomial out(reg_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(reg_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(reg_);
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

std::optional<long> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  long deg = terms_.begin()->first.weighted_degree();
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree() != deg) return std::nullopt;
  return deg;
}

std::set<VarId> Polynomial::support() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [id, exp] : m.factors()) out.insert(id);
  return out;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& assignment) const {
  for (const auto& [id, value] : assignment) check_same_registry(*this, value);
  // powers of each assigned value are cached across terms
  std::map<VarId, std::vector<Polynomial>> powers;
  auto power_of = [&](VarId id, int exp) -> const Polynomial& {
    auto& tower = powers[id];
    if (tower.empty()) tower.push_back(Polynomial::constant(reg_, 1));
    while (static_cast<int>(tower.size()) <= exp)
      tower.push_back(tower.back() * assignment.at(id));
    return tower[static_cast<std::size_t>(exp)];
  };
  Polynomial out(reg_);
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> kept;
    Polynomial factor = Polynomial::constant(reg_, c);
    bool any = false;
    for (const auto& [id, exp] : m.factors()) {
      if (assignment.count(id)) {
        factor = factor * power_of(id, exp);
        any = true;
      } else {
        kept.emplace_back(id, exp);
      }
    }
    Polynomial base = Polynomial::term(reg_, 1, Monomial(*reg_, std::move(kept)));
    out += any ? base * factor : base * c;
  }
  return out;
}

Polynomial Polynomial::substitute_values(const std::map<VarId, Rational>& assignment) const {
  std::map<VarId, Polynomial> polys;
  for (const auto& [id, value] : assignment) polys.emplace(id, Polynomial::constant(reg_, value));
  return substitute(polys);
}

Polynomial Polynomial::swap_variables(VarId a, VarId b) const {
  std::map<VarId, Polynomial> assignment;
  assignment.emplace(a, Polynomial::variable(reg_, b));
  assignment.emplace(b, Polynomial::variable(reg_, a));
  return substitute(assignment);
}

Polynomial Polynomial::coefficient_of(VarId id, int k) const {
  Polynomial out(reg_);
  for (const auto& [m, c] : terms_)
    if (m.exponent(id) == k) out.add_term(m.without(id, *reg_), c);
  return out;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  if (order.kind == MonomialOrder::Kind::grevlex &&
      order.grading == MonomialOrder::Grading::weighted) {
    // storage order is canonical grevlex, so the maximum is at the back
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
  }
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Polynomial pow(const Polynomial& base, unsigned exp) {
  Polynomial out = Polynomial::constant(base.registry(), 1);
  for (unsigned k = 0; k < exp; ++k) out = out * base;
  return out;
}

std::optional<Polynomial> try_divide_exact(const Polynomial& num, const Polynomial& den) {
  if (num.registry().get() != den.registry().get()) throw RegistryMismatchError();
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  constexpr MonomialOrder order{};
  auto [dlm, dlc] = den.leading_term(order);
  Polynomial quotient(num.registry());
  Polynomial rest = num;
  while (!rest.is_zero()) {
    auto [rlm, rlc] = rest.leading_term(order);
    auto q = rlm.divided_by(dlm);
    if (!q) return std::nullopt;
    Polynomial t = Polynomial::term(num.registry(), rlc / dlc, *q);
    quotient += t;
    rest -= t * den;
  }
  return quotient;
}

}  // namespace qhess
