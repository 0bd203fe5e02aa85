#include "qhess/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhess {

Monomial::Monomial(const Registry& reg, std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [id, exp] : factors) {
    if (exp < 0) throw std::invalid_argument("negative exponent in monomial");
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == id)
      factors_.back().second += exp;
    else
      factors_.emplace_back(id, exp);
  }
  for (const auto& [id, exp] : factors_) {
    wdeg_ += static_cast<long>(reg.degree(id)) * exp;
    tdeg_ += exp;
  }
}

Monomial Monomial::variable(const Registry& reg, VarId id, int exp) {
  return Monomial(reg, {{id, exp}});
}

int Monomial::exponent(VarId id) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), id,
                             [](const Factor& f, VarId v) { return f.first < v; });
  return (it != factors_.end() && it->first == id) ? it->second : 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == ae || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  out.wdeg_ = wdeg_ + other.wdeg_;
  out.tdeg_ = tdeg_ + other.tdeg_;
  return out;
}

bool Monomial::divisible_by(const Monomial& d) const {
  auto a = factors_.begin(), ae = factors_.end();
  for (const auto& [id, exp] : d.factors_) {
    while (a != ae && a->first < id) ++a;
    if (a == ae || a->first != id || a->second < exp) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& d) const {
  if (!divisible_by(d)) return std::nullopt;
  Monomial out;
  auto b = d.factors_.begin(), be = d.factors_.end();
  for (const auto& [id, exp] : factors_) {
    int e = exp;
    while (b != be && b->first < id) ++b;
    if (b != be && b->first == id) e -= b->second;
    if (e > 0) out.factors_.emplace_back(id, e);
  }
  out.wdeg_ = wdeg_ - d.wdeg_;
  out.tdeg_ = tdeg_ - d.tdeg_;
  return out;
}

bool Monomial::coprime_with(const Monomial& other) const {
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae && b != be) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else
      return false;
  }
  return true;
}

Monomial Monomial::lcm(const Registry& reg, const Monomial& a, const Monomial& b) {
  std::vector<Factor> fs;
  auto i = a.factors_.begin(), ie = a.factors_.end();
  auto j = b.factors_.begin(), je = b.factors_.end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first))
      fs.push_back(*i++);
    else if (i == ie || j->first < i->first)
      fs.push_back(*j++);
    else {
      fs.emplace_back(i->first, std::max(i->second, j->second));
      ++i, ++j;
    }
  }
  return Monomial(reg, std::move(fs));
}

Monomial Monomial::without(VarId id, const Registry& reg) const {
  std::vector<Factor> fs;
  for (const auto& f : factors_)
    if (f.first != id) fs.push_back(f);
  return Monomial(reg, std::move(fs));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  long da, db;
  if (grading == Grading::weighted) {
    da = a.weighted_degree();
    db = b.weighted_degree();
  } else {
    da = a.total_degree();
    db = b.total_degree();
  }
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (kind == Kind::grevlex) {
    // last differing variable: having more of it makes the monomial smaller
    auto i = fa.rbegin();
    auto j = fb.rbegin();
    while (i != fa.rend() || j != fb.rend()) {
      if (j == fb.rend() || (i != fa.rend() && i->first > j->first)) return -1;
      if (i == fa.rend() || j->first > i->first) return 1;
      if (i->second != j->second) return i->second > j->second ? -1 : 1;
      ++i, ++j;
    }
    return 0;
  }
  // grlex: first differing variable, having more of it makes it bigger
  auto i = fa.begin();
  auto j = fb.begin();
  while (i != fa.end() || j != fb.end()) {
    if (j == fb.end() || (i != fa.end() && i->first < j->first)) return 1;
    if (i == fa.end() || j->first < i->first) return -1;
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
    ++i, ++j;
  }
  return 0;
}

}  // namespace qhess
