#include "qhess/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace qhess {

namespace {

// term vector sorted descending by the active order
struct OTerm {
  Monomial m;
  Rational c;
};

struct OPoly {
  std::vector<OTerm> terms;
  bool zero() const { return terms.empty(); }
  const OTerm& lead() const { return terms.front(); }
};

OPoly to_opoly(const Polynomial& p, const MonomialOrder& order) {
  OPoly out;
  out.terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) out.terms.push_back({m, c});
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const OTerm& a, const OTerm& b) { return order.compare(a.m, b.m) > 0; });
  return out;
}

Polynomial from_opoly(const RegistryPtr& reg, const OPoly& p) {
  Polynomial out(reg);
  for (const auto& t : p.terms) out.add_term(t.m, t.c);
  return out;
}

// target -= coef * shift * g, merging two descending term lists
void subtract_multiple(OPoly& target, const Rational& coef, const Monomial& shift,
                       const OPoly& g, const MonomialOrder& order) {
  std::vector<OTerm> merged;
  merged.reserve(target.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < target.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      merged.push_back(std::move(target.terms[i++]));
      continue;
    }
    Monomial gm = g.terms[j].m.times(shift);
    Rational gc = -coef * g.terms[j].c;
    if (i == target.terms.size()) {
      merged.push_back({std::move(gm), std::move(gc)});
      ++j;
      continue;
    }
    int cmp = order.compare(target.terms[i].m, gm);
    if (cmp > 0) {
      merged.push_back(std::move(target.terms[i++]));
    } else if (cmp < 0) {
      merged.push_back({std::move(gm), std::move(gc)});
      ++j;
    } else {
      Rational sum = target.terms[i].c + gc;
      if (sum != 0) merged.push_back({std::move(gm), std::move(sum)});
      ++i, ++j;
    }
  }
  target.terms = std::move(merged);
}

// full multivariate division remainder against a fixed list
OPoly reduce_full(OPoly h, const std::vector<OPoly>& basis, const MonomialOrder& order,
                  const Registry& reg) {
  (void)reg;
  std::vector<OTerm> remainder;
  while (!h.zero()) {
    bool reduced = false;
    for (const OPoly& g : basis) {
      if (g.zero()) continue;
      if (auto q = h.lead().m.divided_by(g.lead().m)) {
        subtract_multiple(h, h.lead().c / g.lead().c, *q, g, order);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(h.terms.front());
      h.terms.erase(h.terms.begin());
    }
  }
  OPoly out;
  out.terms = std::move(remainder);
  return out;
}

void make_monic(OPoly& p) {
  if (p.zero()) return;
  Rational lead = p.lead().c;
  if (lead == 1) return;
  for (auto& t : p.terms) t.c /= lead;
}

}  // namespace

GroebnerBasis::GroebnerBasis(RegistryPtr reg, MonomialOrder order, std::vector<Polynomial> gens)
    : reg_(std::move(reg)), order_(order), gens_(std::move(gens)) {
  for (const auto& g : gens_) leads_.push_back(g.leading_term(order_).first);
}

GroebnerBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order,
                         GroebnerLimits limits) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  RegistryPtr reg = gens.front().registry();
  for (const auto& g : gens)
    if (g.registry().get() != reg.get()) throw RegistryMismatchError();

  std::vector<OPoly> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    OPoly p = to_opoly(g, order);
    make_monic(p);
    basis.push_back(std::move(p));
  }

  auto lcm_of = [&](std::size_t i, std::size_t j) {
    return Monomial::lcm(*reg, basis[i].lead().m, basis[j].lead().m);
  };
  long lcm_degree = 0;
  auto graded_degree = [&](const Monomial& m) {
    return order.grading == MonomialOrder::Grading::weighted ? m.weighted_degree()
                                                             : static_cast<long>(m.total_degree());
  };

  // pending pairs ordered by (lcm degree, lcm, i, j): normal selection strategy
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const std::tuple<long, Monomial, std::size_t, std::size_t>& a,
                    const std::tuple<long, Monomial, std::size_t, std::size_t>& b) const {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      int cmp = order->compare(std::get<1>(a), std::get<1>(b));
      if (cmp != 0) return cmp < 0;
      if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
      return std::get<3>(a) < std::get<3>(b);
    }
  };
  std::set<std::tuple<long, Monomial, std::size_t, std::size_t>, PairLess> pending{
      PairLess{&order}};
  // pairs whose S-polynomial has actually been reduced (chain criterion needs
  // genuinely treated pairs, not criterion-skipped ones)
  std::set<std::pair<std::size_t, std::size_t>> treated;

  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm_of(i, j);
      pending.insert({graded_degree(l), l, i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  std::size_t reductions = 0;
  while (!pending.empty()) {
    auto [deg, lcm, i, j] = *pending.begin();
    pending.erase(pending.begin());
    if (deg > limits.max_lcm_degree)
      throw ResourceLimitError("buchberger: S-pair degree budget exceeded");

    const Monomial& li = basis[i].lead().m;
    const Monomial& lj = basis[j].lead().m;
    if (li.coprime_with(lj)) continue;  // product criterion
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!lcm.divisible_by(basis[k].lead().m)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
        chained = true;
    }
    if (chained) continue;

    if (++reductions > limits.max_pair_reductions)
      throw ResourceLimitError("buchberger: pair reduction budget exceeded");
    lcm_degree = std::max(lcm_degree, deg);

    OPoly s;
    {
      Monomial mi = *lcm.divided_by(li);
      Monomial mj = *lcm.divided_by(lj);
      OPoly left;
      left.terms.reserve(basis[i].terms.size());
      for (const auto& t : basis[i].terms) left.terms.push_back({t.m.times(mi), t.c});
      subtract_multiple(left, Rational(1), mj, basis[j], order);
      s = std::move(left);
    }
    treated.insert({i, j});
    OPoly r = reduce_full(std::move(s), basis, order, *reg);
    if (r.zero()) continue;
    make_monic(r);
    basis.push_back(std::move(r));
    push_pairs_for(basis.size() - 1);
  }

  // minimal basis: drop elements whose lead is divisible by another lead
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (basis[a].lead().m.divisible_by(basis[b].lead().m) &&
          !(basis[a].lead().m == basis[b].lead().m && a < b)) {
        keep[a] = false;
        break;
      }
    }
  }
  std::vector<OPoly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) minimal.push_back(std::move(basis[a]));

  // inter-reduce tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<OPoly> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(minimal[b]);
      OPoly r = reduce_full(minimal[a], others, order, *reg);
      make_monic(r);
      if (r.terms.size() != minimal[a].terms.size() ||
          !std::equal(r.terms.begin(), r.terms.end(), minimal[a].terms.begin(),
                      [](const OTerm& x, const OTerm& y) { return x.m == y.m && x.c == y.c; })) {
        minimal[a] = std::move(r);
        changed = true;
      }
    }
    std::erase_if(minimal, [](const OPoly& p) { return p.zero(); });
  }

  std::sort(minimal.begin(), minimal.end(), [&](const OPoly& a, const OPoly& b) {
    return order.compare(a.lead().m, b.lead().m) < 0;
  });

  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (const auto& p : minimal) out.push_back(from_opoly(reg, p));
  return GroebnerBasis(reg, order, std::move(out));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.registry().get() != gb.registry().get()) throw RegistryMismatchError();
  std::vector<OPoly> basis;
  basis.reserve(gb.generators().size());
  for (const auto& g : gb.generators()) basis.push_back(to_opoly(g, gb.order()));
  OPoly r = reduce_full(to_opoly(p, gb.order()), basis, gb.order(), *gb.registry());
  return from_opoly(gb.registry(), r);
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 MonomialOrder order, GroebnerLimits limits) {
  GroebnerBasis ga = buchberger(a, order, limits);
  GroebnerBasis gbb = buchberger(b, order, limits);
  for (const auto& g : a)
    if (!normal_form(g, gbb).is_zero()) return false;
  for (const auto& g : b)
    if (!normal_form(g, ga).is_zero()) return false;
  return true;
}

namespace {

std::vector<VarId> effective_vars(const GroebnerBasis& gb,
                                  const std::optional<std::vector<VarId>>& vars) {
  std::vector<VarId> out;
  if (vars) {
    out = *vars;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  } else {
    for (VarId id = 0; id < gb.registry()->size(); ++id) out.push_back(id);
  }
  for (const auto& g : gb.generators())
    for (VarId id : g.support())
      if (!std::binary_search(out.begin(), out.end(), id))
        throw std::invalid_argument("basis is not supported on the given variables");
  return out;
}

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  for (const auto& g : gb.generators()) out.push_back(g.leading_term(gb.order()).first);
  return out;
}

}  // namespace

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb,
                                                std::optional<std::vector<VarId>> vars) {
  std::vector<VarId> vs = effective_vars(gb, vars);
  std::vector<Monomial> leads = leading_monomials(gb);
  // finite iff every variable admits a pure-power leading monomial
  std::vector<int> bound(vs.size(), -1);
  for (std::size_t vi = 0; vi < vs.size(); ++vi) {
    for (const auto& lm : leads) {
      const auto& fs = lm.factors();
      if (fs.size() == 1 && fs[0].first == vs[vi]) {
        if (bound[vi] < 0 || fs[0].second < bound[vi]) bound[vi] = fs[0].second;
      }
    }
    if (bound[vi] < 0) return std::nullopt;
  }
  const Registry& reg = *gb.registry();
  std::uint64_t count = 0;
  std::vector<Monomial::Factor> current;
  std::function<void(std::size_t)> rec = [&](std::size_t vi) {
    Monomial m(reg, current);
    for (const auto& lm : leads)
      if (m.divisible_by(lm)) return;  // whole subtree is in the ideal
    if (vi == vs.size()) {
      ++count;
      if (count > 100000000ull) throw ResourceLimitError("quotient dimension too large");
      return;
    }
    for (int e = 0; e < bound[vi]; ++e) {
      if (e > 0)
        current.emplace_back(vs[vi], 1);
      rec(vi + 1);
    }
    for (int e = 1; e < bound[vi]; ++e) current.pop_back();
  };
  rec(0);
  return count;
}

HilbertSeries hilbert_series(const GroebnerBasis& gb, long degree_bound,
                             std::optional<std::vector<VarId>> vars) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  std::vector<VarId> vs = effective_vars(gb, vars);
  std::vector<Monomial> leads = leading_monomials(gb);
  const Registry& reg = *gb.registry();
  HilbertSeries out;
  out.degree_bound = degree_bound;
  out.coeffs.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
  std::vector<Monomial::Factor> current;
  std::function<void(std::size_t, long)> rec = [&](std::size_t vi, long wdeg) {
    if (wdeg > degree_bound) return;
    Monomial m(reg, current);
    for (const auto& lm : leads)
      if (m.divisible_by(lm)) return;
    if (vi == vs.size()) {
      ++out.coeffs[static_cast<std::size_t>(wdeg)];
      return;
    }
    const long d = reg.degree(vs[vi]);
    rec(vi + 1, wdeg);
    int pushed = 0;
    for (int e = 1; wdeg + e * d <= degree_bound; ++e) {
      current.emplace_back(vs[vi], 1);
      ++pushed;
      rec(vi + 1, wdeg + e * d);
    }
    while (pushed-- > 0) current.pop_back();
  };
  rec(0, 0);
  return out;
}

}  // namespace qhess
