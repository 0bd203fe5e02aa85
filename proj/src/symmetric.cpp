#include "qhess/symmetric.hpp"

#include <algorithm>
#include <numeric>

#include "qhess/quantized.hpp"

namespace qhess {

Polynomial elementary(RegistryPtr reg, int i, int n) {
  if (n < 0) throw std::invalid_argument("elementary: n must be nonnegative");
  if (i == 0) return Polynomial::constant(reg, 1);
  if (i < 0 || i > n) return Polynomial(reg);
  // e_i^(m) = e_i^(m-1) + x_m e_{i-1}^(m-1), rows built in place
  std::vector<Polynomial> row(static_cast<std::size_t>(i) + 1, Polynomial(reg));
  row[0] = Polynomial::constant(reg, 1);
  for (int m = 1; m <= n; ++m) {
    Polynomial xm = Polynomial::variable(reg, reg->x(m));
    for (int k = std::min(i, m); k >= 1; --k) row[k] += xm * row[k - 1];
  }
  return row[static_cast<std::size_t>(i)];
}

Polynomial complete(RegistryPtr reg, int i, int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be positive");
  if (i < 0) return Polynomial(reg);
  if (i == 0) return Polynomial::constant(reg, 1);
  // h_i^(m) = h_i^(m-1) + x_m h_{i-1}^(m)
  std::vector<Polynomial> row(static_cast<std::size_t>(i) + 1, Polynomial(reg));
  row[0] = Polynomial::constant(reg, 1);
  for (int m = 1; m <= n; ++m) {
    Polynomial xm = Polynomial::variable(reg, reg->x(m));
    for (int k = 1; k <= i; ++k) row[k] += xm * row[k - 1];
  }
  return row[static_cast<std::size_t>(i)];
}

Polynomial power_sum(RegistryPtr reg, int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("power_sum: k and n must be positive");
  Polynomial out(reg);
  for (int i = 1; i <= n; ++i)
    out += Polynomial::term(reg, 1, Monomial::variable(*reg, reg->x(i), k));
  return out;
}

Polynomial divided_difference(const Polynomial& p, int k) {
  if (k < 1) throw std::invalid_argument("divided_difference: k must be positive");
  const auto& reg = p.registry();
  for (VarId id : p.support())
    if (reg->var(id).kind != VarKind::x)
      throw std::invalid_argument("divided_difference: input must involve x variables only");
  VarId xk = reg->x(k);
  VarId xk1 = reg->x(k + 1);
  Polynomial num = p - p.swap_variables(xk, xk1);
  Polynomial den = Polynomial::variable(reg, xk) - Polynomial::variable(reg, xk1);
  auto q = try_divide_exact(num, den);
  if (!q) throw std::logic_error("divided_difference: inexact division");
  return *q;
}

bool StdElemIndex::valid() const {
  for (std::size_t k = 0; k < levels.size(); ++k)
    if (levels[k] < 0 || levels[k] > static_cast<int>(k) + 1) return false;
  return true;
}

long StdElemIndex::weighted_degree() const {
  return 2L * std::accumulate(levels.begin(), levels.end(), 0L);
}

Polynomial std_elem_monomial(RegistryPtr reg, const StdElemIndex& idx) {
  if (!idx.valid()) throw std::invalid_argument("invalid standard elementary index");
  Polynomial out = Polynomial::constant(reg, 1);
  for (std::size_t k = 0; k < idx.levels.size(); ++k)
    if (idx.levels[k] > 0) out = out * elementary(reg, idx.levels[k], static_cast<int>(k) + 1);
  return out;
}

std::vector<StdElemIndex> std_elem_indices(int m, int total) {
  std::vector<StdElemIndex> out;
  StdElemIndex cur;
  cur.levels.assign(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int k, int remaining) {
    if (k > m) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(k, remaining); ++v) {
      cur.levels[static_cast<std::size_t>(k - 1)] = v;
      rec(k + 1, remaining - v);
    }
    cur.levels[static_cast<std::size_t>(k - 1)] = 0;
  };
  rec(1, total);
  return out;
}

namespace {

// One homogeneous slice: solve for coefficients of p_part in the degree-d
// standard elementary monomials by exact Gaussian elimination.
void expand_slice(const Polynomial& part, int m, long wdeg,
                  std::map<StdElemIndex, Rational>& out) {
  const auto& reg = part.registry();
  if (wdeg % 2 != 0) throw ExpansionError("odd weighted degree");
  std::vector<StdElemIndex> idxs = std_elem_indices(m, static_cast<int>(wdeg / 2));
  std::vector<Polynomial> basis;
  basis.reserve(idxs.size());
  std::map<Monomial, std::size_t, CanonicalLess> rows;
  auto row_of = [&](const Monomial& mon) {
    auto [it, added] = rows.emplace(mon, rows.size());
    return it->second;
  };
  for (const auto& idx : idxs) {
    basis.push_back(std_elem_monomial(reg, idx));
    for (const auto& [mon, c] : basis.back().terms()) row_of(mon);
  }
  for (const auto& [mon, c] : part.terms()) row_of(mon);

  const std::size_t nrows = rows.size();
  const std::size_t ncols = idxs.size();
  std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [mon, coef] : basis[c].terms()) a[row_of(mon)][c] = coef;
  for (const auto& [mon, coef] : part.terms()) a[row_of(mon)][ncols] = coef;

  std::vector<std::size_t> pivot_row(ncols);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols; ++col) {
    std::size_t sel = nrows;
    for (std::size_t r = rank; r < nrows; ++r)
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == nrows) throw ExpansionError("singular expansion system");
    std::swap(a[rank], a[sel]);
    Rational inv = 1 / a[rank][col];
    for (std::size_t c2 = col; c2 <= ncols; ++c2) a[rank][c2] *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c2 = col; c2 <= ncols; ++c2) a[r][c2] -= f * a[rank][c2];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < nrows; ++r)
    if (a[r][ncols] != 0) throw ExpansionError("inconsistent expansion system");
  for (std::size_t col = 0; col < ncols; ++col) {
    const Rational& c = a[pivot_row[col]][ncols];
    if (c != 0) out[idxs[col]] += c;
  }
}

}  // namespace

std::map<StdElemIndex, Rational> expand_standard(const Polynomial& p, int m) {
  if (m < 1) throw std::invalid_argument("expand_standard: m must be positive");
  const auto& reg = p.registry();
  for (VarId id : p.support()) {
    const Variable& v = reg->var(id);
    if (v.kind != VarKind::x || v.a > m)
      throw std::invalid_argument("expand_standard: input must involve x_1..x_m only");
  }
  std::map<long, Polynomial> slices;
  for (const auto& [mon, c] : p.terms()) {
    auto [it, added] = slices.emplace(mon.weighted_degree(), Polynomial(reg));
    it->second.add_term(mon, c);
  }
  std::map<StdElemIndex, Rational> out;
  for (const auto& [wdeg, part] : slices) expand_slice(part, m, wdeg, out);
  return out;
}

Polynomial quantize(const Polynomial& p, int m) {
  const auto& reg = p.registry();
  Polynomial out(reg);
  for (const auto& [idx, c] : expand_standard(p, m)) {
    Polynomial prod = Polynomial::constant(reg, c);
    for (std::size_t k = 0; k < idx.levels.size(); ++k)
      if (idx.levels[k] > 0)
        prod = prod * quantized_elementary(reg, idx.levels[k], static_cast<int>(k) + 1);
    out += prod;
  }
  return out;
}

}  // namespace qhess
