#include "qhess/quantized.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qhess/classical_f.hpp"
#include "qhess/symmetric.hpp"

namespace qhess {

namespace {

Polynomial x_var(const RegistryPtr& reg, int i) {
  return Polynomial::variable(reg, reg->x(i));
}

Polynomial q_var(const RegistryPtr& reg, int r, int s) {
  return Polynomial::variable(reg, reg->q(r, s));
}

std::mutex e_memo_mutex;
std::map<std::tuple<const Registry*, int, int>, Polynomial> e_memo;

Polynomial e_recursion(const RegistryPtr& reg, int i, int n) {
  if (i == 0) return Polynomial::constant(reg, 1);
  if (i < 0 || i > n) return Polynomial(reg);
  {
    std::lock_guard lock(e_memo_mutex);
    auto it = e_memo.find({reg.get(), i, n});
    if (it != e_memo.end()) return it->second;
  }
  Polynomial out =
      e_recursion(reg, i, n - 1) + e_recursion(reg, i - 1, n - 1) * x_var(reg, n);
  for (int k = 1; k <= i - 1; ++k)
    out += e_recursion(reg, i - 1 - k, n - 1 - k) * q_var(reg, n - k, n);
  std::lock_guard lock(e_memo_mutex);
  return e_memo.emplace(std::make_tuple(reg.get(), i, n), std::move(out)).first->second;
}

Polynomial e_charpoly(const RegistryPtr& reg, int i, int n) {
  PolyMatrix mn = quantized_matrix(reg, n);
  Polynomial lam = Polynomial::variable(reg, reg->lambda_id());
  PolyMatrix lhs(reg, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      lhs.set(r, c, (r == c ? lam : Polynomial(reg)) - mn.at(r, c));
  Polynomial charpoly = lhs.determinant();
  Polynomial coef = charpoly.coefficient_of(reg->lambda_id(), n - i);
  return i % 2 == 0 ? coef : -coef;
}

// products rho_{J_1}..rho_{J_m} over pairwise-disjoint consecutive substrings
// of [n] with total size i; rho_{[r,r]} = x_r and rho_{[r,s]} = q_{rs}
Polynomial e_strings(const RegistryPtr& reg, int i, int n) {
  Polynomial out(reg);
  Polynomial one = Polynomial::constant(reg, 1);
  std::function<void(int, int, const Polynomial&)> rec = [&](int pos, int remaining,
                                                             const Polynomial& acc) {
    if (remaining == 0) {
      out += acc;
      return;
    }
    if (pos > n) return;
    rec(pos + 1, remaining, acc);  // skip position pos
    for (int len = 1; len <= remaining && pos + len - 1 <= n; ++len) {
      Polynomial rho = (len == 1) ? x_var(reg, pos) : q_var(reg, pos, pos + len - 1);
      rec(pos + len, remaining - len, acc * rho);
    }
  };
  rec(1, i, one);
  return out;
}

// (i-j+1) x (i-j+1) determinant matrix in E's, same shape as the classical one
PolyMatrix F_det_matrix(const RegistryPtr& reg, int i, int j) {
  const int s = i - j + 1;
  PolyMatrix m(reg, s);
  for (int r = 1; r < s; ++r) {
    for (int c = 1; c <= r; ++c)
      m.set(r - 1, c - 1, quantized_elementary(reg, r - c + 1, j + r - 1));
    m.set(r - 1, r, Polynomial::constant(reg, 1));
  }
  for (int c = 1; c <= s; ++c)
    m.set(s - 1, c - 1, Rational(s + 1 - c) * quantized_elementary(reg, s + 1 - c, i));
  return m;
}

std::mutex F_memo_mutex;
std::map<std::tuple<const Registry*, int, int>, Polynomial> F_memo;

Polynomial F_recursion(const RegistryPtr& reg, int i, int j) {
  if (j == 0) return Polynomial(reg);
  {
    std::lock_guard lock(F_memo_mutex);
    auto it = F_memo.find({reg.get(), i, j});
    if (it != F_memo.end()) return it->second;
  }
  Polynomial out(reg);
  if (i == j) {
    for (int k = 1; k <= j; ++k) out += x_var(reg, k);
  } else {
    out = F_recursion(reg, i - 1, j - 1) + x_var(reg, j) * F_recursion(reg, i - 1, j) -
          x_var(reg, i) * F_recursion(reg, i - 1, j);
    for (int k = 1; k <= i - j - 1; ++k) {
      Polynomial a = q_var(reg, j, j + k) * F_recursion(reg, i - 1, j + k);
      Polynomial b = q_var(reg, i - k, i) * F_recursion(reg, i - k - 1, j);
      // the first correction sum enters with +, the second with -
      out += (k % 2 == 1) ? (b - a) : (a - b);
    }
    Polynomial tail = Rational(i - j + 1) * q_var(reg, j, i);
    out += ((i - j) % 2 == 0) ? tail : -tail;
  }
  std::lock_guard lock(F_memo_mutex);
  return F_memo.emplace(std::make_tuple(reg.get(), i, j), std::move(out)).first->second;
}

}  // namespace

PolyMatrix quantized_matrix(RegistryPtr reg, int n) {
  if (n < 1) throw std::invalid_argument("quantized_matrix: n must be positive");
  PolyMatrix m(reg, n);
  for (int r = 1; r <= n; ++r) {
    m.set(r - 1, r - 1, x_var(reg, r));
    for (int s = r + 1; s <= n; ++s) m.set(r - 1, s - 1, q_var(reg, r, s));
    if (r < n) m.set(r, r - 1, Polynomial::constant(reg, -1));
  }
  return m;
}

Polynomial quantized_elementary(RegistryPtr reg, int i, int n, EMethod method) {
  if (n < 0) throw std::invalid_argument("quantized_elementary: n must be nonnegative");
  if (i == 0) return Polynomial::constant(reg, 1);
  if (i < 0 || i > n) return Polynomial(reg);
  switch (method) {
    case EMethod::charpoly:
      return e_charpoly(reg, i, n);
    case EMethod::recursion:
      return e_recursion(reg, i, n);
    case EMethod::strings:
      return e_strings(reg, i, n);
  }
  throw std::logic_error("unreachable");
}

Polynomial truncated_quantized_elementary(RegistryPtr reg, const HessenbergFunction& h, int i,
                                          int n) {
  if (h.n() != n) throw std::invalid_argument("Hessenberg function rank mismatch");
  Polynomial e = quantized_elementary(reg, i, n);
  std::map<VarId, Rational> zeros;
  for (const auto& [r, s] : h.q_vanishing_set()) zeros.emplace(reg->q(r, s), Rational(0));
  return e.substitute_values(zeros);
}

Polynomial quantized_f(RegistryPtr reg, int i, int j, QFMethod method) {
  if (j < 1 || i < j) throw std::invalid_argument("quantized_f: need i >= j >= 1");
  switch (method) {
    case QFMethod::quantize:
      return quantize(classical_f(reg, i, j, FMethod::closed), i);
    case QFMethod::determinant:
      return F_det_matrix(reg, i, j).determinant();
    case QFMethod::recursion:
      return F_recursion(reg, i, j);
  }
  throw std::logic_error("unreachable");
}

bool check_E_F_exchange(RegistryPtr reg, int k, int i) {
  if (k < 1 || k > i) throw std::invalid_argument("need 1 <= k <= i");
  Polynomial rhs(reg);
  for (int l = 1; l <= k; ++l) {
    Polynomial term = quantized_f(reg, i, i + 1 - l) * quantized_elementary(reg, k - l, i - l);
    rhs += (l % 2 == 1) ? term : -term;
  }
  return Rational(k) * quantized_elementary(reg, k, i) == rhs;
}

Polynomial quantized_elementary_from_F_determinant(RegistryPtr reg, int k, int i) {
  if (k < 1 || k > i) throw std::invalid_argument("need 1 <= k <= i");
  PolyMatrix m(reg, k);
  for (int r = 1; r < k; ++r) {
    for (int c = 1; c <= r; ++c) m.set(r - 1, c - 1, quantized_f(reg, i - k + r, i - k + c));
    m.set(r - 1, r, Polynomial::constant(reg, r));
  }
  for (int c = 1; c <= k; ++c) m.set(k - 1, c - 1, quantized_f(reg, i, i - k + c));
  Rational factorial(1);
  for (int t = 2; t <= k; ++t) factorial *= t;
  return m.determinant() * (1 / factorial);
}

Polynomial classical_limit(const Polynomial& p) {
  const auto& reg = p.registry();
  std::map<VarId, Rational> zeros;
  for (VarId id : p.support())
    if (reg->var(id).kind == VarKind::q) zeros.emplace(id, Rational(0));
  return p.substitute_values(zeros);
}

std::vector<Polynomial> F_from_E_certificate(RegistryPtr reg, int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("need 1 <= j <= n");
  const int s = n - j + 1;
  PolyMatrix m = F_det_matrix(reg, n, j);
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(n), Polynomial(reg));
  for (int c = 1; c <= s; ++c) {
    const int k = s + 1 - c;
    PolyMatrix minor(reg, s == 1 ? 1 : s - 1);
    if (s == 1) {
      minor.set(0, 0, Polynomial::constant(reg, 1));
    } else {
      for (int r = 1; r < s; ++r) {
        int cc = 0;
        for (int c2 = 1; c2 <= s; ++c2) {
          if (c2 == c) continue;
          minor.set(r - 1, cc++, m.at(r - 1, c2 - 1));
        }
      }
    }
    Polynomial cof = minor.determinant() * Rational(k);
    coeffs[static_cast<std::size_t>(k - 1)] = ((s + c) % 2 == 0) ? cof : -cof;
  }
  return coeffs;
}

std::vector<Polynomial> E_from_F_certificate(RegistryPtr reg, int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(n), Polynomial(reg));
  for (int l = 1; l <= k; ++l) {
    Polynomial c =
        quantized_elementary(reg, k - l, n - l) * Rational(l % 2 == 1 ? 1 : -1, k);
    coeffs[static_cast<std::size_t>(n - l)] = std::move(c);
  }
  return coeffs;
}

}  // namespace qhess
