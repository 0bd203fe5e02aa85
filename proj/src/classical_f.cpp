#include "qhess/classical_f.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qhess/poly_matrix.hpp"
#include "qhess/symmetric.hpp"

namespace qhess {

namespace {

void check_indices(int i, int j) {
  if (j < 1 || i < j) throw std::invalid_argument("classical_f: need i >= j >= 1");
}

Polynomial x_var(const RegistryPtr& reg, int i) {
  return Polynomial::variable(reg, reg->x(i));
}

Polynomial f_closed(const RegistryPtr& reg, int i, int j) {
  Polynomial out(reg);
  for (int k = 1; k <= j; ++k) {
    Polynomial prod = x_var(reg, k);
    for (int l = j + 1; l <= i; ++l) prod = prod * (x_var(reg, k) - x_var(reg, l));
    out += prod;
  }
  return out;
}

// memo for the recursion route; entries pin their registry alive, so raw
// pointer keys cannot be reused while present
std::mutex f_memo_mutex;
std::map<std::tuple<const Registry*, int, int>, Polynomial> f_memo;

Polynomial f_recursion(const RegistryPtr& reg, int i, int j) {
  if (j == 0) return Polynomial(reg);
  {
    std::lock_guard lock(f_memo_mutex);
    auto it = f_memo.find({reg.get(), i, j});
    if (it != f_memo.end()) return it->second;
  }
  Polynomial out(reg);
  if (i == j) {
    for (int k = 1; k <= j; ++k) out += x_var(reg, k);
  } else {
    out = f_recursion(reg, i - 1, j - 1) +
          (x_var(reg, j) - x_var(reg, i)) * f_recursion(reg, i - 1, j);
  }
  std::lock_guard lock(f_memo_mutex);
  return f_memo.emplace(std::make_tuple(reg.get(), i, j), std::move(out)).first->second;
}

Polynomial f_eh(const RegistryPtr& reg, int i, int j) {
  Polynomial out(reg);
  for (int k = 0; k <= i - j + 1; ++k) {
    Polynomial term = Rational(i - k) * elementary(reg, k, i) * complete(reg, i - j + 1 - k, j);
    out += (k % 2 == 0) ? term : -term;
  }
  return out;
}

// (i-j+1) x (i-j+1) matrix: rows r < s list e_{r-c+1}^{(j+r-1)} then a 1 on
// the superdiagonal; the last row carries (s+1-c) e_{s+1-c}^{(i)}.
PolyMatrix f_det_matrix(const RegistryPtr& reg, int i, int j) {
  const int s = i - j + 1;
  PolyMatrix m(reg, s);
  for (int r = 1; r < s; ++r) {
    for (int c = 1; c <= r; ++c) m.set(r - 1, c - 1, elementary(reg, r - c + 1, j + r - 1));
    m.set(r - 1, r, Polynomial::constant(reg, 1));
  }
  for (int c = 1; c <= s; ++c)
    m.set(s - 1, c - 1, Rational(s + 1 - c) * elementary(reg, s + 1 - c, i));
  return m;
}

}  // namespace

Polynomial classical_f(RegistryPtr reg, int i, int j, FMethod method) {
  check_indices(i, j);
  switch (method) {
    case FMethod::closed:
      return f_closed(reg, i, j);
    case FMethod::recursion:
      return f_recursion(reg, i, j);
    case FMethod::eh:
      return f_eh(reg, i, j);
    case FMethod::determinant:
      return f_det_matrix(reg, i, j).determinant();
  }
  throw std::logic_error("unreachable");
}

Polynomial elementary_from_f_determinant(RegistryPtr reg, int k, int i) {
  if (k < 1 || k > i) throw std::invalid_argument("need 1 <= k <= i");
  PolyMatrix m(reg, k);
  for (int r = 1; r < k; ++r) {
    for (int c = 1; c <= r; ++c) m.set(r - 1, c - 1, classical_f(reg, i - k + r, i - k + c));
    m.set(r - 1, r, Polynomial::constant(reg, r));
  }
  for (int c = 1; c <= k; ++c) m.set(k - 1, c - 1, classical_f(reg, i, i - k + c));
  Rational factorial(1);
  for (int t = 2; t <= k; ++t) factorial *= t;
  return m.determinant() * (1 / factorial);
}

bool check_e_f_exchange(RegistryPtr reg, int k, int i) {
  if (k < 1 || k > i) throw std::invalid_argument("need 1 <= k <= i");
  Polynomial rhs(reg);
  for (int l = 1; l <= k; ++l) {
    Polynomial term = classical_f(reg, i, i + 1 - l) * elementary(reg, k - l, i - l);
    rhs += (l % 2 == 1) ? term : -term;
  }
  return Rational(k) * elementary(reg, k, i) == rhs;
}

bool check_h_determinant(RegistryPtr reg, int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  const int s = n - m + 1;
  PolyMatrix h(reg, s);
  for (int r = 1; r <= s; ++r)
    for (int c = 1; c <= s; ++c) h.set(r - 1, c - 1, complete(reg, r - c + 1, m - 1 + c));
  return h.determinant() == elementary(reg, s, n);
}

bool check_matrix_factorization(RegistryPtr reg, int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  const int s = n - m + 1;
  PolyMatrix lhs(reg, s);
  for (int r = 1; r <= s; ++r) {
    for (int c = 1; c <= r; ++c) lhs.set(r - 1, c - 1, classical_f(reg, m - 1 + r, m - 1 + c));
    if (r < s) lhs.set(r - 1, r, Polynomial::constant(reg, r));
  }
  PolyMatrix esigned(reg, s);
  for (int r = 1; r <= s; ++r)
    for (int c = 1; c <= s; ++c) {
      Polynomial e = elementary(reg, r - c, m - 1 + r);
      esigned.set(r - 1, c - 1, (r + c) % 2 == 0 ? e : -e);
    }
  PolyMatrix diag(reg, s);
  for (int r = 1; r <= s; ++r) diag.set(r - 1, r - 1, Polynomial::constant(reg, r));
  PolyMatrix h(reg, s);
  for (int r = 1; r <= s; ++r)
    for (int c = 1; c <= s; ++c) h.set(r - 1, c - 1, complete(reg, r - c + 1, m - 1 + c));
  PolyMatrix rhs = esigned * diag * h;
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c)
      if (lhs.at(r, c) != rhs.at(r, c)) return false;
  return true;
}

std::vector<Polynomial> f_from_e_certificate(RegistryPtr reg, int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("need 1 <= j <= n");
  const int s = n - j + 1;
  PolyMatrix m = f_det_matrix(reg, n, j);
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(n), Polynomial(reg));
  // expand along the last row: column c carries (s+1-c) e_{s+1-c}^{(n)}
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

std::vector<Polynomial> e_from_f_certificate(RegistryPtr reg, int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(n), Polynomial(reg));
  for (int l = 1; l <= k; ++l) {
    Polynomial c = elementary(reg, k - l, n - l) * Rational(l % 2 == 1 ? 1 : -1, k);
    coeffs[static_cast<std::size_t>(n - l)] = std::move(c);  // multiplies f_{n,n+1-l}
  }
  return coeffs;
}

}  // namespace qhess
