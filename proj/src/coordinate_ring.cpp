#include "qhess/coordinate_ring.hpp"

#include <stdexcept>

#include "qhess/classical_f.hpp"
#include "qhess/groebner.hpp"
#include "qhess/quantized.hpp"

namespace qhess {

namespace {

Polynomial z_var(const RegistryPtr& reg, int i, int j) {
  return Polynomial::variable(reg, reg->z(i, j));
}

// entry (r,c) of g, 1-based
Polynomial g_entry(const RegistryPtr& reg, int r, int c) {
  if (r == c) return Polynomial::constant(reg, 1);
  if (r > c) return z_var(reg, r, c);
  return Polynomial(reg);
}

// column j of X g for either operator choice (or a general diagonal)
std::vector<Polynomial> xg_column(const RegistryPtr& reg, OperatorChoice choice,
                                  const std::vector<Rational>* diag, int j, int n) {
  std::vector<Polynomial> col;
  col.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    if (choice == OperatorChoice::regular_nilpotent) {
      // (n g)_{rj} = g_{r+1, j}
      col.push_back(r < n ? g_entry(reg, r + 1, j) : Polynomial(reg));
    } else {
      Rational d = diag ? (*diag)[static_cast<std::size_t>(r - 1)] : Rational(r);
      col.push_back(g_entry(reg, r, j) * d);
    }
  }
  return col;
}

Polynomial minor_with_column(const RegistryPtr& reg, const std::vector<Polynomial>& col, int i,
                             int n) {
  PolyMatrix m(reg, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      m.set(r - 1, c - 1, c == i ? col[static_cast<std::size_t>(r - 1)] : g_entry(reg, r, c));
  return m.determinant();
}

}  // namespace

PolyMatrix unipotent_coordinates(RegistryPtr reg, int n) {
  if (n < 1) throw std::invalid_argument("unipotent_coordinates: n must be positive");
  PolyMatrix g(reg, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) g.set(r - 1, c - 1, g_entry(reg, r, c));
  return g;
}

Polynomial defining_minor(RegistryPtr reg, OperatorChoice choice, int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("minor index out of range");
  return minor_with_column(reg, xg_column(reg, choice, nullptr, j, n), i, n);
}

Polynomial diagonal_operator_minor(RegistryPtr reg, const std::vector<Rational>& diag, int i,
                                   int j, int n) {
  if (static_cast<int>(diag.size()) != n)
    throw std::invalid_argument("diagonal length must equal n");
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("minor index out of range");
  return minor_with_column(reg, xg_column(reg, OperatorChoice::regular_semisimple, &diag, j, n),
                           i, n);
}

Polynomial xi_minor_determinant(RegistryPtr reg, int i, int j, int n) {
  if (j < 1 || j > i || i > n - 1) throw std::invalid_argument("need 1 <= j <= i <= n-1");
  const int s = i - j + 1;
  PolyMatrix m(reg, s);
  for (int r = 1; r <= s; ++r) {
    m.set(r - 1, 0, Rational(r) * z_var(reg, n - i + r, n - i));
    for (int c = 2; c <= s; ++c) {
      const int a = n - i + r;
      const int b = n - i + c - 1;
      if (a > b)
        m.set(r - 1, c - 1, z_var(reg, a, b));
      else if (a == b)
        m.set(r - 1, c - 1, Polynomial::constant(reg, 1));
    }
  }
  Polynomial det = m.determinant();
  return (i - j) % 2 == 0 ? det : -det;
}

Polynomial phi_substitute(const Polynomial& p, int n) {
  const auto& reg = p.registry();
  std::map<VarId, Polynomial> assignment;
  for (VarId id : p.support()) {
    const Variable& v = reg->var(id);
    if (v.kind != VarKind::z) continue;
    if (v.a > n) throw std::invalid_argument("z index out of range for n");
    assignment.emplace(id, quantized_elementary(reg, v.a - v.b, n - v.b));
  }
  return p.substitute(assignment);
}

bool check_phi_F_identity(RegistryPtr reg, int i, int j, int n) {
  Polynomial xi = defining_minor(reg, OperatorChoice::regular_semisimple, n + 1 - j, n - i, n);
  Polynomial lhs = phi_substitute(xi, n);
  Polynomial rhs = quantized_f(reg, i, j);
  if ((i - j) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

bool check_phi_q_identity(RegistryPtr reg, int r, int s, int n, const GroebnerBasis& gb) {
  if (r < 1 || s <= r || s > n) throw std::invalid_argument("need 1 <= r < s <= n");
  Polynomial nu = defining_minor(reg, OperatorChoice::regular_nilpotent, n + 1 - r, n + 1 - s, n);
  Polynomial probe = phi_substitute(nu, n) + Polynomial::variable(reg, reg->q(r, s));
  return normal_form(probe, gb).is_zero();
}

std::vector<Polynomial> presentation_generators(RegistryPtr reg, PresentationTarget target,
                                                const HessenbergFunction& h) {
  const int n = h.n();
  std::vector<Polynomial> out;
  switch (target) {
    case PresentationTarget::cohomology_regular_nilpotent:
      for (int j = 1; j <= n; ++j) out.push_back(classical_f(reg, h(j), j));
      break;
    case PresentationTarget::coordring_regular_semisimple: {
      // (F_{i,j} | i >= h*(j)) truncated to i <= n
      HessenbergFunction dual = h.dual();
      for (int j = 1; j <= n; ++j)
        for (int i = dual(j); i <= n; ++i) out.push_back(quantized_f(reg, i, j));
      break;
    }
    case PresentationTarget::coordring_regular_nilpotent:
      for (int i = 1; i <= n; ++i)
        out.push_back(truncated_quantized_elementary(reg, h, i, n));
      break;
  }
  return out;
}

}  // namespace qhess
