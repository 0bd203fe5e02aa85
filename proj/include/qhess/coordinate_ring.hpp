#pragma once

#include <vector>

#include "qhess/hessenberg.hpp"
#include "qhess/poly_matrix.hpp"
#include "qhess/polynomial.hpp"

namespace qhess {

class GroebnerBasis;

/// The lower-unipotent coordinate matrix g: 1 on the diagonal, z_{ij} below.
PolyMatrix unipotent_coordinates(RegistryPtr reg, int n);

enum class OperatorChoice { regular_nilpotent, regular_semisimple };

/// (g^{-1} X g)_{ij} as a polynomial in the z variables, computed as the
/// minor obtained by replacing the i-th column of g with the j-th column of
/// X g (det g = 1). X is the single Jordan block for regular_nilpotent and
/// diag(1..n) for regular_semisimple; these are nu_{i,j} and xi_{i,j}.
Polynomial defining_minor(RegistryPtr reg, OperatorChoice choice, int i, int j, int n);

/// Same minor for an arbitrary diagonal operator diag(d_1..d_n).
Polynomial diagonal_operator_minor(RegistryPtr reg, const std::vector<Rational>& diag, int i,
                                   int j, int n);

/// Closed-form (i-j+1) x (i-j+1) determinant for xi_{n+1-j, n-i} in the z
/// variables, times the sign (-1)^{i-j}. Valid for 1 <= j <= i <= n-1 and
/// identical to defining_minor(regular_semisimple, n+1-j, n-i, n).
Polynomial xi_minor_determinant(RegistryPtr reg, int i, int j, int n);

/// The substitution z_{ij} -> E_{i-j}^{(n-j)} applied to a z-polynomial.
Polynomial phi_substitute(const Polynomial& p, int n);

/// phi(xi_{n+1-j, n-i}) == (-1)^{i-j} F_{i,j} as canonical polynomials.
bool check_phi_F_identity(RegistryPtr reg, int i, int j, int n);

/// normal_form(phi(nu_{n+1-r, n+1-s}) + q_{rs}) == 0 modulo the given
/// Groebner basis of (E_1^{(n)},..,E_n^{(n)}).
bool check_phi_q_identity(RegistryPtr reg, int r, int s, int n, const GroebnerBasis& gb);

enum class PresentationTarget {
  cohomology_regular_nilpotent,   // f_{h(j),j} for j in [n]
  coordring_regular_semisimple,   // F_{i,j} for h*(j) <= i <= n
  coordring_regular_nilpotent,    // truncated E_1..E_n
};

std::vector<Polynomial> presentation_generators(RegistryPtr reg, PresentationTarget target,
                                                const HessenbergFunction& h);

}  // namespace qhess
