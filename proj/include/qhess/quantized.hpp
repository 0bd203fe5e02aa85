#pragma once

#include <vector>

#include "qhess/hessenberg.hpp"
#include "qhess/poly_matrix.hpp"
#include "qhess/polynomial.hpp"

namespace qhess {

/// The n x n matrix with x_k on the diagonal, q_{rs} above it and -1 on the
/// subdiagonal (zero below that).
PolyMatrix quantized_matrix(RegistryPtr reg, int n);

enum class EMethod { charpoly, recursion, strings };

/// E_i^{(n)}: the signed lambda^{n-i} coefficient of det(lam I - M_n).
/// Conventions: 1 for i = 0, 0 outside 0 <= i <= n. Routes:
///   charpoly  -- literal characteristic-polynomial extraction (needs lam)
///   recursion -- E_i^{(n)} = E_i^{(n-1)} + E_{i-1}^{(n-1)} x_n
///                + sum_k E_{i-1-k}^{(n-1-k)} q_{n-k,n}   (memoized)
///   strings   -- sum over pairwise-disjoint consecutive substrings of [n]
///                of total size i, each contributing x_r or q_{rs}
Polynomial quantized_elementary(RegistryPtr reg, int i, int n, EMethod method = EMethod::recursion);

/// E_i^{(n)} with every q in h's vanishing set replaced by zero.
Polynomial truncated_quantized_elementary(RegistryPtr reg, const HessenbergFunction& h, int i,
                                          int n);

enum class QFMethod { quantize, determinant, recursion };

/// F_{i,j}, the quantization of f_{i,j}. Routes: expansion in standard
/// elementary monomials with e -> E (quantize), the E-determinant
/// (determinant), and the quantized recursion (recursion, memoized).
Polynomial quantized_f(RegistryPtr reg, int i, int j, QFMethod method = QFMethod::recursion);

/// k E_k^{(i)} = sum_{l=1..k} (-1)^{l-1} F_{i,i+1-l} E_{k-l}^{(i-l)}.
bool check_E_F_exchange(RegistryPtr reg, int k, int i);

/// E_k^{(i)} recovered as 1/k! times the determinant of the F-matrix.
Polynomial quantized_elementary_from_F_determinant(RegistryPtr reg, int k, int i);

/// All q variables set to zero.
Polynomial classical_limit(const Polynomial& p);

/// Certificate that F_{n,j} lies in (E_1^{(n)},..,E_n^{(n)}).
std::vector<Polynomial> F_from_E_certificate(RegistryPtr reg, int n, int j);

/// Certificate that E_k^{(n)} lies in (F_{n,1},..,F_{n,n}).
std::vector<Polynomial> E_from_F_certificate(RegistryPtr reg, int n, int k);

}  // namespace qhess
