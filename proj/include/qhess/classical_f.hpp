#pragma once

#include <vector>

#include "qhess/polynomial.hpp"

namespace qhess {

enum class FMethod { closed, recursion, eh, determinant };

/// f_{i,j} for i >= j >= 1; homogeneous of weighted degree 2(i-j+1) in
/// x_1..x_i. All four construction routes return the same canonical value:
///   closed      -- sum_{k<=j} (prod_{l=j+1..i} (x_k - x_l)) x_k
///   recursion   -- f_{j,j} = x_1+..+x_j, f_{i,j} = f_{i-1,j-1} + (x_j-x_i) f_{i-1,j}
///   eh          -- sum_k (-1)^k (i-k) e_k^{(i)} h_{i-j+1-k}^{(j)}
///   determinant -- (i-j+1) x (i-j+1) determinant in e's
/// The recursion route is memoized and safe for concurrent callers.
Polynomial classical_f(RegistryPtr reg, int i, int j, FMethod method = FMethod::recursion);

/// e_k^{(i)} recovered as 1/k! times the determinant of the f-matrix.
Polynomial elementary_from_f_determinant(RegistryPtr reg, int k, int i);

/// k e_k^{(i)} = sum_{l=1..k} (-1)^{l-1} f_{i,i+1-l} e_{k-l}^{(i-l)}.
bool check_e_f_exchange(RegistryPtr reg, int k, int i);

/// det(h_{r-c+1}^{(m-1+c)})_{r,c in [n-m+1]} = e_{n-m+1}^{(n)}.
bool check_h_determinant(RegistryPtr reg, int m, int n);

/// The three-factor factorization of the f/integer matrix into the signed-e,
/// diagonal and h matrices, checked entrywise.
bool check_matrix_factorization(RegistryPtr reg, int m, int n);

/// Certificate that f_{n,j} lies in (e_1^{(n)},..,e_n^{(n)}): coefficients
/// c[k-1] with f_{n,j} = sum_k c[k-1] * e_k^{(n)} (cofactor expansion along
/// the determinant's last row).
std::vector<Polynomial> f_from_e_certificate(RegistryPtr reg, int n, int j);

/// Certificate that e_k^{(n)} lies in (f_{n,1},..,f_{n,n}): coefficients
/// d[j-1] with e_k^{(n)} = sum_j d[j-1] * f_{n,j}.
std::vector<Polynomial> e_from_f_certificate(RegistryPtr reg, int n, int k);

}  // namespace qhess
