#pragma once

#include <vector>

#include "qhess/polynomial.hpp"

namespace qhess {

enum class DetStrategy { cofactor, bareiss };

/// Square matrix of polynomials over one registry. Indices are 0-based.
class PolyMatrix {
 public:
  PolyMatrix(RegistryPtr reg, int order);

  static PolyMatrix identity(RegistryPtr reg, int order);

  int order() const { return order_; }
  const RegistryPtr& registry() const { return reg_; }
  const Polynomial& at(int r, int c) const;
  void set(int r, int c, Polynomial p);

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;

  /// Exact determinant. The cofactor strategy expands along rows with
  /// memoization over column subsets; bareiss is one-step fraction-free
  /// elimination with exact polynomial division.
  Polynomial determinant(DetStrategy strategy = DetStrategy::cofactor) const;

 private:
  RegistryPtr reg_;
  int order_;
  std::vector<Polynomial> entries_;  // row-major
};

}  // namespace qhess
