#include "qhess/poly_matrix.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace qhess {

PolyMatrix::PolyMatrix(RegistryPtr reg, int order) : reg_(std::move(reg)), order_(order) {
  if (order < 1) throw std::invalid_argument("matrix order must be positive");
  entries_.assign(static_cast<std::size_t>(order) * order, Polynomial(reg_));
}

PolyMatrix PolyMatrix::identity(RegistryPtr reg, int order) {
  PolyMatrix m(std::move(reg), order);
  for (int i = 0; i < order; ++i) m.set(i, i, Polynomial::constant(m.reg_, 1));
  return m;
}

const Polynomial& PolyMatrix::at(int r, int c) const {
  if (r < 0 || r >= order_ || c < 0 || c >= order_) throw std::out_of_range("matrix index");
  return entries_[static_cast<std::size_t>(r) * order_ + c];
}

void PolyMatrix::set(int r, int c, Polynomial p) {
  if (r < 0 || r >= order_ || c < 0 || c >= order_) throw std::out_of_range("matrix index");
  if (p.registry().get() != reg_.get()) throw RegistryMismatchError();
  entries_[static_cast<std::size_t>(r) * order_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (order_ != other.order_) throw std::invalid_argument("matrix order mismatch");
  PolyMatrix out(reg_, order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) {
      Polynomial acc(reg_);
      for (int k = 0; k < order_; ++k) acc += at(i, k) * other.at(k, j);
      out.set(i, j, std::move(acc));
    }
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  if (order_ != other.order_) throw std::invalid_argument("matrix order mismatch");
  PolyMatrix out(reg_, order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) out.set(i, j, at(i, j) - other.at(i, j));
  return out;
}

namespace {

// Laplace expansion over rows, memoized on the set of remaining columns.
Polynomial det_cofactor(const PolyMatrix& m) {
  const int n = m.order();
  std::unordered_map<std::uint64_t, Polynomial> memo;
  auto popcount = [](std::uint64_t v) { return __builtin_popcountll(v); };
  // row index = n - popcount(mask); mask holds the still-unused columns
  std::function<Polynomial(std::uint64_t)> det = [&](std::uint64_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(m.registry(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = n - popcount(mask);
    Polynomial acc(m.registry());
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      std::uint64_t bit = std::uint64_t{1} << c;
      if (!(mask & bit)) continue;
      const Polynomial& entry = m.at(row, c);
      if (!entry.is_zero()) {
        Polynomial sub = det(mask & ~bit);
        acc += sign > 0 ? entry * sub : -(entry * sub);
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return det((n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

Polynomial det_bareiss(const PolyMatrix& input) {
  const int n = input.order();
  auto reg = input.registry();
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)].push_back(input.at(i, j));
  int sign = 1;
  Polynomial prev = Polynomial::constant(reg, 1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Polynomial(reg);  // singular
      std::swap(m[k], m[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = try_divide_exact(num, prev);
        if (!q) throw std::logic_error("bareiss elimination: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial(reg);
    }
    prev = m[k][k];
  }
  Polynomial det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign > 0 ? det : -det;
}

}  // namespace

Polynomial PolyMatrix::determinant(DetStrategy strategy) const {
  if (order_ > 63 && strategy == DetStrategy::cofactor)
    throw std::invalid_argument("cofactor strategy limited to order 63");
  return strategy == DetStrategy::cofactor ? det_cofactor(*this) : det_bareiss(*this);
}

}  // namespace qhess
