#pragma once

#include <string>
#include <variant>
#include <vector>

namespace qhess {

struct HessenbergViolation {
  enum class Kind { below_diagonal, not_monotone, last_not_n };
  Kind kind;
  int index;  // 1-based position where the condition fails
  std::string message() const;
};

/// Weakly increasing h:[n] -> [n] with h(j) >= j (hence h(n) = n).
class HessenbergFunction {
 public:
  static std::variant<HessenbergFunction, HessenbergViolation> check(std::vector<int> values);
  /// Throws std::invalid_argument carrying the violation message.
  static HessenbergFunction make(std::vector<int> values);

  static HessenbergFunction full(int n);      // (n,...,n)
  static HessenbergFunction identity(int n);  // (1,2,...,n)
  static HessenbergFunction peterson(int n);  // (2,3,...,n,n)

  /// Every Hessenberg function of rank n (Catalan-many).
  static std::vector<HessenbergFunction> all(int n);

  static HessenbergFunction parse_csv(const std::string& text);
  std::string to_csv() const;

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int j) const { return values_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& values() const { return values_; }

  HessenbergFunction dual() const;
  int dimension() const;  // sum of h(j) - j

  /// q_{rs} set to zero in the truncation: 2 <= s <= n, 1 <= r <= n - h(n+1-s).
  std::vector<std::pair<int, int>> q_vanishing_set() const;

  /// n x n grid, '#' where i <= h(j), '.' otherwise, rows joined by '\n'.
  std::string diagram() const;
  int shaded_count() const;

  bool operator==(const HessenbergFunction& other) const = default;

 private:
  explicit HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

}  // namespace qhess
