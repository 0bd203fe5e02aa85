#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qhess {

enum class VarKind : unsigned char { x, q, z, lambda };

using VarId = std::uint32_t;

struct Variable {
  VarKind kind;
  int a = 0;       // x_a, q_{a,b}, z_{a,b}
  int b = 0;       // second index for q and z
  int degree = 0;  // weighted degree (even)
  std::string name;
};

/// Graded variable universe for a fixed rank n.
///
/// Contains x_1..x_n (degree 2), optionally the quantum parameters q_{rs}
/// for 1 <= r < s <= n (degree 2(s-r+1)), the cell coordinates z_{ij} for
/// 1 <= j < i <= n (degree 2(i-j)) and the characteristic-polynomial
/// variable `lam` (degree 2). Ids follow the declared order: x block first,
/// then q, then z, then lam, each block ascending by index. This id order is
/// the variable order used by every monomial order in the library.
class Registry {
 public:
  struct Families {
    bool q = false;
    bool z = false;
    bool lambda = false;
  };

  static std::shared_ptr<const Registry> make(int n, Families fam);
  static std::shared_ptr<const Registry> full(int n);  // x, q, z, lam
  static std::shared_ptr<const Registry> xq(int n);    // x and q only
  static std::shared_ptr<const Registry> xs(int n);    // x only

  int rank() const { return n_; }
  std::size_t size() const { return vars_.size(); }
  const Variable& var(VarId id) const { return vars_.at(id); }
  int degree(VarId id) const { return vars_[id].degree; }

  bool has_x(int i) const { return i >= 1 && i <= n_; }
  bool has_q(int r, int s) const { return qv_.count({r, s}) != 0; }
  bool has_z(int i, int j) const { return zv_.count({i, j}) != 0; }
  bool has_lambda() const { return lambda_.has_value(); }

  VarId x(int i) const;
  VarId q(int r, int s) const;
  VarId z(int i, int j) const;
  VarId lambda_id() const;

  std::optional<VarId> find(std::string_view name) const;

  // x_1..x_upto (all of them when upto < 0).
  std::vector<VarId> x_ids(int upto = -1) const;
  std::vector<VarId> q_ids() const;
  std::vector<VarId> z_ids() const;

 private:
  Registry() = default;

  int n_ = 0;
  std::vector<Variable> vars_;
  std::unordered_map<std::string, VarId> by_name_;
  std::optional<VarId> lambda_;
  std::vector<VarId> xv_;
  std::map<std::pair<int, int>, VarId> qv_, zv_;
};

using RegistryPtr = std::shared_ptr<const Registry>;

struct RegistryMismatchError : std::logic_error {
  RegistryMismatchError() : std::logic_error("operands use different variable registries") {}
};

}  // namespace qhess
