#include "qhess/registry.hpp"

namespace qhess {

namespace {
std::string x_name(int i) { return "x" + std::to_string(i); }
std::string q_name(int r, int s) { return "q" + std::to_string(r) + "_" + std::to_string(s); }
std::string z_name(int i, int j) { return "z" + std::to_string(i) + "_" + std::to_string(j); }
}  // namespace

std::shared_ptr<const Registry> Registry::make(int n, Families fam) {
  if (n < 1) throw std::invalid_argument("registry rank must be positive");
  auto reg = std::shared_ptr<Registry>(new Registry());
  reg->n_ = n;
  auto push = [&](Variable v) {
    VarId id = static_cast<VarId>(reg->vars_.size());
    reg->by_name_.emplace(v.name, id);
    reg->vars_.push_back(std::move(v));
    return id;
  };
  for (int i = 1; i <= n; ++i)
    reg->xv_.push_back(push({VarKind::x, i, 0, 2, x_name(i)}));
  if (fam.q)
    for (int r = 1; r < n; ++r)
      for (int s = r + 1; s <= n; ++s)
        reg->qv_[{r, s}] = push({VarKind::q, r, s, 2 * (s - r + 1), q_name(r, s)});
  if (fam.z)
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j)
        reg->zv_[{i, j}] = push({VarKind::z, i, j, 2 * (i - j), z_name(i, j)});
  if (fam.lambda)
    reg->lambda_ = push({VarKind::lambda, 0, 0, 2, "lam"});
  return reg;
}

std::shared_ptr<const Registry> Registry::full(int n) { return make(n, {true, true, true}); }
std::shared_ptr<const Registry> Registry::xq(int n) { return make(n, {true, false, false}); }
std::shared_ptr<const Registry> Registry::xs(int n) { return make(n, {false, false, false}); }

VarId Registry::x(int i) const {
  if (!has_x(i)) throw std::out_of_range("no variable " + x_name(i) + " in registry");
  return xv_[static_cast<std::size_t>(i - 1)];
}

VarId Registry::q(int r, int s) const {
  auto it = qv_.find({r, s});
  if (it == qv_.end()) throw std::out_of_range("no variable " + q_name(r, s) + " in registry");
  return it->second;
}

VarId Registry::z(int i, int j) const {
  auto it = zv_.find({i, j});
  if (it == zv_.end()) throw std::out_of_range("no variable " + z_name(i, j) + " in registry");
  return it->second;
}

VarId Registry::lambda_id() const {
  if (!lambda_) throw std::out_of_range("no variable lam in registry");
  return *lambda_;
}

std::optional<VarId> Registry::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<VarId> Registry::x_ids(int upto) const {
  if (upto < 0 || upto > n_) upto = n_;
  return {xv_.begin(), xv_.begin() + upto};
}

std::vector<VarId> Registry::q_ids() const {
  std::vector<VarId> out;
  for (const auto& [pair, id] : qv_) out.push_back(id);
  return out;
}

std::vector<VarId> Registry::z_ids() const {
  std::vector<VarId> out;
  for (const auto& [pair, id] : zv_) out.push_back(id);
  return out;
}

}  // namespace qhess
