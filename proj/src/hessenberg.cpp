#include "qhess/hessenberg.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhess {

std::string HessenbergViolation::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::below_diagonal:
      os << "h(" << index << ") < " << index;
      break;
    case Kind::not_monotone:
      os << "h(" << index << ") < h(" << index - 1 << ")";
      break;
    case Kind::last_not_n:
      os << "h(" << index << ") != n";
      break;
  }
  return os.str();
}

std::variant<HessenbergFunction, HessenbergViolation> HessenbergFunction::check(
    std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) return HessenbergViolation{HessenbergViolation::Kind::last_not_n, 0};
  for (int j = 1; j <= n; ++j)
    if (values[static_cast<std::size_t>(j - 1)] < j)
      return HessenbergViolation{HessenbergViolation::Kind::below_diagonal, j};
  for (int j = 2; j <= n; ++j)
    if (values[static_cast<std::size_t>(j - 1)] < values[static_cast<std::size_t>(j - 2)])
      return HessenbergViolation{HessenbergViolation::Kind::not_monotone, j};
  if (values.back() != n) return HessenbergViolation{HessenbergViolation::Kind::last_not_n, n};
  return HessenbergFunction(std::move(values));
}

HessenbergFunction HessenbergFunction::make(std::vector<int> values) {
  auto result = check(std::move(values));
  if (auto* violation = std::get_if<HessenbergViolation>(&result))
    throw std::invalid_argument("invalid Hessenberg function: " + violation->message());
  return std::get<HessenbergFunction>(std::move(result));
}

HessenbergFunction HessenbergFunction::full(int n) {
  return make(std::vector<int>(static_cast<std::size_t>(n), n));
}

HessenbergFunction HessenbergFunction::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return make(std::move(v));
}

HessenbergFunction HessenbergFunction::peterson(int n) {
  std::vector<int> v;
  for (int j = 1; j < n; ++j) v.push_back(j + 1);
  v.push_back(n);
  return make(std::move(v));
}

std::vector<HessenbergFunction> HessenbergFunction::all(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> cur(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int j, int low) {
    if (j > n) {
      if (cur.back() == n) out.push_back(HessenbergFunction(cur));
      return;
    }
    for (int v = std::max(j, low); v <= n; ++v) {
      cur[static_cast<std::size_t>(j - 1)] = v;
      rec(j + 1, v);
    }
  };
  rec(1, 1);
  return out;
}

HessenbergFunction HessenbergFunction::parse_csv(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid Hessenberg function entry: '" + item + "'");
    }
  }
  return make(std::move(values));
}

std::string HessenbergFunction::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  return os.str();
}

HessenbergFunction HessenbergFunction::dual() const {
  const int N = n();
  std::vector<int> d(static_cast<std::size_t>(N), 0);
  for (int i = 1; i <= N; ++i) {
    int count = 0;
    for (int j = 1; j <= N; ++j)
      if ((*this)(j) >= N + 1 - i) ++count;
    d[static_cast<std::size_t>(i - 1)] = count;
  }
  return make(std::move(d));
}

int HessenbergFunction::dimension() const {
  int sum = 0;
  for (int j = 1; j <= n(); ++j) sum += (*this)(j)-j;
  return sum;
}

std::vector<std::pair<int, int>> HessenbergFunction::q_vanishing_set() const {
  const int N = n();
  std::vector<std::pair<int, int>> out;
  for (int s = 2; s <= N; ++s)
    for (int r = 1; r <= N - (*this)(N + 1 - s) && r < s; ++r) out.emplace_back(r, s);
  return out;
}

std::string HessenbergFunction::diagram() const {
  const int N = n();
  std::string out;
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) out += (i <= (*this)(j)) ? '#' : '.';
    if (i < N) out += '\n';
  }
  return out;
}

int HessenbergFunction::shaded_count() const {
  int count = 0;
  for (char c : diagram())
    if (c == '#') ++count;
  return count;
}

}  // namespace qhess
