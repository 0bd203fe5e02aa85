#include "qhess/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qhess {

Rational rational_from_string(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t p = from;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == from) fail();
    return p;
  };
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  pos = digits(pos);
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    std::size_t den_start = pos + 1;
    if (den_start < text.size() && text[den_start] == '-') fail();
    pos = digits(den_start);
    if (pos != text.size()) fail();
  }
  Rational r{std::string(text)};
  r.canonicalize();
  if (r.get_den() == 0) fail();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

}  // namespace qhess
