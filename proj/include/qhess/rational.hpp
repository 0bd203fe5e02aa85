#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qhess {

// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

// Parses "a", "-a" or "a/b" with b > 0 after canonicalization.
// Throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view text);

std::string rational_to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace qhess
