#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qhess/polynomial.hpp"

namespace qhess {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
  std::size_t position;
};

/// Deterministic text form: terms in canonical order (leading term first),
/// e.g. "x1^2 - x1*x2 - 2*q1_2". The zero polynomial prints as "0".
std::string to_text(const Polynomial& p);

/// Grammar: signed sum of terms; a term is an optional rational coefficient
/// and '*'-separated variable powers ("3/2*x1^2*q1_2"). Variable names are
/// x<i>, q<r>_<s>, z<i>_<j> and lam, and must exist in `reg`.
Polynomial parse_text(RegistryPtr reg, std::string_view text);

nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(RegistryPtr reg, const nlohmann::json& j);

}  // namespace qhess
