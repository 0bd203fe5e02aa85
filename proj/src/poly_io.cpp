#include "qhess/poly_io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

namespace qhess {

namespace {

void append_monomial(std::ostringstream& os, const Registry& reg, const Monomial& m, bool lead_star) {
  bool first = !lead_star;
  for (const auto& [id, exp] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << reg.var(id).name;
    if (exp > 1) os << '^' << exp;
  }
}

}  // namespace

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const Registry& reg = *p.registry();
  std::ostringstream os;
  bool first = true;
  // canonical storage is ascending; print leading term first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.is_unit()) {
      os << rational_to_string(a);
    } else if (a == 1) {
      append_monomial(os, reg, m, false);
    } else {
      os << rational_to_string(a);
      append_monomial(os, reg, m, true);
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(RegistryPtr reg, std::string_view text) : reg_(std::move(reg)), text_(text) {}

  Polynomial run() {
    Polynomial out(reg_);
    skip_ws();
    if (done()) throw ParseError(pos_, "empty input");
    bool negative = accept_sign();
    out += parse_term(negative);
    for (;;) {
      skip_ws();
      if (done()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
      ++pos_;
      out += parse_term(c == '-');
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept_sign() {
    if (!done() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (!done() && text_[pos_] == '+') ++pos_;
    return false;
  }

  std::string parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected variable name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Monomial::Factor parse_factor() {
    std::size_t at = pos_;
    std::string name = parse_name();
    auto id = reg_->find(name);
    if (!id) throw ParseError(at, "unknown variable '" + name + "'");
    int exp = 1;
    skip_ws();
    if (!done() && text_[pos_] == '^') {
      ++pos_;
      exp = std::stoi(parse_integer());
      if (exp <= 0) throw ParseError(pos_, "exponent must be positive");
    }
    return {*id, exp};
  }

  Polynomial parse_term(bool negative) {
    skip_ws();
    if (done()) throw ParseError(pos_, "expected term");
    Rational coef(1);
    std::vector<Monomial::Factor> factors;
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::string num = parse_integer();
      skip_ws();
      if (!done() && text_[pos_] == '/') {
        ++pos_;
        std::string den = parse_integer();
        coef = rational_from_string(num + "/" + den);
      } else {
        coef = rational_from_string(num);
      }
      saw_coef = true;
    }
    for (;;) {
      skip_ws();
      if (saw_coef || !factors.empty()) {
        if (done() || text_[pos_] != '*') break;
        ++pos_;
        skip_ws();
      }
      if (done() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(pos_, "expected variable");
      factors.push_back(parse_factor());
    }
    if (!saw_coef && factors.empty()) throw ParseError(pos_, "expected term");
    if (negative) coef = -coef;
    return Polynomial::term(reg_, coef, Monomial(*reg_, std::move(factors)));
  }

  RegistryPtr reg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_text(RegistryPtr reg, std::string_view text) {
  // "0" (and only a constant) is handled by the general grammar
  return Parser(std::move(reg), text).run();
}

nlohmann::json poly_to_json(const Polynomial& p) {
  const Registry& reg = *p.registry();
  nlohmann::json vars = nlohmann::json::array();
  for (VarId id = 0; id < reg.size(); ++id)
    vars.push_back({{"name", reg.var(id).name}, {"degree", reg.var(id).degree}});
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [id, exp] : it->first.factors()) exps[reg.var(id).name] = exp;
    terms.push_back({{"coef", rational_to_string(it->second)}, {"exps", exps}});
  }
  return {{"vars", vars}, {"terms", terms}};
}

Polynomial poly_from_json(RegistryPtr reg, const nlohmann::json& j) {
  Polynomial out(reg);
  for (const auto& term : j.at("terms")) {
    Rational coef = rational_from_string(term.at("coef").get<std::string>());
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, exp] : term.at("exps").items()) {
      auto id = reg->find(name);
      if (!id) throw std::invalid_argument("unknown variable '" + name + "' in JSON polynomial");
      factors.emplace_back(*id, exp.get<int>());
    }
    out.add_term(Monomial(*reg, std::move(factors)), coef);
  }
  return out;
}

}  // namespace qhess
