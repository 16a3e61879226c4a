#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "polycore/poly.hpp"

namespace sextic {

/// Syntax errors carry the 0-based character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(size_t position, const std::string& what)
      : Error(Kind::Input, what + " at position " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Expression over x and y with integer literals, + - * / ^ and parentheses.
/// `^` takes a nonnegative integer literal and is right-associative; `/`
/// needs a constant nonzero divisor. Implicit multiplication is rejected.
BivarPoly parse(std::string_view text);

/// Canonical text, descending total degree then descending x-degree; parses
/// back to the same polynomial.
std::string format(const BivarPoly& p);
std::string format(const BinaryForm& f);

/// {"terms": [[i, j, "num/den"], ...]} in canonical order.
nlohmann::json to_json(const BivarPoly& p);
BivarPoly poly_from_json(const nlohmann::json& j);

/// Coefficient list of a form as strings, index k for x^(d-k) y^k.
nlohmann::json to_json(const BinaryForm& f);

}  // namespace sextic
