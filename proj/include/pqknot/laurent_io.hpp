#pragma once

// Text and JSON forms of LaurentPoly.
//
// Text grammar (whitespace ignored):
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := coeff ['*' factor]* | factor ['*' factor]*
//   factor   := ('q'|'p') ['^' exponent]
//   exponent := integer | '(' integer ')' | '(' integer '/' integer ')'
// The '*' may be omitted. A fractional exponent must land on the half-integer grid.
//
// JSON form:
//   {"variables":["q","p"],
//    "terms":[{"coeff":"<decimal>","exp2":{"q":<int>,"p":<int>}}, ...]}
// exp2 holds doubled exponents; terms are in canonical (descending) order.

#include <cstddef>
#include <string>
#include <string_view>

#include "json.hpp"

#include "pqknot/laurent.hpp"

namespace pqknot {

enum class OutputFormat { text, json };

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exponent that is well formed but not a multiple of 1/2.
class GridError : public Error {
 public:
  GridError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

LaurentPoly parse(std::string_view text);

std::string format(const LaurentPoly& f, OutputFormat mode = OutputFormat::text);

nlohmann::ordered_json to_json(const LaurentPoly& f);
/// Inverse of to_json. Accepts terms in any order; throws Error on a schema violation.
LaurentPoly from_json(const nlohmann::ordered_json& j);

}  // namespace pqknot
