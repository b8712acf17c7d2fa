#include "pqknot/laurent_io.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

namespace pqknot {

SyntaxError::SyntaxError(std::size_t position, const std::string& what)
    : Error("syntax error at position " + std::to_string(position) + ": " + what), position_(position) {}

GridError::GridError(std::size_t position, const std::string& what)
    : Error("exponent off the half-integer grid at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly parse_expr() {
    std::vector<Term> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    terms.push_back(parse_term(negate));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      ++pos_;
      terms.push_back(parse_term(c == '-'));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  Term parse_term(bool negate) {
    skip_ws();
    Term t{{}, mpz_class(1)};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = parse_unsigned();
    } else if (peek() == 'q' || peek() == 'p') {
      parse_factor(t.exponent);
    } else {
      fail(at_end() ? "unexpected end of input, expected a term" : "expected a coefficient or a variable");
    }
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'q' && peek() != 'p') fail("expected a variable after '*'");
        parse_factor(t.exponent);
      } else if (peek() == 'q' || peek() == 'p') {
        parse_factor(t.exponent);
      } else {
        break;
      }
    }
    if (negate) t.coeff = -t.coeff;
    return t;
  }

  void parse_factor(ExponentVector& e) {
    const char var = text_[pos_++];
    HalfExponent x = HalfExponent::integer(1);
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      x = parse_exponent();
    }
    if (var == 'q')
      e.q = e.q + x;
    else
      e.p = e.p + x;
  }

  HalfExponent parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() != '(') return HalfExponent::from_twice(mpz_class(2 * parse_signed()));
    ++pos_;
    const mpz_class num = parse_signed();
    skip_ws();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      den = parse_unsigned();
      if (sgn(den) == 0) fail("zero denominator in exponent");
    }
    skip_ws();
    if (peek() != ')') fail("expected ')' closing the exponent");
    ++pos_;
    const mpz_class scaled = 2 * num;
    if (!mpz_divisible_p(scaled.get_mpz_t(), den.get_mpz_t()))
      throw GridError(start, num.get_str() + "/" + den.get_str() + " is not a multiple of 1/2");
    mpz_class twice;
    mpz_divexact(twice.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return HalfExponent::from_twice(std::move(twice));
  }

  mpz_class parse_signed() {
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    mpz_class v = parse_unsigned();
    return neg ? mpz_class(-v) : v;
  }

  mpz_class parse_unsigned() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_factor(std::string& out, char var, const HalfExponent& e) {
  if (e.is_zero()) return;
  if (!out.empty()) out += '*';
  out += var;
  const mpz_class& twice = e.twice();
  if (cmp(twice, 2) == 0) return;
  out += '^';
  if (e.is_integral()) {
    const mpz_class v = twice / 2;
    out += sgn(v) < 0 ? "(" + v.get_str() + ")" : v.get_str();
  } else {
    out += "(" + twice.get_str() + "/2)";
  }
}

std::int64_t json_exponent(const HalfExponent& e) {
  if (!e.twice().fits_slong_p()) throw DomainError("exponent exceeds the JSON integer range");
  return e.twice().get_si();
}

bool is_decimal(const std::string& s) {
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == start) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

LaurentPoly parse(std::string_view text) { return Parser(text).parse_expr(); }

std::string format(const LaurentPoly& f, OutputFormat mode) {
  if (mode == OutputFormat::json) return to_json(f).dump();
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string factors;
    append_factor(factors, 'p', t.exponent.p);
    append_factor(factors, 'q', t.exponent.q);
    const mpz_class magnitude = abs(t.coeff);
    if (factors.empty())
      out += magnitude.get_str();
    else if (cmp(magnitude, 1) == 0)
      out += factors;
    else
      out += magnitude.get_str() + "*" + factors;
  }
  return out;
}

nlohmann::ordered_json to_json(const LaurentPoly& f) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"coeff", t.coeff.get_str()},
                     {"exp2", {{"q", json_exponent(t.exponent.q)}, {"p", json_exponent(t.exponent.p)}}}});
  }
  return {{"variables", {"q", "p"}}, {"terms", std::move(terms)}};
}

LaurentPoly from_json(const nlohmann::ordered_json& j) {
  auto bad = [](const std::string& why) { return Error("invalid polynomial JSON: " + why); };
  if (!j.is_object()) throw bad("expected an object");
  if (!j.contains("variables") || j["variables"] != nlohmann::ordered_json::array({"q", "p"}))
    throw bad("\"variables\" must be [\"q\",\"p\"]");
  if (!j.contains("terms") || !j["terms"].is_array()) throw bad("\"terms\" must be an array");
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() || !t.contains("exp2") ||
        !t["exp2"].is_object())
      throw bad("each term needs a string \"coeff\" and an object \"exp2\"");
    const auto& e = t["exp2"];
    if (!e.contains("q") || !e["q"].is_number_integer() || !e.contains("p") || !e["p"].is_number_integer())
      throw bad("\"exp2\" needs integer \"q\" and \"p\"");
    const std::string digits = t["coeff"].get<std::string>();
    mpz_class c;
    if (!is_decimal(digits) || c.set_str(digits, 10) != 0) throw bad("coefficient is not a decimal integer");
    terms.push_back({{HalfExponent::from_twice(static_cast<long>(e["q"].get<std::int64_t>())),
                      HalfExponent::from_twice(static_cast<long>(e["p"].get<std::int64_t>()))},
                     std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace pqknot
