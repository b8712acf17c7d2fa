#pragma once

// Sparse Laurent polynomials in q and p on the half-integer exponent grid,
// with arbitrary-precision integer coefficients.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pqknot {

/// Base of every error the engine reports for bad input or impossible requests.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class NegativePowerOfZ : public Error {
 public:
  using Error::Error;
};

/// Raised for a precondition on a plain integer argument (negative n, count < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponent that is an integer multiple of 1/2, stored as twice its value.
class HalfExponent {
 public:
  HalfExponent() = default;

  static HalfExponent from_twice(mpz_class twice) { return HalfExponent(std::move(twice)); }
  static HalfExponent from_twice(long twice) { return HalfExponent(mpz_class(twice)); }
  static HalfExponent integer(long value) { return HalfExponent(mpz_class(value) * 2); }

  const mpz_class& twice() const noexcept { return twice_; }
  bool is_zero() const noexcept { return sgn(twice_) == 0; }
  bool is_integral() const noexcept { return mpz_even_p(twice_.get_mpz_t()) != 0; }

  friend HalfExponent operator+(const HalfExponent& a, const HalfExponent& b) {
    return HalfExponent(mpz_class(a.twice_ + b.twice_));
  }
  friend HalfExponent operator-(const HalfExponent& a, const HalfExponent& b) {
    return HalfExponent(mpz_class(a.twice_ - b.twice_));
  }
  friend HalfExponent operator-(const HalfExponent& a) { return HalfExponent(mpz_class(-a.twice_)); }

  friend bool operator==(const HalfExponent& a, const HalfExponent& b) noexcept {
    return cmp(a.twice_, b.twice_) == 0;
  }
  friend std::strong_ordering operator<=>(const HalfExponent& a, const HalfExponent& b) noexcept {
    return cmp(a.twice_, b.twice_) <=> 0;
  }

 private:
  explicit HalfExponent(mpz_class twice) : twice_(std::move(twice)) {}
  mpz_class twice_;
};

/// Exponents of q and p. Ordered by the q exponent first, then p.
struct ExponentVector {
  HalfExponent q;
  HalfExponent p;

  bool is_zero() const noexcept { return q.is_zero() && p.is_zero(); }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    return {a.q + b.q, a.p + b.p};
  }
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    return {a.q - b.q, a.p - b.p};
  }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept {
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.p <=> b.p;
  }
};

struct Term {
  ExponentVector exponent;
  mpz_class coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponent == b.exponent && cmp(a.coeff, b.coeff) == 0;
  }
};

/// Immutable-by-convention value type. Terms are kept in canonical form:
/// strictly descending exponent order, no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const mpz_class& c);
  static LaurentPoly monomial(const mpz_class& c, ExponentVector e);
  /// c * q^(q_twice/2) * p^(p_twice/2)
  static LaurentPoly monomial(long c, long q_twice, long p_twice = 0);
  /// Sums the given terms; duplicates are merged and zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  static LaurentPoly one() { return constant(1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Greatest term in the (q, p) order. Requires a nonzero polynomial.
  const Term& leading_term() const;
  const Term& trailing_term() const;

  /// Image under q -> q^{-1}.
  LaurentPoly invert_q() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Repeated product; pow(f, 0) == 1 for every f, including zero.
LaurentPoly pow(const LaurentPoly& a, unsigned long k);

/// Quotient r with r * den == num exactly. Throws DivisionByZero for den == 0 and
/// NonExactDivision when a remainder or a non-integral coefficient appears.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

class NotAPerfectSquare : public Error {
 public:
  NotAPerfectSquare(LaurentPoly radicand, const std::string& why);
  const LaurentPoly& radicand() const noexcept { return radicand_; }

 private:
  LaurentPoly radicand_;
};

/// Principal square root: g with g * g == f and positive leading coefficient.
/// The zero polynomial has no leading coefficient and is rejected.
LaurentPoly sqrt_perfect_square(const LaurentPoly& f);

/// One term of a polynomial in the auxiliary variable z.
struct ZTerm {
  std::int64_t power;
  LaurentPoly coeff;
};

/// Replaces z by q^(1/2) - q^(-1/2) and sums. Negative powers of z are rejected.
LaurentPoly substitute_z(std::span<const ZTerm> terms);
/// Dense form: coeffs[k] multiplies z^k.
LaurentPoly substitute_z(std::span<const LaurentPoly> coeffs);

/// Mantissa precision, in bits, of eval_numeric results.
inline constexpr unsigned long kEvalPrecisionBits = 512;

/// Floating evaluation at positive rational points, with kEvalPrecisionBits of
/// mantissa. Only a consistency aid; symbolic equality is the real comparison.
mpf_class eval_numeric(const LaurentPoly& f, const mpq_class& q_val,
                       const mpq_class& p_val = mpq_class(1));

// Shorthands used all over the engine and tests.
inline LaurentPoly q_pow(long q_twice) { return LaurentPoly::monomial(1, q_twice, 0); }
inline LaurentPoly p_pow(long p_twice) { return LaurentPoly::monomial(1, 0, p_twice); }

}  // namespace pqknot
