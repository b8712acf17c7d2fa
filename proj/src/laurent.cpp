#include "pqknot/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <utility>

#include "pqknot/laurent_io.hpp"

namespace pqknot {

namespace {

// Sorts descending and merges equal exponents; drops zero coefficients.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    mpz_class c = terms[i].coeff;
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) c += terms[j++].coeff;
    if (sgn(c) != 0) {
      if (out != i) terms[out].exponent = std::move(terms[i].exponent);
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists, with b scaled by sign.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent > b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent > a[i].exponent) {
      out.push_back({b[j].exponent, sign > 0 ? mpz_class(b[j].coeff) : mpz_class(-b[j].coeff)});
      ++j;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a[i].coeff + b[j].coeff) : mpz_class(a[i].coeff - b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Per-variable exponent box, in doubled units.
struct Box {
  mpz_class q_min, q_max, p_min, p_max;

  bool contains(const ExponentVector& e) const {
    const auto& q = e.q.twice();
    const auto& p = e.p.twice();
    return q >= q_min && q <= q_max && p >= p_min && p <= p_max;
  }
};

Box exponent_box(const LaurentPoly& f) {
  const auto ts = f.terms();
  // Descending q order gives the q range directly; p needs a scan.
  Box b{ts.back().exponent.q.twice(), ts.front().exponent.q.twice(), ts.front().exponent.p.twice(),
        ts.front().exponent.p.twice()};
  for (const auto& t : ts) {
    if (t.exponent.p.twice() < b.p_min) b.p_min = t.exponent.p.twice();
    if (t.exponent.p.twice() > b.p_max) b.p_max = t.exponent.p.twice();
  }
  return b;
}

mpz_class cdiv2(const mpz_class& v) {
  mpz_class r;
  mpz_cdiv_q_ui(r.get_mpz_t(), v.get_mpz_t(), 2);
  return r;
}

mpz_class fdiv2(const mpz_class& v) {
  mpz_class r;
  mpz_fdiv_q_ui(r.get_mpz_t(), v.get_mpz_t(), 2);
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const mpz_class& c) { return monomial(c, ExponentVector{}); }

LaurentPoly LaurentPoly::monomial(const mpz_class& c, ExponentVector e) {
  LaurentPoly r;
  if (sgn(c) != 0) r.terms_.push_back({std::move(e), c});
  return r;
}

LaurentPoly LaurentPoly::monomial(long c, long q_twice, long p_twice) {
  return monomial(mpz_class(c), {HalfExponent::from_twice(q_twice), HalfExponent::from_twice(p_twice)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  LaurentPoly r;
  r.terms_ = std::move(terms);
  return r;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exponent.is_zero() && cmp(terms_[0].coeff, 1) == 0;
}

const Term& LaurentPoly::leading_term() const {
  assert(!terms_.empty());
  return terms_.front();
}

const Term& LaurentPoly::trailing_term() const {
  assert(!terms_.empty());
  return terms_.back();
}

LaurentPoly LaurentPoly::invert_q() const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({{-t.exponent.q, t.exponent.p}, t.coeff});
  return from_terms(std::move(ts));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  terms_ = merge(terms_, b.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  terms_ = merge(terms_, b.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) { return *this = *this * b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    // Scaling by a monomial keeps the order, so no re-sort is needed.
    const Term& m = b.terms_.front();
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.exponent + m.exponent, t.coeff * m.coeff});
    return r;
  }
  if (a.is_monomial()) return b * a;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly pow(const LaurentPoly& a, unsigned long k) {
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly base = a;
  while (k != 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return {};

  // Degrees are additive in each variable, so every quotient exponent lies in
  // [min(num) - min(den), max(num) - max(den)] per variable.
  const Box nb = exponent_box(num);
  const Box db = exponent_box(den);
  const Box quotient_box{nb.q_min - db.q_min, nb.q_max - db.q_max, nb.p_min - db.p_min,
                         nb.p_max - db.p_max};

  const Term& lead = den.leading_term();
  std::vector<Term> quotient;
  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const Term& top = rem.leading_term();
    ExponentVector e = top.exponent - lead.exponent;
    if (!quotient_box.contains(e))
      throw NonExactDivision("nonzero remainder dividing " + format(num) + " by " + format(den));
    if (!mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
      throw NonExactDivision("non-integral coefficient dividing " + format(num) + " by " + format(den));
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    LaurentPoly step = LaurentPoly::monomial(c, e);
    quotient.push_back({std::move(e), std::move(c)});
    rem -= den * step;
  }
  // Quotient terms were produced in strictly descending order.
  return LaurentPoly::from_terms(std::move(quotient));
}

NotAPerfectSquare::NotAPerfectSquare(LaurentPoly radicand, const std::string& why)
    : Error("not a perfect square: " + format(radicand) + " (" + why + ")"),
      radicand_(std::move(radicand)) {}

LaurentPoly sqrt_perfect_square(const LaurentPoly& f) {
  if (f.is_zero()) throw NotAPerfectSquare(f, "zero has no principal root");
  const Term& top = f.leading_term();
  if (sgn(top.coeff) <= 0) throw NotAPerfectSquare(f, "leading coefficient is not positive");
  if (!mpz_perfect_square_p(top.coeff.get_mpz_t()))
    throw NotAPerfectSquare(f, "leading coefficient is not a square");
  if (!top.exponent.q.is_integral() || !top.exponent.p.is_integral())
    throw NotAPerfectSquare(f, "leading exponent is off the half-integer grid after halving");

  // Newton polytope of the root is half that of f.
  const Box fb = exponent_box(f);
  const Box root_box{cdiv2(fb.q_min), fdiv2(fb.q_max), cdiv2(fb.p_min), fdiv2(fb.p_max)};

  const mpz_class lead_coeff = sqrt(top.coeff);
  const ExponentVector lead_exp{HalfExponent::from_twice(mpz_class(top.exponent.q.twice() / 2)),
                                HalfExponent::from_twice(mpz_class(top.exponent.p.twice() / 2))};
  const mpz_class pivot = 2 * lead_coeff;

  LaurentPoly root = LaurentPoly::monomial(lead_coeff, lead_exp);
  LaurentPoly rem = f - root * root;
  while (!rem.is_zero()) {
    // f - g^2 = (h - g)(h + g); its leading term is t * 2 lt(g).
    const Term& r = rem.leading_term();
    ExponentVector e = r.exponent - lead_exp;
    if (!root_box.contains(e)) throw NotAPerfectSquare(f, "nonzero remainder");
    if (!mpz_divisible_p(r.coeff.get_mpz_t(), pivot.get_mpz_t()))
      throw NotAPerfectSquare(f, "non-integral root coefficient");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r.coeff.get_mpz_t(), pivot.get_mpz_t());
    const LaurentPoly t = LaurentPoly::monomial(c, std::move(e));
    rem -= t * (root + root + t);
    root += t;
  }
  return root;
}

LaurentPoly substitute_z(std::span<const ZTerm> terms) {
  for (const auto& t : terms)
    if (t.power < 0)
      throw NegativePowerOfZ("negative power z^" + std::to_string(t.power) + " cannot be substituted");
  const LaurentPoly z = q_pow(1) - q_pow(-1);
  LaurentPoly out;
  for (const auto& t : terms) out += t.coeff * pow(z, static_cast<unsigned long>(t.power));
  return out;
}

LaurentPoly substitute_z(std::span<const LaurentPoly> coeffs) {
  std::vector<ZTerm> terms;
  terms.reserve(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    terms.push_back({static_cast<std::int64_t>(k), coeffs[k]});
  return substitute_z(std::span<const ZTerm>(terms));
}

namespace {

mpf_class half_power(const mpf_class& root, const mpz_class& twice) {
  mpf_class r(1, kEvalPrecisionBits);
  if (!twice.fits_slong_p()) throw DomainError("exponent too large for numeric evaluation");
  const long e = twice.get_si();
  mpf_pow_ui(r.get_mpf_t(), root.get_mpf_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) r = mpf_class(1, kEvalPrecisionBits) / r;
  return r;
}

}  // namespace

mpf_class eval_numeric(const LaurentPoly& f, const mpq_class& q_val, const mpq_class& p_val) {
  if (sgn(q_val) <= 0 || sgn(p_val) <= 0)
    throw DomainError("numeric evaluation needs positive q and p");
  mpf_class q_root(q_val, kEvalPrecisionBits);
  mpf_class p_root(p_val, kEvalPrecisionBits);
  q_root = sqrt(q_root);
  p_root = sqrt(p_root);
  mpf_class sum(0, kEvalPrecisionBits);
  for (const auto& t : f.terms()) {
    mpf_class term(t.coeff, kEvalPrecisionBits);
    term *= half_power(q_root, t.exponent.q.twice());
    term *= half_power(p_root, t.exponent.p.twice());
    sum += term;
  }
  return sum;
}

}  // namespace pqknot
