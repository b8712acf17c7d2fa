#include "pqknot/torus.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "pqknot/qnumbers.hpp"

namespace pqknot {

namespace {

// q^{k/2} + sign * q^{-k/2}
LaurentPoly symmetric_pair(const mpz_class& k, int sign) {
  const ExponentVector up{HalfExponent::from_twice(k), {}};
  const ExponentVector down{HalfExponent::from_twice(mpz_class(-k)), {}};
  return LaurentPoly::monomial(1, up) + LaurentPoly::monomial(sign, down);
}

void require_positive(long v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be a positive integer, got " + std::to_string(v));
}

}  // namespace

LaurentPoly alexander_torus(TorusParams params) {
  require_positive(params.n, "n");
  require_positive(params.l, "l");
  if (std::gcd(params.n, params.l) != 1)
    throw NotCoprime("T(" + std::to_string(params.n) + "," + std::to_string(params.l) +
                     ") is not a knot: gcd(n, l) = " + std::to_string(std::gcd(params.n, params.l)));
  const mpz_class n(params.n), l(params.l);
  const LaurentPoly num = symmetric_pair(mpz_class(n * l), -1) * symmetric_pair(mpz_class(1), -1);
  const LaurentPoly den = symmetric_pair(n, -1) * symmetric_pair(l, -1);
  try {
    return exact_div(num, den);
  } catch (const NonExactDivision& e) {
    throw std::logic_error(std::string("torus closed form did not divide exactly: ") + e.what());
  }
}

LaurentPoly alexander_torus2(long n) {
  require_positive(n, "n");
  const int sign = n % 2 == 1 ? +1 : -1;
  try {
    return exact_div(symmetric_pair(mpz_class(n), sign), symmetric_pair(mpz_class(1), +1));
  } catch (const NonExactDivision& e) {
    throw std::logic_error(std::string("T(n,2) closed form did not divide exactly: ") + e.what());
  }
}

bool delta_identity_check(long n_max, Execution exec) {
  require_positive(n_max, "n_max");
  const auto failure = first_failure(
      1, n_max,
      [](long n) {
        const LaurentPoly delta = alexander_torus2(n);
        if (delta != pq_number(NamedFamily::alexander_fermionic, n)) return false;
        return n % 2 == 0 || delta == alexander_torus({n, 2});
      },
      exec);
  return !failure.has_value();
}

}  // namespace pqknot
