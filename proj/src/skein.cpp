#include "pqknot/skein.hpp"

#include <utility>

namespace pqknot {

KnotRootFailure::KnotRootFailure(std::string which, const NotAPerfectSquare& cause)
    : NotAPerfectSquare(cause), which_(std::move(which)) {
  message_ = "cannot take the root for " + which_ + ": " + cause.what();
}

SkeinCoefficients link_coeffs_from_pq(const PQPair& pair) {
  const LaurentPoly product = pair.P * pair.Q;
  if (product.is_zero()) throw DegenerateSkein("P*Q = 0 gives l2 = 0");
  return {pair.P + pair.Q, -product};
}

PQPair pq_from_link_coeffs(const SkeinCoefficients& coeffs) {
  if (coeffs.degenerate()) throw DegenerateSkein("l2 = 0 makes one of P, Q vanish");
  const LaurentPoly discriminant = coeffs.l1 * coeffs.l1 + LaurentPoly::constant(4) * coeffs.l2;
  if (discriminant.is_zero()) throw NotSolvableOnGrid("zero discriminant: P = Q");
  LaurentPoly root;
  try {
    root = sqrt_perfect_square(discriminant);
  } catch (const NotAPerfectSquare& e) {
    throw NotSolvableOnGrid(std::string("discriminant l1^2 + 4 l2 has no root on the grid: ") + e.what());
  }
  const LaurentPoly two = LaurentPoly::constant(2);
  LaurentPoly plus, minus;
  try {
    plus = exact_div(coeffs.l1 + root, two);
    minus = exact_div(coeffs.l1 - root, two);
  } catch (const NonExactDivision&) {
    throw NotSolvableOnGrid("roots (l1 +- sqrt(l1^2 + 4 l2))/2 have non-integral coefficients");
  }
  // The "+" branch wins unless only the other root has a positive leading coefficient.
  if (sgn(plus.leading_term().coeff) < 0 && sgn(minus.leading_term().coeff) > 0) return {minus, plus};
  return {plus, minus};
}

LaurentPoly bosonic_product(const KnotCoefficients& kc) {
  if (kc.k2.is_zero()) return {};
  return sgn(kc.k2.leading_term().coeff) < 0 ? -kc.k2 : kc.k2;
}

SkeinCoefficients knot_to_link_coeffs(const KnotCoefficients& kc) {
  SkeinCoefficients out;
  try {
    out.l2 = sqrt_perfect_square(bosonic_product(kc));
  } catch (const NotAPerfectSquare& e) {
    throw KnotRootFailure("l2", e);
  }
  try {
    out.l1 = sqrt_perfect_square(kc.k1 - LaurentPoly::constant(2) * out.l2);
  } catch (const NotAPerfectSquare& e) {
    throw KnotRootFailure("l1", e);
  }
  return out;
}

KnotCoefficients knot_coeffs_from_pq(const PQPair& pair) { return {pair.P + pair.Q, -(pair.P * pair.Q)}; }

std::vector<LaurentPoly> recurrence_generate(const SkeinCoefficients& coeffs, const LaurentPoly& p0,
                                             const LaurentPoly& p1, long count) {
  if (count < 2) throw DomainError("count must be at least 2");
  std::vector<LaurentPoly> seq;
  seq.reserve(static_cast<std::size_t>(count));
  seq.push_back(p0);
  seq.push_back(p1);
  for (long n = 1; n + 1 < count; ++n) seq.push_back(coeffs.l1 * seq[n] + coeffs.l2 * seq[n - 1]);
  return seq;
}

}  // namespace pqknot
