#pragma once

// Skein coefficient algebra for P_{L+} = l1 P_{L0} + l2 P_{L-}: the
// (P,Q) <-> (l1,l2) correspondence, the bosonic "knot coefficient" square-root
// map, and the T(n,2) recurrence.

#include <string>
#include <vector>

#include "pqknot/laurent.hpp"
#include "pqknot/qnumbers.hpp"

namespace pqknot {

/// Link coefficients (l1, l2).
struct SkeinCoefficients {
  LaurentPoly l1;
  LaurentPoly l2;

  bool degenerate() const { return l2.is_zero(); }
  friend bool operator==(const SkeinCoefficients&, const SkeinCoefficients&) = default;
};

/// Knot coefficients (k1, k2) read off a bosonic recurrence.
struct KnotCoefficients {
  LaurentPoly k1;
  LaurentPoly k2;
};

class DegenerateSkein : public Error {
 public:
  using Error::Error;
};

class NotSolvableOnGrid : public Error {
 public:
  using Error::Error;
};

/// A failed root inside knot_to_link_coeffs; which() is "l2" or "l1".
class KnotRootFailure : public NotAPerfectSquare {
 public:
  KnotRootFailure(std::string which, const NotAPerfectSquare& cause);
  const std::string& which() const noexcept { return which_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string which_;
  std::string message_;
};

/// l1 = P + Q, l2 = -PQ.
SkeinCoefficients link_coeffs_from_pq(const PQPair& pair);

/// Roots of x^2 - l1 x - l2; P is the root with positive leading coefficient.
PQPair pq_from_link_coeffs(const SkeinCoefficients& coeffs);

/// The k2 sign convention differs between the Alexander (k2 = -1) and Jones
/// (k2 = q^4) knot coefficients. Both denote a bosonic product P_b Q_b = l2^2,
/// which has a positive leading coefficient; this picks -k2 when that is
/// positive-leading and k2 otherwise.
LaurentPoly bosonic_product(const KnotCoefficients& kc);

/// l2 = +sqrt(P_b Q_b), l1 = +sqrt(k1 - 2 l2).
SkeinCoefficients knot_to_link_coeffs(const KnotCoefficients& kc);

/// Knot coefficients of a bosonic pair in the Alexander convention: (P+Q, -PQ).
KnotCoefficients knot_coeffs_from_pq(const PQPair& pair);

/// P_0 .. P_{count-1} with P_{n+1} = l1 P_n + l2 P_{n-1}.
std::vector<LaurentPoly> recurrence_generate(const SkeinCoefficients& coeffs, const LaurentPoly& p0,
                                             const LaurentPoly& p1, long count);

}  // namespace pqknot
