#pragma once

// Alexander polynomials of torus knots T(n,l) and the T(n,2) family.

#include "pqknot/laurent.hpp"
#include "pqknot/parallel.hpp"

namespace pqknot {

struct TorusParams {
  long n;
  long l;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

/// (q^{nl/2} - q^{-nl/2})(q^{1/2} - q^{-1/2}) / ((q^{n/2} - q^{-n/2})(q^{l/2} - q^{-l/2}))
/// for coprime positive n, l.
LaurentPoly alexander_torus(TorusParams params);

/// Delta_{n,2}: (q^{n/2} + q^{-n/2}) / (q^{1/2} + q^{-1/2}) for odd n (knots),
/// (q^{n/2} - q^{-n/2}) / (q^{1/2} + q^{-1/2}) for even n (two-component links).
LaurentPoly alexander_torus2(long n);

/// True iff Delta_{n,2} equals the Alexander fermionic [n] for 1 <= n <= n_max and
/// the general closed form agrees at l = 2 for every odd n in range.
bool delta_identity_check(long n_max, Execution exec = Execution::parallel);

}  // namespace pqknot
