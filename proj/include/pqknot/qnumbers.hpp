#pragma once

// Two-parameter (P,Q)-numbers [n] = (P^n - Q^n) / (P - Q) and the six named
// Alexander / Jones / HOMFLY families.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pqknot/laurent.hpp"

namespace pqknot {

struct PQPair {
  LaurentPoly P;
  LaurentPoly Q;

  /// P == Q: the quotient form degenerates (the sum form is still defined).
  bool degenerate() const { return P == Q; }
  PQPair swapped() const { return {Q, P}; }

  friend bool operator==(const PQPair&, const PQPair&) = default;
};

enum class NamedFamily {
  alexander_fermionic,
  alexander_bosonic,
  jones_fermionic,
  jones_bosonic,
  homfly_fermionic,
  homfly_bosonic,
};

inline constexpr NamedFamily kAllFamilies[] = {
    NamedFamily::alexander_fermionic, NamedFamily::alexander_bosonic, NamedFamily::jones_fermionic,
    NamedFamily::jones_bosonic,       NamedFamily::homfly_fermionic,  NamedFamily::homfly_bosonic,
};

/// A named family or a user-supplied pair.
using NumberFamily = std::variant<NamedFamily, PQPair>;

/// CLI spelling, e.g. "jones-bosonic".
std::string_view family_name(NamedFamily f);
std::optional<NamedFamily> family_from_name(std::string_view name);
bool is_bosonic(NamedFamily f);

PQPair family_params(const NumberFamily& family);

/// [n] as sum_{i<n} P^(n-1-i) Q^i; [0] = 0, [1] = 1. Throws DomainError for n < 0.
LaurentPoly pq_number(const PQPair& pair, long n);
LaurentPoly pq_number(const NumberFamily& family, long n);

/// [0], ..., [n_max] from the recurrence [n+1] = (P+Q)[n] - PQ[n-1] with seeds 0, 1.
std::vector<LaurentPoly> number_sequence(const NumberFamily& family, long n_max);

/// HOMFLY fermionic [n] == p^(n-1) * Alexander fermionic [n].
bool homfly_factorization_check(long n);

}  // namespace pqknot
