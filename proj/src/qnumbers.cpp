#include "pqknot/qnumbers.hpp"

#include <array>
#include <utility>

namespace pqknot {

namespace {

struct FamilyEntry {
  NamedFamily family;
  std::string_view name;
};

constexpr std::array<FamilyEntry, 6> kNames{{
    {NamedFamily::alexander_fermionic, "alexander-fermionic"},
    {NamedFamily::alexander_bosonic, "alexander-bosonic"},
    {NamedFamily::jones_fermionic, "jones-fermionic"},
    {NamedFamily::jones_bosonic, "jones-bosonic"},
    {NamedFamily::homfly_fermionic, "homfly-fermionic"},
    {NamedFamily::homfly_bosonic, "homfly-bosonic"},
}};

PQPair named_params(NamedFamily f) {
  switch (f) {
    case NamedFamily::alexander_fermionic:
      return {q_pow(1), -q_pow(-1)};
    case NamedFamily::alexander_bosonic:
      return {q_pow(2), q_pow(-2)};
    case NamedFamily::jones_fermionic:
      return {q_pow(3), -q_pow(1)};
    case NamedFamily::jones_bosonic:
      return {q_pow(6), q_pow(2)};
    case NamedFamily::homfly_fermionic:
      return {LaurentPoly::monomial(1, 1, 2), LaurentPoly::monomial(-1, -1, 2)};
    case NamedFamily::homfly_bosonic:
      return {LaurentPoly::monomial(1, 2, 4), LaurentPoly::monomial(1, -2, 4)};
  }
  throw DomainError("unknown family");
}

void require_nonnegative(long n) {
  if (n < 0) throw DomainError("index must be nonnegative, got " + std::to_string(n));
}

}  // namespace

std::string_view family_name(NamedFamily f) {
  for (const auto& e : kNames)
    if (e.family == f) return e.name;
  return "?";
}

std::optional<NamedFamily> family_from_name(std::string_view name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.family;
  return std::nullopt;
}

bool is_bosonic(NamedFamily f) {
  return f == NamedFamily::alexander_bosonic || f == NamedFamily::jones_bosonic ||
         f == NamedFamily::homfly_bosonic;
}

PQPair family_params(const NumberFamily& family) {
  if (const auto* named = std::get_if<NamedFamily>(&family)) return named_params(*named);
  return std::get<PQPair>(family);
}

LaurentPoly pq_number(const PQPair& pair, long n) {
  require_nonnegative(n);
  if (n == 0) return {};
  // Walk Q^i up and P^(n-1-i) down; precompute the P powers once.
  std::vector<LaurentPoly> p_powers(static_cast<std::size_t>(n));
  p_powers[0] = LaurentPoly::one();
  for (long i = 1; i < n; ++i) p_powers[i] = p_powers[i - 1] * pair.P;
  LaurentPoly sum;
  LaurentPoly q_power = LaurentPoly::one();
  for (long i = 0; i < n; ++i) {
    sum += p_powers[n - 1 - i] * q_power;
    if (i + 1 < n) q_power *= pair.Q;
  }
  return sum;
}

LaurentPoly pq_number(const NumberFamily& family, long n) { return pq_number(family_params(family), n); }

std::vector<LaurentPoly> number_sequence(const NumberFamily& family, long n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  const PQPair pair = family_params(family);
  const LaurentPoly sum = pair.P + pair.Q;
  const LaurentPoly product = pair.P * pair.Q;
  std::vector<LaurentPoly> seq;
  seq.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.push_back({});
  seq.push_back(LaurentPoly::one());
  for (long n = 1; n < n_max; ++n) seq.push_back(sum * seq[n] - product * seq[n - 1]);
  return seq;
}

bool homfly_factorization_check(long n) {
  if (n < 1) throw DomainError("n must be at least 1");
  const LaurentPoly lhs = pq_number(NamedFamily::homfly_fermionic, n);
  const LaurentPoly rhs = p_pow(2 * (n - 1)) * pq_number(NamedFamily::alexander_fermionic, n);
  return lhs == rhs;
}

}  // namespace pqknot
