#include "pqknot/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

#include "pqknot/laurent_io.hpp"
#include "pqknot/qnumbers.hpp"
#include "pqknot/skein.hpp"
#include "pqknot/torus.hpp"

namespace pqknot {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 5> kSuiteNames{{
    {Suite::recurrence, "recurrence"},
    {Suite::delta_identity, "delta-identity"},
    {Suite::homfly_factor, "homfly-factor"},
    {Suite::coeff_maps, "coeff-maps"},
    {Suite::all, "all"},
}};

using PolyAt = std::function<LaurentPoly(long)>;

// lhs(n) == rhs(n) for every n in [first, last]; the index shown in a
// counterexample is label(n).
CheckReport index_check(std::string name, long first, long last, const PolyAt& lhs, const PolyAt& rhs,
                        Execution exec, const std::function<long(long)>& label = [](long n) { return n; }) {
  CheckReport report{std::move(name), std::max(0L, last - first + 1), true, {}};
  const auto holds = [&](long n) {
    try {
      return lhs(n) == rhs(n);
    } catch (const std::exception&) {
      return false;
    }
  };
  const auto bad = first_failure(first, last, holds, exec);
  if (!bad) return report;
  report.passed = false;
  const std::string where = "n=" + std::to_string(label(*bad)) + ": ";
  try {
    report.counterexample = where + format(lhs(*bad)) + " != " + format(rhs(*bad));
  } catch (const std::exception& e) {
    report.counterexample = where + e.what();
  }
  return report;
}

std::string render(const SkeinCoefficients& c) { return "(" + format(c.l1) + ", " + format(c.l2) + ")"; }
std::string render(const PQPair& p) { return "(" + format(p.P) + ", " + format(p.Q) + ")"; }

// One-case check comparing two rendered-on-failure values.
template <class Value>
CheckReport value_check(std::string name, const std::function<Value()>& lhs, const std::function<Value()>& rhs) {
  CheckReport report{std::move(name), 1, true, {}};
  try {
    const Value a = lhs();
    const Value b = rhs();
    if (!(a == b)) {
      report.passed = false;
      report.counterexample = render(a) + " != " + render(b);
    }
  } catch (const std::exception& e) {
    report.passed = false;
    report.counterexample = e.what();
  }
  return report;
}

NamedFamily fermionic_partner(NamedFamily bosonic) {
  switch (bosonic) {
    case NamedFamily::alexander_bosonic:
      return NamedFamily::alexander_fermionic;
    case NamedFamily::jones_bosonic:
      return NamedFamily::jones_fermionic;
    default:
      return NamedFamily::homfly_fermionic;
  }
}

void recurrence_suite(std::vector<CheckReport>& out, long max_n, Execution exec) {
  for (const NamedFamily f : kAllFamilies) {
    const std::string tag(family_name(f));
    const PQPair pair = family_params(f);
    const LaurentPoly sum = pair.P + pair.Q;
    const LaurentPoly product = pair.P * pair.Q;
    const std::vector<LaurentPoly> seq = number_sequence(f, max_n);

    // n = 0 checks the seed [0] = 0; n >= 1 checks [n+1] = (P+Q)[n] - PQ[n-1].
    out.push_back(index_check(
        "recurrence-closure/" + tag, 0, max_n - 1,
        [&](long n) { return n == 0 ? seq[0] : seq[n + 1]; },
        [&](long n) { return n == 0 ? LaurentPoly{} : sum * seq[n] - product * seq[n - 1]; }, exec));
    out.push_back(index_check(
        "sum-agreement/" + tag, 0, max_n, [&](long n) { return seq[n]; },
        [&](long n) { return pq_number(pair, n); }, exec));
    out.push_back(index_check(
        "division-identity/" + tag, 0, max_n,
        [&](long n) { return pq_number(pair, n) * (pair.P - pair.Q); },
        [&](long n) {
          const auto k = static_cast<unsigned long>(n);
          return pow(pair.P, k) - pow(pair.Q, k);
        },
        exec));
  }
}

void delta_suite(std::vector<CheckReport>& out, long max_n, Execution exec) {
  out.push_back(index_check(
      "delta-identity", 1, max_n, [](long n) { return alexander_torus2(n); },
      [](long n) { return pq_number(NamedFamily::alexander_fermionic, n); }, exec));
  // Index m stands for the odd n = 2m - 1.
  out.push_back(index_check(
      "torus-closed-form-l2", 1, (max_n + 1) / 2, [](long m) { return alexander_torus2(2 * m - 1); },
      [](long m) { return alexander_torus({2 * m - 1, 2}); }, exec, [](long m) { return 2 * m - 1; }));
}

void homfly_suite(std::vector<CheckReport>& out, long max_n, Execution exec) {
  out.push_back(index_check(
      "homfly-factorization", 1, max_n, [](long n) { return pq_number(NamedFamily::homfly_fermionic, n); },
      [](long n) { return p_pow(2 * (n - 1)) * pq_number(NamedFamily::alexander_fermionic, n); }, exec));
}

void coeff_map_suite(std::vector<CheckReport>& out, long max_n, Execution exec) {
  // Knot coefficients as they are written for the Alexander and Jones bosonic numbers.
  const KnotCoefficients alexander_knot{q_pow(2) + q_pow(-2), LaurentPoly::constant(-1)};
  const KnotCoefficients jones_knot{q_pow(6) + q_pow(2), q_pow(8)};
  out.push_back(value_check<SkeinCoefficients>(
      "knot-to-link/alexander", [&] { return knot_to_link_coeffs(alexander_knot); },
      [] { return link_coeffs_from_pq(family_params(NamedFamily::alexander_fermionic)); }));
  out.push_back(value_check<SkeinCoefficients>(
      "knot-to-link/jones", [&] { return knot_to_link_coeffs(jones_knot); },
      [] { return link_coeffs_from_pq(family_params(NamedFamily::jones_fermionic)); }));

  for (const NamedFamily f : kAllFamilies) {
    if (!is_bosonic(f)) continue;
    out.push_back(value_check<SkeinCoefficients>(
        "bosonic-to-link/" + std::string(family_name(f)),
        [f] { return knot_to_link_coeffs(knot_coeffs_from_pq(family_params(f))); },
        [f] { return link_coeffs_from_pq(family_params(fermionic_partner(f))); }));
  }

  for (const NamedFamily f : kAllFamilies) {
    if (is_bosonic(f)) continue;
    const std::string tag(family_name(f));
    const PQPair pair = family_params(f);
    out.push_back(value_check<PQPair>(
        "pq-roundtrip/" + tag, [pair] { return pq_from_link_coeffs(link_coeffs_from_pq(pair)); },
        [pair] { return pair; }));
    const std::vector<LaurentPoly> skein =
        recurrence_generate(link_coeffs_from_pq(pair), LaurentPoly{}, LaurentPoly::one(), max_n + 1);
    const std::vector<LaurentPoly> numbers = number_sequence(pair, max_n);
    out.push_back(index_check(
        "skein-recurrence/" + tag, 0, max_n, [&](long n) { return skein[n]; },
        [&](long n) { return numbers[n]; }, exec));
  }
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
  for (const auto& [suite, spelled] : kSuiteNames)
    if (spelled == name) return suite;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  for (const auto& [suite, spelled] : kSuiteNames)
    if (suite == s) return spelled;
  return "?";
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
}

long SuiteReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const CheckReport& c) { return !c.passed; });
}

SuiteReport run_suite(Suite suite, long max_n, Execution exec) {
  if (max_n < 1) throw DomainError("max-n must be at least 1");
  SuiteReport report;
  auto& out = report.checks;
  if (suite == Suite::recurrence || suite == Suite::all) recurrence_suite(out, max_n, exec);
  if (suite == Suite::delta_identity || suite == Suite::all) delta_suite(out, max_n, exec);
  if (suite == Suite::homfly_factor || suite == Suite::all) homfly_suite(out, max_n, exec);
  if (suite == Suite::coeff_maps || suite == Suite::all) coeff_map_suite(out, max_n, exec);
  return report;
}

}  // namespace pqknot
