// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every comparison is exact equality of canonical forms; the budgets are wall-clock seconds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pqknot/laurent.hpp"
#include "pqknot/laurent_io.hpp"
#include "pqknot/qnumbers.hpp"
#include "pqknot/skein.hpp"
#include "pqknot/torus.hpp"
#include "random_poly.hpp"
#include "run_cli.hpp"

using namespace pqknot;
using testing_support::PolyGen;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // <= 0: no budget
  std::function<void(Outcome&)> body;
};

// 1. [n+1] = (P+Q)[n] - PQ[n-1] over number_sequence(., 200), every family.
void recurrence_closure(Outcome& o) {
  for (const NamedFamily f : kAllFamilies) {
    const PQPair pair = family_params(f);
    const LaurentPoly sum = pair.P + pair.Q, product = pair.P * pair.Q;
    const auto seq = number_sequence(f, 200);
    if (seq.size() != 201 || !seq[0].is_zero() || !seq[1].is_one()) o.fail(std::string(family_name(f)) + ": seeds");
    for (long n = 1; n < 200; ++n)
      if (seq[n + 1] != sum * seq[n] - product * seq[n - 1])
        o.fail(std::string(family_name(f)) + ": n=" + std::to_string(n));
  }
}

// 2. [n](P - Q) = P^n - Q^n.
void division_identity(Outcome& o) {
  auto check = [&](const PQPair& pair, long n_max, const std::string& tag) {
    for (long n = 0; n <= n_max; ++n)
      if (pq_number(pair, n) * (pair.P - pair.Q) != pow(pair.P, n) - pow(pair.Q, n))
        o.fail(tag + ": n=" + std::to_string(n));
  };
  for (const NamedFamily f : kAllFamilies) check(family_params(f), 200, std::string(family_name(f)));
  PolyGen gen(2);
  for (int i = 0; i < 200; ++i) {
    const PQPair pair{gen.monomial(4, 6, 4), gen.monomial(4, 6, 4)};
    check(pair, 20, "random pair " + std::to_string(i));
  }
}

// 3. Delta_{n,2} = Alexander fermionic [n], n <= 100; closed form at l = 2 for odd n <= 99.
void alexander_identity(Outcome& o) {
  for (long n = 1; n <= 100; ++n)
    if (alexander_torus2(n) != pq_number(NamedFamily::alexander_fermionic, n)) o.fail("n=" + std::to_string(n));
  for (long n = 1; n <= 99; n += 2)
    if (alexander_torus({n, 2}) != alexander_torus2(n)) o.fail("closed form, n=" + std::to_string(n));
}

// 4. Closed form over coprime n, l <= 15: exact division, symmetry, normalization.
void closed_form(Outcome& o) {
  for (long n = 1; n <= 15; ++n)
    for (long l = 1; l <= 15; ++l) {
      if (std::gcd(n, l) != 1) continue;
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(l) + ")";
      try {
        const LaurentPoly d = alexander_torus({n, l});
        const LaurentPoly num = (q_pow(n * l) - q_pow(-n * l)) * (q_pow(1) - q_pow(-1));
        const LaurentPoly den = (q_pow(n) - q_pow(-n)) * (q_pow(l) - q_pow(-l));
        if (d * den != num) o.fail(tag + ": quotient does not multiply back");
        if (d != alexander_torus({l, n})) o.fail(tag + ": not symmetric");
        if (n == 1 && !d.is_one()) o.fail(tag + ": unknot is not 1");
      } catch (const std::exception& e) {
        o.fail(tag + ": " + e.what());
      }
    }
}

// 5. Knot-coefficient square-root maps.
void coefficient_maps(Outcome& o) {
  const SkeinCoefficients alexander = knot_to_link_coeffs({parse("q + q^(-1)"), parse("-1")});
  const SkeinCoefficients jones = knot_to_link_coeffs({parse("q^3 + q"), parse("q^4")});
  if (alexander != SkeinCoefficients{parse("q^(1/2) - q^(-1/2)"), parse("1")}) o.fail("Alexander map");
  if (jones != SkeinCoefficients{parse("q^(3/2) - q^(1/2)"), parse("q^2")}) o.fail("Jones map");
  if (alexander != link_coeffs_from_pq({parse("q^(1/2)"), parse("-q^(-1/2)")})) o.fail("Alexander pair");
  if (jones != link_coeffs_from_pq({parse("q^(3/2)"), parse("-q^(1/2)")})) o.fail("Jones pair");
}

// 6. HOMFLY fermionic [n] = p^(n-1) Alexander fermionic [n].
void homfly_factorization(Outcome& o) {
  for (long n = 1; n <= 200; ++n)
    if (!homfly_factorization_check(n)) o.fail("n=" + std::to_string(n));
}

// 7. Delta_{3,2} along three routes.
void three_routes(Outcome& o) {
  // Oracle: P^2 + PQ + Q^2 expanded term by term with P = q^(1/2), Q = -q^(-1/2).
  const oracle::Poly Pq = oracle::mono(1, 1), Qq = oracle::mono(-1, -1);
  const oracle::Poly expected =
      oracle::add(oracle::add(oracle::mul(Pq, Pq), oracle::mul(Pq, Qq)), oracle::mul(Qq, Qq));
  if (expected != oracle::from_engine(parse("q - 1 + q^(-1)"))) o.fail("oracle expansion");

  const LaurentPoly closed = alexander_torus({3, 2});
  const LaurentPoly recurrence = recurrence_generate(link_coeffs_from_pq(family_params(NamedFamily::alexander_fermionic)),
                                                     LaurentPoly{}, LaurentPoly::one(), 4)[3];
  const LaurentPoly sum = pq_number(NamedFamily::alexander_fermionic, 3);
  for (const auto& [route, value] : {std::pair{"closed form", closed}, std::pair{"recurrence", recurrence},
                                     std::pair{"sum formula", sum}})
    if (oracle::from_engine(value) != expected) o.fail(std::string(route) + " gives " + format(value));
}

// 8. Kernel properties.
void kernel_properties(Outcome& o) {
  PolyGen gen(8);
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
    if ((a + b) + c != a + (b + c) || a + b != b + a || (a * b) * c != a * (b * c) || a * b != b * a ||
        a * (b + c) != a * b + a * c)
      o.fail("ring axioms, case " + std::to_string(i));
  }
  for (int i = 0; i < 500; ++i) {
    const LaurentPoly f = gen.poly(), g = gen.nonzero_poly();
    if (exact_div(f * g, g) != f) o.fail("exact_div round trip, case " + std::to_string(i));
  }
  for (int i = 0; i < 500; ++i) {
    LaurentPoly f = gen.nonzero_poly();
    if (sgn(f.leading_term().coeff) < 0) f = -f;
    if (sqrt_perfect_square(f * f) != f) o.fail("sqrt round trip, case " + std::to_string(i));
  }
  for (int i = 0; i < 500; ++i) {
    const LaurentPoly f = gen.poly({8, 9, 5, 1000});
    if (parse(format(f)) != f) o.fail("parser round trip, case " + std::to_string(i));
  }
}

// 9. CLI contract.
void cli_contract(Outcome& o, const std::string& binary) {
  const auto all = testing_support::run_cli(binary, "verify --suite all --max-n 100");
  if (all.exit_code != 0) o.fail("verify --suite all --max-n 100 exited " + std::to_string(all.exit_code));
  for (const char* args :
       {"skein-coeffs --k1 '2' --k2 '1'", "torus-alexander --n 4 --l 2", "number --family nope --n 3",
        "number --family alexander-fermionic --n -1", "number --family custom --P 'q^(1/3)' --Q q --n 2",
        "sequence --l1 'q +' --l2 1 --p0 0 --p1 1 --count 3"}) {
    const auto r = testing_support::run_cli(binary, args);
    if (r.exit_code != 2 || r.err.empty()) o.fail(std::string("'") + args + "' exited " + std::to_string(r.exit_code));
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : PQKNOT_CLI_PATH;
  const std::vector<Criterion> criteria{
      {1, "recurrence closure, six families, n <= 200", 2.0, recurrence_closure},
      {2, "division identity, families n <= 200, 200 random pairs n <= 20", 5.0, division_identity},
      {3, "Alexander T(n,2) identity, n <= 100", 2.0, alexander_identity},
      {4, "torus closed form over coprime n, l <= 15", 5.0, closed_form},
      {5, "knot-to-link coefficient maps", 0.0, coefficient_maps},
      {6, "HOMFLY factorization, n <= 200", 2.0, homfly_factorization},
      {7, "Delta_{3,2} along three routes", 0.0, three_routes},
      {8, "kernel ring/division/sqrt/parser properties", 10.0, kernel_properties},
      {9, "CLI contract", 0.0, [&](Outcome& o) { cli_contract(o, binary); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds)
      o.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing << ")";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << '\n';
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
