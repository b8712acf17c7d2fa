// pqknot: command-line front end for the deformed-number engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pqknot/laurent.hpp"
#include "pqknot/laurent_io.hpp"
#include "pqknot/qnumbers.hpp"
#include "pqknot/skein.hpp"
#include "pqknot/torus.hpp"
#include "pqknot/verify.hpp"

namespace {

using namespace pqknot;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string format = "text";

  std::string family;
  long n = 0;
  long l = 0;
  std::string P, Q;
  std::string k1, k2;
  std::string l1, l2, p0, p1;
  long count = 0;
  std::string suite;
  long max_n = 0;
};

OutputFormat output_format(const Options& o) { return o.format == "json" ? OutputFormat::json : OutputFormat::text; }

LaurentPoly parse_arg(const std::string& text, const char* flag) {
  try {
    return parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

NamedFamily named_family(const std::string& name) {
  if (auto f = family_from_name(name)) return *f;
  throw UsageError("unknown family '" + name +
                   "' (expected alexander-fermionic, alexander-bosonic, jones-fermionic, jones-bosonic, "
                   "homfly-fermionic, homfly-bosonic or custom)");
}

PQPair pair_from_flags(const Options& o) {
  if (o.P.empty() || o.Q.empty()) throw UsageError("--P and --Q must both be given");
  return {parse_arg(o.P, "P"), parse_arg(o.Q, "Q")};
}

NumberFamily resolve_family(const Options& o) {
  if (o.family == "custom") return pair_from_flags(o);
  if (!o.P.empty() || !o.Q.empty()) throw UsageError("--P/--Q are only valid with --family custom");
  return named_family(o.family);
}

void print_poly(const LaurentPoly& f, const Options& o) { std::cout << format(f, output_format(o)) << '\n'; }

void print_labeled(const std::vector<std::pair<std::string, LaurentPoly>>& items, const Options& o) {
  if (output_format(o) == OutputFormat::json) {
    json j = json::object();
    for (const auto& [label, poly] : items) j[label] = to_json(poly);
    std::cout << j.dump() << '\n';
    return;
  }
  for (const auto& [label, poly] : items) std::cout << label << " = " << format(poly) << '\n';
}

void print_skein(const SkeinCoefficients& c, const Options& o) { print_labeled({{"l1", c.l1}, {"l2", c.l2}}, o); }

int cmd_number(const Options& o) {
  print_poly(pq_number(resolve_family(o), o.n), o);
  return kExitOk;
}

int cmd_family_params(const Options& o) {
  const PQPair pair = family_params(named_family(o.family));
  print_labeled({{"P", pair.P}, {"Q", pair.Q}}, o);
  return kExitOk;
}

int cmd_pq_number(const Options& o) {
  print_poly(pq_number(pair_from_flags(o), o.n), o);
  return kExitOk;
}

int cmd_knot_to_link(const Options& o) {
  print_skein(knot_to_link_coeffs({parse_arg(o.k1, "k1"), parse_arg(o.k2, "k2")}), o);
  return kExitOk;
}

int cmd_skein_coeffs(const Options& o) {
  const bool by_family = !o.family.empty();
  const bool by_knot = !o.k1.empty() || !o.k2.empty();
  const bool by_pair = !o.P.empty() || !o.Q.empty();
  if (by_family + by_knot + by_pair != 1)
    throw UsageError("give exactly one of --family, --k1/--k2 or --P/--Q");
  if (by_knot) {
    if (o.k1.empty() || o.k2.empty()) throw UsageError("--k1 and --k2 must both be given");
    return cmd_knot_to_link(o);
  }
  if (by_pair) {
    print_skein(link_coeffs_from_pq(pair_from_flags(o)), o);
    return kExitOk;
  }
  const NamedFamily f = named_family(o.family);
  const PQPair pair = family_params(f);
  // A bosonic family yields knot coefficients; the link coefficients come from the root map.
  print_skein(is_bosonic(f) ? knot_to_link_coeffs(knot_coeffs_from_pq(pair)) : link_coeffs_from_pq(pair), o);
  return kExitOk;
}

int cmd_torus(const Options& o) {
  print_poly(alexander_torus({o.n, o.l}), o);
  return kExitOk;
}

int cmd_sequence(const Options& o) {
  const SkeinCoefficients coeffs{parse_arg(o.l1, "l1"), parse_arg(o.l2, "l2")};
  const auto seq = recurrence_generate(coeffs, parse_arg(o.p0, "p0"), parse_arg(o.p1, "p1"), o.count);
  if (output_format(o) == OutputFormat::json) {
    json items = json::array();
    for (const auto& f : seq) items.push_back(to_json(f));
    std::cout << json{{"sequence", std::move(items)}}.dump() << '\n';
    return kExitOk;
  }
  // Line k holds P_k.
  for (const auto& f : seq) std::cout << format(f) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto suite = suite_from_name(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  const SuiteReport report = run_suite(*suite, o.max_n);
  if (output_format(o) == OutputFormat::json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json entry{{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}};
      if (!c.passed) entry["counterexample"] = c.counterexample;
      checks.push_back(std::move(entry));
    }
    std::cout << json{{"suite", o.suite}, {"max_n", o.max_n}, {"passed", report.passed()}, {"checks", checks}}.dump()
              << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.passed) std::cout << ": " << c.counterexample;
      std::cout << '\n';
    }
    const auto total = report.checks.size();
    if (report.passed())
      std::cout << "all " << total << " checks passed\n";
    else
      std::cout << report.failures() << " of " << total << " checks failed\n";
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact deformed-number calculus for torus knot polynomial invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* number = app.add_subcommand("number", "Deformed number [n] of a family");
  number->add_option("--family", o.family, "Family name, or 'custom' with --P/--Q")->required();
  number->add_option("--n", o.n, "Index n >= 0")->required();
  number->add_option("--P", o.P, "P for a custom family");
  number->add_option("--Q", o.Q, "Q for a custom family");

  auto* params = app.add_subcommand("family-params", "The (P, Q) pair of a named family");
  params->add_option("--family", o.family, "Family name")->required();

  auto* pq = app.add_subcommand("pq-number", "[n] for an explicit (P, Q) pair");
  pq->add_option("--P", o.P, "Expression for P")->required();
  pq->add_option("--Q", o.Q, "Expression for Q")->required();
  pq->add_option("--n", o.n, "Index n >= 0")->required();

  auto* skein = app.add_subcommand("skein-coeffs", "Link coefficients (l1, l2)");
  skein->add_option("--family", o.family, "Family name");
  skein->add_option("--k1", o.k1, "Knot coefficient k1");
  skein->add_option("--k2", o.k2, "Knot coefficient k2");
  skein->add_option("--P", o.P, "Expression for P");
  skein->add_option("--Q", o.Q, "Expression for Q");

  auto* k2l = app.add_subcommand("knot-to-link", "Link coefficients from knot coefficients");
  k2l->add_option("--k1", o.k1, "Knot coefficient k1")->required();
  k2l->add_option("--k2", o.k2, "Knot coefficient k2")->required();

  auto* torus = app.add_subcommand("torus-alexander", "Alexander polynomial of the torus knot T(n, l)");
  torus->add_option("--n", o.n, "n >= 1")->required();
  torus->add_option("--l", o.l, "l >= 1, coprime to n")->required();

  auto* seq = app.add_subcommand("sequence", "P_0 .. P_{count-1} from P_{n+1} = l1 P_n + l2 P_{n-1}");
  seq->add_option("--l1", o.l1, "Link coefficient l1")->required();
  seq->add_option("--l2", o.l2, "Link coefficient l2")->required();
  seq->add_option("--p0", o.p0, "Seed P_0")->required();
  seq->add_option("--p1", o.p1, "Seed P_1")->required();
  seq->add_option("--count", o.count, "Number of terms, >= 2")->required();

  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("--suite", o.suite, "recurrence, delta-identity, homfly-factor, coeff-maps or all")->required();
  verify->add_option("--max-n", o.max_n, "Largest index checked, >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (number->parsed()) return cmd_number(o);
    if (params->parsed()) return cmd_family_params(o);
    if (pq->parsed()) return cmd_pq_number(o);
    if (skein->parsed()) return cmd_skein_coeffs(o);
    if (k2l->parsed()) return cmd_knot_to_link(o);
    if (torus->parsed()) return cmd_torus(o);
    if (seq->parsed()) return cmd_sequence(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const NotAPerfectSquare& e) {
    std::cerr << "error: " << e.what() << "\nradicand: " << format(e.radicand()) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
