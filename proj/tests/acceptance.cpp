// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Sample sizes, seeds, degree bounds and time limits are fixed here.

#include "support/fixtures.hpp"

#include <asq2/checks.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using namespace asq2;
using Clock = std::chrono::steady_clock;

constexpr int kRoundTripPerCase = 200;
constexpr int kRoundTripDegree = 2;
constexpr double kRoundTripSeconds = 60.0;
constexpr int kOracleSamples = 500;
constexpr int kCandidateRuns = 1000;
constexpr int kAxiomTriples = 100000;
constexpr int kNormLiteralSamples = 10000;
constexpr int kComplementSamples = 500;
constexpr int kAsSolveSamples = 300;
constexpr int kPerfSolves = 10000;
constexpr double kPerfSeconds = 10.0;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string failures(const CheckReport& r) {
  return r.passed() ? "" : "; first failure: " + r.first_failure;
}

Outcome roundtrip_completeness() {
  const auto t0 = Clock::now();
  std::size_t cases = 0, misses = 0;
  std::string first;
  const InstanceCase kinds[] = {InstanceCase::artin_schreier, InstanceCase::square_central, InstanceCase::central,
                                InstanceCase::zero, InstanceCase::general};
  std::uint64_t seed = 100000;
  for (const QuatAlgebra* alg : {&test::default_algebra(), &test::gf4_algebra()}) {
    for (auto kind : kinds) {
      const CheckReport r = check_roundtrip(*alg, kind, kRoundTripPerCase, seed, kRoundTripDegree);
      seed += 10000;
      cases += r.cases;
      misses += r.failures;
      if (first.empty() && !r.passed()) first = r.first_failure;
    }
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu planted roots found (k=1,2; 5 cases), %.2f s (limit %.0f s)",
                cases - misses, cases, secs, kRoundTripSeconds);
  return {misses == 0 && cases == 2 * 5 * kRoundTripPerCase && secs < kRoundTripSeconds,
          buf + (first.empty() ? "" : "; first failure: " + first)};
}

Outcome oracle_agreement() {
  const CheckReport r = check_oracle_agreement(test::default_algebra(), kOracleSamples, 200001, 1);
  return {r.passed() && r.cases == kOracleSamples,
          std::to_string(r.failures) + " disagreements over " + std::to_string(r.cases) + " pairs" + failures(r)};
}

Outcome central_locus_regression() {
  const QuatAlgebra& alg = test::default_algebra();
  const Quaternion mu = test::Q("1"), nu = test::Q("T");
  const RootSet rs = solve(mu, nu);
  const auto* cl = std::get_if<CentralPlusLocus>(&rs);
  if (cl == nullptr) return {false, "solve(1, T) returned a finite root list"};
  const Quaternion* w = cl->locus.witness();
  if (w == nullptr) return {false, "locus has no witness"};
  const bool ok = substitute_check(mu, nu, *w) && !w->is_central() && &w->algebra() == &alg;
  return {ok, "locus tr=" + to_string(cl->locus.trace) + " norm=" + to_string(cl->locus.norm) +
                  ", witness " + to_string(*w) + (ok ? " verified by substitution" : " FAILED substitution")};
}

Outcome candidate_bounds() {
  const CheckReport r = check_candidate_bounds(test::default_algebra(), kCandidateRuns, 300001);
  return {r.passed() && r.cases == kCandidateRuns,
          std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) +
              " runs with <= 6 candidates and <= 2 roots" + failures(r)};
}

Outcome algebra_axioms() {
  const auto t0 = Clock::now();
  const CheckReport r = check_algebra_axioms(test::default_algebra(), kAxiomTriples, 400001, kNormLiteralSamples);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu triples, %d literal norm checks, %zu failures, %.2f s", r.cases,
                kNormLiteralSamples, r.failures, seconds_since(t0));
  return {r.passed() && r.cases == kAxiomTriples, buf + failures(r)};
}

Outcome complement() {
  const CheckReport r = check_complement(test::default_algebra(), kComplementSamples, 500001);
  return {r.passed() && r.cases == kComplementSamples,
          std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) +
              " square-central inputs satisfy both relations" + failures(r)};
}

Outcome field_solver() {
  const CheckReport r = check_as_solve_brute(test::gf2(), kAsSolveSamples, 600001);
  return {r.passed() && r.cases == kAsSolveSamples,
          std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) +
              " c values match exhaustive search (all 56 small c plus planted)" + failures(r)};
}

Outcome performance() {
  const QuatAlgebra& alg = test::default_algebra();
  CounterRng rng(700001);
  std::size_t budget_hits = 0, other_errors = 0;
  std::string first;
  const auto t0 = Clock::now();
  for (int n = 0; n < kPerfSolves; ++n) {
    // Alternate planted instances over all coefficient cases with raw random pairs.
    Quaternion mu = Quaternion::zero(alg), nu = Quaternion::zero(alg);
    if (n % 2 == 0) {
      Instance in = roundtrip_instance(alg, static_cast<InstanceCase>((n / 2) % 5), 700001 + n, 2);
      mu = std::move(in.mu);
      nu = std::move(in.nu);
    } else {
      mu = random_quaternion(alg, rng, 2);
      nu = random_quaternion(alg, rng, 2);
    }
    try {
      (void)solve(mu, nu);
    } catch (const DivisorBudgetExceeded& e) {
      ++budget_hits;
    } catch (const Error& e) {
      if (other_errors++ == 0) first = e.what();
    }
  }
  const double secs = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf, "%d solves in %.2f s (limit %.0f s), divisor budget exceeded %zu times, %zu errors",
                kPerfSolves, secs, kPerfSeconds, budget_hits, other_errors);
  return {secs < kPerfSeconds && budget_hits == 0 && other_errors == 0,
          buf + (first.empty() ? "" : std::string("; first error: ") + first)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 round-trip completeness", roundtrip_completeness},
      {"2 differential oracle agreement", oracle_agreement},
      {"3 solve(1, T) locus with verified witness", central_locus_regression},
      {"4 candidate and root bounds", candidate_bounds},
      {"5 algebra axioms", algebra_axioms},
      {"6 Artin-Schreier complement", complement},
      {"7 field solver completeness", field_solver},
      {"8 performance", performance},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
