// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "quiver/checks.hpp"
#include "quiver/families.hpp"
#include "quiver/json.hpp"
#include "quiver/operators.hpp"
#include "quiver/spectra.hpp"

using namespace quiver;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Suite {
 public:
  void run(int id, const std::string& name, const std::function<Outcome()>& body, double time_limit = 0.0) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit > 0.0 && secs >= time_limit) {
      o.ok = false;
      o.detail += " [over time limit " + std::to_string(time_limit) + " s]";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << o.detail << " (" << timing << ")"
              << std::endl;
    all_ok_ = all_ok_ && o.ok;
  }

  bool all_ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

std::string failure_summary(const AggregateReport& a) {
  std::ostringstream s;
  s << a.instances << " instances,";
  for (const auto& c : a.checks) {
    s << ' ' << c.check << ' ' << c.passed << '/' << c.evaluated;
    if (c.inapplicable) s << " (" << c.inapplicable << " inapplicable)";
    if (c.failed) s << " FAILED " << c.failed;
    if (!c.failures.empty()) s << " first: " << c.failures.front().quiver.substr(0, 40);
  }
  return s.str();
}

bool none_failed_or_skipped(const AggregateReport& a) {
  if (a.total_failures() != 0) return false;
  for (const auto& c : a.checks)
    if (c.inapplicable != 0 || c.evaluated != a.instances) return false;
  return true;
}

SearchSpec random_search(std::size_t n, std::size_t m, std::size_t loops, std::size_t multi, std::uint64_t seed,
                         std::size_t trials, std::vector<std::string> checks) {
  SearchSpec spec;
  spec.family = {Family::random_quiver, n, m, loops, multi, seed, 0};
  spec.seed = seed;
  spec.trials = trials;
  spec.checks = std::move(checks);
  return spec;
}

Outcome ribbon_sharpness() {
  for (std::size_t m = 2; m <= 50; ++m) {
    const Quiver q = ribbon(m);
    const IntMatrix K = kirchhoff(q);
    // Rank one with trace 2m, so lambda_1 = 2m in exact arithmetic.
    if (exact_determinant(K) != 0 || K.trace() != static_cast<long long>(2 * m))
      return {false, "trace arithmetic failed at m=" + std::to_string(m)};
    const SequenceTable t = sequence_table(q);
    const long long B1 = t.row(1).B;
    const long long expected_B1 = static_cast<long long>(m + (m - 1) + 1);
    if (t.r != static_cast<long long>(m - 1) || B1 != expected_B1 || B1 != static_cast<long long>(2 * m))
      return {false, "B_1 != 2m at m=" + std::to_string(m)};
    if (std::abs(t.row(1).S - 2.0 * double(m)) > 1e-9)
      return {false, "S_1 != 2m within 1e-9 at m=" + std::to_string(m)};
    const CheckReport r = check_brouwer(q);
    if (r.verdict != Verdict::pass || r.sharp.empty() || r.sharp.front() != 1)
      return {false, "brouwer check not sharp-pass at m=" + std::to_string(m)};
  }
  return {true, "m=2..50: S_1 = B_1 = 2m, exact by rank and trace"};
}

Outcome classical_falsification() {
  CheckOptions opts;
  opts.classical_bound = true;
  for (std::size_t m = 2; m <= 50; ++m) {
    const CheckReport r = check_brouwer(ribbon(m), opts);
    const double expected = -(double(m) - 1.0);
    if (r.verdict != Verdict::fail || !r.first_violation || *r.first_violation != 1)
      return {false, "did not fail at k=1 for m=" + std::to_string(m)};
    if (std::abs(r.margin - expected) > 1e-9) return {false, "margin " + std::to_string(r.margin)};
    // Exact: classical B_1 = m + 1 and S_1 = trace = 2m.
    if (static_cast<long long>(m) + 1 - kirchhoff(ribbon(m)).trace() != -static_cast<long long>(m - 1))
      return {false, "exact margin mismatch"};
  }
  return {true, "m=2..50 fail at k=1 with margin -(m-1)"};
}

Outcome k7_fixture() {
  const Quiver q = k7_ribbon_fixture();
  const IntMatrix K = kirchhoff(q);
  if (K != k7_ribbon_kirchhoff()) return {false, "K differs from the printed matrix"};
  const SequenceTable t = sequence_table(q);
  if (t.m != 61 || t.r != 40 || t.trace != 122) return {false, "m, r or trace wrong"};
  if (std::abs(t.row(6).S - 122.0) > 1e-8 || t.row(6).B != 122)
    return {false, "S_6 = " + std::to_string(t.row(6).S) + ", B_6 = " + std::to_string(t.row(6).B)};
  return {true, "K matches entry-wise; m=61 r=40 trace=122; S_6 = B_6 = 122"};
}

Outcome exhaustive_six() {
  SearchSpec spec;
  spec.family = {Family::enumerate, 6};
  spec.checks = {"brouwer", "signless"};
  const AggregateReport a = search(spec);
  return {a.instances == 32768 && none_failed_or_skipped(a), failure_summary(a)};
}

Outcome sandwich_lew_degree() {
  std::string detail;
  bool ok = true;
  for (std::size_t c : {0u, 10u}) {
    const AggregateReport a = search(random_search(20, 50, 30, c, 5000 + c, 1000, {"sandwich", "lew", "degree"}));
    ok = ok && a.instances == 1000 && none_failed_or_skipped(a);
    detail += "c=" + std::to_string(c) + ": " + failure_summary(a) + "; ";
  }
  return {ok, detail};
}

Outcome interlacing_criterion() {
  const AggregateReport edges = search(random_search(12, 24, 6, 6, 6001, 1000, {"interlacing"}));
  const AggregateReport snaps = search(random_search(12, 24, 6, 0, 6002, 1000, {"snap"}));
  return {edges.instances == 1000 && snaps.instances == 1000 && none_failed_or_skipped(edges) &&
              none_failed_or_skipped(snaps),
          failure_summary(edges) + "; " + failure_summary(snaps)};
}

Outcome hodge_criterion() {
  const AggregateReport a = search(random_search(12, 20, 5, 5, 7001, 500, {"hodge"}));
  return {a.instances == 500 && none_failed_or_skipped(a), failure_summary(a) + " at 1e-8"};
}

Outcome connection_identities() {
  std::size_t passed = 0;
  double max_ratio = 0.0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    SplitMix64 rng = instance_stream(8001, i);
    const std::size_t n = 2 + rng.uniform(9);
    const Quiver q = random_quiver(n, rng.uniform(n * (n - 1) / 2 + 1), 0, 0, rng);
    const CheckReport r = check_connection(q);
    if (r.verdict != Verdict::pass) return {false, "instance " + std::to_string(i) + " " + std::string(to_string(r.verdict))};
    if (r.stats.at("radius_L") > 0) max_ratio = std::max(max_ratio, r.stats.at("radius_g") / r.stats.at("radius_L"));
    ++passed;
  }
  return {true, std::to_string(passed) + "/500 simple graphs, n<=10; max radius(g)/radius(L) = " +
                    std::to_string(max_ratio)};
}

Outcome hadamard_criterion() {
  SearchSpec spec = random_search(10, 18, 4, 4, 9001, 1000, {"hadamard"});
  spec.options.tolerance = 1e-9;
  const AggregateReport a = search(spec);
  return {a.instances == 1000 && none_failed_or_skipped(a), failure_summary(a) + " at 1e-9"};
}

Outcome certificate_criterion() {
  const Certificate c16 = brouwer_certificate(cycle(16));
  const Certificate p20 = brouwer_certificate(path(20));
  const Certificate c15 = brouwer_certificate(cycle(15));
  const bool ok = c16.verdict() == Verdict::pass && p20.verdict() == Verdict::pass &&
                  c15.verdict() == Verdict::inapplicable;
  return {ok, "cycle(16) " + std::string(to_string(c16.verdict())) + ", path(20) " +
                  std::string(to_string(p20.verdict())) + ", cycle(15) " + std::string(to_string(c15.verdict()))};
}

Outcome pointwise_criterion() {
  SearchSpec spec = random_search(15, 30, 10, 0, 11001, 1000, {"pointwise"});
  spec.options.tolerance = 1e-7;
  const AggregateReport a = search(spec);
  return {a.instances == 1000 && none_failed_or_skipped(a), failure_summary(a) + " at 1e-7"};
}

Outcome reproducibility() {
  SearchSpec spec = random_search(10, 16, 3, 3, 12001, 300, {"brouwer", "sandwich", "interlacing", "hadamard"});
  spec.explore_s3 = true;
  const std::string first = to_json(search(spec)).dump(2);
  const std::string second = to_json(search(spec)).dump(2);
  spec.threads = 2;
  const std::string threaded = to_json(search(spec)).dump(2);

  SearchSpec classical = random_search(6, 6, 0, 4, 12002, 50, {"brouwer"});
  classical.options.classical_bound = true;
  const std::string with_failures_a = to_json(search(classical)).dump(2);
  const std::string with_failures_b = to_json(search(classical)).dump(2);

  const bool ok = first == second && first == threaded && with_failures_a == with_failures_b;
  return {ok, "repeated and threaded runs byte-identical (" + std::to_string(first.size()) + " and " +
                  std::to_string(with_failures_a.size()) + " bytes)"};
}

}  // namespace

int main() {
  Suite suite;
  suite.run(1, "ribbon sharpness", ribbon_sharpness, 1.0);
  suite.run(2, "classical bound falsified", classical_falsification);
  suite.run(3, "K7 ribbon fixture", k7_fixture);
  suite.run(4, "exhaustive n=6 Brouwer and signless", exhaustive_six, 60.0);
  suite.run(5, "sandwich, Lew and degree bounds", sandwich_lew_degree);
  suite.run(6, "edge interlacing and snap", interlacing_criterion);
  suite.run(7, "Hodge supersymmetry", hodge_criterion);
  suite.run(8, "connection matrix identities", connection_identities, 120.0);
  suite.run(9, "Hadamard monotonicity", hadamard_criterion);
  suite.run(10, "spanning-tree certificate", certificate_criterion);
  suite.run(11, "pointwise eigenvalue bounds", pointwise_criterion);
  suite.run(12, "reproducible search reports", reproducibility);
  std::cout << (suite.all_ok() ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return suite.all_ok() ? 0 : 1;
}
