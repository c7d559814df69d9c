#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiver/quiver.hpp"
#include "quiver/spectra.hpp"

namespace quiver {

enum class Verdict { pass, fail, inapplicable };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of one named check on one quiver.
///
/// `margin` is the minimum of (bound - quantity) over every inequality the
/// check covers; exact identities contribute minus their deviation. The
/// verdict is fail exactly when margin < -tolerance. `sharp` lists the
/// indices whose margin lies within tolerance of zero.
struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::pass;
  std::optional<std::size_t> first_violation;
  double margin = 0.0;
  double tolerance = 0.0;
  std::vector<std::size_t> sharp;
  std::string quiver;  // inline .qvr text, always replayable
  std::string reason;  // why a check was inapplicable
  std::map<std::string, long long> parameters;  // edge, vertex, loops, ...
  std::map<std::string, double> stats;

  bool passed() const noexcept { return verdict != Verdict::fail; }
  bool sharp_pass() const noexcept { return verdict == Verdict::pass && !sharp.empty(); }
};

struct CheckOptions {
  std::optional<double> tolerance;  // default: inequality_slack(trace K)
  bool classical_bound = false;     // force r = 0 in B_k
  double threshold_s = 2.0;         // Brouwer threshold for check_threshold
};

/// S_k <= m + r + k(k+1)/2 for every k; r is dropped with classical_bound.
CheckReport check_brouwer(const Quiver& q, const CheckOptions& opts = {});
/// Same bound for the eigenvalues of |K|.
CheckReport check_signless(const Quiver& q, const CheckOptions& opts = {});

/// D_k <= S_k <= 2 D_k.
CheckReport check_sandwich(const Quiver& q, const CheckOptions& opts = {});
/// S_k <= m + r + k^2.
CheckReport check_lew(const Quiver& q, const CheckOptions& opts = {});
/// D_k <= B_{k-1}, with B_0 = m + r.
CheckReport check_deg_vs_brouwer(const Quiver& q, const CheckOptions& opts = {});

/// lambda_j <= d_j + d_{j+1} always, and lambda_j >= d_j - j + 1 when the
/// quiver has no multiple connections.
CheckReport check_pointwise(const Quiver& q, const CheckOptions& opts = {});

/// Spectrum of K(q - e) interlaces the spectrum of K(q).
CheckReport check_interlacing_edge(const Quiver& q, std::size_t edge_index, const CheckOptions& opts = {});

/// Principal-submatrix identity, Cauchy interlacing, B_k(H) <= B_k(G),
/// lambda_1(H) <= lambda_1(G) and S_k(G) <= B_k(G) + lambda_1 - k for
/// H = snap(q, v). Inapplicable with multiple connections or n < 2.
CheckReport check_snap(const Quiver& q, Vertex v, const CheckOptions& opts = {});

struct Perturbation {
  enum class Kind { add_loop, add_edge };
  Kind kind = Kind::add_loop;
  Vertex a = 0;
  Vertex b = 0;

  static Perturbation loop(Vertex v) { return {Kind::add_loop, v, v}; }
  static Perturbation edge(Vertex a, Vertex b) { return {Kind::add_edge, a, b}; }
};

/// Eigenvalues never decrease, and S_k grows by at most 1 (loop) or 2
/// (edge) for every k.
CheckReport check_hadamard_monotone(const Quiver& q, const Perturbation& p, const CheckOptions& opts = {});

/// Attaching l loops at every vertex shifts the spectrum by l, S_k by l k
/// and B_k by l n.
CheckReport check_loops_proposition(const Quiver& q, std::size_t loops, const CheckOptions& opts = {});

/// lambda_k(G) + lambda_{n-k}(complement) = n for 1 <= k <= n-1, and both
/// smallest eigenvalues vanish. Simple graphs only.
CheckReport check_complement(const Quiver& q, const CheckOptions& opts = {});

/// Inapplicable when lambda_1 > s; otherwise the Brouwer check.
CheckReport check_threshold(const Quiver& q, const CheckOptions& opts = {});

/// Unimodularity, g L = I, g_xx = 1 - deg(x), sum g = n - m, signature,
/// hydrogen identity and edge-deletion interlacing of L. Simple graphs only.
CheckReport check_connection(const Quiver& q, const CheckOptions& opts = {});

/// d^2 = 0, Dirac^2 = Hodge, str(H) = str(H^2) = 0, str(exp(-t H)) = n - m
/// for t in {0, 0.1, 1, 10}, essential isospectrality, b0 - b1 = n - m.
CheckReport check_hodge(const Quiver& q, const CheckOptions& opts = {});

enum class ProofCase { large_k, small_k };  // k >= 2 d1, k < 2 d1

std::string_view to_string(ProofCase c) noexcept;

struct CaseRecord {
  std::size_t k = 0;
  ProofCase which = ProofCase::large_k;
  double margin = 0.0;  // weakest link of the inequality chain for this k
};

struct CertificateStep {
  std::size_t added_edge = 0;
  double interlacing_margin = 0.0;
  double brouwer_margin = 0.0;  // direct check on the enlarged graph
  std::vector<CaseRecord> cases;
};

/// Evidence that Brouwer's bound holds along a chain of graphs from a
/// spanning tree up to the input graph, for connected simple graphs with
/// n >= 4 d1^2.
struct Certificate {
  bool applicable = false;
  std::string reason;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  double tolerance = 0.0;
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> chain;  // edges added after the tree, in order
  double tree_brouwer_margin = 0.0;
  std::vector<CertificateStep> steps;
  double final_brouwer_margin = 0.0;
  bool passed = false;
  std::string quiver;

  Verdict verdict() const noexcept {
    if (!applicable) return Verdict::inapplicable;
    return passed ? Verdict::pass : Verdict::fail;
  }
};

Certificate brouwer_certificate(const Quiver& q, const CheckOptions& opts = {});

/// Certificate in report form (margin = weakest recorded link).
CheckReport check_certificate(const Quiver& q, const CheckOptions& opts = {});

/// Parameters for checks that act on part of a quiver. Unset values are
/// filled by run_check: every edge / vertex is tried and the worst report
/// is returned.
struct CheckParams {
  std::optional<std::size_t> edge;
  std::optional<Vertex> vertex;
  std::optional<std::size_t> loops;
  std::optional<Perturbation> perturbation;
};

/// Names accepted by run_check, in canonical order.
const std::vector<std::string>& check_names();

/// Dispatch by name. Throws PreconditionError for unknown names.
CheckReport run_check(std::string_view name, const Quiver& q, const CheckParams& params = {},
                      const CheckOptions& opts = {});

/// Re-run the check a report describes on its embedded quiver, with the
/// tolerance, parameters and bound mode recorded in the report.
CheckReport replay(const CheckReport& report);

}  // namespace quiver
