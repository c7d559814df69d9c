#include "quiver/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quiver {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

std::string_view to_string(ProofCase c) noexcept {
  return c == ProofCase::large_k ? "k >= 2d1" : "k < 2d1";
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Collects per-index margins and turns them into a verdict.
class Margins {
 public:
  explicit Margins(double tolerance) : tol_(tolerance) {}

  // An inequality "quantity <= bound" at `index`, given as bound - quantity.
  void bound(std::size_t index, double margin) {
    record(index, margin);
    if (std::abs(margin) <= tol_) sharp_.push_back(index);
  }

  // An identity that should hold exactly (or within tolerance).
  void identity(std::size_t index, double deviation) { record(index, -std::abs(deviation)); }

  void finish(CheckReport& r) const {
    r.tolerance = tol_;
    r.margin = min_ == inf ? 0.0 : min_;
    r.first_violation = first_;
    r.sharp = sharp_;
    std::sort(r.sharp.begin(), r.sharp.end());
    r.sharp.erase(std::unique(r.sharp.begin(), r.sharp.end()), r.sharp.end());
    r.verdict = r.margin < -tol_ ? Verdict::fail : Verdict::pass;
  }

  void clear_sharp() { sharp_.clear(); }

 private:
  void record(std::size_t index, double margin) {
    min_ = std::min(min_, margin);
    if (margin < -tol_ && !first_) first_ = index;
  }

  double tol_;
  double min_ = inf;
  std::optional<std::size_t> first_;
  std::vector<std::size_t> sharp_;
};

double default_tolerance(const Quiver& q, const CheckOptions& opts) {
  if (opts.tolerance) return *opts.tolerance;
  return inequality_slack(static_cast<double>(degrees(q).partial_sum(q.vertex_count())));
}

CheckReport start(std::string name, const Quiver& q) {
  CheckReport r;
  r.check = std::move(name);
  r.quiver = to_qvr(q);
  return r;
}

CheckReport inapplicable(CheckReport r, double tolerance, std::string reason) {
  r.verdict = Verdict::inapplicable;
  r.tolerance = tolerance;
  r.reason = std::move(reason);
  return r;
}

double max_abs_difference(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return inf;
  if (a.size() == 0) return 0.0;
  return static_cast<double>((a - b).cwiseAbs().maxCoeff());
}

IntMatrix without_row_column(const IntMatrix& m, Eigen::Index drop) {
  const Eigen::Index N = m.rows();
  IntMatrix out(N - 1, N - 1);
  for (Eigen::Index i = 0, oi = 0; i < N; ++i) {
    if (i == drop) continue;
    for (Eigen::Index j = 0, oj = 0; j < N; ++j) {
      if (j == drop) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Cauchy / edge interlacing: outer has lambda_1 >= ..., inner mu_1 >= ...
// with inner.size() == outer.size() or outer.size() - 1. Index k is 1-based.
void interlace(Margins& margins, const Spectrum& outer, const Spectrum& inner) {
  for (std::size_t k = 1; k <= inner.size(); ++k) {
    margins.bound(k, outer.lambda(k) - inner.lambda(k));
    if (k + 1 <= outer.size()) margins.bound(k, inner.lambda(k) - outer.lambda(k + 1));
  }
}

CheckReport brouwer_on(std::string name, const Quiver& q, const Spectrum& spectrum, const CheckOptions& opts) {
  CheckReport r = start(std::move(name), q);
  Margins margins(default_tolerance(q, opts));
  const auto m = static_cast<long long>(q.edge_count());
  const long long red = opts.classical_bound ? 0 : redundancy(q);
  for (std::size_t k = 1; k <= q.vertex_count(); ++k)
    margins.bound(k, static_cast<double>(brouwer_bound(m, red, static_cast<long long>(k))) - spectrum.partial_sum(k));
  margins.finish(r);
  if (opts.classical_bound) r.parameters["classical_bound"] = 1;
  r.stats["r"] = static_cast<double>(red);
  return r;
}

}  // namespace

CheckReport check_brouwer(const Quiver& q, const CheckOptions& opts) {
  return brouwer_on("brouwer", q, eigen_desc(kirchhoff(q)), opts);
}

CheckReport check_signless(const Quiver& q, const CheckOptions& opts) {
  return brouwer_on("signless", q, eigen_desc(signless(q)), opts);
}

CheckReport check_sandwich(const Quiver& q, const CheckOptions& opts) {
  CheckReport r = start("sandwich", q);
  const SequenceTable t = sequence_table(q);
  Margins margins(default_tolerance(q, opts));
  for (const auto& row : t.rows) {
    margins.bound(row.k, row.S - static_cast<double>(row.D));
    margins.bound(row.k, 2.0 * static_cast<double>(row.D) - row.S);
  }
  margins.finish(r);
  return r;
}

CheckReport check_lew(const Quiver& q, const CheckOptions& opts) {
  CheckReport r = start("lew", q);
  const SequenceTable t = sequence_table(q);
  Margins margins(default_tolerance(q, opts));
  for (const auto& row : t.rows) margins.bound(row.k, static_cast<double>(row.H) - row.S);
  margins.finish(r);
  return r;
}

CheckReport check_deg_vs_brouwer(const Quiver& q, const CheckOptions& opts) {
  CheckReport r = start("degree", q);
  const auto d = degrees(q);
  const auto m = static_cast<long long>(q.edge_count());
  const long long red = redundancy(q);
  Margins margins(default_tolerance(q, opts));
  for (std::size_t k = 1; k <= q.vertex_count(); ++k) {
    const long long previous_bound = brouwer_bound(m, red, static_cast<long long>(k) - 1);
    margins.bound(k, static_cast<double>(previous_bound - d.partial_sum(k)));
  }
  margins.finish(r);
  return r;
}

CheckReport check_pointwise(const Quiver& q, const CheckOptions& opts) {
  CheckReport r = start("pointwise", q);
  const auto d = degrees(q).sorted;
  const Spectrum s = eigen_desc(kirchhoff(q));
  const bool lower = !q.has_multiple_connections();
  Margins margins(default_tolerance(q, opts));
  const std::size_t n = q.vertex_count();
  for (std::size_t j = 1; j <= n; ++j) {
    const long long upper = d[j - 1] + (j < n ? d[j] : 0);
    margins.bound(j, static_cast<double>(upper) - s.lambda(j));
    if (lower) margins.bound(j, s.lambda(j) - static_cast<double>(d[j - 1] - static_cast<long long>(j) + 1));
  }
  margins.finish(r);
  r.stats["lower_bound_checked"] = lower ? 1.0 : 0.0;
  return r;
}

CheckReport check_interlacing_edge(const Quiver& q, std::size_t edge_index, const CheckOptions& opts) {
  const Quiver reduced = remove_edge(q, edge_index);
  CheckReport r = start("interlacing", q);
  r.parameters["edge"] = static_cast<long long>(edge_index);
  const Spectrum before = eigen_desc(kirchhoff(q));
  const Spectrum after = eigen_desc(kirchhoff(reduced));
  Margins margins(default_tolerance(q, opts));
  interlace(margins, before, after);
  margins.finish(r);
  r.stats["lambda1_before"] = before.lambda(1);
  r.stats["lambda1_after"] = after.lambda(1);
  return r;
}

CheckReport check_snap(const Quiver& q, Vertex v, const CheckOptions& opts) {
  if (v >= q.vertex_count()) throw IndexError("snap vertex out of range");
  CheckReport r = start("snap", q);
  r.parameters["vertex"] = static_cast<long long>(v);
  const double tol = default_tolerance(q, opts);
  if (q.vertex_count() < 2) return inapplicable(std::move(r), tol, "snap needs at least two vertices");
  if (q.has_multiple_connections()) return inapplicable(std::move(r), tol, "quiver has multiple connections");

  const Quiver h = snap(q, v);
  const IntMatrix KG = kirchhoff(q);
  const IntMatrix KH = kirchhoff(h);
  const Spectrum lambda = eigen_desc(KG);
  const Spectrum mu = eigen_desc(KH);
  Margins margins(tol);

  margins.identity(0, max_abs_difference(KH, without_row_column(KG, static_cast<Eigen::Index>(v))));
  interlace(margins, lambda, mu);

  const auto mG = static_cast<long long>(q.edge_count());
  const auto mH = static_cast<long long>(h.edge_count());
  const long long rG = redundancy(q);
  const long long rH = redundancy(h);
  for (std::size_t k = 1; k <= h.vertex_count(); ++k) {
    const auto kk = static_cast<long long>(k);
    margins.bound(k, static_cast<double>(brouwer_bound(mG, rG, kk) - brouwer_bound(mH, rH, kk)));
  }
  margins.bound(1, lambda.lambda(1) - mu.lambda(1));
  for (std::size_t k = 1; k <= q.vertex_count(); ++k) {
    const double bound = static_cast<double>(brouwer_bound(mG, rG, static_cast<long long>(k))) + lambda.lambda(1) -
                         static_cast<double>(k);
    margins.bound(k, bound - lambda.partial_sum(k));
  }
  margins.finish(r);
  r.stats["lambda1_before"] = lambda.lambda(1);
  r.stats["lambda1_after"] = mu.lambda(1);
  return r;
}

CheckReport check_hadamard_monotone(const Quiver& q, const Perturbation& p, const CheckOptions& opts) {
  const bool is_loop = p.kind == Perturbation::Kind::add_loop;
  if (p.a >= q.vertex_count() || (!is_loop && p.b >= q.vertex_count()))
    throw IndexError("perturbation vertex out of range");
  if (!is_loop && p.a == p.b) throw PreconditionError("add-edge perturbation needs two distinct vertices");

  CheckReport r = start("hadamard", q);
  r.parameters["a"] = static_cast<long long>(p.a);
  r.parameters["b"] = static_cast<long long>(is_loop ? p.a : p.b);
  r.parameters["add_loop"] = is_loop ? 1 : 0;
  const Quiver after = add_edge(q, is_loop ? Edge{p.a, p.a} : Edge{p.a, p.b});
  const Spectrum s0 = eigen_desc(kirchhoff(q));
  const Spectrum s1 = eigen_desc(kirchhoff(after));
  const double growth = is_loop ? 1.0 : 2.0;
  Margins margins(default_tolerance(after, opts));
  for (std::size_t k = 1; k <= q.vertex_count(); ++k) {
    margins.bound(k, s1.lambda(k) - s0.lambda(k));
    margins.bound(k, growth - (s1.partial_sum(k) - s0.partial_sum(k)));
  }
  margins.finish(r);
  return r;
}

CheckReport check_loops_proposition(const Quiver& q, std::size_t loops, const CheckOptions& opts) {
  CheckReport r = start("loops", q);
  r.parameters["loops"] = static_cast<long long>(loops);
  const Quiver loaded = add_loops_everywhere(q, loops);
  const Spectrum s0 = eigen_desc(kirchhoff(q));
  const Spectrum s1 = eigen_desc(kirchhoff(loaded));
  const auto l = static_cast<double>(loops);
  const auto n = static_cast<long long>(q.vertex_count());
  const auto m0 = static_cast<long long>(q.edge_count());
  const auto m1 = static_cast<long long>(loaded.edge_count());
  const long long r0 = redundancy(q);
  const long long r1 = redundancy(loaded);
  Margins margins(default_tolerance(loaded, opts));
  for (std::size_t k = 1; k <= q.vertex_count(); ++k) {
    const auto kk = static_cast<long long>(k);
    margins.identity(k, s1.lambda(k) - (s0.lambda(k) + l));
    margins.identity(k, s1.partial_sum(k) - (s0.partial_sum(k) + l * static_cast<double>(k)));
    margins.identity(k, static_cast<double>(brouwer_bound(m1, r1, kk) -
                                            (brouwer_bound(m0, r0, kk) + static_cast<long long>(loops) * n)));
  }
  margins.finish(r);
  return r;
}

CheckReport check_complement(const Quiver& q, const CheckOptions& opts) {
  CheckReport r = start("complement", q);
  const double tol = default_tolerance(q, opts);
  if (!q.is_simple()) return inapplicable(std::move(r), tol, "complement needs a simple graph");
  const std::size_t n = q.vertex_count();
  const Spectrum s = eigen_desc(kirchhoff(q));
  const Spectrum c = eigen_desc(kirchhoff(complement(q)));
  Margins margins(tol);
  for (std::size_t k = 1; k + 1 <= n; ++k)
    margins.identity(k, s.lambda(k) + c.lambda(n - k) - static_cast<double>(n));
  margins.identity(n, s.lambda(n));
  margins.identity(n, c.lambda(n));
  margins.finish(r);
  return r;
}

CheckReport check_threshold(const Quiver& q, const CheckOptions& opts) {
  const double tol = default_tolerance(q, opts);
  const double radius = spectral_radius(q);
  CheckReport r;
  if (radius > opts.threshold_s + tol) {
    r = inapplicable(start("threshold", q), tol, "spectral radius exceeds the Brouwer threshold");
  } else {
    r = check_brouwer(q, opts);
    r.check = "threshold";
  }
  r.stats["threshold_s"] = opts.threshold_s;
  r.stats["lambda1"] = radius;
  return r;
}

CheckReport check_connection(const Quiver& q, const CheckOptions& opts) {
  CheckReport r = start("connection", q);
  const std::size_t n = q.vertex_count();
  const std::size_t m = q.edge_count();
  const double slack = opts.tolerance.value_or(inequality_slack(static_cast<double>(n + m)));
  if (!q.is_simple()) return inapplicable(std::move(r), slack, "connection matrix needs a simple graph");

  const ConnectionPack pack = connection(q);
  const auto N = static_cast<Eigen::Index>(n + m);
  const auto chi = static_cast<long long>(n) - static_cast<long long>(m);
  const auto deg = degrees(q);
  Margins margins(slack);

  margins.identity(0, abs(pack.detL) == 1 ? 0.0 : 1.0);
  margins.identity(0, max_abs_difference(pack.g * pack.L, IntMatrix::Identity(N, N)));
  for (std::size_t v = 0; v < n; ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    margins.identity(v, static_cast<double>(pack.g(i, i) - (1 - deg.per_vertex[v])));
  }
  margins.identity(0, static_cast<double>(pack.g.sum() - chi));
  margins.identity(0, static_cast<double>(pack.signature() - chi));
  margins.identity(0, max_abs_difference(IntMatrix(pack.L - pack.g), signless_hodge(q)));

  // The same identity with a floating point inverse.
  const RealMatrix Linv = to_real(pack.L).inverse();
  margins.identity(0, (to_real(pack.L) - Linv - to_real(signless_hodge(q))).cwiseAbs().maxCoeff() > 1e-9 ? 1.0 : 0.0);

  const Spectrum sL = eigen_desc(pack.L);
  for (std::size_t k = 0; k < m; ++k) {
    const Quiver reduced = remove_edge(q, k);
    const IntMatrix Lsub = connection_matrix(reduced);
    margins.identity(k, max_abs_difference(Lsub, without_row_column(pack.L, static_cast<Eigen::Index>(n + k))));
    interlace(margins, sL, eigen_desc(Lsub));
  }
  margins.clear_sharp();
  margins.finish(r);

  const Spectrum sg = eigen_desc(pack.g);
  const auto radius = [](const Spectrum& s) {
    return s.values.empty() ? 0.0 : std::max(std::abs(s.values.front()), std::abs(s.values.back()));
  };
  r.stats["det_L"] = static_cast<double>(pack.detL);
  r.stats["signature"] = static_cast<double>(pack.signature());
  r.stats["radius_L"] = radius(sL);
  r.stats["radius_g"] = radius(sg);
  return r;
}

CheckReport check_hodge(const Quiver& q, const CheckOptions& opts) {
  CheckReport r = start("hodge", q);
  Margins margins(opts.tolerance.value_or(1e-8));
  const std::size_t n = q.vertex_count();
  const auto chi = static_cast<double>(static_cast<long long>(n) - static_cast<long long>(q.edge_count()));

  const IntMatrix d = exterior_derivative(q);
  const IntMatrix H = hodge(q);
  margins.identity(0, d.size() == 0 ? 0.0 : static_cast<double>((d * d).cwiseAbs().maxCoeff()));
  const IntMatrix D = dirac(q);
  margins.identity(0, max_abs_difference(IntMatrix(D * D), H));
  margins.identity(1, static_cast<double>(supertrace(H, n)));
  margins.identity(2, static_cast<double>(supertrace(IntMatrix(H * H), n)));

  std::size_t index = 3;
  for (double t : {0.0, 0.1, 1.0, 10.0}) margins.identity(index++, heat_supertrace(q, t) - chi);
  margins.identity(index++, essential_isospectral_margin(q));

  const Betti b = betti(q);
  margins.identity(index, static_cast<double>(static_cast<long long>(b.b0) - static_cast<long long>(b.b1)) - chi);
  margins.finish(r);
  r.stats["b0"] = static_cast<double>(b.b0);
  r.stats["b1"] = static_cast<double>(b.b1);
  return r;
}

Certificate brouwer_certificate(const Quiver& q, const CheckOptions& opts) {
  Certificate cert;
  cert.quiver = to_qvr(q);
  cert.n = q.vertex_count();
  const auto deg = degrees(q);
  cert.max_degree = static_cast<std::size_t>(deg.max());
  cert.tolerance = default_tolerance(q, opts);

  if (!q.is_simple()) {
    cert.reason = "certificate needs a simple graph";
    return cert;
  }
  if (!is_connected(q)) {
    cert.reason = "certificate needs a connected graph";
    return cert;
  }
  const std::size_t d1 = cert.max_degree;
  if (cert.n < 4 * d1 * d1) {
    cert.reason = "n < 4 d1^2";
    return cert;
  }
  cert.applicable = true;

  const SpanningTree tree = spanning_tree(q);
  cert.tree_edges = tree.tree_edges;
  cert.chain = tree.remaining_edges;

  CheckOptions direct = opts;
  direct.classical_bound = false;
  direct.tolerance = cert.tolerance;

  std::vector<Edge> edges;
  for (std::size_t k : tree.tree_edges) edges.push_back(q.edges()[k]);
  Quiver current(q.vertex_count(), edges);
  const CheckReport tree_report = check_brouwer(current, direct);
  cert.tree_brouwer_margin = tree_report.margin;
  bool ok = tree_report.passed();

  const double tol = cert.tolerance;
  const auto n = static_cast<double>(cert.n);
  const auto two_d1 = static_cast<double>(2 * d1);
  Spectrum mu = eigen_desc(kirchhoff(current));
  for (std::size_t added : tree.remaining_edges) {
    edges.push_back(q.edges()[added]);
    Quiver next(q.vertex_count(), edges);
    const Spectrum lambda = eigen_desc(kirchhoff(next));

    CertificateStep step;
    step.added_edge = added;
    Margins inter(tol);
    interlace(inter, lambda, mu);
    CheckReport scratch;
    inter.finish(scratch);
    step.interlacing_margin = scratch.margin;

    const CheckReport bc = check_brouwer(next, direct);
    step.brouwer_margin = bc.margin;

    const auto mA = static_cast<double>(current.edge_count());
    const auto mB = static_cast<double>(next.edge_count());
    const double l1 = lambda.lambda(1);
    for (std::size_t k = 1; k <= cert.n; ++k) {
      const auto kd = static_cast<double>(k);
      const double Sk = lambda.partial_sum(k);
      const double BkB = mB + kd * (kd + 1) / 2;
      CaseRecord rec;
      rec.k = k;
      if (kd >= two_d1) {
        rec.which = ProofCase::large_k;
        const double SA = mu.partial_sum(k - 1);
        rec.margin = std::min({
            l1 + SA - Sk,                          // interlacing: lambda_{j+1} <= mu_j
            mA + kd * (kd - 1) / 2 - SA,           // Brouwer for the smaller graph at k-1
            kd - l1,                               // lambda_1 <= 2 d1 <= k
            BkB - (mA + kd * (kd + 1) / 2),  // one edge was added
        });
      } else {
        rec.which = ProofCase::small_k;
        rec.margin = std::min({
            kd * l1 - Sk,                  // S_k <= k lambda_1
            (two_d1 - kd) * l1,            // k lambda_1 <= 2 d1 lambda_1
            two_d1 * (two_d1 - l1),        // 2 d1 lambda_1 <= 4 d1^2
            n - two_d1 * two_d1,           // 4 d1^2 <= n
            mB + 1 - n,                    // n <= m + 1 (connected)
            kd * (kd + 1) / 2 - 1.0,       // m + 1 <= B_k
        });
      }
      ok = ok && rec.margin >= -tol;
      step.cases.push_back(rec);
    }
    ok = ok && step.interlacing_margin >= -tol && bc.passed();
    cert.steps.push_back(std::move(step));
    current = std::move(next);
    mu = lambda;
  }

  const CheckReport final_report = check_brouwer(q, direct);
  cert.final_brouwer_margin = final_report.margin;
  cert.passed = ok && final_report.passed();
  return cert;
}

CheckReport check_certificate(const Quiver& q, const CheckOptions& opts) {
  const Certificate cert = brouwer_certificate(q, opts);
  CheckReport r = start("certificate", q);
  if (!cert.applicable) return inapplicable(std::move(r), cert.tolerance, cert.reason);
  Margins margins(cert.tolerance);
  margins.bound(0, cert.tree_brouwer_margin);
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    margins.bound(i + 1, step.interlacing_margin);
    margins.bound(i + 1, step.brouwer_margin);
    for (const auto& rec : step.cases) margins.bound(i + 1, rec.margin);
  }
  margins.bound(cert.steps.size() + 1, cert.final_brouwer_margin);
  margins.finish(r);
  r.stats["steps"] = static_cast<double>(cert.steps.size());
  r.stats["max_degree"] = static_cast<double>(cert.max_degree);
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "brouwer", "signless",  "sandwich",   "lew",       "degree",     "pointwise", "interlacing", "snap",
      "hadamard", "loops",    "complement", "threshold", "connection", "hodge",     "certificate"};
  return names;
}

namespace {

// Worst of several reports: a failing one if any, otherwise minimum margin.
CheckReport worst(std::vector<CheckReport> reports, CheckReport fallback) {
  if (reports.empty()) return fallback;
  auto rank = [](const CheckReport& r) {
    return r.verdict == Verdict::fail ? 0 : r.verdict == Verdict::pass ? 1 : 2;
  };
  auto best = std::min_element(reports.begin(), reports.end(), [&](const CheckReport& a, const CheckReport& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a.margin < b.margin;
  });
  return *best;
}

}  // namespace

CheckReport run_check(std::string_view name, const Quiver& q, const CheckParams& params, const CheckOptions& opts) {
  if (name == "brouwer") return check_brouwer(q, opts);
  if (name == "signless") return check_signless(q, opts);
  if (name == "sandwich") return check_sandwich(q, opts);
  if (name == "lew") return check_lew(q, opts);
  if (name == "degree") return check_deg_vs_brouwer(q, opts);
  if (name == "pointwise") return check_pointwise(q, opts);
  if (name == "complement") return check_complement(q, opts);
  if (name == "threshold") return check_threshold(q, opts);
  if (name == "connection") return check_connection(q, opts);
  if (name == "hodge") return check_hodge(q, opts);
  if (name == "certificate") return check_certificate(q, opts);
  if (name == "loops") return check_loops_proposition(q, params.loops.value_or(1), opts);

  if (name == "interlacing") {
    if (params.edge) return check_interlacing_edge(q, *params.edge, opts);
    std::vector<CheckReport> all;
    for (std::size_t e = 0; e < q.edge_count(); ++e) all.push_back(check_interlacing_edge(q, e, opts));
    return worst(std::move(all), inapplicable(start("interlacing", q), default_tolerance(q, opts), "no edges"));
  }
  if (name == "snap") {
    if (params.vertex) return check_snap(q, *params.vertex, opts);
    std::vector<CheckReport> all;
    for (Vertex v = 0; v < q.vertex_count(); ++v) all.push_back(check_snap(q, v, opts));
    return worst(std::move(all), CheckReport{});
  }
  if (name == "hadamard") {
    if (params.perturbation) return check_hadamard_monotone(q, *params.perturbation, opts);
    std::vector<CheckReport> all;
    for (Vertex a = 0; a < q.vertex_count(); ++a) {
      all.push_back(check_hadamard_monotone(q, Perturbation::loop(a), opts));
      for (Vertex b = a + 1; b < q.vertex_count(); ++b)
        all.push_back(check_hadamard_monotone(q, Perturbation::edge(a, b), opts));
    }
    return worst(std::move(all), CheckReport{});
  }
  throw PreconditionError("unknown check \"" + std::string(name) + "\"");
}

CheckReport replay(const CheckReport& report) {
  const Quiver q = parse_qvr(report.quiver);
  CheckOptions opts;
  opts.tolerance = report.tolerance;
  const auto& p = report.parameters;
  opts.classical_bound = p.count("classical_bound") && p.at("classical_bound") != 0;
  if (auto it = report.stats.find("threshold_s"); it != report.stats.end()) opts.threshold_s = it->second;

  CheckParams params;
  if (p.count("edge")) params.edge = static_cast<std::size_t>(p.at("edge"));
  if (p.count("vertex")) params.vertex = static_cast<Vertex>(p.at("vertex"));
  if (p.count("loops")) params.loops = static_cast<std::size_t>(p.at("loops"));
  if (p.count("add_loop")) {
    const auto a = static_cast<Vertex>(p.at("a"));
    const auto b = static_cast<Vertex>(p.at("b"));
    params.perturbation = p.at("add_loop") != 0 ? Perturbation::loop(a) : Perturbation::edge(a, b);
  }
  return run_check(report.check, q, params, opts);
}

}  // namespace quiver
