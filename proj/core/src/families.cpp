#include "quiver/families.hpp"

#include <algorithm>
#include <array>
#include <thread>
#include <unordered_set>

#include "quiver/error.hpp"

namespace quiver {

Quiver clover(std::size_t m) { return Quiver(1, std::vector<Edge>(m, Edge{0, 0})); }

Quiver ribbon(std::size_t m) {
  if (m < 2) throw PreconditionError("a ribbon needs m >= 2 parallel edges");
  return Quiver(2, std::vector<Edge>(m, Edge{0, 1}));
}

Quiver cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Quiver(n, std::move(edges));
}

Quiver path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Quiver(n, std::move(edges));
}

Quiver star(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  return Quiver(n, std::move(edges));
}

Quiver complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Quiver(n, std::move(edges));
}

Quiver edgeless(std::size_t n) { return Quiver(n); }

IntMatrix k7_ribbon_kirchhoff() {
  static constexpr std::array<std::array<long long, 7>, 7> printed = {{
      {14, -1, -3, -3, -1, -3, -3},
      {-1, 19, -3, -2, -5, -5, -3},
      {-3, -3, 20, -4, -3, -3, -4},
      {-3, -2, -4, 13, -1, -1, -2},
      {-1, -5, -3, -1, 17, -3, -4},
      {-3, -5, -3, -1, -3, 19, -4},
      {-3, -3, -4, -2, -4, -4, 20},
  }};
  IntMatrix K(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) K(i, j) = printed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return K;
}

Quiver k7_ribbon_fixture() {
  const IntMatrix K = k7_ribbon_kirchhoff();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 7; ++i)
    for (Vertex j = i + 1; j < 7; ++j) {
      const long long copies = -K(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      for (long long c = 0; c < copies; ++c) edges.push_back({i, j});
    }
  return Quiver(7, std::move(edges));
}

Quiver random_tree(std::size_t n, SplitMix64& rng) {
  if (n == 0) throw PreconditionError("a tree needs at least one vertex");
  if (n <= 2) return path(n);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.uniform(n));

  std::vector<std::size_t> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    --remaining[leaf];
    --remaining[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (remaining[v] == 1) last.push_back(v);
  edges.push_back({last[0], last[1]});
  return Quiver(n, std::move(edges));
}

Quiver random_quiver(std::size_t n, std::size_t m, std::size_t loops, std::size_t multi, SplitMix64& rng) {
  if (n == 0) throw PreconditionError("random_quiver needs n >= 1");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) throw PreconditionError("random_quiver: m exceeds n(n-1)/2");
  if (multi > 0 && m == 0) throw PreconditionError("random_quiver: duplicates need at least one base edge");

  // Pair index p enumerates (i, j), i < j, row by row.
  const auto decode = [n](std::uint64_t p) {
    Vertex i = 0;
    std::uint64_t row = n - 1;
    while (p >= row) {
      p -= row;
      ++i;
      --row;
    }
    return Edge{i, static_cast<Vertex>(i + 1 + p)};
  };

  std::vector<Edge> edges;
  edges.reserve(m + loops + multi);
  std::unordered_set<std::uint64_t> used;
  while (edges.size() < m) {
    const std::uint64_t p = rng.uniform(pairs);
    if (used.insert(p).second) edges.push_back(decode(p));
  }
  for (std::size_t i = 0; i < loops; ++i) {
    const auto v = static_cast<Vertex>(rng.uniform(n));
    edges.push_back({v, v});
  }
  for (std::size_t i = 0; i < multi; ++i) edges.push_back(edges[rng.uniform(m)]);
  return Quiver(n, std::move(edges));
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> family_names = {{
    {Family::clover, "clover"},
    {Family::ribbon, "ribbon"},
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::star, "star"},
    {Family::complete, "complete"},
    {Family::edgeless, "edgeless"},
    {Family::random_tree, "random_tree"},
    {Family::random_quiver, "random_quiver"},
    {Family::k7_ribbon_fixture, "k7_ribbon_fixture"},
    {Family::enumerate, "enumerate"},
}};

}  // namespace

std::string_view to_string(Family f) noexcept {
  for (const auto& [family, name] : family_names)
    if (family == f) return name;
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, n] : family_names)
    if (n == name) return family;
  throw PreconditionError("unknown family \"" + std::string(name) + "\"");
}

bool is_random(Family f) noexcept { return f == Family::random_tree || f == Family::random_quiver; }

Quiver generate(const FamilySpec& spec) {
  SplitMix64 rng(spec.seed);
  switch (spec.family) {
    case Family::clover: return clover(spec.m);
    case Family::ribbon: return ribbon(spec.m);
    case Family::cycle: return cycle(spec.n);
    case Family::path: return path(spec.n);
    case Family::star: return star(spec.n);
    case Family::complete: return complete(spec.n);
    case Family::edgeless: return edgeless(spec.n);
    case Family::random_tree: return random_tree(spec.n, rng);
    case Family::random_quiver: return random_quiver(spec.n, spec.m, spec.loops, spec.multi, rng);
    case Family::k7_ribbon_fixture: return k7_ribbon_fixture();
    case Family::enumerate: {
      const LabeledGraphs all(spec.n);
      if (spec.index >= all.size()) throw PreconditionError("enumerate: mask out of range");
      return all[spec.index];
    }
  }
  throw PreconditionError("unknown family");
}

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n) {
  if (n < 1 || n > 7) throw PreconditionError("labeled enumeration supports 1 <= n <= 7");
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs_.push_back({i, j});
}

Quiver LabeledGraphs::operator[](std::uint64_t mask) const {
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < pairs_.size(); ++p)
    if (mask >> p & 1U) edges.push_back(pairs_[p]);
  return Quiver(n_, std::move(edges));
}

LabeledGraphs enumerate_labeled(std::size_t n) { return LabeledGraphs(n); }

std::size_t AggregateReport::total_failures() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.failed;
  return total;
}

namespace {

constexpr std::uint64_t generation_salt = 0;
constexpr std::uint64_t parameter_salt = 1;
constexpr std::size_t kept_failures = 5;
constexpr std::uint64_t block_size = 4096;

struct InstanceResult {
  std::vector<CheckReport> reports;
  std::optional<double> s3_excess;
};

InstanceResult evaluate(const SearchSpec& spec, std::uint64_t i) {
  const Quiver q = search_instance(spec, i);
  const CheckParams params = search_parameters(spec, i, q);
  InstanceResult out;
  out.reports.reserve(spec.checks.size());
  for (const auto& name : spec.checks) out.reports.push_back(run_check(name, q, params, spec.options));
  if (spec.explore_s3 && q.vertex_count() >= 3) {
    const Spectrum s = eigen_desc(kirchhoff(q));
    out.s3_excess = s.partial_sum(3) - static_cast<double>(q.edge_count() + 6);
  }
  return out;
}

void absorb(AggregateReport& agg, std::uint64_t i, InstanceResult&& result) {
  for (std::size_t c = 0; c < result.reports.size(); ++c) {
    CheckAggregate& a = agg.checks[c];
    CheckReport& r = result.reports[c];
    ++a.evaluated;
    switch (r.verdict) {
      case Verdict::pass: ++a.passed; break;
      case Verdict::fail: ++a.failed; break;
      case Verdict::inapplicable: ++a.inapplicable; break;
    }
    if (r.verdict == Verdict::inapplicable) continue;
    if (r.sharp_pass()) ++a.sharp_hits;
    if (!a.min_margin || r.margin < *a.min_margin) {
      a.min_margin = r.margin;
      a.worst_instance = static_cast<std::size_t>(i);
    }
    if (r.check == "connection") {
      const double rl = r.stats["radius_L"];
      const double rg = r.stats["radius_g"];
      // Relative slack so that equal radii computed two ways do not count.
      if (rg > rl * (1.0 + 1e-9) + 1e-12) ++a.radius_exceedances;
      if (rl > 0) a.max_radius_ratio = std::max(a.max_radius_ratio, rg / rl);
    }
    if (r.verdict == Verdict::fail && a.failures.size() < kept_failures) a.failures.push_back(std::move(r));
  }
  if (result.s3_excess && (!agg.max_s3_excess || *result.s3_excess > *agg.max_s3_excess)) {
    agg.max_s3_excess = result.s3_excess;
    agg.max_s3_instance = static_cast<std::size_t>(i);
  }
}

}  // namespace

std::uint64_t instance_count(const SearchSpec& spec) {
  if (spec.family.family == Family::enumerate) return LabeledGraphs(spec.family.n).size();
  if (!is_random(spec.family.family)) return 1;
  return spec.trials;
}

Quiver search_instance(const SearchSpec& spec, std::uint64_t i) {
  FamilySpec f = spec.family;
  if (f.family == Family::enumerate) {
    f.index = i;
  } else if (is_random(f.family)) {
    f.seed = instance_stream(spec.seed, i, generation_salt).next();
  }
  return generate(f);
}

CheckParams search_parameters(const SearchSpec& spec, std::uint64_t i, const Quiver& q) {
  SplitMix64 rng = instance_stream(spec.seed, i, parameter_salt);
  CheckParams p;
  const std::size_t n = q.vertex_count();
  // Draw every parameter in a fixed order so streams do not depend on the
  // check list.
  const std::uint64_t edge_draw = rng.next();
  const std::uint64_t vertex_draw = rng.next();
  const std::uint64_t kind_draw = rng.next();
  const std::uint64_t a_draw = rng.next();
  const std::uint64_t b_draw = rng.next();
  const std::uint64_t loops_draw = rng.next();
  if (q.edge_count() > 0) p.edge = static_cast<std::size_t>(edge_draw % q.edge_count());
  p.vertex = static_cast<Vertex>(vertex_draw % n);
  const auto a = static_cast<Vertex>(a_draw % n);
  if (n >= 2 && kind_draw % 2 == 1) {
    auto b = static_cast<Vertex>(b_draw % (n - 1));
    if (b >= a) ++b;
    p.perturbation = Perturbation::edge(a, b);
  } else {
    p.perturbation = Perturbation::loop(a);
  }
  p.loops = static_cast<std::size_t>(loops_draw % 4);
  return p;
}

AggregateReport search(const SearchSpec& spec) {
  for (const auto& name : spec.checks)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw PreconditionError("unknown check \"" + name + "\"");

  AggregateReport agg;
  agg.family = std::string(to_string(spec.family.family));
  agg.seed = spec.seed;
  for (const auto& name : spec.checks) {
    CheckAggregate c;
    c.check = name;
    agg.checks.push_back(std::move(c));
  }

  const std::uint64_t total = instance_count(spec);
  agg.instances = static_cast<std::size_t>(total);
  const std::size_t threads = std::max<std::size_t>(1, spec.threads);

  std::vector<InstanceResult> block;
  for (std::uint64_t start = 0; start < total; start += block_size) {
    const std::uint64_t count = std::min(block_size, total - start);
    block.assign(static_cast<std::size_t>(count), InstanceResult{});
    if (threads == 1) {
      for (std::uint64_t j = 0; j < count; ++j) block[j] = evaluate(spec, start + j);
    } else {
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::jthread> workers;
      for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          try {
            for (std::uint64_t j = t; j < count; j += threads) block[j] = evaluate(spec, start + j);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      workers.clear();
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::uint64_t j = 0; j < count; ++j) absorb(agg, start + j, std::move(block[j]));
  }
  return agg;
}

}  // namespace quiver
