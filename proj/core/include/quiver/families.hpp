#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiver/checks.hpp"
#include "quiver/operators.hpp"
#include "quiver/quiver.hpp"
#include "quiver/rng.hpp"

namespace quiver {

// Deterministic families.

/// One vertex carrying m loops.
Quiver clover(std::size_t m);
/// Two vertices joined by m >= 2 parallel edges.
Quiver ribbon(std::size_t m);
/// Edges (i, i+1 mod n), n >= 3.
Quiver cycle(std::size_t n);
/// Edges (i, i+1), n >= 1 vertices.
Quiver path(std::size_t n);
/// n >= 1 vertices, center 0 joined to 1..n-1.
Quiver star(std::size_t n);
Quiver complete(std::size_t n);
Quiver edgeless(std::size_t n);

/// The 7-vertex complete graph with ribbon connections (m = 61, r = 40):
/// c parallel edges (i, j) for every off-diagonal entry -c of the printed
/// Kirchhoff matrix, pairs in lexicographic order.
Quiver k7_ribbon_fixture();
/// The printed 7x7 Kirchhoff matrix the fixture is built from.
IntMatrix k7_ribbon_kirchhoff();

// Random families; all randomness comes from the supplied generator.

/// Uniform labeled tree via a Prüfer sequence.
Quiver random_tree(std::size_t n, SplitMix64& rng);
/// Uniform simple graph with n vertices and m edges (rejection over the
/// n(n-1)/2 pairs), then `loops` loops at uniform vertices, then `multi`
/// copies of uniformly chosen base edges.
Quiver random_quiver(std::size_t n, std::size_t m, std::size_t loops, std::size_t multi, SplitMix64& rng);

enum class Family {
  clover,
  ribbon,
  cycle,
  path,
  star,
  complete,
  edgeless,
  random_tree,
  random_quiver,
  k7_ribbon_fixture,
  enumerate,
};

std::string_view to_string(Family f) noexcept;
/// Throws PreconditionError for unknown names.
Family parse_family(std::string_view name);
bool is_random(Family f) noexcept;

/// A family plus its parameters. Which fields matter depends on the
/// family: clover/ribbon read m; cycle/path/star/complete/edgeless/
/// random_tree read n; random_quiver reads all four; enumerate reads n and
/// treats `index` as the edge bitmask.
struct FamilySpec {
  Family family = Family::random_quiver;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t loops = 0;
  std::size_t multi = 0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

/// Same spec, same quiver, byte for byte.
Quiver generate(const FamilySpec& spec);

/// Every labeled simple graph on n vertices (1 <= n <= 7). Graph `mask`
/// contains pair p, in lexicographic order (0,1), (0,2), ..., iff bit p
/// of mask is set.
class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << pairs_.size(); }
  Quiver operator[](std::uint64_t mask) const;

  class iterator {
   public:
    using value_type = Quiver;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const LabeledGraphs* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}
    Quiver operator*() const { return (*owner_)[mask_]; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const LabeledGraphs* owner_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  std::size_t n_;
  std::vector<Edge> pairs_;
};

LabeledGraphs enumerate_labeled(std::size_t n);

struct SearchSpec {
  FamilySpec family;
  std::vector<std::string> checks;
  std::size_t trials = 1;       // ignored for enumerate (all graphs) and deterministic families (one instance)
  std::uint64_t seed = 0;
  bool explore_s3 = false;      // track max of lambda_1 + lambda_2 + lambda_3 - (m + 6)
  CheckOptions options;
  std::size_t threads = 1;
};

struct CheckAggregate {
  std::string check;
  std::size_t evaluated = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inapplicable = 0;
  std::size_t sharp_hits = 0;
  std::optional<double> min_margin;
  std::optional<std::size_t> worst_instance;
  std::vector<CheckReport> failures;  // first few, in instance order
  // connection only: instances with radius(g) > radius(L), and the largest
  // ratio radius(g) / radius(L) seen
  std::size_t radius_exceedances = 0;
  double max_radius_ratio = 0.0;
};

struct AggregateReport {
  std::string family;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::vector<CheckAggregate> checks;
  std::optional<double> max_s3_excess;
  std::optional<std::size_t> max_s3_instance;

  std::size_t total_failures() const;
};

/// Number of instances a search visits.
std::uint64_t instance_count(const SearchSpec& spec);
/// Quiver number i of a search.
Quiver search_instance(const SearchSpec& spec, std::uint64_t i);
/// Part-of-quiver parameters (edge, vertex, perturbation, loops) chosen
/// for instance i, from a stream independent of quiver generation.
CheckParams search_parameters(const SearchSpec& spec, std::uint64_t i, const Quiver& q);

/// Runs every named check on every instance. Results are aggregated in
/// instance order whatever the thread count, so reports are reproducible.
AggregateReport search(const SearchSpec& spec);

}  // namespace quiver
