#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quiver {

using Vertex = std::size_t;

/// A directed edge. `tail == head` encodes a loop.
struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  constexpr bool is_loop() const noexcept { return tail == head; }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Finite graph with loops and parallel edges allowed.
///
/// The edge list is ordered: position k in the list is row k of the
/// gradient. Values are immutable once constructed; every structural
/// operation below returns a new quiver.
class Quiver {
 public:
  /// Throws PreconditionError if n == 0 or an endpoint is out of range.
  Quiver(std::size_t n, std::vector<Edge> edges = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t k) const;

  std::size_t loop_count() const noexcept;
  std::size_t loop_count_at(Vertex v) const;
  std::size_t non_loop_edge_count() const noexcept { return edge_count() - loop_count(); }

  bool has_loops() const noexcept { return loop_count() > 0; }
  /// Some unordered pair {i, j}, i != j, carries two or more edges.
  bool has_multiple_connections() const;
  /// No loops and no repeated unordered pair.
  bool is_simple() const { return !has_loops() && !has_multiple_connections(); }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Degrees sorted non-increasingly, plus the per-vertex values they came
/// from. A loop adds 1 to its vertex.
struct DegreeSequence {
  std::vector<long long> sorted;
  std::vector<long long> per_vertex;

  long long max() const { return sorted.empty() ? 0 : sorted.front(); }
  /// Sum of the k largest degrees; k may be 0.
  long long partial_sum(std::size_t k) const;
};

DegreeSequence degrees(const Quiver& q);

/// Sum over unordered vertex pairs of max(0, multiplicity - 1). Loops never
/// count: this is the number of edges to delete to leave no parallel edges.
long long redundancy(const Quiver& q);

/// Multiplicity of the unordered pair {a, b}, a != b.
std::size_t multiplicity(const Quiver& q, Vertex a, Vertex b);

Quiver remove_edge(const Quiver& q, std::size_t edge_index);
Quiver add_edge(const Quiver& q, Edge e);
/// `count` loops appended at every vertex, in vertex order.
Quiver add_loops_everywhere(const Quiver& q, std::size_t count);
/// Reverse the orientation of edge `edge_index` (loops unchanged).
Quiver flip_edge(const Quiver& q, std::size_t edge_index);

/// Delete vertex v; every edge (v, w) turns into a loop at w and loops at v
/// disappear. Vertices above v shift down by one. Requires no multiple
/// connections and n >= 2.
///
/// K(snap(q, v)) is K(q) with row and column v removed.
Quiver snap(const Quiver& q, Vertex v);

/// Simple graph on the same vertices whose edges are exactly the non-edges
/// of q, listed as (i, j), i < j, in lexicographic order.
Quiver complement(const Quiver& q);

bool has_triangle(const Quiver& q);

/// Edge subdivision of a simple triangle-free graph. Edge k = (a, b)
/// becomes (a, n + k), (n + k, b).
Quiver subdivide(const Quiver& q);

/// Connected components of the underlying undirected graph, loops ignored.
/// Entry v is the component id of v; ids are assigned in order of the
/// smallest vertex in each component.
std::vector<std::size_t> components(const Quiver& q);
std::size_t component_count(const Quiver& q);
bool is_connected(const Quiver& q);

struct SpanningTree {
  std::vector<std::size_t> tree_edges;       // n - 1 indices, discovery order
  std::vector<std::size_t> remaining_edges;  // every other index, list order
};

/// BFS from vertex 0 scanning edges in list order. Throws PreconditionError
/// on disconnected input.
SpanningTree spanning_tree(const Quiver& q);

// .qvr text format: "n m" then m lines "tail head". Lines starting with '#'
// and blank lines are ignored.

Quiver parse_qvr(std::string_view text);
Quiver read_qvr(std::istream& in);
Quiver load_qvr(const std::string& path);
std::string to_qvr(const Quiver& q);

}  // namespace quiver
