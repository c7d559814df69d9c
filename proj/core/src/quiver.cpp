#include "quiver/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <utility>

#include "quiver/error.hpp"

namespace quiver {

namespace {

using Pair = std::pair<Vertex, Vertex>;

Pair unordered(const Edge& e) { return std::minmax(e.tail, e.head); }

std::map<Pair, std::size_t> pair_multiplicities(const Quiver& q) {
  std::map<Pair, std::size_t> counts;
  for (const Edge& e : q.edges())
    if (!e.is_loop()) ++counts[unordered(e)];
  return counts;
}

std::vector<std::vector<bool>> adjacency(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : q.edges()) {
    if (e.is_loop()) continue;
    adj[e.tail][e.head] = true;
    adj[e.head][e.tail] = true;
  }
  return adj;
}

void require_index(std::size_t index, std::size_t size, const char* what) {
  if (index >= size)
    throw IndexError(std::string(what) + " index " + std::to_string(index) + " out of range [0, " +
                     std::to_string(size) + ")");
}

}  // namespace

Quiver::Quiver(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw PreconditionError("a quiver needs at least one vertex");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].tail >= n_ || edges_[k].head >= n_)
      throw IndexError("edge " + std::to_string(k) + " has an endpoint outside [0, " + std::to_string(n_) +
                              ")");
  }
}

const Edge& Quiver::edge(std::size_t k) const {
  require_index(k, edges_.size(), "edge");
  return edges_[k];
}

std::size_t Quiver::loop_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

std::size_t Quiver::loop_count_at(Vertex v) const {
  require_index(v, n_, "vertex");
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.is_loop() && e.tail == v; }));
}

bool Quiver::has_multiple_connections() const {
  const auto counts = pair_multiplicities(*this);
  return std::any_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second > 1; });
}

long long DegreeSequence::partial_sum(std::size_t k) const {
  k = std::min(k, sorted.size());
  long long s = 0;
  for (std::size_t i = 0; i < k; ++i) s += sorted[i];
  return s;
}

DegreeSequence degrees(const Quiver& q) {
  DegreeSequence d;
  d.per_vertex.assign(q.vertex_count(), 0);
  for (const Edge& e : q.edges()) {
    ++d.per_vertex[e.tail];
    if (!e.is_loop()) ++d.per_vertex[e.head];
  }
  d.sorted = d.per_vertex;
  std::sort(d.sorted.begin(), d.sorted.end(), std::greater<>());
  return d;
}

long long redundancy(const Quiver& q) {
  long long r = 0;
  for (const auto& [pair, count] : pair_multiplicities(q)) r += static_cast<long long>(count) - 1;
  return r;
}

std::size_t multiplicity(const Quiver& q, Vertex a, Vertex b) {
  require_index(a, q.vertex_count(), "vertex");
  require_index(b, q.vertex_count(), "vertex");
  if (a == b) throw PreconditionError("multiplicity is defined for distinct vertices");
  const Pair key = std::minmax(a, b);
  return static_cast<std::size_t>(
      std::count_if(q.edges().begin(), q.edges().end(), [&](const Edge& e) { return !e.is_loop() && unordered(e) == key; }));
}

Quiver remove_edge(const Quiver& q, std::size_t edge_index) {
  require_index(edge_index, q.edge_count(), "edge");
  std::vector<Edge> edges(q.edges().begin(), q.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return Quiver(q.vertex_count(), std::move(edges));
}

Quiver add_edge(const Quiver& q, Edge e) {
  std::vector<Edge> edges(q.edges().begin(), q.edges().end());
  edges.push_back(e);
  return Quiver(q.vertex_count(), std::move(edges));
}

Quiver add_loops_everywhere(const Quiver& q, std::size_t count) {
  std::vector<Edge> edges(q.edges().begin(), q.edges().end());
  for (Vertex v = 0; v < q.vertex_count(); ++v)
    for (std::size_t i = 0; i < count; ++i) edges.push_back({v, v});
  return Quiver(q.vertex_count(), std::move(edges));
}

Quiver flip_edge(const Quiver& q, std::size_t edge_index) {
  require_index(edge_index, q.edge_count(), "edge");
  std::vector<Edge> edges(q.edges().begin(), q.edges().end());
  std::swap(edges[edge_index].tail, edges[edge_index].head);
  return Quiver(q.vertex_count(), std::move(edges));
}

Quiver snap(const Quiver& q, Vertex v) {
  require_index(v, q.vertex_count(), "vertex");
  if (q.vertex_count() < 2) throw PreconditionError("snap needs at least two vertices");
  if (q.has_multiple_connections()) throw PreconditionError("snap requires a quiver without multiple connections");

  const auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  std::vector<Edge> edges;
  edges.reserve(q.edge_count());
  for (const Edge& e : q.edges()) {
    if (e.is_loop()) {
      if (e.tail != v) edges.push_back({shift(e.tail), shift(e.tail)});
    } else if (e.tail == v) {
      edges.push_back({shift(e.head), shift(e.head)});
    } else if (e.head == v) {
      edges.push_back({shift(e.tail), shift(e.tail)});
    } else {
      edges.push_back({shift(e.tail), shift(e.head)});
    }
  }
  return Quiver(q.vertex_count() - 1, std::move(edges));
}

Quiver complement(const Quiver& q) {
  if (!q.is_simple()) throw PreconditionError("complement requires a simple graph");
  const auto adj = adjacency(q);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < q.vertex_count(); ++i)
    for (Vertex j = i + 1; j < q.vertex_count(); ++j)
      if (!adj[i][j]) edges.push_back({i, j});
  return Quiver(q.vertex_count(), std::move(edges));
}

bool has_triangle(const Quiver& q) {
  const auto adj = adjacency(q);
  const std::size_t n = q.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (Vertex c = b + 1; c < n; ++c)
        if (adj[a][c] && adj[b][c]) return true;
    }
  return false;
}

Quiver subdivide(const Quiver& q) {
  if (!q.is_simple()) throw PreconditionError("subdivision requires a simple graph");
  if (has_triangle(q)) throw PreconditionError("subdivision requires a triangle-free graph");
  const std::size_t n = q.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * q.edge_count());
  for (std::size_t k = 0; k < q.edge_count(); ++k) {
    const Edge& e = q.edges()[k];
    edges.push_back({e.tail, n + k});
    edges.push_back({n + k, e.head});
  }
  return Quiver(n + q.edge_count(), std::move(edges));
}

std::vector<std::size_t> components(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<Vertex>> nbrs(n);
  for (const Edge& e : q.edges()) {
    if (e.is_loop()) continue;
    nbrs[e.tail].push_back(e.head);
    nbrs[e.head].push_back(e.tail);
  }
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(n, unseen);
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (id[s] != unseen) continue;
    std::queue<Vertex> frontier;
    frontier.push(s);
    id[s] = next;
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : nbrs[u])
        if (id[w] == unseen) {
          id[w] = next;
          frontier.push(w);
        }
    }
    ++next;
  }
  return id;
}

std::size_t component_count(const Quiver& q) {
  const auto id = components(q);
  return id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
}

bool is_connected(const Quiver& q) { return component_count(q) == 1; }

SpanningTree spanning_tree(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  // incident[v] lists edge indices touching v in list order.
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t k = 0; k < q.edge_count(); ++k) {
    const Edge& e = q.edges()[k];
    if (e.is_loop()) continue;
    incident[e.tail].push_back(k);
    incident[e.head].push_back(k);
  }

  SpanningTree tree;
  std::vector<bool> visited(n, false);
  std::vector<bool> used(q.edge_count(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  visited[0] = true;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (std::size_t k : incident[u]) {
      const Edge& e = q.edges()[k];
      const Vertex w = e.tail == u ? e.head : e.tail;
      if (visited[w]) continue;
      visited[w] = true;
      used[k] = true;
      tree.tree_edges.push_back(k);
      frontier.push(w);
    }
  }
  if (tree.tree_edges.size() + 1 != n) throw PreconditionError("spanning tree requires a connected quiver");
  for (std::size_t k = 0; k < q.edge_count(); ++k)
    if (!used[k]) tree.remaining_edges.push_back(k);
  return tree;
}

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next line that is neither blank nor a comment; false at end of input.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }
};

std::vector<std::size_t> parse_integers(const std::string& line, std::size_t line_no) {
  std::vector<std::size_t> values;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::size_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
      throw ParseError("expected a non-negative integer in \"" + line + "\"", line_no);
    values.push_back(value);
    p = next;
  }
  return values;
}

}  // namespace

Quiver read_qvr(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError("empty input, expected header \"n m\"", reader.line_no);
  const auto header = parse_integers(line, reader.line_no);
  if (header.size() != 2) throw ParseError("header must be \"n m\"", reader.line_no);
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  if (n == 0) throw ParseError("vertex count must be positive", reader.line_no);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (!reader.next(line))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k), reader.line_no);
    const auto pair = parse_integers(line, reader.line_no);
    if (pair.size() != 2) throw ParseError("edge line must be \"tail head\"", reader.line_no);
    if (pair[0] >= n || pair[1] >= n) throw ParseError("edge endpoint outside [0, " + std::to_string(n) + ")", reader.line_no);
    edges.push_back({pair[0], pair[1]});
  }
  if (reader.next(line)) throw ParseError("trailing content after " + std::to_string(m) + " edges", reader.line_no);
  return Quiver(n, std::move(edges));
}

Quiver parse_qvr(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_qvr(in);
}

Quiver load_qvr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_qvr(in);
}

std::string to_qvr(const Quiver& q) {
  std::ostringstream out;
  out << q.vertex_count() << ' ' << q.edge_count() << '\n';
  for (const Edge& e : q.edges()) out << e.tail << ' ' << e.head << '\n';
  return out.str();
}

}  // namespace quiver
