#include "quiverseq/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "quiverseq/error.hpp"

namespace quiverseq {

namespace {

std::string vertex_str(Vertex v) { return std::to_string(v); }

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n) {
  if (n < 2) throw Error(Errc::invalid_graph, "graph needs at least two vertices");
  mult_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw Error(Errc::invalid_graph, "edge endpoint out of range: " + vertex_str(u) + "-" + vertex_str(v));
    if (u == v) throw Error(Errc::invalid_graph, "loop at vertex " + vertex_str(u));
    ++mult_[(u - 1) * n + (v - 1)];
    ++mult_[(v - 1) * n + (u - 1)];
  }
  validate();
}

Graph Graph::from_cartan(const CartanMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw Error(Errc::invalid_cartan, "Cartan matrix must be at least 2x2");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw Error(Errc::invalid_cartan, "Cartan matrix is not square");
  Graph g;
  g.n_ = n;
  g.mult_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw Error(Errc::invalid_cartan, "diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) + " != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] != a[j][i]) throw Error(Errc::invalid_cartan, "Cartan matrix is not symmetric");
      if (a[i][j] > 0) throw Error(Errc::invalid_cartan, "positive off-diagonal Cartan entry");
      g.mult_[i * n + j] = -a[i][j];
    }
  }
  g.validate();
  return g;
}

void Graph::validate() const {
  // connectivity == indecomposability of the Cartan matrix
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n_; ++v)
      if (mult_[u * n_ + v] > 0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(Errc::not_indecomposable, "graph is disconnected (Cartan matrix decomposes)");
}

int Graph::edge_multiplicity(Vertex u, Vertex v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw Error(Errc::invalid_argument, "vertex out of range");
  return mult_[(u - 1) * n_ + (v - 1)];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= n_; ++u)
    if (edge_multiplicity(u, v) > 0) out.push_back(u);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (int v : mult_) total += static_cast<std::size_t>(v);
  return total / 2;
}

CartanMatrix Graph::cartan() const {
  CartanMatrix a(n_, std::vector<int>(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a[i][j] = i == j ? 2 : -mult_[i * n_ + j];
  return a;
}

Quiver::Quiver(Graph g, std::vector<Arrow> arrows) : graph_(std::move(g)), arrows_(std::move(arrows)) {
  const int n = graph_.size();
  std::vector<std::vector<int>> succ(n);
  for (const auto& a : arrows_) succ[a.source - 1].push_back(a.target - 1);

  // Kahn's algorithm on in-degrees
  std::vector<int> indeg(n, 0);
  for (const auto& a : arrows_) ++indeg[a.target - 1];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    ++seen;
    for (int v : succ[u])
      if (--indeg[v] == 0) queue.push_back(v);
  }
  if (seen != static_cast<std::size_t>(n)) throw Error(Errc::not_acyclic, "orientation has an oriented cycle");

  reach_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack{s};
    reach_[s * n + s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : succ[u])
        if (!reach_[s * n + v]) {
          reach_[s * n + v] = 1;
          stack.push_back(v);
        }
    }
  }
}

Quiver Quiver::make(const Graph& g, std::vector<Arrow> arrows) {
  const int n = g.size();
  std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
  for (const auto& a : arrows) {
    if (a.source < 1 || a.source > n || a.target < 1 || a.target > n)
      throw Error(Errc::invalid_graph, "arrow endpoint out of range");
    if (a.source == a.target) throw Error(Errc::invalid_graph, "loop arrow at vertex " + vertex_str(a.source));
    ++count[(a.source - 1) * n + (a.target - 1)];
    ++count[(a.target - 1) * n + (a.source - 1)];
  }
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (count[(u - 1) * n + (v - 1)] != g.edge_multiplicity(u, v))
        throw Error(Errc::invalid_graph, "arrows do not match the edge multiplicity between " + vertex_str(u) +
                                             " and " + vertex_str(v));
  return Quiver(g, std::move(arrows));
}

Quiver Quiver::from_arrows(int n, std::vector<Arrow> arrows) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(arrows.size());
  for (const auto& a : arrows) edges.emplace_back(a.source, a.target);
  Graph g(n, edges);
  return Quiver(std::move(g), std::move(arrows));
}

void Quiver::check_vertex(Vertex v) const {
  if (v < 1 || v > size()) throw Error(Errc::invalid_argument, "vertex " + vertex_str(v) + " out of range");
}

bool Quiver::is_sink(Vertex x) const {
  check_vertex(x);
  return std::none_of(arrows_.begin(), arrows_.end(), [x](const Arrow& a) { return a.source == x; });
}

bool Quiver::is_source(Vertex x) const {
  check_vertex(x);
  return std::none_of(arrows_.begin(), arrows_.end(), [x](const Arrow& a) { return a.target == x; });
}

VertexSet Quiver::sinks() const {
  VertexSet out;
  for (Vertex v = 1; v <= size(); ++v)
    if (is_sink(v)) out.insert(v);
  return out;
}

VertexSet Quiver::sources() const {
  VertexSet out;
  for (Vertex v = 1; v <= size(); ++v)
    if (is_source(v)) out.insert(v);
  return out;
}

std::vector<std::size_t> Quiver::arrows_into(Vertex x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == x) out.push_back(i);
  return out;
}

std::vector<std::size_t> Quiver::arrows_out_of(Vertex x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == x) out.push_back(i);
  return out;
}

Quiver Quiver::reflect(Vertex x) const {
  check_vertex(x);
  std::vector<Arrow> flipped = arrows_;
  for (auto& a : flipped)
    if (a.source == x || a.target == x) std::swap(a.source, a.target);
  return Quiver(graph_, std::move(flipped));
}

bool Quiver::leq(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return reach_[(u - 1) * size() + (v - 1)] != 0;
}

bool Quiver::is_filter(const VertexSet& xs) const {
  for (Vertex x : xs) {
    check_vertex(x);
    for (Vertex y = 1; y <= size(); ++y)
      if (leq(x, y) && !xs.count(y)) return false;
  }
  return true;
}

VertexSet Quiver::principal_filter(Vertex x) const {
  check_vertex(x);
  VertexSet out;
  for (Vertex y = 1; y <= size(); ++y)
    if (leq(x, y)) out.insert(y);
  return out;
}

VertexSet Quiver::upward_closure(const VertexSet& xs) const {
  VertexSet out;
  for (Vertex x : xs) {
    auto up = principal_filter(x);
    out.insert(up.begin(), up.end());
  }
  return out;
}

VertexSet Quiver::hull(const VertexSet& filter) const {
  if (!is_filter(filter)) throw Error(Errc::not_filter, "hull requires a filter");
  VertexSet grown = filter;
  for (Vertex x : filter)
    for (Vertex y : graph_.neighbors(x)) grown.insert(y);
  return upward_closure(grown);
}

VertexSet Quiver::minimal_elements(const VertexSet& xs) const {
  VertexSet out;
  for (Vertex v : xs) {
    bool minimal = true;
    for (Vertex u : xs)
      if (u != v && leq(u, v)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(v);
  }
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<Quiver> acyclic_orientations(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> instances;
  for (Vertex u = 1; u <= g.size(); ++u)
    for (Vertex v = u + 1; v <= g.size(); ++v)
      for (int k = 0; k < g.edge_multiplicity(u, v); ++k) instances.emplace_back(u, v);
  if (instances.size() >= 63) throw Error(Errc::invalid_argument, "too many edges to enumerate orientations");

  std::vector<Quiver> out;
  const std::uint64_t total = std::uint64_t{1} << instances.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Arrow> arrows;
    arrows.reserve(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
      auto [u, v] = instances[i];
      arrows.push_back((mask >> i) & 1U ? Arrow{v, u} : Arrow{u, v});
    }
    try {
      out.push_back(Quiver::make(g, std::move(arrows)));
    } catch (const Error& e) {
      if (e.code() != Errc::not_acyclic) throw;
    }
  }
  return out;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_graph: return "invalid-graph";
    case Errc::invalid_cartan: return "invalid-cartan";
    case Errc::not_indecomposable: return "not-indecomposable";
    case Errc::not_acyclic: return "not-acyclic";
    case Errc::not_filter: return "not-filter";
    case Errc::not_admissible: return "not-admissible";
    case Errc::empty_sequence: return "empty-sequence";
    case Errc::invalid_multiplicity: return "invalid-multiplicity";
    case Errc::base_mismatch: return "base-mismatch";
    case Errc::not_principal: return "not-principal";
    case Errc::not_complete: return "not-complete";
    case Errc::too_short: return "too-short";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::not_sink: return "not-sink";
    case Errc::not_source: return "not-source";
    case Errc::not_reduced: return "not-reduced";
    case Errc::undecided: return "undecided";
    case Errc::no_projective_match: return "no-projective-match";
    case Errc::not_annihilating: return "not-annihilating";
    case Errc::inconsistent: return "inconsistent";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace quiverseq
