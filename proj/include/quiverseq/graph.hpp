#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace quiverseq {

// Vertices are the ids 1..n.
using Vertex = int;
using VertexSet = std::set<Vertex>;
using CartanMatrix = std::vector<std::vector<int>>;

// Connected, loop-free multigraph on at least two vertices.
class Graph {
 public:
  // Builds from an unordered edge list; parallel edges are repeated pairs.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  // -a_ij edges between i and j.  Throws invalid_cartan / not_indecomposable.
  static Graph from_cartan(const CartanMatrix& a);

  int size() const noexcept { return n_; }
  int edge_multiplicity(Vertex u, Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t edge_count() const;
  CartanMatrix cartan() const;

  bool operator==(const Graph& other) const = default;

 private:
  Graph() = default;
  void validate() const;

  int n_ = 0;
  std::vector<int> mult_;  // n*n, symmetric
};

struct Arrow {
  Vertex source;
  Vertex target;
  bool operator==(const Arrow&) const = default;
};

// A graph with an acyclic orientation.  Arrow instances keep their index
// across reflections so parallel arrows stay distinguishable.
class Quiver {
 public:
  // Orients the edges of g; each unordered pair must appear exactly as often
  // as its edge multiplicity.  Throws not_acyclic on an oriented cycle.
  static Quiver make(const Graph& g, std::vector<Arrow> arrows);
  // Derives the graph from the arrows.
  static Quiver from_arrows(int n, std::vector<Arrow> arrows);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  int size() const noexcept { return graph_.size(); }

  bool is_sink(Vertex x) const;
  bool is_source(Vertex x) const;
  VertexSet sinks() const;
  VertexSet sources() const;
  std::vector<std::size_t> arrows_into(Vertex x) const;
  std::vector<std::size_t> arrows_out_of(Vertex x) const;

  // Reverses every arrow incident with x.
  Quiver reflect(Vertex x) const;

  // u <= v iff there is a path u -> v (length 0 allowed).
  bool leq(Vertex u, Vertex v) const;
  bool is_filter(const VertexSet& xs) const;
  VertexSet principal_filter(Vertex x) const;
  VertexSet upward_closure(const VertexSet& xs) const;
  // Smallest filter containing F and every neighbor of F.  Throws not_filter.
  VertexSet hull(const VertexSet& filter) const;
  VertexSet minimal_elements(const VertexSet& xs) const;

  bool operator==(const Quiver& other) const { return arrows_ == other.arrows_ && graph_ == other.graph_; }

 private:
  Quiver(Graph g, std::vector<Arrow> arrows);
  void check_vertex(Vertex v) const;

  Graph graph_;
  std::vector<Arrow> arrows_;
  std::vector<char> reach_;  // n*n reachability
};

bool is_subset(const VertexSet& a, const VertexSet& b);

// Every acyclic orientation of g, in a fixed order.
std::vector<Quiver> acyclic_orientations(const Graph& g);

}  // namespace quiverseq
