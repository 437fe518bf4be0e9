#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quiverseq/graph.hpp"

namespace fixtures {

using namespace quiverseq;

inline Quiver q3() { return Quiver::from_arrows(3, {{1, 2}, {2, 3}}); }
inline Quiver qk() { return Quiver::from_arrows(2, {{1, 2}, {1, 2}}); }
inline Quiver a2() { return Quiver::from_arrows(2, {{1, 2}}); }

inline Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}
inline Graph triangle() { return Graph(3, {{1, 2}, {2, 3}, {1, 3}}); }
inline Graph kronecker() { return Graph(2, {{1, 2}, {1, 2}}); }

inline CartanMatrix cartan_a(int n) { return path_graph(n).cartan(); }

inline std::vector<Quiver> a4_orientations() { return acyclic_orientations(path_graph(4)); }
inline std::vector<Quiver> triangle_orientations() { return acyclic_orientations(triangle()); }

struct Named {
  std::string name;
  Quiver quiver;
};

// Q3, QK, every acyclic orientation of the A4 path and of the triangle.
inline std::vector<Named> lattice_quivers() {
  std::vector<Named> out{{"Q3", q3()}, {"QK", qk()}};
  int i = 0;
  for (auto& q : a4_orientations()) out.push_back({"A4#" + std::to_string(i++), q});
  i = 0;
  for (auto& q : triangle_orientations()) out.push_back({"tri#" + std::to_string(i++), q});
  return out;
}

// Q3, QK and one triangle orientation: the smaller set used by module computations.
inline std::vector<Named> module_quivers() {
  return {{"Q3", q3()}, {"QK", qk()}, {"tri", triangle_orientations().front()}};
}

}  // namespace fixtures
