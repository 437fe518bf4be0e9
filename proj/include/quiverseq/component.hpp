#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverseq/admissible.hpp"
#include "quiverseq/graph.hpp"
#include "quiverseq/rep.hpp"

namespace quiverseq {

// One vertex (level, x) of the truncated translation quiver, labeled by the
// principal sequence S_{level+1,x}.
struct ComponentNode {
  NodeIndex node;
  AdmissibleSeq seq;
  bool reduced = false;
  std::optional<DimVector> dims;  // dim M(S), present when the word is reduced
};

struct ComponentEdge {
  NodeIndex from;
  NodeIndex to;
  std::size_t arrow = 0;  // index of the arrow u -> v that produced it
};

struct Component {
  std::vector<ComponentNode> nodes;
  std::vector<ComponentEdge> edges;
};

// Levels 0..levels-1 of N(Gamma, Lambda^op).  Throws invalid_argument for levels < 1.
Component build_component(const Quiver& q, int levels);
std::string export_component(const Quiver& q, int levels);
std::string to_dot(const Component& c);

}  // namespace quiverseq
