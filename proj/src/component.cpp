#include "quiverseq/component.hpp"

#include <sstream>

#include "quiverseq/error.hpp"
#include "quiverseq/io.hpp"
#include "quiverseq/weyl.hpp"

namespace quiverseq {

namespace {

std::string node_id(NodeIndex n) { return "\"" + std::to_string(n.level) + "," + std::to_string(n.vertex) + "\""; }

}  // namespace

Component build_component(const Quiver& q, int levels) {
  if (levels < 1) throw Error(Errc::invalid_argument, "levels must be positive");
  Component c;
  for (int level = 0; level < levels; ++level)
    for (Vertex x = 1; x <= q.size(); ++x) {
      AdmissibleSeq s = principal(q, level + 1, x);
      const bool reduced = principal_reduced_criterion(s);
      std::optional<DimVector> dims;
      if (reduced) dims = build_module(s).dims();
      c.nodes.push_back(ComponentNode{NodeIndex{level, x}, std::move(s), reduced, std::move(dims)});
    }
  for (int level = 0; level < levels; ++level)
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const Arrow& arrow = q.arrows()[a];
      c.edges.push_back(ComponentEdge{NodeIndex{level, arrow.target}, NodeIndex{level, arrow.source}, a});
      if (level + 1 < levels)
        c.edges.push_back(ComponentEdge{NodeIndex{level, arrow.source}, NodeIndex{level + 1, arrow.target}, a});
    }
  return c;
}

std::string to_dot(const Component& c) {
  std::ostringstream os;
  os << "digraph component {\n";
  os << "  rankdir=LR;\n";
  for (const auto& n : c.nodes) {
    os << "  " << node_id(n.node) << " [label=\"(" << n.node.level << "," << n.node.vertex << ")\\n"
       << io::format_canonical(n.seq) << "\\n" << (n.reduced ? "reduced" : "not reduced");
    if (n.dims) os << "\\ndim " << io::format_dims(*n.dims);
    os << "\", level=" << n.node.level << ", vertex=" << n.node.vertex << ", reduced=" << (n.reduced ? "true" : "false")
       << "];\n";
  }
  for (const auto& e : c.edges)
    os << "  " << node_id(e.from) << " -> " << node_id(e.to) << " [arrow=" << e.arrow << "];\n";
  os << "}\n";
  return os.str();
}

std::string export_component(const Quiver& q, int levels) { return to_dot(build_component(q, levels)); }

}  // namespace quiverseq
