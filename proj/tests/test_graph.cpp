#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quiverseq/error.hpp"
#include "quiverseq/graph.hpp"

using namespace quiverseq;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::inconsistent;
}

std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    VertexSet s;
    for (int v = 1; v <= n; ++v)
      if (mask & (1 << (v - 1))) s.insert(v);
    out.push_back(s);
  }
  return out;
}

std::set<int> as_int_set(const VertexSet& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("graph from Cartan matrix") {
  const Graph a3 = Graph::from_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CHECK(a3.size() == 3);
  CHECK(a3.edge_multiplicity(1, 2) == 1);
  CHECK(a3.edge_multiplicity(2, 3) == 1);
  CHECK(a3.edge_multiplicity(1, 3) == 0);
  CHECK(a3 == fixtures::path_graph(3));

  const Graph k = Graph::from_cartan({{2, -2}, {-2, 2}});
  CHECK(k.edge_multiplicity(1, 2) == 2);
  CHECK(k.edge_count() == 2);

  CHECK(code_of([] { Graph::from_cartan({{2, 0}, {0, 2}}); }) == Errc::not_indecomposable);
  CHECK(code_of([] { Graph::from_cartan({{2, -1}, {-2, 2}}); }) == Errc::invalid_cartan);
  CHECK(code_of([] { Graph::from_cartan({{3, -1}, {-1, 2}}); }) == Errc::invalid_cartan);
  CHECK(code_of([] { Graph::from_cartan({{2, 1}, {1, 2}}); }) == Errc::invalid_cartan);
  CHECK(code_of([] { Graph::from_cartan({{2, -1, 0}, {-1, 2, 0}}); }) == Errc::invalid_cartan);
  CHECK(code_of([] { Graph(1, {}); }) == Errc::invalid_graph);
  CHECK(code_of([] { Graph(2, {{1, 1}}); }) == Errc::invalid_graph);
  CHECK(code_of([] { Graph(3, {{1, 2}}); }) == Errc::not_indecomposable);
}

TEST_CASE("Cartan round trip on every multigraph with n <= 4 and multiplicity <= 2") {
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    int combos = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) combos *= 3;
    for (int code = 0; code < combos; ++code) {
      CartanMatrix a(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      int c = code;
      for (const auto& [i, j] : pairs) {
        a[i - 1][j - 1] = a[j - 1][i - 1] = -(c % 3);
        c /= 3;
      }
      try {
        const Graph g = Graph::from_cartan(a);
        CHECK(g.cartan() == a);
        CHECK(Graph::from_cartan(g.cartan()) == g);
        ++checked;
      } catch (const Error& e) {
        CHECK(e.code() == Errc::not_indecomposable);
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("make_quiver") {
  const Quiver q3 = Quiver::make(fixtures::path_graph(3), {{1, 2}, {2, 3}});
  CHECK(q3 == fixtures::q3());
  const Quiver qk = Quiver::make(fixtures::kronecker(), {{1, 2}, {1, 2}});
  CHECK(qk == fixtures::qk());
  CHECK(code_of([] { Quiver::make(fixtures::kronecker(), {{1, 2}, {2, 1}}); }) == Errc::not_acyclic);
  CHECK(code_of([] { Quiver::make(fixtures::triangle(), {{1, 2}, {2, 3}, {3, 1}}); }) == Errc::not_acyclic);
  CHECK(code_of([] { Quiver::make(fixtures::kronecker(), {{1, 2}}); }) == Errc::invalid_graph);
}

TEST_CASE("sinks and reflections") {
  const Quiver q3 = fixtures::q3();
  CHECK(q3.sinks() == VertexSet{3});
  CHECK(fixtures::qk().sinks() == VertexSet{2});
  const Quiver r3 = q3.reflect(3);
  CHECK(r3.sinks() == VertexSet{2});
  CHECK(r3.arrows() == std::vector<Arrow>{{1, 2}, {3, 2}});
  CHECK(r3.reflect(2).arrows() == std::vector<Arrow>{{2, 1}, {2, 3}});
  CHECK(fixtures::qk().reflect(2).arrows() == std::vector<Arrow>{{2, 1}, {2, 1}});
  CHECK(code_of([] { Quiver::from_arrows(3, {{1, 2}, {2, 3}, {1, 3}}).reflect(2); }) == Errc::not_acyclic);
}

TEST_CASE("poset and filters on Q3") {
  const Quiver q3 = fixtures::q3();
  CHECK(q3.leq(1, 3));
  CHECK_FALSE(q3.leq(3, 1));
  CHECK(q3.leq(2, 2));
  CHECK(q3.is_filter({2, 3}));
  CHECK_FALSE(q3.is_filter({2}));
  CHECK(q3.is_filter({}));
  CHECK(q3.principal_filter(3) == VertexSet{3});
  CHECK(q3.principal_filter(1) == VertexSet{1, 2, 3});
  CHECK(fixtures::qk().principal_filter(1) == VertexSet{1, 2});
  CHECK(q3.hull({3}) == VertexSet{2, 3});
  CHECK(q3.hull({2, 3}) == VertexSet{1, 2, 3});
  CHECK(q3.hull({}) == VertexSet{});
  CHECK(code_of([&] { q3.hull({2}); }) == Errc::not_filter);
}

TEST_CASE("orientation properties on every fixture orientation") {
  std::vector<Quiver> all;
  for (const auto& g : {fixtures::path_graph(3), fixtures::path_graph(4), fixtures::path_graph(5), fixtures::triangle(),
                        fixtures::kronecker(), Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}})})
    for (auto& q : acyclic_orientations(g)) all.push_back(q);
  CHECK(acyclic_orientations(fixtures::path_graph(4)).size() == 8);
  CHECK(acyclic_orientations(fixtures::triangle()).size() == 6);
  CHECK(acyclic_orientations(fixtures::kronecker()).size() == 2);

  for (const auto& q : all) {
    const int n = q.size();
    const auto arrows = oracle::arrows_of(q);
    const auto reach = oracle::reachability(n, arrows);
    // sinks are the maximal elements
    VertexSet maximal;
    for (int x = 1; x <= n; ++x) {
      bool is_max = true;
      for (int y = 1; y <= n; ++y)
        if (y != x && reach[x][y]) is_max = false;
      if (is_max) maximal.insert(x);
      for (int y = 1; y <= n; ++y) CHECK(q.leq(x, y) == static_cast<bool>(reach[x][y]));
    }
    CHECK(q.sinks() == maximal);
    CHECK_FALSE(maximal.empty());

    for (Vertex x : q.sinks()) {
      const Quiver r = q.reflect(x);
      CHECK(r.is_source(x));
      CHECK(r.reflect(x) == q);
      for (std::size_t i = 0; i < q.arrows().size(); ++i) {
        const Arrow& a = q.arrows()[i];
        const Arrow& b = r.arrows()[i];
        if (a.source != x && a.target != x)
          CHECK(a == b);
        else
          CHECK(b == Arrow{a.target, a.source});
      }
    }

    const auto subsets = all_subsets(n);
    std::vector<VertexSet> filters;
    for (const auto& s : subsets) {
      const bool f = oracle::is_filter(n, arrows, as_int_set(s));
      CHECK(q.is_filter(s) == f);
      if (f) filters.push_back(s);
    }
    for (const auto& f : filters) {
      const VertexSet h = q.hull(f);
      CHECK(as_int_set(h) == oracle::hull(n, arrows, as_int_set(f)));
      CHECK(is_subset(f, h));
      CHECK(q.is_filter(q.hull(h)));
    }
    for (const auto& f1 : filters)
      for (const auto& f2 : filters) {
        VertexSet u = f1, i;
        u.insert(f2.begin(), f2.end());
        std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::inserter(i, i.end()));
        VertexSet hu = q.hull(f1);
        const VertexSet h2 = q.hull(f2);
        VertexSet hi;
        std::set_intersection(hu.begin(), hu.end(), h2.begin(), h2.end(), std::inserter(hi, hi.end()));
        hu.insert(h2.begin(), h2.end());
        CHECK(q.hull(u) == hu);
        CHECK(is_subset(q.hull(i), hi));
        if (is_subset(f1, f2)) CHECK(is_subset(q.hull(f1), h2));
      }
  }
}
