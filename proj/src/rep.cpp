#include "quiverseq/rep.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "quiverseq/error.hpp"
#include "quiverseq/weyl.hpp"

namespace quiverseq {

namespace {

void require_same_quiver(const Quiver& a, const Quiver& b, const char* what) {
  if (!(a == b)) throw Error(Errc::base_mismatch, what);
}

}  // namespace

Representation::Representation(const Quiver& q, DimVector dims, std::vector<Matrix> maps)
    : quiver_(q), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (static_cast<int>(dims_.size()) != q.size())
    throw Error(Errc::dimension_mismatch, "dimension vector has the wrong length");
  if (std::any_of(dims_.begin(), dims_.end(), [](int d) { return d < 0; }))
    throw Error(Errc::dimension_mismatch, "negative dimension");
  if (maps_.size() != q.arrows().size()) throw Error(Errc::dimension_mismatch, "one matrix per arrow required");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const Arrow& a = q.arrows()[i];
    if (maps_[i].rows() != static_cast<std::size_t>(dim(a.target)) ||
        maps_[i].cols() != static_cast<std::size_t>(dim(a.source)))
      throw Error(Errc::dimension_mismatch, "matrix of arrow " + std::to_string(i) + " has the wrong shape");
  }
}

Representation Representation::zero(const Quiver& q) {
  return Representation(q, DimVector(q.size(), 0), std::vector<Matrix>(q.arrows().size()));
}

bool Representation::is_zero() const {
  return std::all_of(dims_.begin(), dims_.end(), [](int d) { return d == 0; });
}

VertexSet Representation::support() const {
  VertexSet out;
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (dims_[i] != 0) out.insert(static_cast<Vertex>(i) + 1);
  return out;
}

Representation simple(const Quiver& q, Vertex x) {
  if (x < 1 || x > q.size()) throw Error(Errc::invalid_argument, "vertex out of range");
  DimVector dims(q.size(), 0);
  dims[x - 1] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(dims[a.target - 1], dims[a.source - 1]);
  return Representation(q, std::move(dims), std::move(maps));
}

std::vector<DimVector> projective_dims(const Quiver& q) {
  const int n = q.size();
  // topological order: u before v whenever u -> v
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex u, Vertex v) { return u != v && q.leq(u, v); });
  // leq is only a partial order, so sort by the number of predecessors instead
  std::vector<int> below(n + 1, 0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      if (u != v && q.leq(v, u)) ++below[u];
  std::sort(order.begin(), order.end(), [&](Vertex u, Vertex v) { return below[u] < below[v]; });

  std::vector<DimVector> out;
  for (Vertex x = 1; x <= n; ++x) {
    DimVector paths(n, 0);
    paths[x - 1] = 1;
    for (Vertex u : order)
      for (const auto& a : q.arrows())
        if (a.source == u) paths[a.target - 1] += paths[u - 1];
    out.push_back(std::move(paths));
  }
  return out;
}

Representation reflect_plus(const Representation& m, Vertex x) {
  const Quiver& q = m.quiver();
  if (!q.is_sink(x)) throw Error(Errc::not_sink, "vertex " + std::to_string(x) + " is not a sink");
  const auto in = q.arrows_into(x);
  std::vector<Matrix> blocks;
  for (auto a : in) blocks.push_back(m.map(a));
  const Matrix h = hstack(blocks, static_cast<std::size_t>(m.dim(x)));
  const Matrix j = kernel_basis(h);

  DimVector dims = m.dims();
  dims[x - 1] = static_cast<int>(j.cols());
  std::vector<Matrix> maps = m.maps();
  std::size_t offset = 0;
  for (auto a : in) {
    const auto d = static_cast<std::size_t>(m.dim(q.arrows()[a].source));
    maps[a] = j.block(offset, 0, d, j.cols());
    offset += d;
  }
  return Representation(q.reflect(x), std::move(dims), std::move(maps));
}

Representation reflect_minus(const Representation& m, Vertex x) {
  const Quiver& q = m.quiver();
  if (!q.is_source(x)) throw Error(Errc::not_source, "vertex " + std::to_string(x) + " is not a source");
  const auto out = q.arrows_out_of(x);
  std::vector<Matrix> blocks;
  for (auto a : out) blocks.push_back(m.map(a));
  const Matrix h = vstack(blocks, static_cast<std::size_t>(m.dim(x)));
  const Matrix p = cokernel_projection(h);

  DimVector dims = m.dims();
  dims[x - 1] = static_cast<int>(p.rows());
  std::vector<Matrix> maps = m.maps();
  std::size_t offset = 0;
  for (auto a : out) {
    const auto d = static_cast<std::size_t>(m.dim(q.arrows()[a].target));
    maps[a] = p.block(0, offset, p.rows(), d);
    offset += d;
  }
  return Representation(q.reflect(x), std::move(dims), std::move(maps));
}

Representation apply_sequence(const Representation& m, const AdmissibleSeq& s) {
  require_same_quiver(m.quiver(), s.base(), "sequence and module live on different quivers");
  Representation cur = m;
  for (Vertex x : s.letters()) cur = reflect_plus(cur, x);
  return cur;
}

bool annihilates(const AdmissibleSeq& s, const Representation& m) { return apply_sequence(m, s).is_zero(); }

Representation coxeter_plus(const Representation& m) {
  return apply_sequence(m, canonical_complete_sequence(m.quiver()));
}

Representation build_module(const AdmissibleSeq& s) {
  if (s.empty()) throw Error(Errc::empty_sequence, "M(S) needs a nonempty sequence");
  if (!is_reduced(word_of(s))) throw Error(Errc::not_reduced, "word of the sequence is not reduced");
  const auto& x = s.letters();
  std::vector<Quiver> orientations{s.base()};
  for (std::size_t i = 0; i + 1 < x.size(); ++i) orientations.push_back(orientations.back().reflect(x[i]));

  Representation m = simple(orientations.back(), x.back());
  for (std::size_t i = x.size() - 1; i-- > 0;) m = reflect_minus(m, x[i]);

  // dim M(S) = sigma_{x_1} ... sigma_{x_{s-1}}(e_{x_s})
  const auto a = s.base().graph().cartan();
  WeylWord w{a, std::vector<Vertex>(x.rbegin() + 1, x.rend())};
  const RootVector expected = evaluate(w).apply(unit_root(s.base().size(), x.back()));
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (expected[i] != m.dims()[i]) throw Error(Errc::inconsistent, "M(S) dimension disagrees with the root");
  if (!annihilates(s, m)) throw Error(Errc::inconsistent, "M(S) is not annihilated by S");
  return m;
}

std::optional<int> is_preprojective(const Representation& m, int max_iter) {
  Representation cur = m;
  for (int k = 0; k <= max_iter; ++k) {
    if (cur.is_zero()) return k;
    if (k < max_iter) cur = coxeter_plus(cur);
  }
  return std::nullopt;
}

bool is_shortest_annihilator(const AdmissibleSeq& s, const Representation& m) {
  if (!annihilates(s, m)) return false;
  // every proper subsequence lies below some S minus one occurrence of a vertex
  auto mult = multiplicities(s);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    --mult[i];
    if (valid_multiplicities(s.base(), mult) && annihilates(seq_from_multiplicities(s.base(), mult), m)) return false;
    ++mult[i];
  }
  return true;
}

AdmissibleSeq shortest_annihilator_indec(const Representation& m, int max_iter) {
  const Quiver& q = m.quiver();
  if (m.is_zero()) return AdmissibleSeq(q);
  Representation last_nonzero = m;
  Representation cur = m;
  int steps = 0;
  while (!cur.is_zero()) {
    if (steps == max_iter) throw Error(Errc::undecided, "no Coxeter power annihilates the module");
    last_nonzero = cur;
    cur = coxeter_plus(cur);
    ++steps;
  }
  const int nu = steps - 1;
  const auto projectives = projective_dims(q);
  const auto it = std::find(projectives.begin(), projectives.end(), last_nonzero.dims());
  if (it == projectives.end())
    throw Error(Errc::no_projective_match, "last nonzero Coxeter image is not an indecomposable projective");
  const Vertex x = static_cast<Vertex>(it - projectives.begin()) + 1;
  AdmissibleSeq s = principal(q, nu + 1, x);
  if (!is_shortest_annihilator(s, m))
    throw Error(Errc::inconsistent, "principal sequence is not a shortest annihilator");
  return s;
}

AdmissibleSeq shortest_annihilator_bruteforce(const Representation& m, const AdmissibleSeq& t) {
  require_same_quiver(m.quiver(), t.base(), "sequence and module live on different quivers");
  if (!annihilates(t, m)) throw Error(Errc::not_annihilating, "upper bound does not annihilate the module");
  const Quiver& q = m.quiver();
  const MultVector bound = multiplicities(t);

  std::vector<MultVector> hits;
  MultVector cur(bound.size(), 0);
  while (true) {
    if (valid_multiplicities(q, cur) && annihilates(seq_from_multiplicities(q, cur), m)) hits.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }

  auto below = [](const MultVector& a, const MultVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  for (const auto& h : hits)
    if (std::all_of(hits.begin(), hits.end(), [&](const MultVector& o) { return below(h, o); }))
      return seq_from_multiplicities(q, h);
  throw Error(Errc::inconsistent, "annihilating sequences have no unique smallest element");
}

AdmissibleSeq join_annihilators(const std::vector<AdmissibleSeq>& seqs) {
  if (seqs.empty()) throw Error(Errc::invalid_argument, "join of an empty list needs a base quiver");
  AdmissibleSeq out = seqs.front();
  for (std::size_t i = 1; i < seqs.size(); ++i) out = join(out, seqs[i]);
  return out;
}

Representation direct_sum(const std::vector<Representation>& ms) {
  if (ms.empty()) throw Error(Errc::invalid_argument, "direct sum of an empty list needs a quiver");
  const Quiver& q = ms.front().quiver();
  for (const auto& m : ms) require_same_quiver(q, m.quiver(), "summands live on different quivers");

  DimVector dims(q.size(), 0);
  for (const auto& m : ms)
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += m.dims()[i];

  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    Matrix block(dims[arrow.target - 1], dims[arrow.source - 1]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& m : ms) {
      const Matrix& f = m.map(a);
      for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) block(r0 + i, c0 + j) = f(i, j);
      r0 += f.rows();
      c0 += f.cols();
    }
    maps.push_back(std::move(block));
  }
  return Representation(q, std::move(dims), std::move(maps));
}

}  // namespace quiverseq
