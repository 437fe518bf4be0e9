#include "quiverseq/admissible.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <string>

#include "quiverseq/error.hpp"

namespace quiverseq {

namespace {

void require_same_base(const AdmissibleSeq& s, const AdmissibleSeq& t) {
  if (!s.same_base(t)) throw Error(Errc::base_mismatch, "sequences live on different base quivers");
}

MultVector coordinatewise(const MultVector& a, const MultVector& b, bool take_max) {
  MultVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = take_max ? std::max(a[i], b[i]) : std::min(a[i], b[i]);
  return out;
}

// Emits the vertices of `support` in the current orientation, smallest sink first.
std::vector<Vertex> order_segment(Quiver& current, VertexSet support) {
  std::vector<Vertex> segment;
  segment.reserve(support.size());
  while (!support.empty()) {
    auto it = std::find_if(support.begin(), support.end(), [&](Vertex v) { return current.is_sink(v); });
    if (it == support.end()) throw Error(Errc::inconsistent, "no sink available inside a segment support");
    segment.push_back(*it);
    current = current.reflect(*it);
    support.erase(it);
  }
  return segment;
}

void check_level_sets(const Quiver& q, const std::vector<VertexSet>& levels) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int level = static_cast<int>(i) + 1;
    if (!q.is_filter(levels[i]))
      throw InvalidMultiplicityError(level, "level " + std::to_string(level) + " set is not a filter");
  }
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    if (!is_subset(q.hull(levels[i + 1]), levels[i])) {
      const int level = static_cast<int>(i) + 2;
      throw InvalidMultiplicityError(level, "hull of level " + std::to_string(level) + " set is not inside level " +
                                                std::to_string(level - 1));
    }
  }
}

}  // namespace

AdmissibleSeq::AdmissibleSeq(const Quiver& base)
    : base_(std::make_shared<const Quiver>(base)), end_(base_) {}

AdmissibleSeq AdmissibleSeq::check(const Quiver& base, std::vector<Vertex> letters) {
  auto base_ptr = std::make_shared<const Quiver>(base);
  Quiver current = base;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Vertex x = letters[i];
    if (x < 1 || x > base.size())
      throw NotAdmissibleError(i + 1, "letter " + std::to_string(i + 1) + " (" + std::to_string(x) +
                                          ") is not a vertex");
    if (!current.is_sink(x))
      throw NotAdmissibleError(i + 1, "letter " + std::to_string(i + 1) + " (" + std::to_string(x) +
                                          ") is not a sink");
    current = current.reflect(x);
  }
  auto end_ptr = letters.empty() ? base_ptr : std::make_shared<const Quiver>(std::move(current));
  return AdmissibleSeq(std::move(base_ptr), std::move(end_ptr), std::move(letters));
}

AdmissibleSeq AdmissibleSeq::extended(Vertex x) const {
  if (x < 1 || x > base_->size() || !end_->is_sink(x))
    throw NotAdmissibleError(letters_.size() + 1, "vertex " + std::to_string(x) + " is not a sink");
  auto letters = letters_;
  letters.push_back(x);
  return AdmissibleSeq(base_, std::make_shared<const Quiver>(end_->reflect(x)), std::move(letters));
}

AdmissibleSeq AdmissibleSeq::then(const AdmissibleSeq& tail) const {
  if (!(tail.base() == end_orientation()))
    throw Error(Errc::base_mismatch, "tail does not live on the end orientation");
  auto letters = letters_;
  letters.insert(letters.end(), tail.letters_.begin(), tail.letters_.end());
  return AdmissibleSeq(base_, tail.end_, std::move(letters));
}

bool AdmissibleSeq::same_base(const AdmissibleSeq& other) const {
  return base_ == other.base_ || *base_ == *other.base_;
}

MultVector multiplicities(const AdmissibleSeq& s) {
  MultVector m(s.base().size(), 0);
  for (Vertex v : s.letters()) ++m[v - 1];
  return m;
}

bool equivalent(const AdmissibleSeq& s, const AdmissibleSeq& t) {
  require_same_base(s, t);
  return s.length() == t.length() && multiplicities(s) == multiplicities(t);
}

bool precedes(const AdmissibleSeq& s, const AdmissibleSeq& t) {
  require_same_base(s, t);
  const auto ms = multiplicities(s);
  const auto mt = multiplicities(t);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i] > mt[i]) return false;
  return true;
}

std::vector<VertexSet> CanonicalForm::supports() const {
  std::vector<VertexSet> out;
  out.reserve(segments.size());
  for (const auto& seg : segments) out.emplace_back(seg.begin(), seg.end());
  return out;
}

std::vector<Vertex> CanonicalForm::flattened() const {
  std::vector<Vertex> out;
  for (const auto& seg : segments) out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

std::vector<VertexSet> level_sets(const MultVector& m) {
  const int r = m.empty() ? 0 : *std::max_element(m.begin(), m.end());
  std::vector<VertexSet> out(std::max(r, 0));
  for (int level = 1; level <= r; ++level)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] >= level) out[level - 1].insert(static_cast<Vertex>(i) + 1);
  return out;
}

AdmissibleSeq seq_from_multiplicities(const Quiver& q, const MultVector& m) {
  if (static_cast<int>(m.size()) != q.size())
    throw Error(Errc::dimension_mismatch, "multiplicity vector has the wrong length");
  if (std::any_of(m.begin(), m.end(), [](int v) { return v < 0; }))
    throw Error(Errc::invalid_argument, "negative multiplicity");
  const auto levels = level_sets(m);
  check_level_sets(q, levels);

  Quiver current = q;
  std::vector<Vertex> letters;
  for (const auto& support : levels) {
    auto seg = order_segment(current, support);
    letters.insert(letters.end(), seg.begin(), seg.end());
  }
  auto base_ptr = std::make_shared<const Quiver>(q);
  auto end_ptr = letters.empty() ? base_ptr : std::make_shared<const Quiver>(std::move(current));
  return AdmissibleSeq(std::move(base_ptr), std::move(end_ptr), std::move(letters));
}

bool valid_multiplicities(const Quiver& q, const MultVector& m) {
  if (static_cast<int>(m.size()) != q.size()) return false;
  if (std::any_of(m.begin(), m.end(), [](int v) { return v < 0; })) return false;
  const auto levels = level_sets(m);
  for (const auto& f : levels)
    if (!q.is_filter(f)) return false;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    if (!is_subset(q.hull(levels[i + 1]), levels[i])) return false;
  return true;
}

CanonicalForm canonical_form(const AdmissibleSeq& s) {
  if (s.empty()) throw Error(Errc::empty_sequence, "canonical form of the empty sequence");
  const auto levels = level_sets(multiplicities(s));
  CanonicalForm cf;
  Quiver current = s.base();
  for (const auto& support : levels) cf.segments.push_back(order_segment(current, support));
  return cf;
}

AdmissibleSeq meet(const AdmissibleSeq& s, const AdmissibleSeq& t) {
  require_same_base(s, t);
  return seq_from_multiplicities(s.base(), coordinatewise(multiplicities(s), multiplicities(t), false));
}

AdmissibleSeq join(const AdmissibleSeq& s, const AdmissibleSeq& t) {
  require_same_base(s, t);
  if (t.empty()) return s;
  if (s.empty()) return t;
  return seq_from_multiplicities(s.base(), coordinatewise(multiplicities(s), multiplicities(t), true));
}

ComplementPair complement_pair(const AdmissibleSeq& s, const AdmissibleSeq& t) {
  AdmissibleSeq m = meet(s, t);
  const auto mm = multiplicities(m);
  auto ms = multiplicities(s);
  auto mt = multiplicities(t);
  for (std::size_t i = 0; i < mm.size(); ++i) {
    ms[i] -= mm[i];
    mt[i] -= mm[i];
  }
  const Quiver& on = m.end_orientation();
  AdmissibleSeq u = seq_from_multiplicities(on, ms);
  AdmissibleSeq v = seq_from_multiplicities(on, mt);
  return ComplementPair{std::move(m), std::move(u), std::move(v)};
}

AdmissibleSeq principal(const Quiver& q, int r, Vertex x) {
  if (r < 1) throw Error(Errc::invalid_argument, "principal sequence size must be positive");
  std::vector<VertexSet> levels(r);
  levels[r - 1] = q.principal_filter(x);
  for (int i = r - 2; i >= 0; --i) levels[i] = q.hull(levels[i + 1]);
  MultVector m(q.size(), 0);
  for (const auto& f : levels)
    for (Vertex v : f) ++m[v - 1];
  return seq_from_multiplicities(q, m);
}

std::optional<PrincipalIndex> is_principal(const AdmissibleSeq& s) {
  if (s.empty()) return std::nullopt;
  const Quiver& q = s.base();
  const auto levels = level_sets(multiplicities(s));
  const int r = static_cast<int>(levels.size());
  std::optional<Vertex> generator;
  for (Vertex x : levels.back())
    if (q.principal_filter(x) == levels.back()) {
      generator = x;
      break;
    }
  if (!generator) return std::nullopt;
  for (int i = 0; i + 1 < r; ++i)
    if (q.hull(levels[i + 1]) != levels[i]) return std::nullopt;
  return PrincipalIndex{r, *generator};
}

bool principal_precedes(PrincipalIndex p, const AdmissibleSeq& s) {
  if (s.empty()) return false;
  if (p.vertex < 1 || p.vertex > s.base().size()) throw Error(Errc::invalid_argument, "vertex out of range");
  if (p.size < 1) throw Error(Errc::invalid_argument, "principal size must be positive");
  const auto levels = level_sets(multiplicities(s));
  return p.size <= static_cast<int>(levels.size()) && levels[p.size - 1].count(p.vertex) > 0;
}

std::vector<PrincipalIndex> principal_decomposition(const AdmissibleSeq& s) {
  if (s.empty()) throw Error(Errc::empty_sequence, "decomposition of the empty sequence");
  const Quiver& q = s.base();
  const auto levels = level_sets(multiplicities(s));
  const int r = static_cast<int>(levels.size());
  std::vector<PrincipalIndex> out;
  for (int h = 1; h <= r; ++h) {
    const VertexSet above = h < r ? q.hull(levels[h]) : VertexSet{};
    VertexSet diff;
    std::set_difference(levels[h - 1].begin(), levels[h - 1].end(), above.begin(), above.end(),
                        std::inserter(diff, diff.end()));
    for (Vertex v : q.minimal_elements(diff)) out.push_back(PrincipalIndex{h, v});
  }
  return out;
}

PrincipalTail principal_tail(const AdmissibleSeq& s) {
  const auto index = is_principal(s);
  if (!index) throw Error(Errc::not_principal, "sequence is not principal");
  if (s.length() < 2) throw Error(Errc::too_short, "principal tail needs length > 1");
  const Vertex first = s.letters().front();
  Quiver reflected = s.base().reflect(first);
  std::vector<Vertex> rest(s.letters().begin() + 1, s.letters().end());
  AdmissibleSeq tail = AdmissibleSeq::check(reflected, std::move(rest));
  const int q = first == index->vertex ? index->size - 1 : index->size;
  return PrincipalTail{std::move(reflected), std::move(tail), PrincipalIndex{q, index->vertex}};
}

NodeIndex psi(PrincipalIndex p) {
  if (p.size < 1) throw Error(Errc::invalid_argument, "principal size must be positive");
  return NodeIndex{p.size - 1, p.vertex};
}

bool nq_reachable(const Quiver& q, NodeIndex from, NodeIndex to) {
  const int n = q.size();
  if (from.level < 0 || to.level < 0 || from.vertex < 1 || from.vertex > n || to.vertex < 1 || to.vertex > n)
    throw Error(Errc::invalid_argument, "translation quiver node out of range");
  if (from.level > to.level) return false;
  const int levels = to.level + 1;
  auto id = [n](NodeIndex a) { return a.level * n + (a.vertex - 1); };
  std::vector<char> seen(static_cast<std::size_t>(levels) * n, 0);
  std::deque<NodeIndex> queue{from};
  seen[id(from)] = 1;
  while (!queue.empty()) {
    NodeIndex cur = queue.front();
    queue.pop_front();
    if (cur == to) return true;
    for (const auto& a : q.arrows()) {
      NodeIndex next;
      if (cur.vertex == a.target) {
        next = NodeIndex{cur.level, a.source};
      } else if (cur.vertex == a.source && cur.level + 1 < levels) {
        next = NodeIndex{cur.level + 1, a.target};
      } else {
        continue;
      }
      if (!seen[id(next)]) {
        seen[id(next)] = 1;
        queue.push_back(next);
      }
    }
  }
  return false;
}

bool is_complete(const AdmissibleSeq& s) {
  const auto m = multiplicities(s);
  return std::all_of(m.begin(), m.end(), [](int v) { return v == 1; });
}

AdmissibleSeq canonical_complete_sequence(const Quiver& q) {
  VertexSet all;
  for (Vertex v = 1; v <= q.size(); ++v) all.insert(v);
  Quiver current = q;
  return AdmissibleSeq::check(q, order_segment(current, all));
}

AdmissibleSeq power(const AdmissibleSeq& k, int m) {
  if (!is_complete(k)) throw Error(Errc::not_complete, "power requires a complete sequence");
  if (m < 0) throw Error(Errc::invalid_argument, "negative power");
  std::vector<Vertex> letters;
  letters.reserve(k.length() * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) letters.insert(letters.end(), k.letters().begin(), k.letters().end());
  return AdmissibleSeq::check(k.base(), std::move(letters));
}

std::vector<AdmissibleSeq> enumerate_admissible(const Quiver& q, std::size_t max_length) {
  std::vector<AdmissibleSeq> out;
  std::vector<AdmissibleSeq> stack{AdmissibleSeq(q)};
  while (!stack.empty()) {
    AdmissibleSeq cur = std::move(stack.back());
    stack.pop_back();
    if (cur.length() < max_length) {
      const auto sinks = cur.end_orientation().sinks();
      for (auto it = sinks.rbegin(); it != sinks.rend(); ++it) stack.push_back(cur.extended(*it));
    }
    out.push_back(std::move(cur));
  }
  return out;
}

std::vector<AdmissibleSeq> complete_sequences(const Quiver& q) {
  std::vector<AdmissibleSeq> out;
  for (auto& s : enumerate_admissible(q, static_cast<std::size_t>(q.size())))
    if (s.length() == static_cast<std::size_t>(q.size()) && is_complete(s)) out.push_back(std::move(s));
  return out;
}

}  // namespace quiverseq
