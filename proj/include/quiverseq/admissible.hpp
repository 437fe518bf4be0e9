#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "quiverseq/graph.hpp"

namespace quiverseq {

// Occurrence counts, indexed by vertex - 1.
using MultVector = std::vector<int>;

// A (+)-admissible vertex sequence on a fixed base quiver: every letter is a
// sink of the orientation obtained by reflecting at all previous letters.
class AdmissibleSeq {
 public:
  explicit AdmissibleSeq(const Quiver& base);

  // Validates the sink condition letter by letter.  Throws NotAdmissibleError
  // carrying the 1-based index of the first offending letter.
  static AdmissibleSeq check(const Quiver& base, std::vector<Vertex> letters);

  const Quiver& base() const noexcept { return *base_; }
  // The orientation after reflecting at every letter.
  const Quiver& end_orientation() const noexcept { return *end_; }
  const std::vector<Vertex>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  VertexSet support() const { return VertexSet(letters_.begin(), letters_.end()); }

  AdmissibleSeq extended(Vertex x) const;
  // Concatenation; tail must live on end_orientation().
  AdmissibleSeq then(const AdmissibleSeq& tail) const;

  bool same_base(const AdmissibleSeq& other) const;

 private:
  AdmissibleSeq(std::shared_ptr<const Quiver> base, std::shared_ptr<const Quiver> end, std::vector<Vertex> letters)
      : base_(std::move(base)), end_(std::move(end)), letters_(std::move(letters)) {}

  std::shared_ptr<const Quiver> base_;
  std::shared_ptr<const Quiver> end_;
  std::vector<Vertex> letters_;

  friend AdmissibleSeq seq_from_multiplicities(const Quiver& q, const MultVector& m);
};

inline AdmissibleSeq check_admissible(const Quiver& q, std::vector<Vertex> letters) {
  return AdmissibleSeq::check(q, std::move(letters));
}

MultVector multiplicities(const AdmissibleSeq& s);

// S ~ T iff equal multiplicities.  Both throw base_mismatch.
bool equivalent(const AdmissibleSeq& s, const AdmissibleSeq& t);
// S is a subsequence of T iff m_S <= m_T coordinatewise.
bool precedes(const AdmissibleSeq& s, const AdmissibleSeq& t);

// Segments S_1..S_r of distinct vertices with Supp S_i = {v : m(v) >= i}.
// Inside a segment, letters are emitted smallest-id current sink first.
struct CanonicalForm {
  std::vector<std::vector<Vertex>> segments;

  std::size_t size() const noexcept { return segments.size(); }
  std::vector<VertexSet> supports() const;
  std::vector<Vertex> flattened() const;
};

CanonicalForm canonical_form(const AdmissibleSeq& s);

// Level sets {v : m(v) >= i}.  Index 0 holds level 1.
std::vector<VertexSet> level_sets(const MultVector& m);

// Rebuilds the canonical representative.  Throws InvalidMultiplicityError
// naming the first level whose set is not a filter or breaks the hull condition.
AdmissibleSeq seq_from_multiplicities(const Quiver& q, const MultVector& m);
bool valid_multiplicities(const Quiver& q, const MultVector& m);

AdmissibleSeq meet(const AdmissibleSeq& s, const AdmissibleSeq& t);
AdmissibleSeq join(const AdmissibleSeq& s, const AdmissibleSeq& t);

// S ~ (S meet T) U and T ~ (S meet T) V, with U, V on the end orientation of the meet.
struct ComplementPair {
  AdmissibleSeq meet;
  AdmissibleSeq u;
  AdmissibleSeq v;
};

ComplementPair complement_pair(const AdmissibleSeq& s, const AdmissibleSeq& t);

// (r, x) naming the principal sequence of size r whose last segment
// supports the principal filter of x.
struct PrincipalIndex {
  int size = 1;
  Vertex vertex = 1;
  auto operator<=>(const PrincipalIndex&) const = default;
};

AdmissibleSeq principal(const Quiver& q, int r, Vertex x);
std::optional<PrincipalIndex> is_principal(const AdmissibleSeq& s);
// S_{q,y} <= S iff q <= size(S) and y lies in the q-th segment support.
bool principal_precedes(PrincipalIndex p, const AdmissibleSeq& s);
// Minimal principal join decomposition, ordered by (h, v).
std::vector<PrincipalIndex> principal_decomposition(const AdmissibleSeq& s);

struct PrincipalTail {
  Quiver quiver;        // base reflected at the first letter
  AdmissibleSeq tail;   // letters 2..s on that quiver
  PrincipalIndex index; // principal index of the tail
};

PrincipalTail principal_tail(const AdmissibleSeq& s);

// Vertex (level, x) of the translation quiver N(Gamma, Lambda^op).
struct NodeIndex {
  int level = 0;
  Vertex vertex = 1;
  auto operator<=>(const NodeIndex&) const = default;
};

NodeIndex psi(PrincipalIndex p);
// Path existence in N(Gamma, Lambda^op): each arrow u -> v of q contributes
// (n, v) -> (n, u) and (n, u) -> (n + 1, v).
bool nq_reachable(const Quiver& q, NodeIndex from, NodeIndex to);

bool is_complete(const AdmissibleSeq& s);
// Complete sequence built by repeatedly taking the smallest-id unused sink.
AdmissibleSeq canonical_complete_sequence(const Quiver& q);
// K^m for a complete K.
AdmissibleSeq power(const AdmissibleSeq& k, int m);

// Every admissible sequence of length <= max_length, depth-first by smallest sink.
std::vector<AdmissibleSeq> enumerate_admissible(const Quiver& q, std::size_t max_length);
std::vector<AdmissibleSeq> complete_sequences(const Quiver& q);

}  // namespace quiverseq
