#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quiverseq/admissible.hpp"
#include "quiverseq/graph.hpp"
#include "quiverseq/linalg.hpp"

namespace quiverseq {

// Per-vertex dimensions, indexed by vertex - 1.
using DimVector = std::vector<int>;

// A representation over Q: one space per vertex, one matrix per arrow
// instance.  The map of arrow a has shape dims(target(a)) x dims(source(a)).
class Representation {
 public:
  // Throws dimension_mismatch on any shape disagreement.
  Representation(const Quiver& q, DimVector dims, std::vector<Matrix> maps);
  static Representation zero(const Quiver& q);

  const Quiver& quiver() const noexcept { return quiver_; }
  const DimVector& dims() const noexcept { return dims_; }
  int dim(Vertex v) const { return dims_.at(v - 1); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }

  bool is_zero() const;
  VertexSet support() const;

 private:
  Quiver quiver_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

Representation simple(const Quiver& q, Vertex x);

// dim P_x(z) = number of paths x -> z; entry x - 1 holds P_x.
std::vector<DimVector> projective_dims(const Quiver& q);

// Kernel construction at a sink.  Throws not_sink.
Representation reflect_plus(const Representation& m, Vertex x);
// Cokernel construction at a source.  Throws not_source.
Representation reflect_minus(const Representation& m, Vertex x);

// Left-to-right fold of reflect_plus.  Throws base_mismatch.
Representation apply_sequence(const Representation& m, const AdmissibleSeq& s);
bool annihilates(const AdmissibleSeq& s, const Representation& m);

// Reflections along the smallest-sink-first complete sequence.
Representation coxeter_plus(const Representation& m);

// F^-_{x_1} ... F^-_{x_{s-1}} applied to the simple projective at x_s.
// Requires a nonempty sequence whose word is reduced (throws not_reduced).
Representation build_module(const AdmissibleSeq& s);

inline constexpr int default_max_iterations = 64;

// Least m with (Phi^+)^m M = 0, or nullopt when max_iter is exhausted.
std::optional<int> is_preprojective(const Representation& m, int max_iter = default_max_iterations);

// S annihilates M and no maximal proper subsequence of S does.
bool is_shortest_annihilator(const AdmissibleSeq& s, const Representation& m);

// S_M for an indecomposable preprojective M, located through the projective
// that the last nonzero Coxeter image lands on.
AdmissibleSeq shortest_annihilator_indec(const Representation& m, int max_iter = default_max_iterations);
// Exhaustive search below an annihilating T for the unique smallest annihilator.
AdmissibleSeq shortest_annihilator_bruteforce(const Representation& m, const AdmissibleSeq& t);
AdmissibleSeq join_annihilators(const std::vector<AdmissibleSeq>& seqs);

Representation direct_sum(const std::vector<Representation>& ms);

}  // namespace quiverseq
