#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quiverseq/admissible.hpp"
#include "quiverseq/graph.hpp"

namespace quiverseq {

using BigInt = boost::multiprecision::cpp_int;

// Coordinates in the simple-root basis, indexed by vertex - 1.
using RootVector = std::vector<BigInt>;

RootVector unit_root(int n, Vertex v);
bool is_positive(const RootVector& v);
bool is_negative(const RootVector& v);

// Letters x_1..x_s denote sigma_{x_s} o ... o sigma_{x_1}: x_1 acts first.
struct WeylWord {
  CartanMatrix cartan;
  std::vector<Vertex> letters;
};

// An element of the Weyl group of a symmetric generalized Cartan matrix, kept
// together with its inverse.  Both are integer matrices acting on columns.
class WeylElement {
 public:
  static WeylElement identity(const CartanMatrix& a);
  static WeylElement simple_reflection(const CartanMatrix& a, Vertex i);

  int rank() const noexcept { return n_; }
  const CartanMatrix& cartan() const noexcept { return *cartan_; }
  const BigInt& at(int row, int col) const { return m_[static_cast<std::size_t>(row) * n_ + col]; }

  // (a * b)(v) = a(b(v))
  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;
  // Right multiplication by sigma_i; cheaper than building the reflection.
  WeylElement times_simple(Vertex i) const;
  // Left multiplication by sigma_i.
  WeylElement simple_times(Vertex i) const;

  RootVector apply(const RootVector& v) const;
  RootVector image_of_simple(Vertex j) const;          // w(e_j)
  RootVector inverse_image_of_simple(Vertex j) const;  // w^-1(e_j)

  bool is_identity() const;
  // m^T A m == A
  bool preserves_form() const;

  bool operator==(const WeylElement& other) const { return n_ == other.n_ && m_ == other.m_; }
  bool operator<(const WeylElement& other) const { return m_ < other.m_; }

 private:
  WeylElement(std::shared_ptr<const CartanMatrix> a, std::vector<BigInt> m, std::vector<BigInt> inv);

  std::shared_ptr<const CartanMatrix> cartan_;
  int n_ = 0;
  std::vector<BigInt> m_;
  std::vector<BigInt> inv_;
};

inline WeylElement simple_reflection(const CartanMatrix& a, Vertex i) { return WeylElement::simple_reflection(a, i); }

WeylWord word_of(const AdmissibleSeq& s);
// Letters reversed: a word for the inverse element.
WeylWord inverse_word(WeylWord w);
WeylElement evaluate(const WeylWord& w);
RootVector apply(const WeylElement& e, const RootVector& v);

// Length via right-descent peeling: while w(e_s) < 0 for some s, replace w by w sigma_s.
std::size_t length(const WeylElement& e);
// Every prefix extension must increase length, tested by the inverse-root sign.
bool is_reduced(const WeylWord& w);

// sigma_{x_i} ... sigma_{x_{s-1}}(e_{x_s}) > 0 for 0 < i < s.  Throws not_principal.
bool principal_reduced_criterion(const AdmissibleSeq& s);

// c = sigma_{v_n} ... sigma_{v_1} for complete K = v_1..v_n.  Throws not_complete.
WeylWord coxeter_element(const AdmissibleSeq& k);

// True iff the graph is simply laced of type A, D or E.
bool weyl_is_finite(const Graph& g);

struct PowerReport {
  int m = 0;
  bool reduced = true;
  std::size_t length = 0;
};

PowerReport coxeter_power(const AdmissibleSeq& k, int m);
// Reports for m = 1..m_max.
std::vector<PowerReport> coxeter_powers_reduced(const AdmissibleSeq& k, int m_max);

// Letters of c^infinity taken by the greedy left-descent peel, grouped by the
// pass (block) of c they came from.
struct SortingWord {
  std::vector<Vertex> letters;
  std::vector<std::vector<Vertex>> blocks;

  std::vector<VertexSet> block_sets() const;
  std::string to_string() const;  // "2 | 1"
};

SortingWord c_sorting_word(const WeylWord& c, const WeylElement& target);
bool is_c_sortable(const WeylWord& c, const WeylElement& target);

}  // namespace quiverseq
