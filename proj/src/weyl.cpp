#include "quiverseq/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "quiverseq/error.hpp"

namespace quiverseq {

namespace {

std::vector<BigInt> identity_entries(int n) {
  std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

// Row i of S_i * m becomes -m_i - sum_{j != i} a_ij m_j.
void left_reflect(std::vector<BigInt>& m, const CartanMatrix& a, int n, int i) {
  std::vector<BigInt> row(n);
  for (int k = 0; k < n; ++k) {
    BigInt acc = 0;
    for (int j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      const BigInt& entry = m[static_cast<std::size_t>(j) * n + k];
      acc -= a[i][j] * entry;
    }
    // the j == i term contributed -2 m_ik; the row entry of S_i there is -1
    acc += m[static_cast<std::size_t>(i) * n + k];
    row[k] = std::move(acc);
  }
  for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(i) * n + k] = std::move(row[k]);
}

// Column k of m * S_i becomes m_k - a_ik m_i (k != i) and -m_i (k == i).
void right_reflect(std::vector<BigInt>& m, const CartanMatrix& a, int n, int i) {
  for (int r = 0; r < n; ++r) {
    const BigInt col_i = m[static_cast<std::size_t>(r) * n + i];
    for (int k = 0; k < n; ++k) {
      if (k == i) {
        m[static_cast<std::size_t>(r) * n + k] = -col_i;
      } else if (a[i][k] != 0) {
        m[static_cast<std::size_t>(r) * n + k] -= a[i][k] * col_i;
      }
    }
  }
}

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int n) {
  std::vector<BigInt> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return out;
}

void check_letter(const CartanMatrix& a, Vertex v) {
  if (v < 1 || v > static_cast<int>(a.size()))
    throw Error(Errc::invalid_argument, "generator " + std::to_string(v) + " out of range");
}

RootVector reflect_root(const CartanMatrix& a, Vertex i, RootVector v) {
  BigInt coeff = 0;
  for (std::size_t j = 0; j < v.size(); ++j) coeff += a[i - 1][j] * v[j];
  v[i - 1] -= coeff;
  return v;
}

}  // namespace

RootVector unit_root(int n, Vertex v) {
  RootVector e(n);
  if (v < 1 || v > n) throw Error(Errc::invalid_argument, "vertex out of range");
  e[v - 1] = 1;
  return e;
}

bool is_positive(const RootVector& v) {
  bool nonzero = false;
  for (const auto& x : v) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative(const RootVector& v) {
  bool nonzero = false;
  for (const auto& x : v) {
    if (x > 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

WeylElement::WeylElement(std::shared_ptr<const CartanMatrix> a, std::vector<BigInt> m, std::vector<BigInt> inv)
    : cartan_(std::move(a)), n_(static_cast<int>(cartan_->size())), m_(std::move(m)), inv_(std::move(inv)) {}

WeylElement WeylElement::identity(const CartanMatrix& a) {
  Graph::from_cartan(a);  // validates
  const int n = static_cast<int>(a.size());
  return WeylElement(std::make_shared<const CartanMatrix>(a), identity_entries(n), identity_entries(n));
}

WeylElement WeylElement::simple_reflection(const CartanMatrix& a, Vertex i) {
  check_letter(a, i);
  return identity(a).simple_times(i);
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  if (n_ != rhs.n_ || *cartan_ != *rhs.cartan_)
    throw Error(Errc::dimension_mismatch, "Weyl elements of different Cartan matrices");
  return WeylElement(cartan_, multiply(m_, rhs.m_, n_), multiply(rhs.inv_, inv_, n_));
}

WeylElement WeylElement::inverse() const { return WeylElement(cartan_, inv_, m_); }

WeylElement WeylElement::times_simple(Vertex i) const {
  check_letter(*cartan_, i);
  WeylElement out = *this;
  right_reflect(out.m_, *cartan_, n_, i - 1);
  left_reflect(out.inv_, *cartan_, n_, i - 1);
  return out;
}

WeylElement WeylElement::simple_times(Vertex i) const {
  check_letter(*cartan_, i);
  WeylElement out = *this;
  left_reflect(out.m_, *cartan_, n_, i - 1);
  right_reflect(out.inv_, *cartan_, n_, i - 1);
  return out;
}

RootVector WeylElement::apply(const RootVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error(Errc::dimension_mismatch, "root vector has the wrong length");
  RootVector out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

RootVector WeylElement::image_of_simple(Vertex j) const {
  check_letter(*cartan_, j);
  RootVector out(n_);
  for (int i = 0; i < n_; ++i) out[i] = m_[static_cast<std::size_t>(i) * n_ + (j - 1)];
  return out;
}

RootVector WeylElement::inverse_image_of_simple(Vertex j) const {
  check_letter(*cartan_, j);
  RootVector out(n_);
  for (int i = 0; i < n_; ++i) out[i] = inv_[static_cast<std::size_t>(i) * n_ + (j - 1)];
  return out;
}

bool WeylElement::is_identity() const { return m_ == identity_entries(n_); }

bool WeylElement::preserves_form() const {
  const auto& a = *cartan_;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      BigInt acc = 0;
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) acc += at(k, i) * a[k][l] * at(l, j);
      if (acc != a[i][j]) return false;
    }
  return true;
}

WeylWord word_of(const AdmissibleSeq& s) { return WeylWord{s.base().graph().cartan(), s.letters()}; }

WeylElement evaluate(const WeylWord& w) {
  WeylElement e = WeylElement::identity(w.cartan);
  for (Vertex x : w.letters) e = e.simple_times(x);
  return e;
}

RootVector apply(const WeylElement& e, const RootVector& v) { return e.apply(v); }

std::size_t length(const WeylElement& e) {
  WeylElement w = e;
  std::size_t len = 0;
  while (true) {
    Vertex descent = 0;
    for (Vertex s = 1; s <= w.rank(); ++s)
      if (is_negative(w.image_of_simple(s))) {
        descent = s;
        break;
      }
    if (descent == 0) break;
    w = w.times_simple(descent);
    ++len;
  }
  if (!w.is_identity()) throw Error(Errc::inconsistent, "element without descents is not the identity");
  return len;
}

bool is_reduced(const WeylWord& w) {
  WeylElement u = WeylElement::identity(w.cartan);
  for (Vertex x : w.letters) {
    if (!is_positive(u.inverse_image_of_simple(x))) return false;
    u = u.simple_times(x);
  }
  return true;
}

bool principal_reduced_criterion(const AdmissibleSeq& s) {
  if (!is_principal(s)) throw Error(Errc::not_principal, "criterion requires a principal sequence");
  const auto a = s.base().graph().cartan();
  const auto& x = s.letters();
  RootVector v = unit_root(static_cast<int>(a.size()), x.back());
  for (std::size_t i = x.size() - 1; i-- > 0;) {
    v = reflect_root(a, x[i], std::move(v));
    if (!is_positive(v)) return false;
  }
  return true;
}

WeylWord inverse_word(WeylWord w) {
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

WeylWord coxeter_element(const AdmissibleSeq& k) {
  if (!is_complete(k)) throw Error(Errc::not_complete, "Coxeter element requires a complete sequence");
  return word_of(k);
}

bool weyl_is_finite(const Graph& g) {
  const int n = g.size();
  std::vector<int> degree(n + 1, 0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v) {
      const int m = g.edge_multiplicity(u, v);
      if (m > 1) return false;
      degree[u] += m;
    }
  if (g.edge_count() != static_cast<std::size_t>(n - 1)) return false;  // connected, so: not a tree
  std::vector<Vertex> branch;
  for (Vertex v = 1; v <= n; ++v) {
    if (degree[v] > 3) return false;
    if (degree[v] == 3) branch.push_back(v);
  }
  if (branch.empty()) return true;  // A_n
  if (branch.size() > 1) return false;

  // arm lengths p <= q <= r of the star; ADE iff 1/(p+1) + 1/(q+1) + 1/(r+1) > 1
  const Vertex center = branch.front();
  std::vector<long> arms;
  for (Vertex start : g.neighbors(center)) {
    long len = 1;
    Vertex prev = center, cur = start;
    while (degree[cur] == 2) {
      for (Vertex nxt : g.neighbors(cur))
        if (nxt != prev) {
          prev = cur;
          cur = nxt;
          break;
        }
      ++len;
    }
    arms.push_back(len + 1);
  }
  const long p = arms[0], q = arms[1], r = arms[2];
  return q * r + p * r + p * q > p * q * r;
}

PowerReport coxeter_power(const AdmissibleSeq& k, int m) {
  if (m < 0) throw Error(Errc::invalid_argument, "negative power");
  const WeylWord c = coxeter_element(k);
  WeylWord word{c.cartan, {}};
  for (int i = 0; i < m; ++i) word.letters.insert(word.letters.end(), c.letters.begin(), c.letters.end());
  return PowerReport{m, is_reduced(word), length(evaluate(word))};
}

std::vector<PowerReport> coxeter_powers_reduced(const AdmissibleSeq& k, int m_max) {
  std::vector<PowerReport> out;
  for (int m = 1; m <= m_max; ++m) out.push_back(coxeter_power(k, m));
  return out;
}

std::vector<VertexSet> SortingWord::block_sets() const {
  std::vector<VertexSet> out;
  for (const auto& b : blocks) out.emplace_back(b.begin(), b.end());
  return out;
}

std::string SortingWord::to_string() const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) os << " | ";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) os << (i ? "," : "") << blocks[b][i];
  }
  return os.str();
}

SortingWord c_sorting_word(const WeylWord& c, const WeylElement& target) {
  const int n = static_cast<int>(c.cartan.size());
  if (target.cartan() != c.cartan) throw Error(Errc::dimension_mismatch, "target lives on another Cartan matrix");
  std::vector<Vertex> sorted = c.letters;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(sorted.size()) != n || sorted[i] != i + 1)
      throw Error(Errc::not_complete, "c is not a Coxeter element");

  // c = sigma_{v_n} ... sigma_{v_1}, so one pass of c^infinity reads v_n, ..., v_1
  const std::vector<Vertex> pass(c.letters.rbegin(), c.letters.rend());
  SortingWord out;
  WeylElement current = target;
  while (!current.is_identity()) {
    std::vector<Vertex> block;
    for (Vertex v : pass)
      if (is_negative(current.inverse_image_of_simple(v))) {
        block.push_back(v);
        current = current.simple_times(v);
      }
    if (block.empty()) throw Error(Errc::inconsistent, "sorting pass took no letter");
    out.letters.insert(out.letters.end(), block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

bool is_c_sortable(const WeylWord& c, const WeylElement& target) {
  const auto blocks = c_sorting_word(c, target).block_sets();
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (!is_subset(blocks[i], blocks[i - 1])) return false;
  return true;
}

}  // namespace quiverseq
