#pragma once

#include <map>
#include <span>
#include <vector>

#include "gwp/graph.hpp"
#include "gwp/scalar.hpp"

namespace gwp {

/// Key of the normal-form monomial L_u L_w*; r(u) = r(w) always holds.
struct MonomialKey {
  PathWord create;
  PathWord annihilate;

  friend std::strong_ordering operator<=>(const MonomialKey& a, const MonomialKey& b) {
    if (auto c = a.create <=> b.create; c != 0) return c;
    return a.annihilate <=> b.annihilate;
  }
  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
};

struct Term {
  MonomialKey key;
  Scalar coeff;
};

/// Input triple for make_element: coeff · L_create L_annihilate*.
struct MonomialSpec {
  Scalar coeff;
  PathWord create;
  PathWord annihilate;
};

class DiagonalElement;

/// Finite linear combination of normal-form monomials c·L_u L_w*.
///
/// Terms are kept sorted by key with no zero coefficients, so structural
/// equality is operator equality in the normal form.
class Element {
 public:
  explicit Element(Graph g) : graph_(std::move(g)) {}

  static Element projection(const Graph& g, VertexId v);
  static Element creation(const Graph& g, const PathWord& w);
  static Element annihilation(const Graph& g, const PathWord& w);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const PathWord& create, const PathWord& annihilate) const;

  /// Longest creation word among the terms (0 for the zero element).
  std::size_t max_create_length() const noexcept;
  std::size_t max_annihilate_length() const noexcept;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.graph_ == b.graph_ && a.terms_.size() == b.terms_.size() && a.equal_terms(b);
  }

  /// Builds from raw terms: sorts, merges equal keys, drops zeros.
  static Element from_terms(Graph g, std::vector<Term> terms);

 private:
  bool equal_terms(const Element& other) const;

  Graph graph_;
  std::vector<Term> terms_;
};

/// Element of D_G: a finitely supported map vertex -> scalar.
class DiagonalElement {
 public:
  explicit DiagonalElement(Graph g) : graph_(std::move(g)) {}

  static DiagonalElement identity(const Graph& g);
  static DiagonalElement at(const Graph& g, VertexId v, Scalar c);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<std::pair<VertexId, Scalar>>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  Scalar coefficient(VertexId v) const;

  void set(VertexId v, Scalar c);

  /// Σ c_v L_v as an operator.
  Element as_element() const;

  DiagonalElement& operator+=(const DiagonalElement& rhs);
  DiagonalElement& operator*=(const Scalar& c);
  friend DiagonalElement operator+(DiagonalElement a, const DiagonalElement& b) { return a += b; }
  friend DiagonalElement operator*(const Scalar& c, DiagonalElement a) { return a *= c; }
  /// Product in D_G; vertex projections are orthogonal so this is pointwise.
  friend DiagonalElement operator*(const DiagonalElement& a, const DiagonalElement& b);

  friend bool operator==(const DiagonalElement& a, const DiagonalElement& b);

 private:
  Graph graph_;
  std::vector<std::pair<VertexId, Scalar>> entries_;  // sorted by vertex, no zeros
};

enum class Flavor { plain, starred };

/// Support of a pure element, split into its vertex part and path part.
struct Support {
  std::vector<VertexId> vertex_part;
  std::vector<std::pair<PathWord, Flavor>> path_part;

  friend bool operator==(const Support&, const Support&) = default;
};

/// Vector in the graph Hilbert space, expanded in the basis {ξ_w}.
using BasisVector = std::map<PathWord, Scalar>;

/// Rejects any triple with r(create) != r(annihilate).
Element make_element(const Graph& g, const std::vector<MonomialSpec>& monomials);

Element multiply(const Element& a, const Element& b);
Element adjoint(const Element& a);
Element linear_combine(std::span<const Scalar> coeffs, std::span<const Element> elements);
Element power(const Element& a, unsigned n);

/// Product of a diagonal element with an operator, d·a or a·d.
Element left_multiply(const DiagonalElement& d, const Element& a);
Element right_multiply(const Element& a, const DiagonalElement& d);

/// Conditional expectation onto D_G: the vertex-projection coefficients.
DiagonalElement expectation(const Element& a);

/// E(a_1 a_2 ... a_n) without materializing the full product.
///
/// Multiplication runs left to right and discards monomials that can no
/// longer reach a vertex projection: any term whose creation word is not a
/// unit, and any term whose annihilation word is longer than the remaining
/// factors can create.
DiagonalElement expectation_of_product(std::span<const Element> factors);

/// The scalar state E on a one-vertex graph.
Scalar trace(const Element& a);
Scalar trace_of_product(std::span<const Element> factors);

Support support(const Element& a);

/// a·ξ_h expanded in the basis.
BasisVector apply_to_basis(const Element& a, const PathWord& h);
BasisVector apply(const Element& a, const BasisVector& x);

}  // namespace gwp
