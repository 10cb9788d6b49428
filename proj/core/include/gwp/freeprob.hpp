#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwp/cumulants.hpp"
#include "gwp/element.hpp"
#include "gwp/graph.hpp"

namespace gwp {

/// Scalar state used for moment sequences: the vertex coefficient of E, or
/// the trace on a one-vertex graph.
struct State {
  std::optional<VertexId> vertex;

  static State trace() { return {}; }
  static State at(VertexId v) { return {v}; }

  /// Resolves the vertex to read; throws DomainError when a trace is asked
  /// for on a graph with more than one vertex.
  VertexId resolve(const Graph& g) const;
};

/// Truncated formal power series Σ_{n=1}^{K} a_n z^n (no constant term).
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t order() const noexcept { return coeffs_.size(); }
  /// Coefficient of z^n, 1 <= n <= order().
  const Scalar& coefficient(std::size_t n) const { return coeffs_.at(n - 1); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  /// "3 z^2", "z - 1/2 z^3", "0".
  std::string str() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

std::vector<EdgeId> loops_at(const Graph& g, VertexId v0);

/// scale · (L_l + L_l*) for a loop l.
Element semicircular(const Graph& g, EdgeId loop, const Scalar& scale = Scalar(1));

/// Σ_j scale · (L_{l_j} + L_{l_j}*) over every loop at v0.
Element generating_operator(const Graph& g, VertexId v0, const Scalar& scale = Scalar(1));

/// φ(a^n) for n = 1..order.
std::vector<Scalar> moments(const Element& a, std::size_t order, const State& state);
PowerSeries moment_series(const Element& a, std::size_t order, const State& state);
PowerSeries r_transform(const Element& a, std::size_t order, const State& state);

/// 0 for odd n, catalan(n/2) · N^{n/2} for even n.
Rational catalan_moment_formula(std::size_t generators, std::size_t n);

struct DistributionComparison {
  bool identical = false;
  std::optional<std::size_t> first_disagreement;
  PowerSeries first;
  PowerSeries second;
};

DistributionComparison identically_distributed(const Element& a, const State& state_a,
                                               const Element& b, const State& state_b,
                                               std::size_t order);

/// One argument of a mixed-cumulant scan: an element of the *-algebra
/// generated by a creation operator, with a printable label.
struct ScanArgument {
  std::string label;
  Element op;
};

struct CumulantWitness {
  std::vector<std::string> arguments;
  DiagonalElement value;

  /// "k2(L_{a,a}*, L_a·L_a)"
  std::string label() const;
};

struct OrderTally {
  std::size_t order = 0;
  std::size_t scanned = 0;
  std::size_t witnesses = 0;
};

struct FreenessReport {
  bool diagram_distinct = false;
  std::size_t max_order = 0;
  std::size_t cumulants_scanned = 0;
  std::size_t witness_count = 0;
  /// First witnesses in scan order (capped).
  std::vector<CumulantWitness> witnesses;
  std::vector<OrderTally> tallies;

  bool free_evidence() const { return witness_count == 0; }
};

/// Monomials of degree 1..max_degree in {L_w, L_w*}, zero products dropped.
std::vector<ScanArgument> generated_monomials(const Graph& g, const PathWord& w,
                                              std::size_t max_degree = 2);

/// Mixed cumulants of orders 2..max_order with arguments drawn alternately
/// from the *-algebras of L_{w1} and L_{w2}.
FreenessReport freeness_check(const Graph& g, const PathWord& w1, const PathWord& w2,
                              std::size_t max_order, std::size_t max_degree = 2,
                              std::size_t witness_cap = 32);

struct SemicircularGenerator {
  EdgeId loop;
  Scalar scale;
  Element x;
};

struct EmbeddingCheck {
  std::size_t n = 0;
  DiagonalElement value;
  Rational expected;
  /// E(T^n) = expected · L_{v0}.
  bool matches = false;
  /// E(T^n) is supported at v0 only.
  bool local = false;
};

struct SemicircularSystem {
  Graph graph;
  VertexId base;
  std::vector<SemicircularGenerator> generators;
  std::vector<EmbeddingCheck> checks;

  Element sum() const;
  bool verified() const;
};

/// N unit-scale semicircular generators on the first N loops at v0, with
/// E(T^n) checked against the Catalan law for n <= check_order.
SemicircularSystem embed_free_group_factor(const Graph& g, VertexId v0, std::size_t generators,
                                           std::size_t check_order = 8);

/// L_v a L_v.
Element compress_to_vertex(const Element& a, VertexId v);

}  // namespace gwp
