#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "gwp/element.hpp"
#include "gwp/graph.hpp"

namespace gwp {

/// Truncated basis {ξ_w : |w| <= cutoff} of the graph Hilbert space, in the
/// order of enumerate_paths. Words are stored as a trie (parent + last edge)
/// and materialized on demand.
class FockBasis {
 public:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  FockBasis(Graph g, std::size_t cutoff, std::uint64_t max_size = 1'000'000);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t cutoff() const noexcept { return cutoff_; }
  std::size_t size() const noexcept { return length_.size(); }

  PathWord word(std::size_t i) const;
  std::optional<std::size_t> index(const PathWord& w) const;

  std::size_t length(std::size_t i) const { return length_[i]; }
  VertexId source(std::size_t i) const { return source_[i]; }
  VertexId range(std::size_t i) const { return range_[i]; }
  /// Prefix without the last edge; for a single edge, the unit at its source.
  std::uint32_t parent(std::size_t i) const { return parent_[i]; }
  EdgeId last_edge(std::size_t i) const { return last_edge_[i]; }
  /// First edge of a path word (unspecified for units).
  EdgeId first_edge(std::size_t i) const { return first_edge_[i]; }
  /// Index of the word with its first edge removed (npos for units).
  std::uint32_t suffix(std::size_t i) const { return suffix_[i]; }
  std::uint32_t unit_index(VertexId v) const { return unit_index_[v.index]; }
  /// Index of the one-step extension w·e, npos if absent.
  std::uint32_t child(std::uint32_t i, EdgeId e) const;

 private:
  Graph graph_;
  std::size_t cutoff_;

  std::vector<std::uint32_t> parent_;
  std::vector<EdgeId> last_edge_;
  std::vector<EdgeId> first_edge_;
  std::vector<std::uint32_t> suffix_;
  std::vector<std::uint16_t> length_;
  std::vector<VertexId> source_;
  std::vector<VertexId> range_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<std::uint32_t> child_end_;
  std::vector<std::uint32_t> unit_index_;
  std::vector<std::uint32_t> edge_index_;
};

using FockVector = std::vector<std::complex<double>>;
using SparseMatrix = Eigen::SparseMatrix<std::complex<double>>;

/// Truncated Fock representation: each edge creation operator is a 0/1
/// column list (one row per column at most); annihilations are transposes.
class FockRep {
 public:
  FockRep(Graph g, std::size_t cutoff, std::uint64_t max_basis = 1'000'000);

  const FockBasis& basis() const noexcept { return basis_; }
  const Graph& graph() const noexcept { return basis_.graph(); }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::size_t cutoff() const noexcept { return basis_.cutoff(); }

  /// Row index of L_e ξ_col, npos when e·col is inadmissible or too long.
  std::uint32_t creation_row(EdgeId e, std::size_t col) const {
    return creation_[e.index][col];
  }

  /// Sparse matrices of the generators.
  SparseMatrix creation_matrix(EdgeId e) const;
  SparseMatrix annihilation_matrix(EdgeId e) const;
  SparseMatrix projection_matrix(VertexId v) const;

  /// Images of a single basis vector; npos means zero.
  std::uint32_t apply_creation(const PathWord& u, std::uint32_t col) const;
  std::uint32_t apply_annihilation(const PathWord& w, std::uint32_t col) const;

  FockVector basis_vector(std::size_t i) const;
  FockVector apply(const Element& a, const FockVector& x) const;

 private:
  FockBasis basis_;
  std::vector<std::vector<std::uint32_t>> creation_;
};

FockRep build_rep(const Graph& g, std::size_t cutoff, std::uint64_t max_basis = 1'000'000);

/// Σ coeff · M(L_u) M(L_w)^T, truncated to the basis.
SparseMatrix matrix_of(const Element& a, const FockRep& rep);

/// Cutoff that makes vacuum moments of order n exact: n times the longest
/// creation word of a (at least 1).
std::size_t exact_cutoff(const Element& a, unsigned n);

/// <a ξ_v, ξ_v>. Throws LimitError unless every creation word fits the cutoff.
std::complex<double> vacuum_expectation(const Element& a, const FockRep& rep, VertexId v);
/// <a_1 ... a_n ξ_v, ξ_v>, exact when the summed creation lengths fit.
std::complex<double> vacuum_expectation_of_product(std::span<const Element> factors,
                                                   const FockRep& rep, VertexId v);
/// <a^n ξ_v, ξ_v>.
std::complex<double> vacuum_moment(const Element& a, unsigned n, const FockRep& rep, VertexId v);

struct RelationCheck {
  std::string identity;
  double max_deviation = 0.0;
  std::size_t words_checked = 0;
  /// False only for the equality L_w L_w* = L_s(w), which the concrete
  /// representation does not satisfy; its deviation is reported regardless.
  bool expected_to_hold = true;
  bool holds = false;
};

struct RelationReport {
  std::size_t cutoff = 0;
  std::vector<RelationCheck> checks;

  /// Every check agrees with its expectation.
  bool consistent() const;
};

/// Checks the partial-isometry and projection relations for every word of
/// length < cutoff, restricted to the columns the truncation leaves untouched.
RelationReport verify_relations(const FockRep& rep, double tolerance = 1e-12);

}  // namespace gwp
