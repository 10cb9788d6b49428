#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gwp/rational.hpp"
#include "gwp/scalar.hpp"

namespace gwp {

/// Non-crossing partition of {1..n}.
///
/// Stored as one block label per point; labels number the blocks in order of
/// their minimum element, which makes the representation canonical.
class NCPartition {
 public:
  NCPartition() = default;

  /// Validates that the blocks partition {1..n} without crossings.
  static NCPartition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
  /// 0_n: all singletons.
  static NCPartition discrete(std::size_t n);
  /// 1_n: one block.
  static NCPartition full(std::size_t n);

  std::size_t n() const noexcept { return labels_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  /// Blocks as sorted 1-based index lists, ordered by minimum.
  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<std::size_t> block_sizes() const;
  /// 0-based block label of the 1-based point i.
  std::size_t block_of(std::size_t i) const { return labels_.at(i - 1); }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }

  bool is_pairing() const;
  /// True when every block of *this lies inside a block of coarser.
  bool refines(const NCPartition& coarser) const;

  /// "{{1,2},{3}}"
  std::string str() const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
  friend auto operator<=>(const NCPartition& a, const NCPartition& b) { return a.labels_ <=> b.labels_; }

 private:
  friend NCPartition from_labels(std::vector<std::uint8_t> labels);

  std::vector<std::uint8_t> labels_;
  std::size_t block_count_ = 0;
};

/// Builds a partition from arbitrary per-point labels (relabelled canonically).
/// Does not check the non-crossing property.
NCPartition from_labels(std::vector<std::uint8_t> labels);

bool is_noncrossing(const std::vector<std::vector<std::size_t>>& blocks);

constexpr std::size_t kMaxNCOrder = 14;
constexpr std::size_t kMaxPairingOrder = 28;

/// Visits NC(n) in canonical order: points are placed left to right, each one
/// joining an open block (outermost first) or opening a new one last.
void for_each_nc(std::size_t n, const std::function<void(const NCPartition&)>& visit);
std::vector<NCPartition> enumerate_nc(std::size_t n);
/// NC_2(n), in the order induced by enumerate_nc.
std::vector<NCPartition> enumerate_nc_pairings(std::size_t n);

BigInt catalan(std::size_t k);

/// Kreweras complement, computed as the permutation K(p) = p^{-1} γ with
/// γ = (1 2 ... n) and p read as the product of its increasing block cycles.
NCPartition kreweras(const NCPartition& p);

/// μ(p, 1_n) = Π over blocks V of K(p) of (-1)^{|V|-1} catalan(|V|-1).
BigInt mobius_to_top(const NCPartition& p);

struct NCEntry {
  NCPartition partition;
  std::int64_t mobius = 0;
};

/// Cached NC(n) together with μ(π, 1_n), for 1 <= n <= 12.
const std::vector<NCEntry>& nc_table(std::size_t n);

using ScalarSequence = std::vector<Scalar>;

/// k_n = Σ_{π ∈ NC(n)} μ(π, 1_n) Π_{V ∈ π} m_{|V|}, for every prefix length.
ScalarSequence moments_to_cumulants(std::span<const Scalar> moments);
/// m_n = Σ_{π ∈ NC(n)} Π_{V ∈ π} k_{|V|}.
ScalarSequence cumulants_to_moments(std::span<const Scalar> cumulants);

}  // namespace gwp
