#pragma once

#include <span>
#include <vector>

#include "gwp/element.hpp"
#include "gwp/nc_lattice.hpp"

namespace gwp {

/// Nested D_G-valued expectation E_π(a_1, ..., a_n).
///
/// The blocks nested inside a gap of an enclosing block are evaluated first;
/// their diagonal value is inserted as a left multiplier on the next factor of
/// the enclosing block. Consecutive outer blocks multiply in D_G.
DiagonalElement partitioned_expectation(const NCPartition& p, std::span<const Element> factors);

/// n-th D_G-valued cumulant k_n(a_1, ..., a_n) = Σ_π μ(π, 1_n) E_π.
DiagonalElement mixed_cumulant(std::span<const Element> factors);

struct GeneratorFactor {
  PathWord word;
  Flavor flavor = Flavor::plain;
};

/// Relation between a cumulant of pure generators and the moment of their
/// product: k_n = μ · E(product) with μ the Möbius mass of the partitions
/// whose nested expectation reproduces the (nonzero) full moment.
struct CumulantFactorization {
  std::vector<NCPartition> contributing;
  /// Partitions with E_π != 0 but E_π != E(product); reported, never guessed.
  std::vector<NCPartition> anomalous;
  BigInt mobius_sum = 0;
  DiagonalElement moment;
  DiagonalElement cumulant;
  bool identity_holds = false;

  CumulantFactorization(const Graph& g) : moment(g), cumulant(g) {}
};

CumulantFactorization cumulant_factorization(const Graph& g, std::span<const GeneratorFactor> factors);

}  // namespace gwp
