#include "gwp/cumulants.hpp"

#include "gwp/error.hpp"

namespace gwp {

namespace {

class NestedEvaluator {
 public:
  NestedEvaluator(const NCPartition& p, std::span<const Element> factors)
      : blocks_(p.blocks()), labels_(p.labels()), factors_(factors) {}

  // Expectation of the points lo..hi (1-based, inclusive), which must be a
  // union of whole blocks. Returns nullopt for the identity (empty range).
  std::optional<DiagonalElement> range(std::size_t lo, std::size_t hi) const {
    std::optional<DiagonalElement> acc;
    std::size_t pos = lo;
    while (pos <= hi) {
      const auto& block = blocks_[labels_[pos - 1]];
      DiagonalElement value = block_value(block);
      if (acc) {
        acc = *acc * value;
      } else {
        acc = std::move(value);
      }
      if (acc->is_zero()) return acc;
      pos = block.back() + 1;
    }
    return acc;
  }

 private:
  DiagonalElement block_value(const std::vector<std::size_t>& block) const {
    std::vector<Element> product;
    product.reserve(2 * block.size());
    product.push_back(factors_[block.front() - 1]);
    for (std::size_t k = 1; k < block.size(); ++k) {
      if (block[k] > block[k - 1] + 1) {
        auto inner = range(block[k - 1] + 1, block[k] - 1);
        if (inner->is_zero()) return *inner;
        product.push_back(left_multiply(*inner, factors_[block[k] - 1]));
      } else {
        product.push_back(factors_[block[k] - 1]);
      }
    }
    return expectation_of_product(product);
  }

  std::vector<std::vector<std::size_t>> blocks_;
  std::span<const std::uint8_t> labels_;
  std::span<const Element> factors_;
};

void check_factors(std::span<const Element> factors) {
  if (factors.empty()) throw DomainError("at least one factor is required");
  for (const auto& f : factors) {
    if (!(f.graph() == factors.front().graph())) {
      throw CrossGraphError("factors belong to different graphs");
    }
  }
}

}  // namespace

DiagonalElement partitioned_expectation(const NCPartition& p, std::span<const Element> factors) {
  if (p.n() != factors.size()) {
    throw DomainError("partition size " + std::to_string(p.n()) + " does not match " +
                      std::to_string(factors.size()) + " factors");
  }
  check_factors(factors);
  return *NestedEvaluator(p, factors).range(1, p.n());
}

DiagonalElement mixed_cumulant(std::span<const Element> factors) {
  check_factors(factors);
  const Graph& g = factors.front().graph();
  DiagonalElement total(g);
  auto add = [&](const NCPartition& p, const Scalar& mu) {
    DiagonalElement value = *NestedEvaluator(p, factors).range(1, p.n());
    if (!value.is_zero()) total += mu * value;
  };
  if (factors.size() <= 12) {
    for (const auto& entry : nc_table(factors.size())) add(entry.partition, Scalar(entry.mobius));
  } else {
    for_each_nc(factors.size(), [&](const NCPartition& p) {
      add(p, Scalar(Rational(mobius_to_top(p))));
    });
  }
  return total;
}

CumulantFactorization cumulant_factorization(const Graph& g, std::span<const GeneratorFactor> factors) {
  if (factors.empty()) throw DomainError("cumulant factorization needs at least one word");
  std::vector<Element> ops;
  ops.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.word.is_unit()) throw DomainError("generator words must be edge paths");
    ops.push_back(f.flavor == Flavor::plain ? Element::creation(g, f.word)
                                            : Element::annihilation(g, f.word));
  }

  CumulantFactorization out(g);
  out.moment = expectation_of_product(ops);
  for_each_nc(ops.size(), [&](const NCPartition& p) {
    DiagonalElement value = partitioned_expectation(p, ops);
    if (value.is_zero()) return;
    if (value == out.moment) {
      out.contributing.push_back(p);
      out.mobius_sum += mobius_to_top(p);
    } else {
      out.anomalous.push_back(p);
    }
  });
  out.cumulant = mixed_cumulant(ops);
  out.identity_holds = out.cumulant == Scalar(Rational(out.mobius_sum)) * out.moment;
  return out;
}

}  // namespace gwp
