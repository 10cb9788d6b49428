#include "gwp/nc_lattice.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "gwp/error.hpp"

namespace gwp {

NCPartition from_labels(std::vector<std::uint8_t> labels) {
  std::array<int, 256> relabel;
  relabel.fill(-1);
  std::uint8_t next = 0;
  for (auto& l : labels) {
    if (relabel[l] < 0) relabel[l] = next++;
    l = static_cast<std::uint8_t>(relabel[l]);
  }
  NCPartition p;
  p.labels_ = std::move(labels);
  p.block_count_ = next;
  return p;
}

bool is_noncrossing(const std::vector<std::vector<std::size_t>>& blocks) {
  // a < b < c < d with a, c in one block and b, d in another.
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      for (std::size_t a : blocks[x]) {
        for (std::size_t c : blocks[x]) {
          if (c <= a) continue;
          bool inside = false;
          bool outside = false;
          for (std::size_t b : blocks[y]) {
            if (b > a && b < c) inside = true;
            if (b > c) outside = true;
          }
          if (inside && outside) return false;
        }
      }
    }
  }
  return true;
}

NCPartition NCPartition::from_blocks(std::size_t n,
                                     const std::vector<std::vector<std::size_t>>& blocks) {
  if (n == 0 || n > 255) throw DomainError("partition size out of range");
  std::vector<int> seen(n + 1, -1);
  std::vector<std::uint8_t> labels(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("empty block");
    for (std::size_t i : blocks[b]) {
      if (i < 1 || i > n) throw DomainError("block element " + std::to_string(i) + " out of range");
      if (seen[i] >= 0) throw DomainError("element " + std::to_string(i) + " in two blocks");
      seen[i] = static_cast<int>(b);
      labels[i - 1] = static_cast<std::uint8_t>(b);
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (seen[i] < 0) throw DomainError("element " + std::to_string(i) + " not covered");
  }
  if (!is_noncrossing(blocks)) throw DomainError("blocks cross");
  return from_labels(std::move(labels));
}

NCPartition NCPartition::discrete(std::size_t n) {
  std::vector<std::uint8_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint8_t>(i);
  return from_labels(std::move(labels));
}

NCPartition NCPartition::full(std::size_t n) { return from_labels(std::vector<std::uint8_t>(n, 0)); }

std::vector<std::vector<std::size_t>> NCPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i + 1);
  return out;
}

std::vector<std::size_t> NCPartition::block_sizes() const {
  std::vector<std::size_t> out(block_count_, 0);
  for (auto l : labels_) ++out[l];
  return out;
}

bool NCPartition::is_pairing() const {
  auto sizes = block_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });
}

bool NCPartition::refines(const NCPartition& coarser) const {
  if (coarser.n() != n()) return false;
  std::vector<int> image(block_count_, -1);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    int& slot = image[labels_[i]];
    if (slot < 0) {
      slot = coarser.labels_[i];
    } else if (slot != coarser.labels_[i]) {
      return false;
    }
  }
  return true;
}

std::string NCPartition::str() const {
  std::string out = "{";
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out += ",";
    out += "{";
    for (std::size_t k = 0; k < bs[b].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(bs[b][k]);
    }
    out += "}";
  }
  return out + "}";
}

namespace {

// Open blocks form a stack: joining a block closes every block above it.
void place(std::size_t i, std::size_t n, std::vector<std::uint8_t>& labels,
           std::vector<std::uint8_t>& stack, std::uint8_t next_label, bool pairs_only,
           const std::function<void(const NCPartition&)>& visit) {
  if (i == n) {
    if (pairs_only && !stack.empty()) return;
    visit(from_labels(labels));
    return;
  }
  if (pairs_only) {
    // Open singletons live on the stack; the only admissible join is the top.
    if (!stack.empty()) {
      std::uint8_t top = stack.back();
      labels[i] = top;
      stack.pop_back();
      place(i + 1, n, labels, stack, next_label, pairs_only, visit);
      stack.push_back(top);
    }
    if (stack.size() + 1 <= n - i - 1) {
      labels[i] = next_label;
      stack.push_back(next_label);
      place(i + 1, n, labels, stack, static_cast<std::uint8_t>(next_label + 1), pairs_only, visit);
      stack.pop_back();
    }
    return;
  }
  for (std::size_t depth = 0; depth < stack.size(); ++depth) {
    labels[i] = stack[depth];
    std::vector<std::uint8_t> saved(stack.begin() + static_cast<std::ptrdiff_t>(depth) + 1, stack.end());
    stack.resize(depth + 1);
    place(i + 1, n, labels, stack, next_label, pairs_only, visit);
    stack.insert(stack.end(), saved.begin(), saved.end());
  }
  labels[i] = next_label;
  stack.push_back(next_label);
  place(i + 1, n, labels, stack, static_cast<std::uint8_t>(next_label + 1), pairs_only, visit);
  stack.pop_back();
}

}  // namespace

void for_each_nc(std::size_t n, const std::function<void(const NCPartition&)>& visit) {
  if (n < 1 || n > kMaxNCOrder) {
    throw LimitError("NC(n) enumeration supports 1 <= n <= " + std::to_string(kMaxNCOrder));
  }
  std::vector<std::uint8_t> labels(n);
  std::vector<std::uint8_t> stack;
  place(0, n, labels, stack, 0, false, visit);
}

std::vector<NCPartition> enumerate_nc(std::size_t n) {
  std::vector<NCPartition> out;
  for_each_nc(n, [&](const NCPartition& p) { out.push_back(p); });
  return out;
}

std::vector<NCPartition> enumerate_nc_pairings(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw DomainError("NC_2(n) requires a positive even n");
  if (n > kMaxPairingOrder) {
    throw LimitError("NC_2(n) enumeration supports n <= " + std::to_string(kMaxPairingOrder));
  }
  std::vector<NCPartition> out;
  std::vector<std::uint8_t> labels(n);
  std::vector<std::uint8_t> stack;
  place(0, n, labels, stack, 0, true, [&](const NCPartition& p) { out.push_back(p); });
  return out;
}

BigInt catalan(std::size_t k) {
  // c_{j+1} = c_j · 2(2j+1)/(j+2), exact at every step.
  BigInt c = 1;
  for (std::size_t j = 0; j < k; ++j) {
    c = c * 2 * (2 * j + 1);
    c /= (j + 2);
  }
  return c;
}

NCPartition kreweras(const NCPartition& p) {
  const std::size_t n = p.n();
  // next[i]: successor of i in the cycle of its block (blocks read increasingly).
  std::vector<std::size_t> next(n), prev(n);
  for (const auto& block : p.blocks()) {
    for (std::size_t k = 0; k < block.size(); ++k) {
      std::size_t from = block[k] - 1;
      std::size_t to = block[(k + 1) % block.size()] - 1;
      next[from] = to;
      prev[to] = from;
    }
  }
  // K(i) = p^{-1}(γ(i)).
  std::vector<std::uint8_t> labels(n, 0xff);
  std::uint8_t label = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (labels[start] != 0xff) continue;
    std::size_t i = start;
    do {
      labels[i] = label;
      i = prev[(i + 1) % n];
    } while (i != start);
    ++label;
  }
  return from_labels(std::move(labels));
}

BigInt mobius_to_top(const NCPartition& p) {
  BigInt mu = 1;
  for (std::size_t size : kreweras(p).block_sizes()) {
    BigInt c = catalan(size - 1);
    mu *= (size % 2 == 0) ? BigInt(-c) : c;
  }
  return mu;
}

const std::vector<NCEntry>& nc_table(std::size_t n) {
  constexpr std::size_t kMaxCached = 12;
  if (n < 1 || n > kMaxCached) {
    throw LimitError("cached NC(n) tables cover 1 <= n <= " + std::to_string(kMaxCached));
  }
  static std::array<std::unique_ptr<std::vector<NCEntry>>, kMaxCached + 1> tables;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = tables[n];
  if (!slot) {
    auto table = std::make_unique<std::vector<NCEntry>>();
    for_each_nc(n, [&](const NCPartition& p) {
      table->push_back(NCEntry{p, mobius_to_top(p).convert_to<std::int64_t>()});
    });
    slot = std::move(table);
  }
  return *slot;
}

namespace {

template <class Weight>
ScalarSequence transform(std::span<const Scalar> input, Weight weight) {
  ScalarSequence out;
  out.reserve(input.size());
  for (std::size_t k = 1; k <= input.size(); ++k) {
    Scalar total;
    auto accumulate = [&](const NCPartition& p, const Scalar& w) {
      if (w.is_zero()) return;
      Scalar term = w;
      for (std::size_t size : p.block_sizes()) {
        const Scalar& factor = input[size - 1];
        if (factor.is_zero()) return;
        term *= factor;
      }
      total += term;
    };
    if (k <= 12) {
      for (const auto& entry : nc_table(k)) accumulate(entry.partition, weight(entry));
    } else {
      for_each_nc(k, [&](const NCPartition& p) { accumulate(p, weight(NCEntry{p, 0})); });
    }
    out.push_back(std::move(total));
  }
  return out;
}

}  // namespace

ScalarSequence moments_to_cumulants(std::span<const Scalar> moments) {
  return transform(moments, [](const NCEntry& e) {
    if (e.mobius != 0) return Scalar(e.mobius);
    return Scalar(Rational(mobius_to_top(e.partition)));
  });
}

ScalarSequence cumulants_to_moments(std::span<const Scalar> cumulants) {
  return transform(cumulants, [](const NCEntry&) { return Scalar(1); });
}

}  // namespace gwp
