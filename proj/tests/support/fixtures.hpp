#pragma once

#include <random>
#include <string>
#include <vector>

#include "gwp/element.hpp"
#include "gwp/graph.hpp"
#include "gwp/rational.hpp"

namespace gwp::testing {

inline Graph loops_graph(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({std::string(1, static_cast<char>('a' + i)), "v", "v"});
  }
  return build_graph({"v"}, edges);
}

// u --e1--> v --e2--> w
inline Graph chain_graph() { return build_graph({"u", "v", "w"}, {{"e1", "u", "v"}, {"e2", "v", "w"}}); }

// Two loops at v0, e1: v1 -> v0 and e2: v0 -> v2.
inline Graph embed_graph() {
  return build_graph({"v0", "v1", "v2"},
                     {{"l1", "v0", "v0"}, {"l2", "v0", "v0"}, {"e1", "v1", "v0"}, {"e2", "v0", "v2"}});
}

// Mixed graph used by the random property tests: a loop, a 2-cycle and a tail.
inline Graph mixed_graph() {
  return build_graph({"p", "q", "r"},
                     {{"a", "p", "p"}, {"f", "p", "q"}, {"g", "q", "p"}, {"h", "q", "r"}});
}

inline Rational random_rational(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

inline PathWord random_word(const Graph& g, std::mt19937& rng, std::size_t max_len) {
  std::vector<PathWord> words = enumerate_paths(g, max_len);
  return words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
}

/// Random element with up to max_terms monomials L_u L_w*, words of length <= max_len.
inline Element random_element(const Graph& g, std::mt19937& rng, std::size_t max_terms = 4,
                              std::size_t max_len = 2) {
  std::vector<PathWord> words = enumerate_paths(g, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::vector<MonomialSpec> specs;
  for (std::size_t n = count(rng), tries = 0; specs.size() < n && tries < 200; ++tries) {
    const PathWord& u = words[pick(rng)];
    const PathWord& w = words[pick(rng)];
    if (u.range() != w.range()) continue;
    specs.push_back({Scalar(random_rational(rng)), u, w});
  }
  return make_element(g, specs);
}

}  // namespace gwp::testing
