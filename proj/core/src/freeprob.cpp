#include "gwp/freeprob.hpp"

#include <algorithm>

#include "gwp/error.hpp"

namespace gwp {

VertexId State::resolve(const Graph& g) const {
  if (vertex) {
    if (vertex->index >= g.vertex_count()) throw ForeignIdError("state vertex not in graph");
    return *vertex;
  }
  if (g.vertex_count() != 1) throw DomainError("trace requires a one-vertex graph; pass a vertex");
  return VertexId{0};
}

std::string PowerSeries::str() const {
  std::string out;
  for (std::size_t n = 1; n <= coeffs_.size(); ++n) {
    const Scalar& c = coeffs_[n - 1];
    if (c.is_zero()) continue;
    std::string text = c.str();
    bool negative = c.is_real() && text.front() == '-';
    if (negative) text.erase(0, 1);
    if (!c.is_real()) text = "(" + text + ")";
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (text != "1") out += text + " ";
    out += n == 1 ? "z" : "z^" + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

std::vector<EdgeId> loops_at(const Graph& g, VertexId v0) {
  if (v0.index >= g.vertex_count()) throw ForeignIdError("unknown vertex");
  std::vector<EdgeId> out;
  for (EdgeId e : g.edges()) {
    if (g.source(e) == v0 && g.range(e) == v0) out.push_back(e);
  }
  return out;
}

Element semicircular(const Graph& g, EdgeId loop, const Scalar& scale) {
  if (g.source(loop) != g.range(loop)) {
    throw DomainError("edge '" + g.edge_name(loop) + "' is not a loop");
  }
  PathWord l = g.path(std::span<const EdgeId>(&loop, 1));
  Element x = Element::creation(g, l) + Element::annihilation(g, l);
  x *= scale;
  return x;
}

Element generating_operator(const Graph& g, VertexId v0, const Scalar& scale) {
  auto loops = loops_at(g, v0);
  if (loops.empty()) throw DomainError("no loops at vertex '" + g.vertex_name(v0) + "'");
  Element t(g);
  for (EdgeId l : loops) t += semicircular(g, l, scale);
  return t;
}

std::vector<Scalar> moments(const Element& a, std::size_t order, const State& state) {
  if (order < 1) throw DomainError("series order must be at least 1");
  VertexId v = state.resolve(a.graph());
  std::vector<Scalar> out;
  out.reserve(order);
  std::vector<Element> factors;
  for (std::size_t n = 1; n <= order; ++n) {
    factors.push_back(a);
    out.push_back(expectation_of_product(factors).coefficient(v));
  }
  return out;
}

PowerSeries moment_series(const Element& a, std::size_t order, const State& state) {
  return PowerSeries(moments(a, order, state));
}

PowerSeries r_transform(const Element& a, std::size_t order, const State& state) {
  auto m = moments(a, order, state);
  return PowerSeries(moments_to_cumulants(m));
}

Rational catalan_moment_formula(std::size_t generators, std::size_t n) {
  if (n % 2 != 0) return Rational(0);
  BigInt value = catalan(n / 2) * boost::multiprecision::pow(BigInt(generators), static_cast<unsigned>(n / 2));
  return Rational(value);
}

DistributionComparison identically_distributed(const Element& a, const State& state_a,
                                               const Element& b, const State& state_b,
                                               std::size_t order) {
  DistributionComparison out;
  out.first = r_transform(a, order, state_a);
  out.second = r_transform(b, order, state_b);
  for (std::size_t n = 1; n <= order; ++n) {
    if (!(out.first.coefficient(n) == out.second.coefficient(n))) {
      out.first_disagreement = n;
      break;
    }
  }
  out.identical = !out.first_disagreement;
  return out;
}

std::string CumulantWitness::label() const {
  std::string out = "k" + std::to_string(arguments.size()) + "(";
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    if (i) out += ", ";
    out += arguments[i];
  }
  return out + ")";
}

std::vector<ScanArgument> generated_monomials(const Graph& g, const PathWord& w,
                                              std::size_t max_degree) {
  g.require(w);
  const std::string name = w.length() > 1 ? "{" + g.word_name(w) + "}" : g.word_name(w);
  std::vector<ScanArgument> letters = {
      {"L_" + name, Element::creation(g, w)},
      {"L_" + name + "*", Element::annihilation(g, w)},
  };
  std::vector<ScanArgument> out;
  std::vector<ScanArgument> level = letters;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    for (const auto& m : level) {
      if (!m.op.is_zero()) out.push_back(m);
    }
    if (d == max_degree) break;
    std::vector<ScanArgument> next;
    for (const auto& m : level) {
      for (const auto& l : letters) next.push_back({m.label + "·" + l.label, m.op * l.op});
    }
    level = std::move(next);
  }
  return out;
}

FreenessReport freeness_check(const Graph& g, const PathWord& w1, const PathWord& w2,
                              std::size_t max_order, std::size_t max_degree,
                              std::size_t witness_cap) {
  if (max_order < 2) throw DomainError("freeness scan order must be at least 2");
  if (w1.is_unit() || w2.is_unit()) throw DomainError("freeness scan expects finite edge paths");
  FreenessReport report;
  report.diagram_distinct = diagram_distinct(w1, w2);
  report.max_order = max_order;

  const std::vector<ScanArgument> algebras[2] = {generated_monomials(g, w1, max_degree),
                                                 generated_monomials(g, w2, max_degree)};

  std::vector<std::size_t> choice;
  std::vector<Element> args;
  for (std::size_t n = 2; n <= max_order; ++n) {
    OrderTally& tally = report.tallies.emplace_back(OrderTally{n, 0, 0});
    for (std::size_t start = 0; start < 2; ++start) {
      auto pool = [&](std::size_t i) -> const std::vector<ScanArgument>& {
        return algebras[(start + i) % 2];
      };
      choice.assign(n, 0);
      while (true) {
        args.clear();
        for (std::size_t i = 0; i < n; ++i) args.push_back(pool(i)[choice[i]].op);
        DiagonalElement k = mixed_cumulant(args);
        ++report.cumulants_scanned;
        ++tally.scanned;
        if (!k.is_zero()) {
          ++report.witness_count;
          ++tally.witnesses;
          if (report.witnesses.size() < witness_cap) {
            CumulantWitness witness{{}, k};
            for (std::size_t i = 0; i < n; ++i) witness.arguments.push_back(pool(i)[choice[i]].label);
            report.witnesses.push_back(std::move(witness));
          }
        }
        std::size_t i = n;
        while (i-- > 0) {
          if (++choice[i] < pool(i).size()) break;
          choice[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  return report;
}

Element SemicircularSystem::sum() const {
  Element t(graph);
  for (const auto& gen : generators) t += gen.x;
  return t;
}

bool SemicircularSystem::verified() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const EmbeddingCheck& c) { return c.matches && c.local; });
}

SemicircularSystem embed_free_group_factor(const Graph& g, VertexId v0, std::size_t generators,
                                           std::size_t check_order) {
  if (generators < 1) throw DomainError("at least one generator is required");
  auto loops = loops_at(g, v0);
  if (loops.size() < generators) {
    throw DomainError("graph cannot host L(F_" + std::to_string(generators) + ") at vertex '" +
                      g.vertex_name(v0) + "': only " + std::to_string(loops.size()) + " loop(s)");
  }
  SemicircularSystem system{g, v0, {}, {}};
  for (std::size_t j = 0; j < generators; ++j) {
    system.generators.push_back({loops[j], Scalar(1), semicircular(g, loops[j])});
  }
  Element t = system.sum();
  std::vector<Element> factors;
  for (std::size_t n = 1; n <= check_order; ++n) {
    factors.push_back(t);
    EmbeddingCheck check{n, expectation_of_product(factors), catalan_moment_formula(generators, n)};
    check.local = std::all_of(check.value.entries().begin(), check.value.entries().end(),
                              [&](const auto& e) { return e.first == v0; });
    check.matches = check.value == DiagonalElement::at(g, v0, Scalar(check.expected));
    system.checks.push_back(std::move(check));
  }
  return system;
}

Element compress_to_vertex(const Element& a, VertexId v) {
  Element p = Element::projection(a.graph(), v);
  return p * a * p;
}

}  // namespace gwp
