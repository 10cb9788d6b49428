#include "gwp/fock.hpp"

#include <algorithm>
#include <cmath>

#include "gwp/error.hpp"

namespace gwp {

namespace {

constexpr std::uint32_t npos = FockBasis::npos;

void check_graph(const Graph& a, const Graph& b) {
  if (!(a == b)) throw CrossGraphError("element and representation belong to different graphs");
}

}  // namespace

FockBasis::FockBasis(Graph g, std::size_t cutoff, std::uint64_t max_size)
    : graph_(std::move(g)), cutoff_(cutoff) {
  std::uint64_t total = count_paths(graph_, cutoff);
  if (total > max_size) {
    throw LimitError("Fock basis would hold " + std::to_string(total) + " words (cap " +
                     std::to_string(max_size) + ")");
  }
  if (cutoff > std::numeric_limits<std::uint16_t>::max()) throw LimitError("cutoff too large");

  std::size_t n = static_cast<std::size_t>(total);
  parent_.reserve(n);
  last_edge_.reserve(n);
  first_edge_.reserve(n);
  suffix_.reserve(n);
  length_.reserve(n);
  source_.reserve(n);
  range_.reserve(n);

  auto push = [&](std::uint32_t parent, EdgeId last, EdgeId first, std::uint32_t suffix,
                  std::uint16_t len, VertexId s, VertexId r) {
    parent_.push_back(parent);
    last_edge_.push_back(last);
    first_edge_.push_back(first);
    suffix_.push_back(suffix);
    length_.push_back(len);
    source_.push_back(s);
    range_.push_back(r);
  };

  unit_index_.resize(graph_.vertex_count());
  for (VertexId v : graph_.vertices()) {
    unit_index_[v.index] = static_cast<std::uint32_t>(size());
    push(npos, EdgeId{}, EdgeId{}, npos, 0, v, v);
  }
  edge_index_.assign(graph_.edge_count(), npos);
  child_begin_.assign(size(), 0);
  child_end_.assign(size(), 0);
  if (cutoff == 0) return;

  std::vector<std::vector<EdgeId>> out_edges(graph_.vertex_count());
  for (EdgeId e : graph_.edges()) {
    out_edges[graph_.source(e).index].push_back(e);
    edge_index_[e.index] = static_cast<std::uint32_t>(size());
    push(unit_index_[graph_.source(e).index], e, e, unit_index_[graph_.range(e).index], 1,
         graph_.source(e), graph_.range(e));
  }

  std::size_t level_begin = graph_.vertex_count();
  for (std::size_t len = 2; len <= cutoff; ++len) {
    std::size_t level_end = size();
    if (level_begin == level_end) break;
    child_begin_.resize(level_end, 0);
    child_end_.resize(level_end, 0);
    for (std::size_t i = level_begin; i < level_end; ++i) {
      child_begin_[i] = static_cast<std::uint32_t>(size());
      for (EdgeId e : out_edges[range_[i].index]) {
        std::uint32_t suffix = child(suffix_[i], e);
        push(static_cast<std::uint32_t>(i), e, first_edge_[i], suffix,
             static_cast<std::uint16_t>(len), source_[i], graph_.range(e));
      }
      child_end_[i] = static_cast<std::uint32_t>(size());
    }
    level_begin = level_end;
  }
  child_begin_.resize(size(), 0);
  child_end_.resize(size(), 0);
}

std::uint32_t FockBasis::child(std::uint32_t i, EdgeId e) const {
  if (i == npos) return npos;
  if (length_[i] == 0) {
    if (cutoff_ == 0 || graph_.source(e) != source_[i]) return npos;
    return edge_index_[e.index];
  }
  auto first = last_edge_.begin() + child_begin_[i];
  auto last = last_edge_.begin() + child_end_[i];
  auto it = std::lower_bound(first, last, e);
  if (it == last || *it != e) return npos;
  return static_cast<std::uint32_t>(it - last_edge_.begin());
}

PathWord FockBasis::word(std::size_t i) const {
  if (length_[i] == 0) return PathWord::unit(source_[i]);
  std::vector<EdgeId> edges(length_[i]);
  std::size_t k = i;
  for (std::size_t pos = edges.size(); pos-- > 0;) {
    edges[pos] = last_edge_[k];
    k = parent_[k];
  }
  return graph_.path(edges);
}

std::optional<std::size_t> FockBasis::index(const PathWord& w) const {
  graph_.require(w);
  if (w.is_unit()) return unit_index_[w.source().index];
  if (w.length() > cutoff_) return std::nullopt;
  std::uint32_t i = unit_index_[w.source().index];
  for (EdgeId e : w.edges()) i = child(i, e);
  if (i == npos) return std::nullopt;
  return i;
}

FockRep::FockRep(Graph g, std::size_t cutoff, std::uint64_t max_basis)
    : basis_(std::move(g), cutoff, max_basis) {
  const Graph& graph = basis_.graph();
  const std::size_t dim = basis_.size();
  creation_.assign(graph.edge_count(), std::vector<std::uint32_t>(dim, npos));
  for (EdgeId e : graph.edges()) {
    auto& rows = creation_[e.index];
    const std::uint32_t single = basis_.child(basis_.unit_index(graph.source(e)), e);
    // Length-major order guarantees parent(col) < col.
    for (std::size_t col = 0; col < dim; ++col) {
      if (basis_.length(col) == 0) {
        rows[col] = graph.range(e) == basis_.source(col) ? single : npos;
      } else {
        std::uint32_t base = rows[basis_.parent(col)];
        rows[col] = basis_.child(base, basis_.last_edge(col));
      }
    }
  }
}

SparseMatrix FockRep::creation_matrix(EdgeId e) const {
  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  for (std::size_t col = 0; col < dimension(); ++col) {
    if (creation_[e.index][col] != npos) {
      triplets.emplace_back(static_cast<int>(creation_[e.index][col]), static_cast<int>(col), 1.0);
    }
  }
  SparseMatrix m(static_cast<int>(dimension()), static_cast<int>(dimension()));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

SparseMatrix FockRep::annihilation_matrix(EdgeId e) const {
  return SparseMatrix(creation_matrix(e).transpose());
}

SparseMatrix FockRep::projection_matrix(VertexId v) const {
  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (basis_.source(i) == v) triplets.emplace_back(static_cast<int>(i), static_cast<int>(i), 1.0);
  }
  SparseMatrix m(static_cast<int>(dimension()), static_cast<int>(dimension()));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

std::uint32_t FockRep::apply_creation(const PathWord& u, std::uint32_t col) const {
  if (col == npos) return npos;
  if (u.is_unit()) return basis_.source(col) == u.source() ? col : npos;
  auto edges = u.edges();
  for (std::size_t k = edges.size(); k-- > 0 && col != npos;) {
    col = creation_[edges[k].index][col];
  }
  return col;
}

std::uint32_t FockRep::apply_annihilation(const PathWord& w, std::uint32_t col) const {
  if (col == npos) return npos;
  if (w.is_unit()) return basis_.source(col) == w.source() ? col : npos;
  for (EdgeId e : w.edges()) {
    if (basis_.length(col) == 0 || basis_.first_edge(col) != e) return npos;
    col = basis_.suffix(col);
  }
  return col;
}

FockVector FockRep::basis_vector(std::size_t i) const {
  FockVector x(dimension());
  x.at(i) = 1.0;
  return x;
}

FockVector FockRep::apply(const Element& a, const FockVector& x) const {
  check_graph(a.graph(), graph());
  if (x.size() != dimension()) throw DomainError("vector dimension does not match the basis");
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(a.size());
  for (const auto& t : a.terms()) coeffs.push_back(t.coeff.to_complex());

  FockVector y(dimension());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == std::complex<double>{}) continue;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const auto& key = a.terms()[k].key;
      std::uint32_t row = apply_creation(key.create,
                                         apply_annihilation(key.annihilate, static_cast<std::uint32_t>(j)));
      if (row != npos) y[row] += coeffs[k] * x[j];
    }
  }
  return y;
}

FockRep build_rep(const Graph& g, std::size_t cutoff, std::uint64_t max_basis) {
  if (cutoff < 1) throw DomainError("Fock cutoff must be at least 1");
  return FockRep(g, cutoff, max_basis);
}

SparseMatrix matrix_of(const Element& a, const FockRep& rep) {
  check_graph(a.graph(), rep.graph());
  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  for (std::size_t col = 0; col < rep.dimension(); ++col) {
    for (const auto& t : a.terms()) {
      std::uint32_t row = rep.apply_creation(
          t.key.create, rep.apply_annihilation(t.key.annihilate, static_cast<std::uint32_t>(col)));
      if (row != npos) {
        triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), t.coeff.to_complex());
      }
    }
  }
  SparseMatrix m(static_cast<int>(rep.dimension()), static_cast<int>(rep.dimension()));
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.prune(std::complex<double>{});
  return m;
}

std::size_t exact_cutoff(const Element& a, unsigned n) {
  return std::max<std::size_t>(1, a.max_create_length() * n);
}

std::complex<double> vacuum_expectation(const Element& a, const FockRep& rep, VertexId v) {
  return vacuum_expectation_of_product(std::span<const Element>(&a, 1), rep, v);
}

std::complex<double> vacuum_expectation_of_product(std::span<const Element> factors,
                                                   const FockRep& rep, VertexId v) {
  std::size_t needed = 0;
  for (const auto& f : factors) {
    check_graph(f.graph(), rep.graph());
    needed += f.max_create_length();
  }
  if (needed > rep.cutoff()) {
    throw LimitError("cutoff " + std::to_string(rep.cutoff()) + " is below the " +
                     std::to_string(needed) + " needed for an exact vacuum expectation");
  }
  std::size_t start = rep.basis().unit_index(v);
  FockVector x = rep.basis_vector(start);
  for (std::size_t k = factors.size(); k-- > 0;) x = rep.apply(factors[k], x);
  return x[start];
}

std::complex<double> vacuum_moment(const Element& a, unsigned n, const FockRep& rep, VertexId v) {
  std::vector<Element> factors(n, a);
  if (n == 0) return 1.0;
  return vacuum_expectation_of_product(factors, rep, v);
}

bool RelationReport::consistent() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) {
    return c.words_checked == 0 || c.holds == c.expected_to_hold;
  });
}

RelationReport verify_relations(const FockRep& rep, double tolerance) {
  const FockBasis& basis = rep.basis();
  const std::size_t dim = basis.size();

  // Every operator below maps basis vectors to basis vectors or to zero, so a
  // column of a difference of two such operators deviates by 0 or 1.
  auto deviation = [](std::uint32_t lhs, std::uint32_t rhs) { return lhs == rhs ? 0.0 : 1.0; };

  RelationReport report;
  report.cutoff = rep.cutoff();
  enum Row {
    kIsometry,
    kPartialIsometry,
    kPartialIsometryStar,
    kRangeIdempotent,
    kRangeSelfAdjoint,
    kRangeBelowSource,
    kRangeEqualsSource,
    kVertexIdempotent,
    kVertexSelfAdjoint,
    kVertexUnit,
    kRows
  };
  report.checks.resize(kRows);
  report.checks[kIsometry].identity = "L_w* L_w = L_r(w)";
  report.checks[kPartialIsometry].identity = "L_w L_w* L_w = L_w";
  report.checks[kPartialIsometryStar].identity = "L_w* L_w L_w* = L_w*";
  report.checks[kRangeIdempotent].identity = "(L_w L_w*)^2 = L_w L_w*";
  report.checks[kRangeSelfAdjoint].identity = "(L_w L_w*)* = L_w L_w*";
  report.checks[kRangeBelowSource].identity = "L_w L_w* <= L_s(w)";
  report.checks[kRangeEqualsSource].identity = "L_w L_w* = L_s(w)";
  report.checks[kRangeEqualsSource].expected_to_hold = false;
  report.checks[kVertexIdempotent].identity = "L_v^2 = L_v";
  report.checks[kVertexSelfAdjoint].identity = "L_v* = L_v";
  report.checks[kVertexUnit].identity = "L_v* L_v = L_v = L_v L_v*";

  auto bump = [](RelationCheck& c, double d) { c.max_deviation = std::max(c.max_deviation, d); };

  for (std::size_t wi = 0; wi < dim; ++wi) {
    if (basis.length(wi) == 0 || basis.length(wi) >= rep.cutoff()) continue;
    const PathWord w = basis.word(wi);
    const PathWord src = PathWord::unit(w.source());
    const PathWord rng = PathWord::unit(w.range());
    auto create = [&](std::uint32_t c) { return rep.apply_creation(w, c); };
    auto annihilate = [&](std::uint32_t c) { return rep.apply_annihilation(w, c); };
    auto range_proj = [&](std::uint32_t c) { return create(annihilate(c)); };

    for (std::uint32_t col = 0; col < dim; ++col) {
      const bool interior = basis.length(col) + w.length() <= rep.cutoff();
      if (interior) {
        bump(report.checks[kIsometry],
             deviation(annihilate(create(col)), rep.apply_creation(rng, col)));
        bump(report.checks[kPartialIsometry], deviation(create(annihilate(create(col))), create(col)));
      }
      bump(report.checks[kPartialIsometryStar],
           deviation(annihilate(create(annihilate(col))), annihilate(col)));

      std::uint32_t p = range_proj(col);
      bump(report.checks[kRangeIdempotent], deviation(range_proj(p), p));
      // A 0/1 matrix with at most one entry per column is symmetric iff
      // every column image maps back to its column.
      if (p != npos) bump(report.checks[kRangeSelfAdjoint], deviation(range_proj(p), col));
      std::uint32_t s = rep.apply_creation(src, col);
      double diag_p = p == col ? 1.0 : 0.0;
      double diag_s = s == col ? 1.0 : 0.0;
      bump(report.checks[kRangeBelowSource], std::max(0.0, diag_p - diag_s));
      bump(report.checks[kRangeBelowSource], deviation(range_proj(s), p));
      bump(report.checks[kRangeEqualsSource], deviation(p, s));
    }
    for (std::size_t r = kIsometry; r <= kRangeEqualsSource; ++r) ++report.checks[r].words_checked;
  }

  for (VertexId v : rep.graph().vertices()) {
    const PathWord u = PathWord::unit(v);
    for (std::uint32_t col = 0; col < dim; ++col) {
      std::uint32_t p = rep.apply_creation(u, col);
      bump(report.checks[kVertexIdempotent], deviation(rep.apply_creation(u, p), p));
      if (p != npos) bump(report.checks[kVertexSelfAdjoint], deviation(rep.apply_annihilation(u, p), col));
      bump(report.checks[kVertexUnit], deviation(rep.apply_annihilation(u, p), p));
      bump(report.checks[kVertexUnit], deviation(rep.apply_creation(u, rep.apply_annihilation(u, col)), p));
    }
    for (std::size_t r = kVertexIdempotent; r <= kVertexUnit; ++r) ++report.checks[r].words_checked;
  }

  for (auto& c : report.checks) c.holds = c.max_deviation <= tolerance;
  return report;
}

}  // namespace gwp
