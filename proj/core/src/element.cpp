#include "gwp/element.hpp"

#include <algorithm>

#include "gwp/error.hpp"

namespace gwp {

namespace {

void check_same_graph(const Graph& a, const Graph& b) {
  if (!(a == b)) throw CrossGraphError("operands belong to different graphs");
}

void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.key < y.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Scalar sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].key == terms[i].key) {
      sum += terms[j].coeff;
      ++j;
    }
    if (!sum.is_zero()) {
      if (out != i) terms[out].key = std::move(terms[i].key);
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(out), terms.end());
}

// (L_a L_b*)(L_c L_d*) in normal form, or nullopt for the zero operator.
std::optional<MonomialKey> reduce(const MonomialKey& left, const MonomialKey& right) {
  if (auto h = strip_prefix(left.annihilate, right.create)) {
    return MonomialKey{*concat(left.create, *h), right.annihilate};
  }
  if (auto h = strip_prefix(right.create, left.annihilate)) {
    return MonomialKey{left.create, *concat(right.annihilate, *h)};
  }
  return std::nullopt;
}

}  // namespace

Element Element::from_terms(Graph g, std::vector<Term> terms) {
  Element out(std::move(g));
  normalize(terms);
  out.terms_ = std::move(terms);
  return out;
}

Element Element::projection(const Graph& g, VertexId v) {
  PathWord u = g.unit(v);
  return from_terms(g, {Term{{u, u}, Scalar(1)}});
}

Element Element::creation(const Graph& g, const PathWord& w) {
  g.require(w);
  return from_terms(g, {Term{{w, PathWord::unit(w.range())}, Scalar(1)}});
}

Element Element::annihilation(const Graph& g, const PathWord& w) {
  g.require(w);
  return from_terms(g, {Term{{PathWord::unit(w.range()), w}, Scalar(1)}});
}

Scalar Element::coefficient(const PathWord& create, const PathWord& annihilate) const {
  MonomialKey key{create, annihilate};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const MonomialKey& k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return Scalar();
}

std::size_t Element::max_create_length() const noexcept {
  std::size_t out = 0;
  for (const auto& t : terms_) out = std::max(out, t.key.create.length());
  return out;
}

std::size_t Element::max_annihilate_length() const noexcept {
  std::size_t out = 0;
  for (const auto& t : terms_) out = std::max(out, t.key.annihilate.length());
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  check_same_graph(graph_, rhs.graph_);
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  normalize(terms_);
  return *this;
}

Element& Element::operator-=(const Element& rhs) { return *this += -rhs; }

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return *this;
}

Element Element::operator-() const {
  Element out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

bool Element::equal_terms(const Element& other) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].key == other.terms_[i].key) || !(terms_[i].coeff == other.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

Element operator*(const Element& a, const Element& b) {
  check_same_graph(a.graph_, b.graph_);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      if (auto key = reduce(x.key, y.key)) out.push_back(Term{std::move(*key), x.coeff * y.coeff});
    }
  }
  return Element::from_terms(a.graph_, std::move(out));
}

DiagonalElement DiagonalElement::identity(const Graph& g) {
  DiagonalElement d(g);
  for (VertexId v : g.vertices()) d.entries_.emplace_back(v, Scalar(1));
  return d;
}

DiagonalElement DiagonalElement::at(const Graph& g, VertexId v, Scalar c) {
  DiagonalElement d(g);
  d.set(v, std::move(c));
  return d;
}

Scalar DiagonalElement::coefficient(VertexId v) const {
  for (const auto& [u, c] : entries_) {
    if (u == v) return c;
  }
  return Scalar();
}

void DiagonalElement::set(VertexId v, Scalar c) {
  if (v.index >= graph_.vertex_count()) throw ForeignIdError("vertex index out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const auto& e, VertexId x) { return e.first < x; });
  bool present = it != entries_.end() && it->first == v;
  if (c.is_zero()) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = std::move(c);
  } else {
    entries_.emplace(it, v, std::move(c));
  }
}

Element DiagonalElement::as_element() const {
  std::vector<Term> terms;
  for (const auto& [v, c] : entries_) {
    PathWord u = PathWord::unit(v);
    terms.push_back(Term{{u, u}, c});
  }
  return Element::from_terms(graph_, std::move(terms));
}

DiagonalElement& DiagonalElement::operator+=(const DiagonalElement& rhs) {
  check_same_graph(graph_, rhs.graph_);
  for (const auto& [v, c] : rhs.entries_) set(v, coefficient(v) + c);
  return *this;
}

DiagonalElement& DiagonalElement::operator*=(const Scalar& c) {
  for (auto& e : entries_) e.second *= c;
  std::erase_if(entries_, [](const auto& e) { return e.second.is_zero(); });
  return *this;
}

DiagonalElement operator*(const DiagonalElement& a, const DiagonalElement& b) {
  check_same_graph(a.graph_, b.graph_);
  DiagonalElement out(a.graph_);
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      Scalar c = i->second * j->second;
      if (!c.is_zero()) out.entries_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

bool operator==(const DiagonalElement& a, const DiagonalElement& b) {
  if (!(a.graph_ == b.graph_) || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].first != b.entries_[i].first) return false;
    if (!(a.entries_[i].second == b.entries_[i].second)) return false;
  }
  return true;
}

Element make_element(const Graph& g, const std::vector<MonomialSpec>& monomials) {
  std::vector<Term> terms;
  terms.reserve(monomials.size());
  for (const auto& m : monomials) {
    g.require(m.create);
    g.require(m.annihilate);
    if (m.create.range() != m.annihilate.range()) {
      throw DomainError("monomial L_" + g.word_name(m.create) + " L_" + g.word_name(m.annihilate) +
                        "* has mismatched ranges and is the zero operator");
    }
    terms.push_back(Term{{m.create, m.annihilate}, m.coeff});
  }
  return Element::from_terms(g, std::move(terms));
}

Element multiply(const Element& a, const Element& b) { return a * b; }

Element adjoint(const Element& a) {
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    terms.push_back(Term{{t.key.annihilate, t.key.create}, t.coeff.conj()});
  }
  return Element::from_terms(a.graph(), std::move(terms));
}

Element linear_combine(std::span<const Scalar> coeffs, std::span<const Element> elements) {
  if (coeffs.size() != elements.size()) {
    throw DomainError("linear_combine: coefficient and element counts differ");
  }
  if (elements.empty()) throw DomainError("linear_combine: empty combination");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!(elements[i].graph() == elements.front().graph())) {
      throw CrossGraphError("operands belong to different graphs");
    }
    for (const auto& t : elements[i].terms()) terms.push_back(Term{t.key, coeffs[i] * t.coeff});
  }
  return Element::from_terms(elements.front().graph(), std::move(terms));
}

Element power(const Element& a, unsigned n) {
  Element result = DiagonalElement::identity(a.graph()).as_element();
  for (unsigned i = 0; i < n; ++i) result = result * a;
  return result;
}

Element left_multiply(const DiagonalElement& d, const Element& a) { return d.as_element() * a; }

Element right_multiply(const Element& a, const DiagonalElement& d) { return a * d.as_element(); }

DiagonalElement expectation(const Element& a) {
  DiagonalElement out(a.graph());
  for (const auto& t : a.terms()) {
    if (t.key.create.is_unit() && t.key.annihilate.is_unit()) out.set(t.key.create.source(), t.coeff);
  }
  return out;
}

DiagonalElement expectation_of_product(std::span<const Element> factors) {
  if (factors.empty()) throw DomainError("expectation_of_product: no factors");
  const Graph& g = factors.front().graph();
  for (const auto& f : factors) check_same_graph(g, f.graph());

  // budget[k]: total creation length available from factors k..n-1.
  std::vector<std::size_t> budget(factors.size() + 1, 0);
  for (std::size_t k = factors.size(); k-- > 0;) {
    budget[k] = budget[k + 1] + factors[k].max_create_length();
  }

  auto viable = [&](const MonomialKey& key, std::size_t next) {
    return key.create.is_unit() && key.annihilate.length() <= budget[next];
  };

  std::vector<Term> state;
  for (const auto& t : factors.front().terms()) {
    if (viable(t.key, 1)) state.push_back(t);
  }
  for (std::size_t k = 1; k < factors.size() && !state.empty(); ++k) {
    std::vector<Term> next;
    for (const auto& x : state) {
      for (const auto& y : factors[k].terms()) {
        auto key = reduce(x.key, y.key);
        if (key && viable(*key, k + 1)) next.push_back(Term{std::move(*key), x.coeff * y.coeff});
      }
    }
    normalize(next);
    state = std::move(next);
  }

  DiagonalElement out(g);
  for (const auto& t : state) {
    if (t.key.annihilate.is_unit()) out.set(t.key.create.source(), t.coeff);
  }
  return out;
}

Scalar trace(const Element& a) {
  if (a.graph().vertex_count() != 1) throw DomainError("trace requires a one-vertex graph");
  return expectation(a).coefficient(VertexId{0});
}

Scalar trace_of_product(std::span<const Element> factors) {
  if (factors.empty() || factors.front().graph().vertex_count() != 1) {
    throw DomainError("trace requires a one-vertex graph");
  }
  return expectation_of_product(factors).coefficient(VertexId{0});
}

Support support(const Element& a) {
  Support s;
  for (const auto& t : a.terms()) {
    const auto& [u, w] = t.key;
    if (u.is_unit() && w.is_unit()) {
      s.vertex_part.push_back(u.source());
    } else if (w.is_unit()) {
      s.path_part.emplace_back(u, Flavor::plain);
    } else if (u.is_unit()) {
      s.path_part.emplace_back(w, Flavor::starred);
    } else {
      throw DomainError("support is undefined for an element with mixed monomial L_" +
                        a.graph().word_name(u) + " L_" + a.graph().word_name(w) + "*");
    }
  }
  std::sort(s.vertex_part.begin(), s.vertex_part.end());
  s.vertex_part.erase(std::unique(s.vertex_part.begin(), s.vertex_part.end()), s.vertex_part.end());
  std::sort(s.path_part.begin(), s.path_part.end(), [](const auto& x, const auto& y) {
    if (auto c = x.first <=> y.first; c != 0) return c < 0;
    return x.second < y.second;
  });
  return s;
}

BasisVector apply_to_basis(const Element& a, const PathWord& h) {
  a.graph().require(h);
  BasisVector out;
  for (const auto& t : a.terms()) {
    // L_w* ξ_h = ξ_rest when h = w·rest; then L_u ξ_rest = ξ_{u·rest}.
    auto rest = strip_prefix(t.key.annihilate, h);
    if (!rest) continue;
    auto image = concat(t.key.create, *rest);
    if (!image) continue;
    auto [it, inserted] = out.try_emplace(std::move(*image), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

BasisVector apply(const Element& a, const BasisVector& x) {
  BasisVector out;
  for (const auto& [h, c] : x) {
    for (auto& [w, d] : apply_to_basis(a, h)) {
      Scalar v = c * d;
      auto [it, inserted] = out.try_emplace(w, v);
      if (!inserted) it->second += v;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace gwp
