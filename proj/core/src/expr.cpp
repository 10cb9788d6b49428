#include "gwp/expr.hpp"

#include <cctype>
#include <variant>

#include "gwp/error.hpp"

namespace gwp {

namespace {

using Value = std::variant<Scalar, Element>;

class Parser {
 public:
  Parser(std::string_view text, const Graph& g) : text_(text), graph_(g) {}

  Element run() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return as_element(std::move(v));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression error at offset " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  Element as_element(Value v) const {
    if (auto* e = std::get_if<Element>(&v)) return std::move(*e);
    Element id = DiagonalElement::identity(graph_).as_element();
    id *= std::get<Scalar>(v);
    return id;
  }

  Value expr() {
    Value acc = term();
    while (true) {
      if (accept('+')) {
        acc = add(std::move(acc), term(), false);
      } else if (accept('-')) {
        acc = add(std::move(acc), term(), true);
      } else {
        return acc;
      }
    }
  }

  Value add(Value a, Value b, bool subtract) {
    if (auto* x = std::get_if<Scalar>(&a)) {
      if (auto* y = std::get_if<Scalar>(&b)) return subtract ? *x - *y : *x + *y;
    }
    Element lhs = as_element(std::move(a));
    Element rhs = as_element(std::move(b));
    return subtract ? lhs - rhs : lhs + rhs;
  }

  Value term() {
    Value acc = factor();
    while (accept('*')) acc = mul(std::move(acc), factor());
    return acc;
  }

  static Value mul(Value a, Value b) {
    auto* x = std::get_if<Scalar>(&a);
    auto* y = std::get_if<Scalar>(&b);
    if (x && y) return *x * *y;
    if (x) return *x * std::get<Element>(std::move(b));
    if (y) return *y * std::get<Element>(std::move(a));
    return std::get<Element>(a) * std::get<Element>(b);
  }

  Value factor() {
    Value base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/'))) {
      pos_ = start;
      fail("exponent must be an unsigned integer");
    }
    if (pos_ - start > 4) fail("exponent too large");
    auto n = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    if (auto* s = std::get_if<Scalar>(&base)) {
      Scalar r(1);
      for (unsigned i = 0; i < n; ++i) r *= *s;
      return r;
    }
    return power(std::get<Element>(base), n);
  }

  Scalar number() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    auto digits = [&] {
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ - s;
    };
    if (digits() == 0) {
      pos_ = start;
      fail("expected a number");
    }
    std::string literal(text_.substr(start, pos_ - start));
    std::size_t save = pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      std::size_t den_start = pos_;
      if (digits() == 0) fail("expected a denominator");
      literal += "/" + std::string(text_.substr(den_start, pos_ - den_start));
    } else {
      pos_ = save;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        if (digits() == 0) fail("expected digits after '.'");
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        if (digits() == 0) fail("expected an exponent");
      }
      literal = std::string(text_.substr(start, pos_ - start));
    }
    try {
      return Scalar(Rational::parse(literal));
    } catch (const ParseError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Value atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') return number();
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    std::size_t start = pos_;
    if (accept_keyword("adj(")) {
      Value v = expr();
      expect(')');
      if (auto* s = std::get_if<Scalar>(&v)) return s->conj();
      return adjoint(std::get<Element>(v));
    }
    if (accept_keyword("Ls(")) return generator(start, true, false);
    if (accept_keyword("L(")) return generator(start, false, false);
    if (accept_keyword("V(")) return generator(start, false, true);
    fail("expected a number, L(..), Ls(..), V(..), adj(..) or '('");
  }

  Value generator(std::size_t start, bool starred, bool vertex_only) {
    std::size_t id_pos = pos_;
    std::string id = identifier();
    expect(')');
    if (auto v = graph_.find_vertex(id)) return Element::projection(graph_, *v);
    if (!vertex_only) {
      if (auto e = graph_.find_edge(id)) {
        PathWord w = graph_.path(std::span<const EdgeId>(&*e, 1));
        return starred ? Element::annihilation(graph_, w) : Element::creation(graph_, w);
      }
    }
    (void)start;
    pos_ = id_pos;
    fail(std::string("unknown ") + (vertex_only ? "vertex" : "id") + " '" + id + "'");
  }

  std::string_view text_;
  const Graph& graph_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Graph& g, const MonomialKey& key) {
  if (key.create.is_unit() && key.annihilate.is_unit()) {
    return "V(" + g.vertex_name(key.create.source()) + ")";
  }
  std::string out;
  for (EdgeId e : key.create.edges()) {
    if (!out.empty()) out += "*";
    out += "L(" + g.edge_name(e) + ")";
  }
  auto ann = key.annihilate.edges();
  for (std::size_t k = ann.size(); k-- > 0;) {
    if (!out.empty()) out += "*";
    out += "Ls(" + g.edge_name(ann[k]) + ")";
  }
  return out;
}

}  // namespace

Element parse_element_expr(std::string_view text, const Graph& g) { return Parser(text, g).run(); }

std::string print_element(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!t.coeff.is_real()) throw DomainError("complex coefficients cannot be printed in expression syntax");
    std::string c = t.coeff.str();
    bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (out.empty() && negative) {
      // the grammar only allows a sign on a number literal
      out += "-" + c + "*";
    } else {
      if (!out.empty()) out += negative ? " - " : " + ";
      if (c != "1") out += c + "*";
    }
    out += monomial_text(a.graph(), t.key);
  }
  return out;
}

std::string print_diagonal(const DiagonalElement& d) {
  if (d.graph().vertex_count() == 1) return d.coefficient(VertexId{0}).str();
  return print_element(d.as_element());
}

}  // namespace gwp
