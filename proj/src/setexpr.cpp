#include "densityforge/setexpr.hpp"

#include <cctype>
#include <sstream>

#include "densityforge/limits.hpp"

namespace densityforge {

SetExpr SetExpr::nat() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Nat;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::empty() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Empty;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::progression(std::uint64_t k, std::uint64_t h) {
  if (k == 0) throw std::invalid_argument("AP step must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Progression;
  n->k = k;
  n->h = h;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::finite_set(std::vector<std::uint64_t> elements) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FiniteSet;
  n->elements = std::move(elements);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::union_of(SetExpr a, SetExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Union;
  n->left = a.node_;
  n->right = b.node_;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::intersect_of(SetExpr a, SetExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Intersect;
  n->left = a.node_;
  n->right = b.node_;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::difference_of(SetExpr a, SetExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Difference;
  n->left = a.node_;
  n->right = b.node_;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::complement_of(SetExpr a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Complement;
  n->left = a.node_;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::affine_of(std::uint64_t k, SetExpr child, std::uint64_t h) {
  if (k == 0) throw std::invalid_argument("affine coefficient must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Affine;
  n->k = k;
  n->h = h;
  n->left = child.node_;
  return SetExpr(std::move(n));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SetExpr parse() {
    SetExpr e = parse_set();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  bool digit_ahead() { return std::isdigit((unsigned char)peek()); }

  std::uint64_t parse_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
      fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
      std::uint64_t d = text_[pos_] - '0';
      if (v > (~std::uint64_t{0} - d) / 10) fail("integer literal too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  bool keyword_ahead(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t after = pos_ + kw.size();
    if (after < text_.size() && (std::isalnum((unsigned char)text_[after]) || text_[after] == '_'))
      return false;
    return true;
  }

  SetExpr parse_set() {
    SetExpr e = parse_diff();
    while (true) {
      if (eat('|')) {
        e = SetExpr::union_of(e, parse_diff());
      } else if (peek() == '+') {
        ++pos_;
        e = SetExpr::union_of(e, parse_diff());
      } else {
        return e;
      }
    }
  }

  SetExpr parse_diff() {
    SetExpr e = parse_inter();
    while (eat('\\')) e = SetExpr::difference_of(e, parse_inter());
    return e;
  }

  SetExpr parse_inter() {
    SetExpr e = parse_factor();
    while (eat('&')) e = SetExpr::intersect_of(e, parse_factor());
    return e;
  }

  SetExpr parse_factor() {
    if (eat('~')) return SetExpr::complement_of(parse_factor());
    if (digit_ahead()) {
      std::size_t at = pos_;
      std::uint64_t k = parse_int();
      if (k == 0) {
        pos_ = at;
        fail("non-positive affine coefficient");
      }
      expect('*', "after affine coefficient");
      SetExpr child = parse_factor();
      std::uint64_t h = 0;
      // A '+' belongs to this affine factor only when the integer after it
      // is a shift, not the coefficient of the next union operand.
      std::size_t before_plus = pos_;
      if (eat('+')) {
        if (digit_ahead()) {
          std::uint64_t cand = parse_int();
          if (peek() == '*') {
            pos_ = before_plus;  // "INT *" starts a new factor; '+' was a union
          } else {
            h = cand;
          }
        } else {
          pos_ = before_plus;
        }
      }
      return SetExpr::affine_of(k, child, h);
    }
    return parse_atom();
  }

  SetExpr parse_atom() {
    if (keyword_ahead("AP")) {
      pos_ += 2;
      expect('(', "after AP");
      std::size_t at = pos_;
      std::uint64_t k = parse_int();
      if (k == 0) {
        pos_ = at;
        fail("non-positive modulus in AP atom");
      }
      expect(',', "in AP atom");
      std::uint64_t h = parse_int();
      expect(')', "closing AP atom");
      return SetExpr::progression(k, h);
    }
    if (keyword_ahead("N")) {
      pos_ += 1;
      return SetExpr::nat();
    }
    if (keyword_ahead("EMPTY")) {
      pos_ += 5;
      return SetExpr::empty();
    }
    if (eat('{')) {
      std::vector<std::uint64_t> elems;
      elems.push_back(parse_int());
      while (eat(',')) elems.push_back(parse_int());
      expect('}', "closing finite set");
      return SetExpr::finite_set(std::move(elems));
    }
    if (eat('(')) {
      SetExpr e = parse_set();
      expect(')', "closing group");
      return e;
    }
    fail("expected a set atom");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SetExpr parse_set_expr(std::string_view text) { return Parser(text).parse(); }

APSet normalize(const SetExpr& expr) {
  switch (expr.kind()) {
    case SetExpr::Kind::Nat: return APSet::naturals();
    case SetExpr::Kind::Empty: return APSet::empty_set();
    case SetExpr::Kind::Progression: return APSet::progression(expr.coeff(), expr.shift());
    case SetExpr::Kind::FiniteSet: return APSet::finite(expr.elements());
    case SetExpr::Kind::Union: return set_union(normalize(expr.left()), normalize(expr.right()));
    case SetExpr::Kind::Intersect:
      return set_intersect(normalize(expr.left()), normalize(expr.right()));
    case SetExpr::Kind::Difference:
      return set_difference(normalize(expr.left()), normalize(expr.right()));
    case SetExpr::Kind::Complement: return set_complement(normalize(expr.left()));
    case SetExpr::Kind::Affine:
      return affine_image(normalize(expr.left()), expr.coeff(), expr.shift());
  }
  throw std::logic_error("unreachable expression kind");
}

bool expr_member(const SetExpr& expr, std::uint64_t x) {
  switch (expr.kind()) {
    case SetExpr::Kind::Nat: return true;
    case SetExpr::Kind::Empty: return false;
    case SetExpr::Kind::Progression:
      return x >= expr.shift() && (x - expr.shift()) % expr.coeff() == 0;
    case SetExpr::Kind::FiniteSet: {
      for (std::uint64_t e : expr.elements())
        if (e == x) return true;
      return false;
    }
    case SetExpr::Kind::Union:
      return expr_member(expr.left(), x) || expr_member(expr.right(), x);
    case SetExpr::Kind::Intersect:
      return expr_member(expr.left(), x) && expr_member(expr.right(), x);
    case SetExpr::Kind::Difference:
      return expr_member(expr.left(), x) && !expr_member(expr.right(), x);
    case SetExpr::Kind::Complement: return !expr_member(expr.left(), x);
    case SetExpr::Kind::Affine:
      return x >= expr.shift() && (x - expr.shift()) % expr.coeff() == 0 &&
             expr_member(expr.left(), (x - expr.shift()) / expr.coeff());
  }
  throw std::logic_error("unreachable expression kind");
}

std::string to_string(const SetExpr& expr) {
  std::ostringstream os;
  switch (expr.kind()) {
    case SetExpr::Kind::Nat: return "N";
    case SetExpr::Kind::Empty: return "EMPTY";
    case SetExpr::Kind::Progression:
      os << "AP(" << expr.coeff() << "," << expr.shift() << ")";
      return os.str();
    case SetExpr::Kind::FiniteSet: {
      os << "{";
      for (std::size_t i = 0; i < expr.elements().size(); ++i)
        os << (i ? "," : "") << expr.elements()[i];
      os << "}";
      return os.str();
    }
    case SetExpr::Kind::Union:
      return "(" + to_string(expr.left()) + " + " + to_string(expr.right()) + ")";
    case SetExpr::Kind::Intersect:
      return "(" + to_string(expr.left()) + " & " + to_string(expr.right()) + ")";
    case SetExpr::Kind::Difference:
      return "(" + to_string(expr.left()) + " \\ " + to_string(expr.right()) + ")";
    case SetExpr::Kind::Complement: return "~" + to_string(expr.left());
    case SetExpr::Kind::Affine: {
      os << expr.coeff() << "*(" << to_string(expr.left()) << ")";
      if (expr.shift()) os << "+" << expr.shift();
      return os.str();
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace densityforge
