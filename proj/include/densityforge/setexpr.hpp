#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "densityforge/apset.hpp"

namespace densityforge {

// Abstract syntax tree for the set DSL:
//
//   set    := diff (('+'|'|') diff)*          union
//   diff   := inter ('\' inter)*              difference
//   inter  := factor ('&' factor)*            intersection
//   factor := '~' factor                      complement (w.r.t. N)
//           | INT '*' factor ('+' INT)?       affine image k*S+h
//           | atom
//   atom   := 'AP(' INT ',' INT ')' | 'N' | 'EMPTY'
//           | '{' INT (',' INT)* '}' | '(' set ')'
//
// A '+' is a shift only when the integer after it is not itself the start of
// an affine factor ("2*N+3" shifts, "2*N + 3*N" is a union).
class SetExpr {
 public:
  enum class Kind {
    Nat,
    Empty,
    Progression,  // AP(k,h) = {k t + h}
    FiniteSet,
    Union,
    Intersect,
    Difference,
    Complement,
    Affine  // k * child + h
  };

  static SetExpr nat();
  static SetExpr empty();
  static SetExpr progression(std::uint64_t k, std::uint64_t h);
  static SetExpr finite_set(std::vector<std::uint64_t> elements);
  static SetExpr union_of(SetExpr a, SetExpr b);
  static SetExpr intersect_of(SetExpr a, SetExpr b);
  static SetExpr difference_of(SetExpr a, SetExpr b);
  static SetExpr complement_of(SetExpr a);
  static SetExpr affine_of(std::uint64_t k, SetExpr child, std::uint64_t h);

  Kind kind() const { return node_->kind; }
  std::uint64_t coeff() const { return node_->k; }
  std::uint64_t shift() const { return node_->h; }
  const std::vector<std::uint64_t>& elements() const { return node_->elements; }
  SetExpr left() const { return SetExpr(node_->left); }
  SetExpr right() const { return SetExpr(node_->right); }

 private:
  struct Node {
    Kind kind;
    std::uint64_t k = 0, h = 0;
    std::vector<std::uint64_t> elements;
    std::shared_ptr<const Node> left, right;
  };
  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses DSL text. Throws ParseError (with byte offset) on syntax errors,
/// including a zero modulus in an AP atom or affine coefficient.
SetExpr parse_set_expr(std::string_view text);

/// Canonical APSet denoted by the expression. Throws LcmCapExceeded /
/// FiniteCapExceeded on resource exhaustion.
APSet normalize(const SetExpr& expr);

/// Direct membership semantics, evaluated on the tree without any APSet
/// algebra. Used as the independent oracle for normalize().
bool expr_member(const SetExpr& expr, std::uint64_t x);

/// Round-trippable text form.
std::string to_string(const SetExpr& expr);

}  // namespace densityforge
