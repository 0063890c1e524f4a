#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "circconj/exactnum/continued_fraction.hpp"

namespace circconj {

struct ExprNode;

/// Immutable expression tree denoting an orientation-preserving
/// homeomorphism of the line or of the circle. Copies share structure.
class Expr {
 public:
  Expr();  // Identity
  explicit Expr(ExprNode node);

  const ExprNode& node() const { return *node_; }
  template <class T>
  const T* as() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const ExprNode> node_;
};

namespace node {

struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};
/// L_a : x -> x + a (a rotation when read on the circle).
struct Translate {
  Alpha amount;
  friend bool operator==(const Translate&, const Translate&) = default;
};
/// M_u : x -> u x, u > 0.
struct Scale {
  Surd factor;
  friend bool operator==(const Scale&, const Scale&) = default;
};
/// h(x) = 1/2 + arctan(x) / pi, a map from the line onto (0, 1).
struct HbarBase {
  friend bool operator==(const HbarBase&, const HbarBase&) = default;
};
/// x in (i, i+1) -> h inner h^-1 (x - i) + i; integers fixed.
struct HbarWrap {
  Expr inner;
  friend bool operator==(const HbarWrap&, const HbarWrap&) = default;
};
/// x in [i, i+1) -> inner^i (x). inner must fix Z and commute with L_1.
struct Staircase {
  Expr inner;
  friend bool operator==(const Staircase&, const Staircase&) = default;
};
/// Circle map acting on arc i as f^(i-1) o inner~ o f^-(i-1), marked points fixed.
struct CircleExtend {
  Expr inner;
  int k;
  Expr f;
  friend bool operator==(const CircleExtend&, const CircleExtend&) = default;
};
/// Rigid rotation by 1/k off the last arc; the last arc goes to the first
/// arc followed by the transplant of `g` (the line map whose arc copy is g~).
struct CanonicalF {
  int k;
  Expr g;
  friend bool operator==(const CanonicalF&, const CanonicalF&) = default;
};
/// Circle map acting on arc i as f^(i-1) o fprime^-(i-1), marked points fixed.
struct Retwist {
  Expr f;
  Expr fprime;
  int k;
  friend bool operator==(const Retwist&, const Retwist&) = default;
};
/// items[0] o items[1] o ... (rightmost applied first). `commuting` asserts
/// the factors commute, which lets powers distribute over them.
struct Compose {
  std::vector<Expr> items;
  bool commuting = false;
  friend bool operator==(const Compose&, const Compose&) = default;
};
struct Inverse {
  Expr inner;
  friend bool operator==(const Inverse&, const Inverse&) = default;
};
struct Power {
  Expr inner;
  i64 exponent;
  friend bool operator==(const Power&, const Power&) = default;
};

}  // namespace node

struct ExprNode {
  std::variant<node::Identity, node::Translate, node::Scale, node::HbarBase, node::HbarWrap, node::Staircase,
               node::CircleExtend, node::CanonicalF, node::Retwist, node::Compose, node::Inverse, node::Power>
      value;
  friend bool operator==(const ExprNode&, const ExprNode&) = default;
};

template <class T>
const T* Expr::as() const {
  return std::get_if<T>(&node_->value);
}

enum class Domain { Line, Circle, Both };

/// Where an expression can be evaluated; throws DomainError on mixtures.
Domain domain_of(const Expr& e);

Expr identity_expr();
Expr translate(Alpha amount);
Expr translate(i64 amount);
Expr scale(Surd factor);
Expr hbar_base();
Expr hbar_wrap(Expr inner);
/// m-fold nested HbarWrap; m = 0 returns e unchanged.
Expr hbar_iter(Expr e, int m);
/// Staircase node without precondition sampling (see staircase()).
Expr staircase_unchecked(Expr inner);
Expr circle_extend(Expr inner, int k, Expr f);
Expr canonical_f_expr(int k, Expr g);
Expr retwist(Expr f, Expr fprime, int k);
Expr compose(std::vector<Expr> items, bool commuting = false);
Expr inverse(Expr e);
Expr power(Expr e, i64 exponent);

}  // namespace circconj
