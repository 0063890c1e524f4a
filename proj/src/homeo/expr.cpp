#include "circconj/homeo/expr.hpp"

namespace circconj {

Expr::Expr() : node_(std::make_shared<const ExprNode>(ExprNode{node::Identity{}})) {}

Expr::Expr(ExprNode n) : node_(std::make_shared<const ExprNode>(std::move(n))) {}

bool operator==(const Expr& a, const Expr& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

namespace {

Domain join(Domain a, Domain b) {
  if (a == Domain::Both) return b;
  if (b == Domain::Both || a == b) return a;
  throw DomainError("expression mixes line-only and circle-only maps");
}

void require_line(const Expr& e, const char* what) {
  if (domain_of(e) == Domain::Circle) throw DomainError(std::string(what) + " needs a line map");
}

void require_k(int k) {
  if (k < 1) throw DomainError("number of marked points must be positive");
}

}  // namespace

Domain domain_of(const Expr& e) {
  return std::visit(
      [](const auto& n) -> Domain {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Identity> || std::is_same_v<T, node::Translate>) {
          return Domain::Both;
        } else if constexpr (std::is_same_v<T, node::Scale> || std::is_same_v<T, node::HbarBase>) {
          return Domain::Line;
        } else if constexpr (std::is_same_v<T, node::HbarWrap> || std::is_same_v<T, node::Staircase>) {
          join(domain_of(n.inner), Domain::Line);
          return Domain::Line;
        } else if constexpr (std::is_same_v<T, node::CircleExtend>) {
          join(domain_of(n.inner), Domain::Line);
          join(domain_of(n.f), Domain::Circle);
          return Domain::Circle;
        } else if constexpr (std::is_same_v<T, node::CanonicalF>) {
          join(domain_of(n.g), Domain::Line);
          return Domain::Circle;
        } else if constexpr (std::is_same_v<T, node::Retwist>) {
          join(domain_of(n.f), Domain::Circle);
          join(domain_of(n.fprime), Domain::Circle);
          return Domain::Circle;
        } else if constexpr (std::is_same_v<T, node::Compose>) {
          Domain d = Domain::Both;
          for (const Expr& item : n.items) d = join(d, domain_of(item));
          return d;
        } else {
          return domain_of(n.inner);
        }
      },
      e.node().value);
}

Expr identity_expr() { return Expr(); }

Expr translate(Alpha amount) { return Expr(ExprNode{node::Translate{std::move(amount)}}); }

Expr translate(i64 amount) { return translate(Alpha{Surd::integer(amount)}); }

Expr scale(Surd factor) {
  if (factor.sign() <= 0) throw DomainError("scale factor must be positive, got " + factor.to_string());
  return Expr(ExprNode{node::Scale{factor}});
}

Expr hbar_base() { return Expr(ExprNode{node::HbarBase{}}); }

Expr hbar_wrap(Expr inner) {
  require_line(inner, "HbarWrap");
  return Expr(ExprNode{node::HbarWrap{std::move(inner)}});
}

Expr hbar_iter(Expr e, int m) {
  if (m < 0) throw DomainError("hbar_iter depth must be non-negative");
  for (int i = 0; i < m; ++i) e = hbar_wrap(std::move(e));
  return e;
}

Expr staircase_unchecked(Expr inner) {
  require_line(inner, "Staircase");
  return Expr(ExprNode{node::Staircase{std::move(inner)}});
}

Expr circle_extend(Expr inner, int k, Expr f) {
  require_k(k);
  require_line(inner, "CircleExtend");
  if (domain_of(f) == Domain::Line) throw DomainError("CircleExtend needs a circle map as f");
  return Expr(ExprNode{node::CircleExtend{std::move(inner), k, std::move(f)}});
}

Expr canonical_f_expr(int k, Expr g) {
  require_k(k);
  require_line(g, "CanonicalF");
  return Expr(ExprNode{node::CanonicalF{k, std::move(g)}});
}

Expr retwist(Expr f, Expr fprime, int k) {
  require_k(k);
  if (domain_of(f) == Domain::Line || domain_of(fprime) == Domain::Line)
    throw DomainError("Retwist needs circle maps");
  return Expr(ExprNode{node::Retwist{std::move(f), std::move(fprime), k}});
}

Expr compose(std::vector<Expr> items, bool commuting) {
  if (items.empty()) return Expr();
  Expr out(ExprNode{node::Compose{std::move(items), commuting}});
  domain_of(out);
  return out;
}

Expr inverse(Expr e) { return Expr(ExprNode{node::Inverse{std::move(e)}}); }

Expr power(Expr e, i64 exponent) { return Expr(ExprNode{node::Power{std::move(e), exponent}}); }

}  // namespace circconj
