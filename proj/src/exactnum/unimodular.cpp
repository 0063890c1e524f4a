#include "circconj/exactnum/unimodular.hpp"

#include <sstream>

namespace circconj {

UnimodularMatrix2 UnimodularMatrix2::make(i64 m2, i64 m1, i64 n2, i64 n1) {
  UnimodularMatrix2 m{m2, m1, n2, n1};
  i64 d = m.det();
  if (d != 1 && d != -1) throw DomainError("matrix " + m.to_string() + " is not unimodular");
  return m;
}

i64 UnimodularMatrix2::det() const { return checked_sub(checked_mul(m2, n1), checked_mul(m1, n2)); }

UnimodularMatrix2 UnimodularMatrix2::inverse() const {
  i64 d = det();
  if (d != 1 && d != -1) throw DomainError("matrix " + to_string() + " is not invertible over Z");
  // adj / det with det = +-1
  return {n1 * d, -m1 * d, -n2 * d, m2 * d};
}

Surd UnimodularMatrix2::multiplier(const Surd& t) const { return Surd::integer(m2) + Surd::integer(n2) * t; }

std::array<i64, 2> UnimodularMatrix2::apply(std::array<i64, 2> v) const {
  return {checked_add(checked_mul(m2, v[0]), checked_mul(m1, v[1])),
          checked_add(checked_mul(n2, v[0]), checked_mul(n1, v[1]))};
}

UnimodularMatrix2 UnimodularMatrix2::reduced_mod(i64 k) const {
  return {mod(m2, k), mod(m1, k), mod(n2, k), mod(n1, k)};
}

UnimodularMatrix2 operator*(const UnimodularMatrix2& x, const UnimodularMatrix2& y) {
  auto dot = [](i64 a, i64 b, i64 c, i64 d) { return checked_add(checked_mul(a, b), checked_mul(c, d)); };
  return {dot(x.m2, y.m2, x.m1, y.n2), dot(x.m2, y.m1, x.m1, y.n1), dot(x.n2, y.m2, x.n1, y.n2),
          dot(x.n2, y.m1, x.n1, y.n1)};
}

UnimodularMatrix2 mul_mod(const UnimodularMatrix2& x, const UnimodularMatrix2& y, i64 k) {
  auto dot = [k](i64 a, i64 b, i64 c, i64 d) {
    return mod(narrow((static_cast<i128>(a) * b + static_cast<i128>(c) * d) % k), k);
  };
  return {dot(x.m2, y.m2, x.m1, y.n2), dot(x.m2, y.m1, x.m1, y.n1), dot(x.n2, y.m2, x.n1, y.n2),
          dot(x.n2, y.m1, x.n1, y.n1)};
}

std::string UnimodularMatrix2::to_string() const {
  std::ostringstream os;
  os << "((" << m2 << "," << m1 << "),(" << n2 << "," << n1 << "))";
  return os.str();
}

Surd mobius_apply(const UnimodularMatrix2& m, const Surd& x) {
  Surd den = m.multiplier(x);
  if (den.sign() == 0) throw DomainError("Mobius denominator vanishes at " + x.to_string());
  return (Surd::integer(m.m1) + Surd::integer(m.n1) * x) / den;
}

UnimodularMatrix2 power(const UnimodularMatrix2& m, i64 e) {
  UnimodularMatrix2 base = e < 0 ? m.inverse() : m;
  i64 n = e < 0 ? -e : e;
  UnimodularMatrix2 acc = UnimodularMatrix2::identity();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

UnimodularMatrix2 sign_normalized(const UnimodularMatrix2& m, const Surd& t) {
  return m.multiplier(t).sign() < 0 ? m.negated() : m;
}

}  // namespace circconj
