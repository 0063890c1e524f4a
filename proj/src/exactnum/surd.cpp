#include "circconj/exactnum/surd.hpp"

#include <cmath>
#include <sstream>

namespace circconj {

namespace {

// Splits n = s^2 * r with r square-free; returns {s, r}.
std::pair<i64, i64> square_free_split(i64 n) {
  i64 s = 1;
  i64 r = n;
  for (i64 p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      s *= p;
    }
  }
  return {s, r};
}

}  // namespace

Surd::Surd(i64 a, i64 b, i64 c, i64 d) {
  if (c == 0) throw DomainError("surd denominator is zero");
  if (d < 0) throw DomainError("surd radicand must be non-negative");
  i128 wa = a, wb = b, wc = c;
  if (d == 0) {
    wb = 0;
    d = 1;
  }
  auto [s, r] = square_free_split(d);
  wb *= s;
  if (r == 1) {
    wa += wb;
    wb = 0;
  }
  *this = from_wide(wa, wb, wc, wb == 0 ? 1 : r);
}

Surd Surd::from_wide(i128 a, i128 b, i128 c, i64 d) {
  if (c == 0) throw DomainError("surd denominator is zero");
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  i128 g = gcd128(gcd128(a, b), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  Surd s;
  s.a_ = narrow(a);
  s.b_ = narrow(b);
  s.c_ = narrow(c);
  s.d_ = b == 0 ? 1 : d;
  return s;
}

i64 common_radicand(const Surd& x, const Surd& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d())
    throw DomainError("cannot combine surds from Q(sqrt " + std::to_string(x.d()) + ") and Q(sqrt " +
                      std::to_string(y.d()) + ")");
  return x.d();
}

Surd operator+(const Surd& x, const Surd& y) {
  i64 d = common_radicand(x, y);
  i128 a = static_cast<i128>(x.a_) * y.c_ + static_cast<i128>(y.a_) * x.c_;
  i128 b = static_cast<i128>(x.b_) * y.c_ + static_cast<i128>(y.b_) * x.c_;
  i128 c = static_cast<i128>(x.c_) * y.c_;
  return Surd::from_wide(a, b, c, d);
}

Surd operator*(const Surd& x, const Surd& y) {
  i64 d = common_radicand(x, y);
  i128 a = static_cast<i128>(x.a_) * y.a_ + static_cast<i128>(x.b_) * y.b_ * d;
  i128 b = static_cast<i128>(x.a_) * y.b_ + static_cast<i128>(x.b_) * y.a_;
  i128 c = static_cast<i128>(x.c_) * y.c_;
  return Surd::from_wide(a, b, c, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  if (y.a_ == 0 && y.b_ == 0) throw DomainError("surd division by zero");
  i64 d = common_radicand(x, y);
  // 1/y = c_y (a_y - b_y sqrt d) / (a_y^2 - b_y^2 d)
  i128 norm = static_cast<i128>(y.a_) * y.a_ - static_cast<i128>(y.b_) * y.b_ * d;
  i128 a = (static_cast<i128>(x.a_) * y.a_ - static_cast<i128>(x.b_) * y.b_ * d) * y.c_;
  i128 b = (static_cast<i128>(x.b_) * y.a_ - static_cast<i128>(x.a_) * y.b_) * y.c_;
  i128 c = static_cast<i128>(x.c_) * norm;
  return Surd::from_wide(a, b, c, d);
}

int Surd::sign() const {
  // sign of a + b sqrt(d); c > 0.
  int sa = (a_ > 0) - (a_ < 0);
  int sb = (b_ > 0) - (b_ < 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  i128 a2 = static_cast<i128>(a_) * a_;
  i128 b2d = static_cast<i128>(b_) * b_ * d_;
  // d square-free > 1 and b != 0 means a^2 != b^2 d.
  return a2 > b2d ? sa : sb;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

i64 Surd::floor() const {
  // a + b sqrt d lies strictly inside (a + fl, a + fl + 1) when b != 0.
  i128 fl = 0;
  if (b_ != 0) {
    i128 r = isqrt128(static_cast<i128>(b_) * b_ * d_);
    fl = b_ > 0 ? r : -(r + 1);
  }
  return narrow(floor_div128(static_cast<i128>(a_) + fl, c_));
}

double Surd::to_double() const {
  return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_))) /
         static_cast<double>(c_);
}

std::string Surd::to_string() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
  } else {
    os << "(" << a_ << (b_ < 0 ? " - " : " + ");
    i64 mag = b_ < 0 ? -b_ : b_;
    if (mag != 1) os << mag << "*";
    os << "sqrt(" << d_ << "))";
  }
  if (c_ != 1) os << "/" << c_;
  return os.str();
}

}  // namespace circconj
