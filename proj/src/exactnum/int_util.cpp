#include "circconj/exactnum/int_util.hpp"

namespace circconj {

std::optional<std::vector<i64>> solve_in_span(i64 target, std::span<const i64> gens, i64 m) {
  if (m <= 0) throw DomainError("modulus must be positive");
  // Invariant: g == sum coef[j] * gens[j] + (multiple of m).
  std::vector<i64> coef(gens.size(), 0);
  i64 g = m;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    i64 gj = mod(gens[j], m);
    if (gj == 0) continue;
    ExtGcd e = ext_gcd(g, gj);
    // new g = e.x * g + e.y * gj
    for (std::size_t i = 0; i < j; ++i) coef[i] = mod(narrow(static_cast<i128>(coef[i]) * e.x), m);
    coef[j] = mod(e.y, m);
    g = e.g;
  }
  i64 t = mod(target, m);
  if (t % g != 0) return std::nullopt;
  i64 mult = t / g;
  for (i64& c : coef) c = mod(narrow(static_cast<i128>(c) * mult % m), m);
  return coef;
}

}  // namespace circconj
