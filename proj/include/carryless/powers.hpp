#pragma once

#include "carryless/bigint.hpp"
#include "carryless/crtpair.hpp"
#include "carryless/digitnum.hpp"
#include "carryless/gfpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace carryless {

inline DigitNum square(const DigitNum& n) { return mul(n, n); }
inline DigitNum cube(const DigitNum& n) { return mul(n, mul(n, n)); }

/// Certificate that a number is a carryless square.
///
/// If n = [f2(X^2), g(X)^2], then n is obtained from the seed
/// m = [0, g^2] by adding 5 to the digits at the positions where f2(X^2)
/// has a nonzero coefficient; those positions form `even_position_mask`.
struct SquareWitness {
  DigitNum root;                                  ///< numerically smallest r with r ⊠ r = n
  GfPoly base5{5};                                ///< g with g^2 = f5, smaller leading coefficient
  std::vector<std::size_t> even_position_mask;    ///< ascending, all even
};

inline std::optional<SquareWitness> is_square(const DigitNum& n) {
  const CrtPair p = to_pair(n);
  auto r2 = poly_sqrt(p.f2);
  if (!r2) return std::nullopt;
  auto r5 = poly_sqrt(p.f5);
  if (!r5) return std::nullopt;
  SquareWitness w;
  w.base5 = *r5;
  DigitNum a = from_pair({*r2, *r5});
  DigitNum b = from_pair({*r2, poly_neg(*r5)});
  w.root = std::min(a, b);
  for (std::size_t i = 0; i < p.f2.coeffs().size(); ++i) {
    if (p.f2.coeff(i) != 0) w.even_position_mask.push_back(i);
  }
  return w;
}

/// Every k-digit square, ascending, zero excluded. Generated by pairing each
/// square g^2 in GF(5)[X] with each square h(X^2) in GF(2)[X].
inline std::vector<DigitNum> squares_with_digits(std::size_t k) {
  if (k < 1) throw usage_error("digit count must be at least 1");
  std::vector<DigitNum> out;
  if (k % 2 == 0) return out;
  const std::size_t root_terms = (k + 1) / 2;
  std::uint64_t n5 = 1, n2 = 1;
  for (std::size_t i = 0; i < root_terms; ++i) {
    n5 *= 5;
    n2 *= 2;
  }
  // g ranges over all polynomials of degree < root_terms; g and -g give the
  // same square, so only those with leading coefficient 1 or 2 are needed.
  std::vector<GfPoly> sq5;
  for (std::uint64_t i = 0; i < n5; ++i) {
    GfPoly g = GfPoly::from_index(5, i);
    if (g.leading() > 2) continue;
    sq5.push_back(poly_mul(g, g));
  }
  for (std::uint64_t j = 0; j < n2; ++j) {
    GfPoly h = GfPoly::from_index(2, j);
    GfPoly h_sq = poly_mul(h, h);
    for (const auto& s5 : sq5) {
      if (h_sq.is_zero() && s5.is_zero()) continue;
      DigitNum v = from_pair({h_sq, s5});
      if (v.length() == k) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// 0 for even k; 5 for k = 1; 45*10^((k-3)/2) + 2^((k-3)/2) for odd k >= 3.
inline BigInt count_squares_with_digits(std::size_t k) {
  if (k < 1) throw usage_error("digit count must be at least 1");
  if (k % 2 == 0) return 0;
  if (k == 1) return 5;
  const auto h = static_cast<unsigned>((k - 3) / 2);
  return 45 * pow_big(10, h) + pow_big(2, h);
}

}  // namespace carryless
