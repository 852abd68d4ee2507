#pragma once

#include "carryless/digitnum.hpp"
#include "carryless/gfpoly.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace carryless {

/// Residues of a decimal digit modulo 2 and modulo 5.
struct DigitResidues {
  std::uint8_t r2;
  std::uint8_t r5;
  friend constexpr bool operator==(const DigitResidues&, const DigitResidues&) = default;
};

namespace detail {

// Digit d <-> [d mod 2, d mod 5].
inline constexpr std::array<DigitResidues, 10> kDigitPairs{{
    {0, 0}, {1, 1}, {0, 2}, {1, 3}, {0, 4}, {1, 0}, {0, 1}, {1, 2}, {0, 3}, {1, 4},
}};

consteval bool digit_table_is_consistent() {
  for (unsigned d = 0; d < 10; ++d) {
    if (kDigitPairs[d].r2 != d % 2 || kDigitPairs[d].r5 != d % 5) return false;
  }
  return true;
}
static_assert(digit_table_is_consistent(), "digit/residue table must agree with d mod 2, d mod 5");

}  // namespace detail

inline DigitResidues digit_to_pair(unsigned d) {
  if (d > 9) throw usage_error("digit out of range: " + std::to_string(d));
  return detail::kDigitPairs[d];
}

inline std::uint8_t pair_to_digit(unsigned r2, unsigned r5) {
  if (r2 > 1 || r5 > 4) throw usage_error("residue pair out of range");
  for (std::uint8_t d = 0; d < 10; ++d) {
    if (detail::kDigitPairs[d].r2 == r2 && detail::kDigitPairs[d].r5 == r5) return d;
  }
  throw usage_error("unreachable residue pair");
}

/// A carryless number viewed as [f2(X), f5(X)] in GF(2)[X] x GF(5)[X].
/// Components are canonical independently, so their degrees may differ.
struct CrtPair {
  GfPoly f2{2};
  GfPoly f5{5};

  CrtPair() = default;
  CrtPair(GfPoly two, GfPoly five) : f2(std::move(two)), f5(std::move(five)) {
    if (f2.modulus() != 2 || f5.modulus() != 5) throw usage_error("CrtPair components must be over GF(2) and GF(5)");
  }

  bool is_zero() const noexcept { return f2.is_zero() && f5.is_zero(); }

  /// "[f2; f5]"
  std::string to_string() const { return "[" + f2.to_string() + "; " + f5.to_string() + "]"; }

  friend bool operator==(const CrtPair&, const CrtPair&) = default;
};

inline CrtPair to_pair(const DigitNum& n) {
  std::vector<GfPoly::coeff_type> c2, c5;
  c2.reserve(n.digits().size());
  c5.reserve(n.digits().size());
  for (auto d : n.digits()) {
    auto r = detail::kDigitPairs[d];
    c2.push_back(r.r2);
    c5.push_back(r.r5);
  }
  return {GfPoly::from_coeffs(2, std::move(c2)), GfPoly::from_coeffs(5, std::move(c5))};
}

inline DigitNum from_pair(const CrtPair& p) {
  const std::size_t n = std::max(p.f2.coeffs().size(), p.f5.coeffs().size());
  std::vector<DigitNum::digit_type> digits(n);
  for (std::size_t i = 0; i < n; ++i) digits[i] = pair_to_digit(p.f2.coeff(i), p.f5.coeff(i));
  return DigitNum::from_digits(std::move(digits));
}

inline CrtPair pair_add(const CrtPair& a, const CrtPair& b) { return {poly_add(a.f2, b.f2), poly_add(a.f5, b.f5)}; }
inline CrtPair pair_mul(const CrtPair& a, const CrtPair& b) { return {poly_mul(a.f2, b.f2), poly_mul(a.f5, b.f5)}; }

/// The unit [1, u] of R10[X] for u in 1..4, i.e. the carryless digits 1,7,3,9.
inline CrtPair unit_pair(unsigned u) { return {GfPoly::constant(2, 1), GfPoly::constant(5, u)}; }

}  // namespace carryless
