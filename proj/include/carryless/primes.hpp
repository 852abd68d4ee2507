#pragma once

#include "carryless/bigint.hpp"
#include "carryless/classify.hpp"
#include "carryless/crtpair.hpp"
#include "carryless/gfpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace carryless {

enum class PrimeKind { EType, FType };

inline char kind_letter(PrimeKind k) { return k == PrimeKind::EType ? 'e' : 'f'; }

/// A carryless prime together with its irreducible component.
///
/// e-type primes have pair [1, u*g] with g monic irreducible over GF(5);
/// `component` is g and `unit_part` is u. f-type primes have pair [g, u]
/// with g irreducible over GF(2); `component` is g and `unit_part` is u.
struct PrimeRecord {
  DigitNum value;
  PrimeKind kind = PrimeKind::EType;
  GfPoly component{2};
  unsigned unit_part = 1;

  friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

/// Primality from the CRT structure: [g, unit] with g irreducible mod 2, or
/// [1, g] with g irreducible mod 5.
inline std::optional<PrimeRecord> prime_record(const DigitNum& n) {
  const CrtPair p = to_pair(n);
  if (p.f5.is_unit() && is_irreducible(p.f2)) {
    return PrimeRecord{n, PrimeKind::FType, p.f2, p.f5.leading()};
  }
  if (p.f2.is_one() && is_irreducible(p.f5)) {
    return PrimeRecord{n, PrimeKind::EType, make_monic(p.f5), p.f5.leading()};
  }
  return std::nullopt;
}

inline bool is_prime(const DigitNum& n) { return prime_record(n).has_value(); }

/// Every prime with exactly k digits, ascending. Built from the irreducible
/// polynomials of degree k-1 and their four unit multiples.
inline std::vector<PrimeRecord> primes_with_digits(std::size_t k) {
  if (k < 1) throw usage_error("digit count must be at least 1");
  std::vector<PrimeRecord> out;
  if (k == 1) return out;
  const std::size_t deg = k - 1;
  for (const auto& g : enumerate_irreducibles(2, deg, true)) {
    for (unsigned u = 1; u <= 4; ++u) {
      DigitNum v = from_pair({g, GfPoly::constant(5, u)});
      out.push_back({std::move(v), PrimeKind::FType, g, u});
    }
  }
  for (const auto& g : enumerate_irreducibles(5, deg, true)) {
    for (unsigned u = 1; u <= 4; ++u) {
      DigitNum v = from_pair({GfPoly::constant(2, 1), poly_scale(g, u)});
      out.push_back({std::move(v), PrimeKind::EType, g, u});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value == b.value; }),
            out.end());
  return out;
}

/// (4/(k-1)) * sum_{d | k-1} mu((k-1)/d) (2^d + 5^d)
inline BigInt count_primes_with_digits(std::size_t k) {
  if (k < 2) throw domain_error("prime count formula requires k >= 2");
  const std::uint64_t m = k - 1;
  BigInt sum = 0;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mu = mobius(m / d);
    if (mu == 0) continue;
    BigInt term = pow_big(2, static_cast<unsigned>(d)) + pow_big(5, static_cast<unsigned>(d));
    if (mu > 0) sum += term;
    else sum -= term;
  }
  return 4 * sum / m;
}

/// Whether n generates one of the prime ideals [0,1], [1,0], [1,1],
/// [f2,1], [1,f5] (f2, f5 irreducible), up to a unit factor.
///
/// [1,1] generates the whole ring, which is not a prime ideal in the usual
/// sense; it is accepted only when include_unit_ideal is set, and that is
/// the default to follow the published list literally.
inline bool is_prime_ideal_generator(const DigitNum& n, bool include_unit_ideal = true) {
  const CrtPair p = to_pair(n);
  const bool f2_one = p.f2.is_one();
  const bool f5_unit = p.f5.is_unit();
  if (p.f2.is_zero() && f5_unit) return true;          // [0,1]
  if (f2_one && p.f5.is_zero()) return true;           // [1,0]
  if (f2_one && f5_unit) return include_unit_ideal;    // [1,1]
  if (f5_unit && is_irreducible(p.f2)) return true;    // [f2,1]
  if (f2_one && is_irreducible(p.f5)) return true;     // [1,f5]
  return false;
}

}  // namespace carryless
