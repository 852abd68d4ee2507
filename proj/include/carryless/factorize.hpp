#pragma once

#include "carryless/classify.hpp"
#include "carryless/crtpair.hpp"
#include "carryless/gfpoly.hpp"
#include "carryless/primes.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace carryless {

/// How a divisor or quotient extends beyond the listed values. Finite means
/// the value is unique (quotients) or the list is complete up to units
/// (divisors); the other two add an arbitrary fiveish or evenish number.
enum class CosetShape { Finite, PlusFiveish, PlusEvenish };

inline std::string shape_token(CosetShape s) {
  switch (s) {
    case CosetShape::Finite: return "finite";
    case CosetShape::PlusFiveish: return "plus_fiveish";
    case CosetShape::PlusEvenish: return "plus_evenish";
  }
  return "?";
}

struct PrimePower {
  DigitNum prime;
  unsigned multiplicity = 1;
  PrimeKind kind = PrimeKind::EType;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = unit * special * prod(prime^multiplicity).
///
/// Primes are canonical associates: e-type primes correspond to [1, g] with
/// g monic over GF(5), f-type primes to [g, 1]. Evenish numbers carry the
/// special factor 2, fiveish numbers the special factor 5.
struct Factorization {
  NumberClass class_tag = NumberClass::Regular;
  DigitNum unit = DigitNum::from_uint(1);
  std::optional<DigitNum> special;
  std::vector<PrimePower> primes;

  std::size_t prime_count() const {
    std::size_t c = 0;
    for (const auto& p : primes) c += p.multiplicity;
    return c;
  }
};

inline DigitNum recombine(const Factorization& f) {
  DigitNum r = f.unit;
  if (f.special) r = mul(r, *f.special);
  for (const auto& p : f.primes) r = mul(r, pow(p.prime, p.multiplicity));
  return r;
}

inline DigitNum canonical_e_prime(const GfPoly& monic5) { return from_pair({GfPoly::constant(2, 1), monic5}); }
inline DigitNum canonical_f_prime(const GfPoly& irreducible2) { return from_pair({irreducible2, GfPoly::constant(5, 1)}); }

inline Factorization factor(const DigitNum& n) {
  if (n.is_zero()) throw domain_error("zero has no factorization");
  Factorization out;
  if (is_unit(n)) {
    out.unit = n;
    return out;
  }
  const CrtPair p = to_pair(n);
  unsigned lead5 = 1;
  if (!p.f2.is_zero()) {
    for (auto& [g, m] : factor_poly(p.f2).factors) out.primes.push_back({canonical_f_prime(g), m, PrimeKind::FType});
  }
  if (!p.f5.is_zero()) {
    auto pf = factor_poly(p.f5);
    lead5 = pf.lead;
    for (auto& [g, m] : pf.factors) out.primes.push_back({canonical_e_prime(g), m, PrimeKind::EType});
  }
  std::sort(out.primes.begin(), out.primes.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });

  if (p.f2.is_zero()) {
    // [0, c*g] = [0, 2] * [1, c/2] * [1, g]
    out.class_tag = NumberClass::Evenish;
    out.special = DigitNum::from_uint(2);
    out.unit = from_pair(unit_pair((lead5 * detail::inverse_mod(2, 5)) % 5));
  } else if (p.f5.is_zero()) {
    out.class_tag = NumberClass::Fiveish;
    out.special = DigitNum::from_uint(5);
  } else {
    out.class_tag = NumberClass::Regular;
    out.unit = from_pair(unit_pair(lead5));
  }
  return out;
}

/// `n = u ⊠ s ⊠ p1^e1 ⊠ ... (carryless)`; unit and exponent 1 are omitted.
inline std::string render_factorization(const DigitNum& n, const Factorization& f) {
  std::vector<std::string> parts;
  if (f.unit != DigitNum::from_uint(1) || (!f.special && f.primes.empty())) parts.push_back(f.unit.to_string());
  if (f.special) parts.push_back(f.special->to_string());
  for (const auto& p : f.primes) {
    std::string s = p.prime.to_string();
    if (p.multiplicity > 1) s += "^" + std::to_string(p.multiplicity);
    parts.push_back(s);
  }
  std::string out = n.to_string() + " =";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? " " : " ⊠ ") + parts[i];
  return out + " (carryless)";
}

/// d | n: componentwise polynomial divisibility of the CRT pairs.
inline bool divides(const DigitNum& d, const DigitNum& n) {
  const CrtPair dp = to_pair(d);
  const CrtPair np = to_pair(n);
  return poly_divides(dp.f2, np.f2) && poly_divides(dp.f5, np.f5);
}

struct Quotient {
  DigitNum value;
  CosetShape shape = CosetShape::Finite;
};

/// n / d. A component where d vanishes leaves the quotient free there; the
/// canonical quotient takes the constant 1 in that component and `shape`
/// records the free coset.
inline Quotient divide(const DigitNum& n, const DigitNum& d) {
  if (d.is_zero()) throw domain_error("division by zero");
  if (!divides(d, n)) throw domain_error(d.to_string() + " does not divide " + n.to_string());
  const CrtPair dp = to_pair(d);
  const CrtPair np = to_pair(n);
  Quotient q;
  GfPoly q2 = GfPoly::constant(2, 1);
  GfPoly q5 = GfPoly::constant(5, 1);
  if (dp.f2.is_zero()) q.shape = CosetShape::PlusFiveish;
  else q2 = poly_divmod(np.f2, dp.f2).quotient;
  if (dp.f5.is_zero()) q.shape = CosetShape::PlusEvenish;
  else q5 = poly_divmod(np.f5, dp.f5).quotient;
  q.value = from_pair({std::move(q2), std::move(q5)});
  return q;
}

struct DivisorClasses {
  std::vector<DigitNum> representatives;  ///< ascending, pairwise non-associate
  CosetShape class_shape = CosetShape::Finite;
};

/// Divisors as unit-free products over the factorization lattice. For n in
/// N every divisor is a representative times a unit. For evenish/fiveish n
/// each representative stands for the infinite set d ⊠ U ⊞ F (resp. ⊞ E);
/// the lattice includes products with and without the special factor.
inline DivisorClasses divisors(const DigitNum& n) {
  const Factorization f = factor(n);
  std::vector<DigitNum> reps{DigitNum::from_uint(1)};
  for (const auto& pp : f.primes) {
    std::vector<DigitNum> next;
    for (const auto& r : reps) {
      DigitNum acc = r;
      next.push_back(acc);
      for (unsigned e = 1; e <= pp.multiplicity; ++e) {
        acc = mul(acc, pp.prime);
        next.push_back(acc);
      }
    }
    reps = std::move(next);
  }
  DivisorClasses out;
  if (f.special) {
    const auto base = reps.size();
    for (std::size_t i = 0; i < base; ++i) reps.push_back(mul(reps[i], *f.special));
    out.class_shape = f.class_tag == NumberClass::Evenish ? CosetShape::PlusFiveish : CosetShape::PlusEvenish;
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  out.representatives = std::move(reps);
  return out;
}

/// Complete divisor list of n in N (finite), ascending.
inline std::vector<DigitNum> all_divisors(const DigitNum& n) {
  if (!n_member(n)) throw domain_error(n.to_string() + " has infinitely many divisors or is zero");
  std::vector<DigitNum> out;
  for (const auto& r : divisors(n).representatives) {
    for (unsigned u : {1u, 3u, 7u, 9u}) out.push_back(mul(r, DigitNum::from_uint(u)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Componentwise monic gcd of the CRT pairs; gcd(0, g) = g.
inline DigitNum gcd(const DigitNum& a, const DigitNum& b) {
  if (a.is_zero() && b.is_zero()) throw domain_error("gcd(0, 0) is undefined");
  const CrtPair ap = to_pair(a);
  const CrtPair bp = to_pair(b);
  return from_pair({poly_gcd(ap.f2, bp.f2), poly_gcd(ap.f5, bp.f5)});
}

/// Componentwise monic lcm of the CRT pairs; lcm(0, g) = 0.
inline DigitNum lcm(const DigitNum& a, const DigitNum& b) {
  const CrtPair ap = to_pair(a);
  const CrtPair bp = to_pair(b);
  return from_pair({poly_lcm(ap.f2, bp.f2), poly_lcm(ap.f5, bp.f5)});
}

struct EfDecomposition {
  DigitNum e_factor, f_factor;  ///< e_factor ⊠ f_factor = n
  DigitNum e_term, f_term;      ///< e_term ⊞ f_term = n
};

/// Splits n into an e-type and an f-type number, both multiplicatively and
/// additively. Exists exactly when both CRT components of n have degree >= 1,
/// since every e-type number is [1, g] and every f-type number is [h, v]
/// with deg g, deg h >= 1 and v a nonzero constant.
inline EfDecomposition e_f_decomposition(const DigitNum& n) {
  if (!n_member(n) || is_unit(n)) throw domain_error(n.to_string() + " is not a non-unit in N");
  const CrtPair p = to_pair(n);
  if (*p.f2.degree() == 0 || *p.f5.degree() == 0) {
    throw domain_error(n.to_string() + " = " + p.to_string() +
                       " has a constant component; no e-type/f-type split exists");
  }
  const GfPoly one2 = GfPoly::constant(2, 1);
  const GfPoly one5 = GfPoly::constant(5, 1);
  EfDecomposition d;
  d.e_factor = from_pair({one2, p.f5});
  d.f_factor = from_pair({p.f2, one5});
  d.e_term = from_pair({one2, poly_sub(p.f5, one5)});
  d.f_term = from_pair({poly_sub(p.f2, one2), one5});
  return d;
}

}  // namespace carryless
