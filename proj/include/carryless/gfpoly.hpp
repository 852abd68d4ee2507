#pragma once

#include "carryless/bigint.hpp"
#include "carryless/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace carryless {

/// Polynomial over GF(2) or GF(5), coefficients little-endian.
///
/// Canonical form: the leading coefficient is nonzero and the zero
/// polynomial has no coefficients. The zero polynomial has no degree;
/// degree() returns std::nullopt for it rather than a numeric sentinel.
class GfPoly {
 public:
  using coeff_type = std::uint8_t;

  explicit GfPoly(unsigned modulus = 2) : modulus_(checked_modulus(modulus)) {}

  static GfPoly from_coeffs(unsigned modulus, std::vector<coeff_type> coeffs) {
    GfPoly p(modulus);
    for (auto c : coeffs) {
      if (c >= p.modulus_) {
        throw usage_error("coefficient " + std::to_string(int(c)) + " out of range mod " +
                          std::to_string(p.modulus_));
      }
    }
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static GfPoly constant(unsigned modulus, unsigned c) {
    return from_coeffs(modulus, {static_cast<coeff_type>(c % modulus)});
  }

  /// c * X^e
  static GfPoly monomial(unsigned modulus, unsigned c, std::size_t e) {
    std::vector<coeff_type> v(e + 1, 0);
    v[e] = static_cast<coeff_type>(c % modulus);
    return from_coeffs(modulus, std::move(v));
  }

  /// The polynomial whose coefficients are the base-q digits of `index`
  /// (least significant digit = constant term). Enumerates GF(q)[X] densely.
  static GfPoly from_index(unsigned modulus, std::uint64_t index) {
    GfPoly p(modulus);
    while (index != 0) {
      p.coeffs_.push_back(static_cast<coeff_type>(index % modulus));
      index /= modulus;
    }
    return p;
  }

  static GfPoly parse(unsigned modulus, std::string_view text);

  unsigned modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  /// True for nonzero constants, the units of GF(q)[X].
  bool is_unit() const noexcept { return coeffs_.size() == 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  coeff_type leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  coeff_type coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::span<const coeff_type> coeffs() const noexcept { return coeffs_; }

  /// Descending-power rendering, e.g. "X^2+4X+4"; zero renders as "0".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      auto c = coeffs_[i];
      if (c == 0) continue;
      if (!s.empty()) s += '+';
      if (c != 1 || i == 0) s += std::to_string(int(c));
      if (i >= 1) s += 'X';
      if (i >= 2) s += '^' + std::to_string(i);
    }
    return s;
  }

  /// Orders by degree, then by coefficients from the top down; this is the
  /// order of from_index.
  friend std::strong_ordering operator<=>(const GfPoly& a, const GfPoly& b) noexcept {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
      if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const GfPoly&, const GfPoly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GfPoly& p) { return os << p.to_string(); }

 private:
  static unsigned checked_modulus(unsigned m) {
    if (m != 2 && m != 5) throw usage_error("unsupported modulus " + std::to_string(m) + " (expected 2 or 5)");
    return m;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  unsigned modulus_;
  std::vector<coeff_type> coeffs_;
};

namespace detail {

inline void require_same_modulus(const GfPoly& a, const GfPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw usage_error("modulus mismatch: GF(" + std::to_string(a.modulus()) + ") vs GF(" +
                      std::to_string(b.modulus()) + ")");
  }
}

inline unsigned inverse_mod(unsigned a, unsigned p) {
  a %= p;
  for (unsigned x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  throw domain_error("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
}

}  // namespace detail

inline GfPoly poly_add(const GfPoly& a, const GfPoly& b) {
  detail::require_same_modulus(a, b);
  const unsigned p = a.modulus();
  const auto n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<GfPoly::coeff_type> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<GfPoly::coeff_type>((a.coeff(i) + b.coeff(i)) % p);
  return GfPoly::from_coeffs(p, std::move(out));
}

inline GfPoly poly_neg(const GfPoly& a) {
  const unsigned p = a.modulus();
  std::vector<GfPoly::coeff_type> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = static_cast<GfPoly::coeff_type>((p - c) % p);
  return GfPoly::from_coeffs(p, std::move(out));
}

inline GfPoly poly_sub(const GfPoly& a, const GfPoly& b) { return poly_add(a, poly_neg(b)); }

inline GfPoly poly_scale(const GfPoly& a, unsigned c) {
  const unsigned p = a.modulus();
  std::vector<GfPoly::coeff_type> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = static_cast<GfPoly::coeff_type>((x * c) % p);
  return GfPoly::from_coeffs(p, std::move(out));
}

inline GfPoly poly_mul(const GfPoly& a, const GfPoly& b) {
  detail::require_same_modulus(a, b);
  const unsigned p = a.modulus();
  if (a.is_zero() || b.is_zero()) return GfPoly(p);
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  std::vector<unsigned> acc(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) acc[i + j] += unsigned(ca[i]) * cb[j];
  }
  std::vector<GfPoly::coeff_type> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<GfPoly::coeff_type>(acc[k] % p);
  return GfPoly::from_coeffs(p, std::move(out));
}

inline GfPoly poly_pow(const GfPoly& a, unsigned k) {
  GfPoly r = GfPoly::constant(a.modulus(), 1);
  for (unsigned i = 0; i < k; ++i) r = poly_mul(r, a);
  return r;
}

/// Scales a nonzero polynomial so its leading coefficient is 1; zero stays zero.
inline GfPoly make_monic(const GfPoly& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, detail::inverse_mod(a.leading(), a.modulus()));
}

struct PolyDivision {
  GfPoly quotient;
  GfPoly remainder;
};

/// Euclidean division: a = d*quotient + remainder with deg remainder < deg d.
inline PolyDivision poly_divmod(const GfPoly& a, const GfPoly& d) {
  detail::require_same_modulus(a, d);
  if (d.is_zero()) throw domain_error("polynomial division by zero");
  const unsigned p = a.modulus();
  const auto dd = d.coeffs();
  const std::size_t ddeg = dd.size() - 1;
  const unsigned lead_inv = detail::inverse_mod(dd.back(), p);

  std::vector<GfPoly::coeff_type> rem(a.coeffs().begin(), a.coeffs().end());
  if (rem.size() < dd.size()) return {GfPoly(p), a};
  std::vector<GfPoly::coeff_type> quot(rem.size() - ddeg, 0);
  for (std::size_t i = rem.size(); i-- > ddeg;) {
    unsigned c = rem[i];
    if (c == 0) continue;
    unsigned q = (c * lead_inv) % p;
    quot[i - ddeg] = static_cast<GfPoly::coeff_type>(q);
    for (std::size_t j = 0; j <= ddeg; ++j) {
      unsigned sub = (q * dd[j]) % p;
      rem[i - ddeg + j] = static_cast<GfPoly::coeff_type>((rem[i - ddeg + j] + p - sub) % p);
    }
  }
  rem.resize(ddeg);
  return {GfPoly::from_coeffs(p, std::move(quot)), GfPoly::from_coeffs(p, std::move(rem))};
}

/// d | a in GF(q)[X]; the zero polynomial divides only itself.
inline bool poly_divides(const GfPoly& d, const GfPoly& a) {
  detail::require_same_modulus(d, a);
  if (d.is_zero()) return a.is_zero();
  return poly_divmod(a, d).remainder.is_zero();
}

/// Monic generator of the ideal (a, b); gcd(0, 0) = 0.
inline GfPoly poly_gcd(GfPoly a, GfPoly b) {
  detail::require_same_modulus(a, b);
  while (!b.is_zero()) {
    GfPoly r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Monic least common multiple; zero if either argument is zero.
inline GfPoly poly_lcm(const GfPoly& a, const GfPoly& b) {
  detail::require_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return GfPoly(a.modulus());
  return make_monic(poly_divmod(poly_mul(a, b), poly_gcd(a, b)).quotient);
}

/// Möbius function by trial factorization.
inline int mobius(std::uint64_t n) {
  if (n == 0) throw usage_error("mobius(0) is undefined");
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// 1..deg/2.
inline bool is_irreducible(const GfPoly& f) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) return false;
  if (*deg == 1) return true;
  const unsigned p = f.modulus();
  for (std::size_t d = 1; 2 * d <= *deg; ++d) {
    // monic degree-d candidates are X^d + (index with < d digits)
    std::uint64_t lower = 1;
    for (std::size_t i = 0; i < d; ++i) lower *= p;
    for (std::uint64_t idx = 0; idx < lower; ++idx) {
      GfPoly cand = poly_add(GfPoly::monomial(p, 1, d), GfPoly::from_index(p, idx));
      if (poly_divmod(f, cand).remainder.is_zero()) return false;
    }
  }
  return true;
}

/// All irreducible polynomials of exact degree `degree`, in from_index order.
/// With monic_only false, every nonzero leading coefficient is included.
inline std::vector<GfPoly> enumerate_irreducibles(unsigned modulus, std::size_t degree, bool monic_only) {
  if (degree < 1) throw usage_error("enumerate_irreducibles requires degree >= 1");
  std::vector<GfPoly> out;
  std::uint64_t lower = 1;
  for (std::size_t i = 0; i < degree; ++i) lower *= modulus;
  for (unsigned lead = 1; lead < modulus; ++lead) {
    if (monic_only && lead != 1) break;
    for (std::uint64_t idx = 0; idx < lower; ++idx) {
      GfPoly cand = GfPoly::from_index(modulus, lead * lower + idx);
      if (is_irreducible(cand)) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of monic irreducibles of degree d over GF(q): (1/d) sum_{e|d} mu(d/e) q^e.
inline BigInt count_irreducibles(unsigned modulus, std::uint64_t degree) {
  if (degree < 1) throw usage_error("count_irreducibles requires degree >= 1");
  BigInt sum = 0;
  for (std::uint64_t e = 1; e <= degree; ++e) {
    if (degree % e != 0) continue;
    int mu = mobius(degree / e);
    if (mu == 0) continue;
    BigInt term = pow_big(modulus, static_cast<unsigned>(e));
    if (mu > 0) sum += term;
    else sum -= term;
  }
  return sum / degree;
}

/// Factorization of a nonzero polynomial into lead * prod(monic irreducible^mult).
struct PolyFactorization {
  unsigned lead = 0;
  std::vector<std::pair<GfPoly, unsigned>> factors;  ///< ascending, monic, distinct
};

/// Trial division by monic candidates in ascending degree. The first divisor
/// found at each stage has minimal degree and is therefore irreducible.
inline PolyFactorization factor_poly(const GfPoly& f) {
  if (f.is_zero()) throw domain_error("cannot factor the zero polynomial");
  const unsigned p = f.modulus();
  PolyFactorization out;
  out.lead = f.leading();
  GfPoly rest = make_monic(f);
  for (std::size_t d = 1; rest.degree().value_or(0) >= 2 * d; ++d) {
    std::uint64_t lower = 1;
    for (std::size_t i = 0; i < d; ++i) lower *= p;
    for (std::uint64_t idx = 0; idx < lower && *rest.degree() >= 2 * d; ++idx) {
      GfPoly cand = poly_add(GfPoly::monomial(p, 1, d), GfPoly::from_index(p, idx));
      unsigned mult = 0;
      for (;;) {
        auto [q, r] = poly_divmod(rest, cand);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(std::move(cand), mult);
    }
  }
  if (rest.degree().value_or(0) >= 1) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const auto& fm) { return fm.first == rest; });
    if (it != out.factors.end()) ++it->second;
    else out.factors.emplace_back(std::move(rest), 1);
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

/// Square root in GF(q)[X] for odd q, solving coefficients from the top
/// down. Returns the root with the smaller leading coefficient, or nullopt
/// when `f` is not a square.
inline std::optional<GfPoly> poly_sqrt(const GfPoly& f) {
  const unsigned p = f.modulus();
  if (f.is_zero()) return GfPoly(p);
  const std::size_t deg = *f.degree();
  if (p == 2) {
    // Frobenius: squares are exactly the polynomials in X^2.
    std::vector<GfPoly::coeff_type> root(deg / 2 + 1, 0);
    for (std::size_t i = 0; i <= deg; ++i) {
      if (i % 2 == 1 && f.coeff(i) != 0) return std::nullopt;
      if (i % 2 == 0) root[i / 2] = f.coeff(i);
    }
    return GfPoly::from_coeffs(p, std::move(root));
  }
  if (deg % 2 != 0) return std::nullopt;
  const std::size_t m = deg / 2;
  unsigned top = 0;
  for (unsigned s = 1; s < p; ++s) {
    if ((s * s) % p == f.leading()) {
      top = s;
      break;
    }
  }
  if (top == 0) return std::nullopt;
  const unsigned two_top_inv = detail::inverse_mod(2 * top, p);
  // g = sum g_j X^j with g_m = top. Coefficient of X^(m+k) in g^2 involves
  // 2*g_m*g_(k) plus terms with higher-index g's already known.
  std::vector<GfPoly::coeff_type> g(m + 1, 0);
  g[m] = static_cast<GfPoly::coeff_type>(top);
  for (std::size_t k = m; k-- > 0;) {
    const std::size_t e = m + k;
    unsigned known = 0;
    for (std::size_t i = k + 1; i <= m; ++i) {
      std::size_t j = e - i;
      if (j > m || j < k + 1) continue;
      known += unsigned(g[i]) * g[j];
    }
    unsigned target = (f.coeff(e) + p - known % p) % p;
    g[k] = static_cast<GfPoly::coeff_type>((target * two_top_inv) % p);
  }
  GfPoly root = GfPoly::from_coeffs(p, std::move(g));
  if (poly_mul(root, root) != f) return std::nullopt;
  return root;
}

inline GfPoly GfPoly::parse(unsigned modulus, std::string_view text) {
  GfPoly result(modulus);
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw parse_error("empty polynomial");
  if (s == "0") return result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (pos > 0) {
      if (s[pos] != '+') throw parse_error("expected '+' in polynomial \"" + std::string(text) + "\"");
      ++pos;
    }
    unsigned c = 1;
    bool have_c = false;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos > start) {
      c = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
      have_c = true;
    }
    std::size_t e = 0;
    if (pos < s.size() && (s[pos] == 'X' || s[pos] == 'x')) {
      ++pos;
      e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t es = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == es) throw parse_error("missing exponent in \"" + std::string(text) + "\"");
        e = std::stoul(s.substr(es, pos - es));
      }
    } else if (!have_c) {
      throw parse_error("malformed term in polynomial \"" + std::string(text) + "\"");
    }
    result = poly_add(result, monomial(modulus, c % modulus, e));
  }
  return result;
}

}  // namespace carryless
