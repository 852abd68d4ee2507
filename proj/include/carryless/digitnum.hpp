#pragma once

#include "carryless/bigint.hpp"
#include "carryless/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carryless {

/// A carryless number: base-10 digits stored little-endian (digit i is the
/// coefficient of 10^i). The representation is always canonical: the most
/// significant stored digit is nonzero and zero is the empty sequence.
class DigitNum {
 public:
  using digit_type = std::uint8_t;

  DigitNum() = default;

  /// Builds from little-endian digits, stripping high zeros.
  static DigitNum from_digits(std::vector<digit_type> digits) {
    for (auto d : digits) {
      if (d > 9) throw usage_error("digit out of range: " + std::to_string(int(d)));
    }
    DigitNum n;
    n.digits_ = std::move(digits);
    n.trim();
    return n;
  }

  static DigitNum from_uint(std::uint64_t v) {
    DigitNum n;
    while (v != 0) {
      n.digits_.push_back(static_cast<digit_type>(v % 10));
      v /= 10;
    }
    return n;
  }

  /// Parses a decimal string; leading zeros are accepted and dropped.
  static DigitNum parse(std::string_view text) {
    if (text.empty()) throw parse_error("empty number");
    DigitNum n;
    n.digits_.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
      char c = *it;
      if (c < '0' || c > '9') {
        throw parse_error("invalid digit '" + std::string(1, c) + "' in \"" +
                          std::string(text) + "\"");
      }
      n.digits_.push_back(static_cast<digit_type>(c - '0'));
    }
    n.trim();
    return n;
  }

  bool is_zero() const noexcept { return digits_.empty(); }

  /// Number of decimal digits; zero has length 1.
  std::size_t length() const noexcept { return digits_.empty() ? 1 : digits_.size(); }

  /// Digit at position i, reading absent high positions as 0.
  digit_type digit(std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : 0; }

  /// Canonical little-endian digits (empty for zero).
  std::span<const digit_type> digits() const noexcept { return digits_; }

  std::string to_string() const {
    if (digits_.empty()) return "0";
    std::string s;
    s.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) s.push_back(char('0' + *it));
    return s;
  }

  BigInt to_bigint() const {
    BigInt v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * 10 + *it;
    return v;
  }

  /// Ordinary numeric order of the decimal strings (used for sorting output).
  friend std::strong_ordering operator<=>(const DigitNum& a, const DigitNum& b) noexcept {
    if (auto c = a.digits_.size() <=> b.digits_.size(); c != 0) return c;
    for (std::size_t i = a.digits_.size(); i-- > 0;) {
      if (auto c = a.digits_[i] <=> b.digits_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const DigitNum&, const DigitNum&) = default;

  friend std::ostream& operator<<(std::ostream& os, const DigitNum& n) { return os << n.to_string(); }

 private:
  void trim() {
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
  }

  std::vector<digit_type> digits_;
};

/// Carryless sum: digitwise addition mod 10.
inline DigitNum add(const DigitNum& a, const DigitNum& b) {
  const auto n = std::max(a.digits().size(), b.digits().size());
  std::vector<DigitNum::digit_type> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<DigitNum::digit_type>((a.digit(i) + b.digit(i)) % 10);
  return DigitNum::from_digits(std::move(out));
}

/// Carryless product: schoolbook convolution with every column reduced mod 10.
inline DigitNum mul(const DigitNum& a, const DigitNum& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto da = a.digits();
  auto db = b.digits();
  std::vector<unsigned> acc(da.size() + db.size() - 1, 0);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < db.size(); ++j) acc[i + j] += unsigned(da[i]) * db[j];
  }
  std::vector<DigitNum::digit_type> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<DigitNum::digit_type>(acc[k] % 10);
  return DigitNum::from_digits(std::move(out));
}

/// Ten's complement: each nonzero digit d becomes 10 - d.
inline DigitNum neg(const DigitNum& a) {
  std::vector<DigitNum::digit_type> out(a.digits().begin(), a.digits().end());
  for (auto& d : out) d = static_cast<DigitNum::digit_type>((10 - d) % 10);
  return DigitNum::from_digits(std::move(out));
}

inline DigitNum sub(const DigitNum& a, const DigitNum& b) { return add(a, neg(b)); }

inline std::size_t length(const DigitNum& a) noexcept { return a.length(); }

/// Iterated carryless multiplication; pow(a, 0) is 1.
inline DigitNum pow(const DigitNum& a, unsigned k) {
  DigitNum r = DigitNum::from_uint(1);
  for (unsigned i = 0; i < k; ++i) r = mul(a, r);
  return r;
}

inline namespace literals {
inline DigitNum operator""_cl(const char* s) { return DigitNum::parse(s); }
}  // namespace literals

}  // namespace carryless

template <>
struct std::hash<carryless::DigitNum> {
  std::size_t operator()(const carryless::DigitNum& n) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto d : n.digits()) h = (h ^ d) * 1099511628211ull;
    return h;
  }
};
