#pragma once

#include "carryless/bigint.hpp"
#include "carryless/classify.hpp"
#include "carryless/digitnum.hpp"
#include "carryless/powers.hpp"
#include "carryless/primes.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace carryless {

/// Number of subsets of {1..part_bound} whose carryless sum is `target`.
/// The empty subset sums to 0.
inline BigInt partitions(const DigitNum& target, std::uint64_t part_bound) {
  if (part_bound < 1) throw usage_error("part bound must be at least 1");
  const std::size_t width = DigitNum::from_uint(part_bound).length();
  if (target.length() > width) return 0;
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < width; ++i) states *= 10;
  // counts[v] = number of subsets so far whose carryless sum has value v
  std::vector<BigInt> counts(states, 0);
  counts[0] = 1;
  std::vector<std::uint64_t> shifted(states);
  for (std::uint64_t part = 1; part <= part_bound; ++part) {
    const DigitNum p = DigitNum::from_uint(part);
    std::vector<BigInt> next = counts;
    for (std::uint64_t v = 0; v < states; ++v) {
      if (counts[v] == 0) continue;
      auto s = static_cast<std::uint64_t>(add(DigitNum::from_uint(v), p).to_bigint());
      next[s] += counts[v];
    }
    counts = std::move(next);
  }
  return counts[static_cast<std::uint64_t>(target.to_bigint())];
}

/// Length of the eventual cycle of x -> step(x) starting at `start`.
template <class State, class Step>
std::size_t cycle_length(State start, Step step) {
  std::map<State, std::size_t> seen;
  std::size_t i = 0;
  State s = std::move(start);
  while (true) {
    auto [it, inserted] = seen.emplace(s, i);
    if (!inserted) return i - it->second;
    s = step(s);
    ++i;
  }
}

/// Carryless Fibonacci numbers: F(0)=0, F(1)=1, F(n)=F(n-1) ⊞ F(n-2).
inline std::vector<DigitNum> fibonacci_analog(std::size_t count) {
  std::vector<DigitNum> out;
  DigitNum a, b = DigitNum::from_uint(1);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(a);
    DigitNum c = add(a, b);
    a = std::move(b);
    b = std::move(c);
  }
  return out;
}

inline std::size_t fibonacci_period() {
  using S = std::pair<DigitNum, DigitNum>;
  return cycle_length(S{DigitNum{}, DigitNum::from_uint(1)},
                      [](const S& s) { return S{s.second, add(s.first, s.second)}; });
}

inline std::size_t powers_of_two_period() {
  const DigitNum two = DigitNum::from_uint(2);
  return cycle_length(DigitNum::from_uint(1), [&](const DigitNum& x) { return mul(x, two); });
}

struct SequenceSpec {
  std::string a_number;
  std::int64_t offset = 0;
  std::string description;
  /// True when reproducing the entry depends on a definitional convention
  /// this library had to pick (see description).
  bool convention_dependent = false;
  std::function<std::vector<BigInt>(std::size_t)> generator;
};

namespace detail {

template <class F>
std::vector<BigInt> by_index(std::size_t count, std::uint64_t first, F f) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(f(first + i).to_bigint());
  return out;
}

/// Digits of i in base `base`, each multiplied by `scale`, read as decimal.
inline DigitNum rescaled_digits(std::uint64_t i, unsigned base, unsigned scale) {
  std::vector<DigitNum::digit_type> d;
  while (i != 0) {
    d.push_back(static_cast<DigitNum::digit_type>((i % base) * scale));
    i /= base;
  }
  return DigitNum::from_digits(std::move(d));
}

inline std::vector<BigInt> zero_divisors_with_zero(std::size_t count) {
  std::vector<BigInt> out;
  std::uint64_t ie = 0, jf = 0;
  while (out.size() < count) {
    DigitNum e = rescaled_digits(ie, 5, 2);
    DigitNum f = rescaled_digits(jf, 2, 5);
    if (e < f) {
      out.push_back(e.to_bigint());
      ++ie;
    } else if (f < e) {
      out.push_back(f.to_bigint());
      ++jf;
    } else {
      out.push_back(e.to_bigint());  // only 0 is in both
      ++ie;
      ++jf;
    }
  }
  return out;
}

template <class Pred>
std::vector<BigInt> filtered(std::size_t count, std::uint64_t from, Pred pred) {
  std::vector<BigInt> out;
  for (std::uint64_t n = from; out.size() < count; ++n) {
    DigitNum d = DigitNum::from_uint(n);
    if (pred(d)) out.push_back(d.to_bigint());
  }
  return out;
}

template <class Stratum>
std::vector<BigInt> by_length(std::size_t count, std::vector<BigInt> prefix, Stratum stratum) {
  std::vector<BigInt> out = std::move(prefix);
  for (std::size_t k = 1; out.size() < count; ++k) {
    for (const auto& v : stratum(k)) {
      if (out.size() == count) break;
      out.push_back(v);
    }
  }
  out.resize(std::min(out.size(), count));
  return out;
}

inline std::vector<BigInt> partition_sequence(std::size_t count) {
  // a(n) = number of subsets of {1..n} with carryless sum n; a(0) = 1.
  std::vector<BigInt> out;
  if (count == 0) return out;
  out.push_back(1);
  std::vector<BigInt> counts(1, 1);
  std::size_t width = 0;
  for (std::uint64_t n = 1; out.size() < count; ++n) {
    const DigitNum part = DigitNum::from_uint(n);
    if (part.length() > width) {
      width = part.length();
      std::uint64_t states = 1;
      for (std::size_t i = 0; i < width; ++i) states *= 10;
      counts.resize(states, 0);
    }
    std::vector<BigInt> next = counts;
    for (std::uint64_t v = 0; v < counts.size(); ++v) {
      if (counts[v] == 0) continue;
      auto s = static_cast<std::uint64_t>(add(DigitNum::from_uint(v), part).to_bigint());
      next[s] += counts[v];
    }
    counts = std::move(next);
    out.push_back(counts[n]);
  }
  return out;
}

inline std::vector<SequenceSpec> build_registry() {
  std::vector<SequenceSpec> r;
  auto num = [](std::uint64_t n) { return DigitNum::from_uint(n); };

  r.push_back({"A059729", 0, "carryless squares n ⊠ n", false,
               [=](std::size_t c) { return by_index(c, 0, [=](auto n) { return square(num(n)); }); }});
  r.push_back({"A004520", 0, "carryless doubles n ⊞ n", false,
               [=](std::size_t c) { return by_index(c, 0, [=](auto n) { return add(num(n), num(n)); }); }});
  r.push_back({"A014263", 1, "evenish numbers (all digits even), with 0", false,
               [](std::size_t c) { return by_index(c, 0, [](auto i) { return rescaled_digits(i, 5, 2); }); }});
  r.push_back({"A169964", 1, "fiveish numbers (all digits 0 or 5), with 0", true,
               [](std::size_t c) { return by_index(c, 0, [](auto i) { return rescaled_digits(i, 2, 5); }); }});
  r.push_back({"A169884", 1, "zero-divisors: evenish or fiveish, with 0", true,
               [](std::size_t c) { return zero_divisors_with_zero(c); }});
  r.push_back({"A169968", 1, "class N: positive numbers that are not zero-divisors", true,
               [](std::size_t c) { return filtered(c, 1, [](const DigitNum& d) { return n_member(d); }); }});
  r.push_back({"A169887", 1, "carryless primes", false, [](std::size_t c) {
                 return by_length(c, {}, [](std::size_t k) {
                   std::vector<BigInt> v;
                   for (const auto& p : primes_with_digits(k)) v.push_back(p.value.to_bigint());
                   return v;
                 });
               }});
  r.push_back({"A169962", 1, "number of k-digit carryless primes", false, [](std::size_t c) {
                 std::vector<BigInt> v;
                 for (std::size_t k = 1; k <= c; ++k) v.push_back(k == 1 ? BigInt(0) : count_primes_with_digits(k));
                 return v;
               }});
  r.push_back({"A169963", 1, "number of k-digit carryless squares", false, [](std::size_t c) {
                 std::vector<BigInt> v;
                 for (std::size_t k = 1; k <= c; ++k) v.push_back(count_squares_with_digits(k));
                 return v;
               }});
  r.push_back({"A169889", 1, "distinct carryless squares in increasing order, with 0", true, [](std::size_t c) {
                 return by_length(c, {BigInt(0)}, [](std::size_t k) {
                   std::vector<BigInt> v;
                   for (const auto& s : squares_with_digits(k)) v.push_back(s.to_bigint());
                   return v;
                 });
               }});
  r.push_back({"A169885", 0, "carryless cubes n ⊠ n ⊠ n", false,
               [=](std::size_t c) { return by_index(c, 0, [=](auto n) { return cube(num(n)); }); }});
  r.push_back({"A169890", 0, "carryless triangular numbers T(n) = T(n-1) ⊞ n", true, [=](std::size_t c) {
                 std::vector<BigInt> v;
                 DigitNum t;
                 for (std::uint64_t n = 0; n < c; ++n) {
                   t = add(t, num(n));
                   v.push_back(t.to_bigint());
                 }
                 return v;
               }});
  r.push_back({"A169973", 0, "subsets of {1..n} with carryless sum n (part bound L = n)", true,
               [](std::size_t c) { return partition_sequence(c); }});
  r.push_back({"A059692", 0, "carryless multiplication table i ⊠ j, i,j >= 0, by antidiagonals", true,
               [=](std::size_t c) {
                 std::vector<BigInt> v;
                 for (std::uint64_t s = 0; v.size() < c; ++s) {
                   for (std::uint64_t i = 0; i <= s && v.size() < c; ++i) v.push_back(mul(num(i), num(s - i)).to_bigint());
                 }
                 return v;
               }});
  r.push_back({"A003893", 0, "carryless Fibonacci numbers (Fibonacci mod 10)", false, [](std::size_t c) {
                 std::vector<BigInt> v;
                 for (const auto& f : fibonacci_analog(c)) v.push_back(f.to_bigint());
                 return v;
               }});
  r.push_back({"A000689", 0, "carryless powers of 2", false,
               [=](std::size_t c) { return by_index(c, 0, [=](auto n) { return pow(num(2), unsigned(n)); }); }});
  return r;
}

}  // namespace detail

/// The fixed set of supported sequences, in a stable order.
inline const std::vector<SequenceSpec>& supported_sequences() {
  static const std::vector<SequenceSpec> registry = detail::build_registry();
  return registry;
}

inline std::string supported_list() {
  std::string s;
  for (const auto& spec : supported_sequences()) s += (s.empty() ? "" : ", ") + spec.a_number;
  return s;
}

inline const SequenceSpec& find_sequence(std::string_view a_number) {
  for (const auto& spec : supported_sequences()) {
    if (spec.a_number == a_number) return spec;
  }
  throw usage_error("unsupported sequence " + std::string(a_number) + "; supported: " + supported_list());
}

/// First `count` terms of the sequence, starting at its offset.
inline std::vector<BigInt> generate(std::string_view a_number, std::size_t count) {
  return find_sequence(a_number).generator(count);
}

}  // namespace carryless
