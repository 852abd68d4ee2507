#pragma once

#include "carryless/digitnum.hpp"

#include <string>

namespace carryless {

/// Primary residue class. Regular is the class N minus the units.
enum class NumberClass { Unit, Evenish, Fiveish, ZeroBoth, Regular };

struct Classification {
  NumberClass cls = NumberClass::ZeroBoth;
  bool e_type = false;
  bool f_type = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

inline bool is_unit(const DigitNum& n) {
  return n.digits().size() == 1 && (n.digit(0) == 1 || n.digit(0) == 3 || n.digit(0) == 7 || n.digit(0) == 9);
}

/// Nonzero, every digit even.
inline bool is_evenish(const DigitNum& n) {
  if (n.is_zero()) return false;
  for (auto d : n.digits()) {
    if (d % 2 != 0) return false;
  }
  return true;
}

/// Nonzero, every digit 0 or 5.
inline bool is_fiveish(const DigitNum& n) {
  if (n.is_zero()) return false;
  for (auto d : n.digits()) {
    if (d % 5 != 0) return false;
  }
  return true;
}

inline bool is_zero_divisor(const DigitNum& n) { return is_evenish(n) || is_fiveish(n); }

/// The class N: positive numbers that are not zero-divisors (units included).
inline bool n_member(const DigitNum& n) { return !n.is_zero() && !is_zero_divisor(n); }

/// At least two digits; all but the rightmost even, the rightmost odd.
inline bool is_e_type_number(const DigitNum& n) {
  auto ds = n.digits();
  if (ds.size() < 2 || ds[0] % 2 == 0) return false;
  for (std::size_t i = 1; i < ds.size(); ++i) {
    if (ds[i] % 2 != 0) return false;
  }
  return true;
}

/// At least two digits; all but the rightmost in {0,5}, the rightmost not.
inline bool is_f_type_number(const DigitNum& n) {
  auto ds = n.digits();
  if (ds.size() < 2 || ds[0] % 5 == 0) return false;
  for (std::size_t i = 1; i < ds.size(); ++i) {
    if (ds[i] % 5 != 0) return false;
  }
  return true;
}

inline Classification classify(const DigitNum& n) {
  Classification c;
  if (n.is_zero()) c.cls = NumberClass::ZeroBoth;
  else if (is_unit(n)) c.cls = NumberClass::Unit;
  else if (is_evenish(n)) c.cls = NumberClass::Evenish;
  else if (is_fiveish(n)) c.cls = NumberClass::Fiveish;
  else c.cls = NumberClass::Regular;
  c.e_type = is_e_type_number(n);
  c.f_type = is_f_type_number(n);
  return c;
}

inline std::string class_token(NumberClass c) {
  switch (c) {
    case NumberClass::Unit: return "unit";
    case NumberClass::Evenish: return "evenish";
    case NumberClass::Fiveish: return "fiveish";
    case NumberClass::ZeroBoth: return "zero";
    case NumberClass::Regular: return "regular";
  }
  return "?";
}

/// "regular e-type", "unit", ...
inline std::string to_string(const Classification& c) {
  std::string s = class_token(c.cls);
  if (c.e_type) s += " e-type";
  if (c.f_type) s += " f-type";
  return s;
}

}  // namespace carryless
