#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "graev/errors.hpp"

namespace graev {

namespace detail {

inline __int128 abs128(__int128 x) { return x < 0 ? -x : x; }

inline __int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Exact rational number. Every metric quantity in this library is a min/max
/// selection of input distances, so values are copied and compared but almost
/// never combined; the only arithmetic is midpoint(), used by threshold
/// sweeps. Canonical form (gcd-reduced, positive denominator) makes equality
/// structural. Negative values are representable so that validators can
/// report bad input entries; every distance this library produces is >= 0.
class Value {
 public:
  constexpr Value() = default;
  Value(std::int64_t num, std::int64_t den = 1) { assign(num, den); }

  /// Parses "p/q" or an integer string. Throws argument_error on anything else.
  static Value parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool negative() const { return num_ < 0; }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Value& a, const Value& b) = default;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw argument_error("Value: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Value Value::parse(std::string_view text) {
  const auto parse_int = [&](std::string_view part) {
    std::int64_t out = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw argument_error("Value: cannot parse rational '" + std::string(text) +
                           "'");
    return out;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Value(parse_int(text));
  return Value(parse_int(text.substr(0, slash)),
               parse_int(text.substr(slash + 1)));
}

inline Value min(const Value& a, const Value& b) { return a <= b ? a : b; }
inline Value max(const Value& a, const Value& b) { return a >= b ? a : b; }

/// Exact (a+b)/2; throws if the reduced result does not fit in 64 bits.
inline Value midpoint(const Value& a, const Value& b) {
  const __int128 num = static_cast<__int128>(a.num()) * b.den() +
                       static_cast<__int128>(b.num()) * a.den();
  const __int128 den =
      static_cast<__int128>(2) * a.den() * b.den();
  __int128 g = detail::gcd128(num, den);
  if (g == 0) g = 1;
  const __int128 rn = num / g;
  const __int128 rd = den / g;
  constexpr __int128 lim = INT64_MAX;
  if (detail::abs128(rn) > lim || rd > lim)
    throw error("midpoint: result does not fit in 64-bit rational");
  return Value(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd));
}

inline std::ostream& operator<<(std::ostream& os, const Value& v) {
  return os << v.str();
}

}  // namespace graev
