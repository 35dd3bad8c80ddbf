#pragma once

// Exact scalar fields: prime fields F_p with small p, and the rationals.
//
// A field object is a lightweight arithmetic context; scalars are plain
// values (`value_type`) interpreted relative to the field that produced them.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/error.hpp"

namespace leibniz {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint32_t kDefaultMaxPrime = 31;

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using value_type = std::uint32_t;

  /// `max_prime` may be raised up to 65521; the default keeps element scans small.
  explicit PrimeField(std::uint32_t p, std::uint32_t max_prime = kDefaultMaxPrime) : p_(p) {
    if (max_prime > 65521) throw InputError("prime bound above 65521 is not supported");
    if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    if (p > max_prime)
      throw InputError("prime " + std::to_string(p) + " exceeds the configured bound " +
                       std::to_string(max_prime));
    inverse_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b)
        if ((a * b) % p == 1) {
          inverse_[a] = b;
          break;
        }
  }

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  static constexpr bool is_finite() noexcept { return true; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }
  bool contains(value_type a) const noexcept { return a < p_; }

  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw InputError("division by zero");
    return inverse_[a];
  }

  value_type from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  /// Decimal integer (possibly negative), reduced mod p.
  value_type parse(std::string_view text) const {
    bool negative = false;
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw InputError("empty scalar literal");
    std::uint64_t acc = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9')
        throw InputError("scalar '" + std::string(text) + "' is not a decimal integer");
      acc = (acc * 10 + static_cast<std::uint64_t>(ch - '0')) % p_;
    }
    value_type r = static_cast<value_type>(acc);
    return negative ? neg(r) : r;
  }

  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint32_t p_;
  std::vector<value_type> inverse_;
};

class RationalField {
 public:
  using value_type = Rational;

  static constexpr std::uint32_t characteristic() noexcept { return 0; }
  static constexpr bool is_finite() noexcept { return false; }

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool contains(const value_type&) const noexcept { return true; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw InputError("division by zero");
    return Rational(1) / a;
  }
  value_type from_int(long long v) const { return Rational(v); }

  /// "num/den" or a plain integer; the result is normalized.
  value_type parse(std::string_view text) const {
    auto slash = text.find('/');
    BigInt num = parse_int(text.substr(0, slash), text);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
      den = parse_int(text.substr(slash + 1), text);
      if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
      if (den < 0) {
        num = -num;
        den = -den;
      }
    }
    return Rational(num, den);
  }

  std::string to_string(const value_type& a) const {
    const BigInt& d = boost::multiprecision::denominator(a);
    std::string s = boost::multiprecision::numerator(a).str();
    if (d != 1) s += "/" + d.str();
    return s;
  }
  std::string name() const { return "Q"; }

  bool operator==(const RationalField&) const noexcept { return true; }

 private:
  static BigInt parse_int(std::string_view part, std::string_view whole) {
    std::string_view digits = part;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
    BigInt acc = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw InputError("malformed rational '" + std::string(whole) + "'");
      acc = acc * 10 + (ch - '0');
    }
    return negative ? BigInt(-acc) : acc;
  }
};

template <class K>
concept ExactField = requires(const K& k, const typename K::value_type& a, long long i,
                              std::string_view s) {
  { k.zero() } -> std::convertible_to<typename K::value_type>;
  { k.one() } -> std::convertible_to<typename K::value_type>;
  { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.sub(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.neg(a) } -> std::convertible_to<typename K::value_type>;
  { k.inv(a) } -> std::convertible_to<typename K::value_type>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.from_int(i) } -> std::convertible_to<typename K::value_type>;
  { k.parse(s) } -> std::convertible_to<typename K::value_type>;
  { k.to_string(a) } -> std::convertible_to<std::string>;
  { k.characteristic() } -> std::convertible_to<std::uint32_t>;
  { k == k } -> std::convertible_to<bool>;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

template <class K>
using Vec = std::vector<typename K::value_type>;

}  // namespace leibniz
