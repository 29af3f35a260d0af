#pragma once

// Exact ground fields. A field is a small value object that owns the
// arithmetic; elements are plain `value_type`s interpreted by it. Two fields
// compare equal iff they describe the same ground field.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "hopflim/errors.hpp"

namespace hopflim {

template <class F>
concept Field = std::regular<F> && requires(const F& f, const typename F::value_type& a,
                                             std::string_view text) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(0LL) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.parse(text) } -> std::same_as<typename F::value_type>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.name() } -> std::same_as<std::string>;
  { f.characteristic() } -> std::same_as<std::uint32_t>;
};

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// The rational numbers with arbitrary precision. Values are always kept in
/// lowest terms with a positive denominator.
class Rationals {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long v) const { return value_type(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw PreconditionError("division by zero in Q");
    return value_type(1) / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  /// Accepts "n" or "n/d" with optional sign.
  value_type parse(std::string_view text) const {
    using boost::multiprecision::cpp_int;
    auto s = detail::trim(text);
    auto slash = s.find('/');
    auto num_text = s.substr(0, slash);
    if (!detail::is_integer_literal(num_text))
      throw ParseError("not a rational scalar: '" + std::string(text) + "'");
    cpp_int num(std::string(num_text.front() == '+' ? num_text.substr(1) : num_text));
    if (slash == std::string_view::npos) return value_type(num);
    auto den_text = s.substr(slash + 1);
    if (!detail::is_integer_literal(den_text))
      throw ParseError("not a rational scalar: '" + std::string(text) + "'");
    cpp_int den(std::string(den_text.front() == '+' ? den_text.substr(1) : den_text));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return value_type(num, den);
  }
  std::string format(const value_type& a) const { return a.str(); }
  std::string name() const { return "Q"; }
  std::uint32_t characteristic() const { return 0; }

  friend bool operator==(const Rationals&, const Rationals&) = default;
};

/// Z/p for a prime p < 2^16; residues live in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  PrimeField() : p_(2) {}
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 16)) throw PreconditionError("prime modulus must lie in [2, 65536)");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
    // a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  /// Integers (any sign) are reduced mod p; "a/b" means a * b^-1.
  value_type parse(std::string_view text) const {
    auto s = detail::trim(text);
    auto slash = s.find('/');
    auto reduce = [&](std::string_view digits) -> value_type {
      if (!detail::is_integer_literal(digits))
        throw ParseError("not an integer scalar: '" + std::string(text) + "'");
      bool negative = digits.front() == '-';
      if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
      std::uint64_t r = 0;
      for (char c : digits) r = (r * 10 + static_cast<unsigned>(c - '0')) % p_;
      auto v = static_cast<value_type>(r);
      return negative ? neg(v) : v;
    };
    if (slash == std::string_view::npos) return reduce(s);
    auto den = reduce(s.substr(slash + 1));
    if (den == 0) throw ParseError("denominator vanishes mod p in '" + std::string(text) + "'");
    return mul(reduce(s.substr(0, slash)), inv(den));
  }
  std::string format(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }
  std::uint32_t characteristic() const { return p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

static_assert(Field<Rationals>);
static_assert(Field<PrimeField>);

template <Field F>
void require_same_field(const F& a, const F& b, const char* where) {
  if (!(a == b))
    throw FieldMismatch(std::string(where) + ": operands over " + a.name() + " and " + b.name());
}

}  // namespace hopflim
