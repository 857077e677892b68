#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace padic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested depth lies beyond what a presentation or table supports.
class DepthOverflow : public Error {
 public:
  using Error::Error;
};

/// Radix of the digit alphabet {0, ..., p-1}.
///
/// Any p >= 2 is accepted; primality is recorded so that the modules
/// needing a field structure can enforce it.
class Base {
 public:
  explicit Base(int p);

  int value() const { return p_; }
  bool is_prime() const { return prime_; }
  void require_prime(std::string_view what) const;

  /// p^n as an arbitrary precision integer.
  Integer pow(std::size_t n) const;

  friend bool operator==(const Base&, const Base&) = default;

 private:
  int p_;
  bool prime_;
};

/// Finite word over {0..p-1}; digits[0] is the least significant letter.
struct DigitWord {
  Base base;
  std::vector<int> digits;

  explicit DigitWord(Base b, std::vector<int> d = {});

  /// The length-n word of x mod p^n (leading zeros included). x must be >= 0.
  static DigitWord from_integer(Base b, const Integer& x, std::size_t n);
  /// The minimal-length word of x >= 0 (empty for 0).
  static DigitWord minimal(Base b, const Integer& x);

  std::size_t size() const { return digits.size(); }
  Integer to_integer() const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

/// Element of Q ∩ Z_p: a rational in lowest terms whose denominator is
/// coprime to p.
class RationalPadic {
 public:
  RationalPadic(Base base, Rational value);
  RationalPadic(Base base, long value);
  RationalPadic(Base base, const Integer& value);
  static RationalPadic parse(Base base, std::string_view text);

  Base base() const { return base_; }
  const Rational& value() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "num/den", or plain "num" for integers.
  std::string to_string() const;

  RationalPadic operator-() const;
  friend RationalPadic operator+(const RationalPadic& a, const RationalPadic& b);
  friend RationalPadic operator-(const RationalPadic& a, const RationalPadic& b);
  friend RationalPadic operator*(const RationalPadic& a, const RationalPadic& b);

  /// Exact quotient by p^k; fails unless the result stays in Z_p.
  RationalPadic divide_by_power(std::size_t k) const;
  /// p-adic valuation of the numerator (infinite for zero is reported as SIZE_MAX).
  std::size_t valuation() const;

  friend bool operator==(const RationalPadic& a, const RationalPadic& b) {
    return a.base_ == b.base_ && a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const RationalPadic& a, const RationalPadic& b);

 private:
  Base base_;
  Rational value_;
};

/// Digit stream preperiod followed by an infinitely repeated period.
struct EventuallyPeriodicDigits {
  Base base;
  DigitWord preperiod;
  DigitWord period;

  EventuallyPeriodicDigits(DigitWord pre, DigitWord per);

  int digit(std::size_t i) const;
  /// Shortest period, then shortest preperiod.
  EventuallyPeriodicDigits canonical() const;

  friend bool operator==(const EventuallyPeriodicDigits& a, const EventuallyPeriodicDigits& b) {
    return a.preperiod == b.preperiod && a.period == b.period;
  }
};

/// The i-th p-adic digit of x.
int digit(const RationalPadic& x, std::size_t i);

/// x mod p^n, i.e. the sum of the first n digits, in [0, p^n).
Integer reduce_mod(const RationalPadic& x, std::size_t n);

/// Non-negative residue of an integer modulo p^n.
Integer reduce_mod(Base base, const Integer& x, std::size_t n);

/// floor(log_p m), with floor(log_p 0) = 0.
std::size_t floor_log(const Integer& m, Base base);

EventuallyPeriodicDigits to_eventually_periodic(const RationalPadic& x);
RationalPadic from_eventually_periodic(const EventuallyPeriodicDigits& digits);

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

}  // namespace padic
