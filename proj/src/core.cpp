#include "padic/core.hpp"

#include <algorithm>
#include <map>
#include <cctype>

namespace padic {

namespace {

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Base::Base(int p) : p_(p), prime_(is_prime_int(p)) {
  if (p < 2) throw Error("base must be at least 2, got " + std::to_string(p));
}

void Base::require_prime(std::string_view what) const {
  if (!prime_)
    throw Error(std::string(what) + " requires a prime base, got " + std::to_string(p_));
}

Integer Base::pow(std::size_t n) const {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), n);
  return r;
}

DigitWord::DigitWord(Base b, std::vector<int> d) : base(b), digits(std::move(d)) {
  for (int x : digits)
    if (x < 0 || x >= base.value())
      throw Error("digit " + std::to_string(x) + " outside alphabet of base " +
                  std::to_string(base.value()));
}

DigitWord DigitWord::from_integer(Base b, const Integer& x, std::size_t n) {
  if (sgn(x) < 0) throw Error("negative integer has no finite digit word");
  std::vector<int> d(n);
  Integer rest = x;
  const unsigned long p = static_cast<unsigned long>(b.value());
  for (std::size_t i = 0; i < n; ++i)
    d[i] = static_cast<int>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p));
  return DigitWord(b, std::move(d));
}

DigitWord DigitWord::minimal(Base b, const Integer& x) {
  if (sgn(x) < 0) throw Error("negative integer has no finite digit word");
  std::vector<int> d;
  Integer rest = x;
  const unsigned long p = static_cast<unsigned long>(b.value());
  while (sgn(rest) != 0)
    d.push_back(static_cast<int>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p)));
  return DigitWord(b, std::move(d));
}

Integer DigitWord::to_integer() const {
  Integer r = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) r = r * base.value() + *it;
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

RationalPadic::RationalPadic(Base base, Rational value) : base_(base), value_(std::move(value)) {
  value_.canonicalize();
  if (mpz_gcd_ui(nullptr, value_.get_den_mpz_t(), static_cast<unsigned long>(base_.value())) != 1)
    throw Error("denominator of " + value_.get_str() + " is not coprime to " +
                std::to_string(base_.value()));
}

RationalPadic::RationalPadic(Base base, long value) : RationalPadic(base, Rational(value)) {}

RationalPadic::RationalPadic(Base base, const Integer& value)
    : RationalPadic(base, Rational(value)) {}

RationalPadic RationalPadic::parse(Base base, std::string_view text) {
  return RationalPadic(base, parse_rational(text));
}

std::string RationalPadic::to_string() const { return rational_to_string(value_); }

RationalPadic RationalPadic::operator-() const { return RationalPadic(base_, Rational(-value_)); }

namespace {
void require_same_base(const RationalPadic& a, const RationalPadic& b) {
  if (!(a.base() == b.base())) throw Error("mixing p-adic values of different bases");
}
}  // namespace

RationalPadic operator+(const RationalPadic& a, const RationalPadic& b) {
  require_same_base(a, b);
  return RationalPadic(a.base_, Rational(a.value_ + b.value_));
}

RationalPadic operator-(const RationalPadic& a, const RationalPadic& b) {
  require_same_base(a, b);
  return RationalPadic(a.base_, Rational(a.value_ - b.value_));
}

RationalPadic operator*(const RationalPadic& a, const RationalPadic& b) {
  require_same_base(a, b);
  return RationalPadic(a.base_, Rational(a.value_ * b.value_));
}

std::strong_ordering operator<=>(const RationalPadic& a, const RationalPadic& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return a.base_.value() <=> b.base_.value();
}

std::size_t RationalPadic::valuation() const {
  if (is_zero()) return SIZE_MAX;
  Integer num = value_.get_num();
  std::size_t v = 0;
  const unsigned long p = static_cast<unsigned long>(base_.value());
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
    ++v;
  }
  return v;
}

RationalPadic RationalPadic::divide_by_power(std::size_t k) const {
  Integer pk = base_.pow(k);
  if (!mpz_divisible_p(value_.get_num_mpz_t(), pk.get_mpz_t()))
    throw Error(to_string() + " is not divisible by " + std::to_string(base_.value()) + "^" +
                std::to_string(k));
  return RationalPadic(base_, Rational(value_ / pk));
}

Integer reduce_mod(Base base, const Integer& x, std::size_t n) {
  Integer m = base.pow(n);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer reduce_mod(const RationalPadic& x, std::size_t n) {
  if (n == 0) return 0;
  Integer m = x.base().pow(n);
  Integer inv;
  Integer den = x.denominator();
  if (den == 1) return reduce_mod(x.base(), x.numerator(), n);
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  Integer r = x.numerator() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

int digit(const RationalPadic& x, std::size_t i) {
  Integer low = reduce_mod(x, i + 1);
  Integer pi = x.base().pow(i);
  mpz_fdiv_q(low.get_mpz_t(), low.get_mpz_t(), pi.get_mpz_t());
  return static_cast<int>(low.get_si());
}

std::size_t floor_log(const Integer& m, Base base) {
  if (sgn(m) < 0) throw Error("floor_log of a negative integer");
  if (sgn(m) == 0) return 0;
  std::size_t n = 0;
  Integer pk = base.value();
  while (pk <= m) {
    pk *= base.value();
    ++n;
  }
  return n;
}

EventuallyPeriodicDigits::EventuallyPeriodicDigits(DigitWord pre, DigitWord per)
    : base(pre.base), preperiod(std::move(pre)), period(std::move(per)) {
  if (!(period.base == base)) throw Error("preperiod and period use different bases");
  if (period.size() == 0) throw Error("eventually periodic digit stream needs a nonempty period");
}

int EventuallyPeriodicDigits::digit(std::size_t i) const {
  if (i < preperiod.size()) return preperiod.digits[i];
  return period.digits[(i - preperiod.size()) % period.size()];
}

EventuallyPeriodicDigits EventuallyPeriodicDigits::canonical() const {
  std::vector<int> per = period.digits;
  const std::size_t len = per.size();
  for (std::size_t q = 1; q < len; ++q) {
    if (len % q != 0) continue;
    bool ok = true;
    for (std::size_t i = q; i < len && ok; ++i) ok = per[i] == per[i - q];
    if (ok) {
      per.resize(q);
      break;
    }
  }
  std::vector<int> pre = preperiod.digits;
  // Absorb trailing preperiod digits into the period by rotation.
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
  return EventuallyPeriodicDigits(DigitWord(base, std::move(pre)), DigitWord(base, std::move(per)));
}

EventuallyPeriodicDigits to_eventually_periodic(const RationalPadic& x) {
  const Base base = x.base();
  const Integer den = x.denominator();
  const unsigned long p = static_cast<unsigned long>(base.value());
  Integer num = x.numerator();
  std::map<Integer, std::size_t> seen;
  std::vector<int> digits;
  while (true) {
    auto [it, fresh] = seen.emplace(num, digits.size());
    if (!fresh) {
      std::size_t start = it->second;
      std::vector<int> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
      std::vector<int> per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
      return EventuallyPeriodicDigits(DigitWord(base, std::move(pre)),
                                      DigitWord(base, std::move(per)));
    }
    int d = digit(RationalPadic(base, Rational(num, den)), 0);
    digits.push_back(d);
    num -= den * d;
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
  }
}

RationalPadic from_eventually_periodic(const EventuallyPeriodicDigits& digits) {
  const Base base = digits.base;
  Rational head(digits.preperiod.to_integer());
  Rational cycle(digits.period.to_integer());
  Integer shift = base.pow(digits.preperiod.size());
  Integer denom = Integer(1) - base.pow(digits.period.size());
  Rational tail = cycle * Rational(shift) / Rational(denom);
  return RationalPadic(base, Rational(head + tail));
}

}  // namespace padic
