#include "visgrab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "visgrab/errors.hpp"

namespace visgrab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

bool fits(i128 v) { return v > -kLimit && v < kLimit; }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long value) {
  if (fits(value)) {
    num_ = value;
  } else {
    big_ = std::make_unique<mpq_class>(value);
  }
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  set_from_big(mpq_class(numerator, denominator));
}

Rational::Rational(const mpq_class& value) { set_from_big(value); }

void Rational::set_from_big(mpq_class v) {
  v.canonicalize();
  if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p()) {
    const long n = v.get_num().get_si(), d = v.get_den().get_si();
    if (fits(n) && fits(d)) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  big_ = std::make_unique<mpq_class>(std::move(v));
  num_ = 0;
  den_ = 1;
}

// Stores n/d (d > 0, not necessarily reduced) in canonical form.
static void assign_small(std::int64_t& num, std::int64_t& den, std::unique_ptr<mpq_class>& big,
                         i128 n, i128 d) {
  const u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    num = static_cast<std::int64_t>(n);
    den = static_cast<std::int64_t>(d);
    big.reset();
    return;
  }
  big = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
  num = 0;
  den = 1;
}

mpq_class Rational::value() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      const i128 n = static_cast<i128>(num_) + o.num_;
      if (fits(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    const i128 d = static_cast<i128>(den_) * o.den_;
    assign_small(num_, den_, big_, n, d);
    return *this;
  }
  set_from_big(value() + o.value());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      const i128 n = static_cast<i128>(num_) - o.num_;
      if (fits(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_;
    const i128 d = static_cast<i128>(den_) * o.den_;
    assign_small(num_, den_, big_, n, d);
    return *this;
  }
  set_from_big(value() - o.value());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    const i128 n = static_cast<i128>(num_) * o.num_;
    const i128 d = static_cast<i128>(den_) * o.den_;
    if (den_ == 1 && o.den_ == 1 && fits(n)) {
      num_ = static_cast<std::int64_t>(n);
      return *this;
    }
    assign_small(num_, den_, big_, n, d);
    return *this;
  }
  set_from_big(value() * o.value());
  return *this;
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c;
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    c = (l > r) - (l < r);
  } else {
    c = cmp(a.value(), b.value());
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  if (text.empty()) throw InvalidInput("empty rational literal");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpq_class value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InvalidInput("malformed rational literal '" + original + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + original + "'");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw InvalidInput("malformed decimal literal '" + original + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const std::string digits = std::string(whole) + std::string(frac);
    value = mpq_class(mpz_class(digits.empty() ? "0" : digits, 10), scale);
  } else {
    if (!all_digits(text)) throw InvalidInput("malformed rational literal '" + original + "'");
    value = mpq_class(mpz_class(std::string(text), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

std::string Rational::to_string() const {
  if (!big_) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  if (big_->get_den() == 1) return big_->get_num().get_str();
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidInput("division by zero");
  if (!big_ && !o.big_) {
    i128 n = static_cast<i128>(num_) * o.den_;
    i128 d = static_cast<i128>(den_) * o.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assign_small(num_, den_, big_, n, d);
    return *this;
  }
  set_from_big(value() / o.value());
  return *this;
}

std::uint64_t Rational::hash() const {
  // FNV-1a over the limbs of numerator and denominator.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const mpz_class& z) {
    h ^= static_cast<std::uint64_t>(sgn(z) + 2);
    h *= 1099511628211ULL;
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
      h ^= static_cast<std::uint64_t>(mpz_getlimbn(z.get_mpz_t(), i));
      h *= 1099511628211ULL;
    }
  };
  const mpq_class v = value();
  mix(v.get_num());
  mix(v.get_den());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace visgrab
