#include "ordrep/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace ordrep {

namespace {

long long checked_narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(std::string("rational overflow in ") + what);
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw Error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t slash = text.find('/');
  auto to_ll = [](const std::string& s) -> long long {
    if (s.empty()) throw ParseError("empty integer in rational literal");
    // stoll would accept leading whitespace and '+'; the canonical form is
    // digits with an optional leading '-'.
    if (!(s[0] == '-' || (s[0] >= '0' && s[0] <= '9'))) {
      throw ParseError("bad rational literal: " + s);
    }
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad rational literal: " + s);
    }
    if (pos != s.size()) throw ParseError("bad rational literal: " + s);
    return v;
  };
  if (slash == std::string::npos) return Rational(to_ll(text));
  long long p = to_ll(text.substr(0, slash));
  long long q = to_ll(text.substr(slash + 1));
  if (q <= 0) throw ParseError("rational denominator must be positive: " + text);
  return Rational(p, q);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ +
               static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  // Reduce in 128 bits before narrowing so near-limit values survive.
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Rational(checked_narrow(n / a, "+"), checked_narrow(d / a, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.num_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Rational(checked_narrow(n / a, "*"), checked_narrow(d / a, "*"));
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <
         static_cast<__int128>(o.num_) * den_;
}

}  // namespace ordrep
