#pragma once

#include <cstdint>
#include <string>

#include "ordrep/errors.hpp"

namespace ordrep {

// Exact rational on int64 numerator/denominator, always normalized
// (gcd-reduced, denominator > 0). Intermediate products run through
// __int128; results that do not fit back into int64 throw. The values in
// this library are small (labels, chain positions, sums v + alpha*f), so an
// overflow indicates a logic error rather than a capacity problem.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  // Accepts "p", "-p", "p/q", "-p/q" with q > 0.
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  // Canonical form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

 private:
  long long num_;
  long long den_;
};

}  // namespace ordrep
