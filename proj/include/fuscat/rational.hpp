#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace fuscat {

// Exact rational arithmetic for Casimir values and conformal weights.
// The fraction is always reduced and the denominator kept positive, so
// defaulted equality is value equality. Magnitudes stay tiny (numerators
// bounded by a few thousand), int64 is ample.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  bool operator==(const Rational&) const = default;

  // Representative of the class mod 1 in [0, 1).
  Rational mod_one() const {
    long long r = ((num_ % den_) + den_) % den_;
    return Rational(r, den_);
  }

  bool is_integer() const { return den_ == 1; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace fuscat
