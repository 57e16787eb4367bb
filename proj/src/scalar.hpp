#pragma once

#include <gmpxx.h>

#include <string>

namespace rbla {

// Exact rational number. Always kept canonical: lowest terms, positive
// denominator, so operator== is structural equality.
class Scalar {
public:
  Scalar() : v_(0) {}
  Scalar(int n) : v_(n) {}
  Scalar(long n) : v_(n) {}
  Scalar(long num, long den);

  // Accepts "p" or "p/q" with integer p, positive integer q. Anything else
  // (floats, empty strings, zero denominators) throws InputError.
  static Scalar parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return cmp(a.v_, b.v_) < 0;
  }

private:
  mpq_class v_;
};

} // namespace rbla
