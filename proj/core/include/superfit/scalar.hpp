#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superfit {

/// Exact field scalar: an arbitrary-precision rational when the
/// characteristic is 0, a canonical residue 0..p-1 when it is a prime p.
/// Mixing scalars from different fields throws.
class Scalar {
public:
  Scalar() = default;  // zero over Q
  explicit Scalar(long characteristic) : p_(characteristic) {}

  static Scalar of(long value, long characteristic);
  static Scalar rational(mpq_class q);
  static Scalar one(long characteristic) { return of(1, characteristic); }
  static Scalar zero(long characteristic) { return Scalar(characteristic); }

  long characteristic() const { return p_; }
  bool isZero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool isOne() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "n" or "n/d"; for F_p the canonical residue.
  std::string str() const;
  static Scalar parse(const std::string& s, long characteristic);

  const mpq_class& rat() const { return q_; }
  long residue() const { return r_; }

private:
  void checkField(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
  }

  long p_ = 0;     // 0 => rationals, else prime modulus
  mpq_class q_ = 0;
  long r_ = 0;     // residue when p_ > 0
};

bool isPrime(long p);

}  // namespace superfit
