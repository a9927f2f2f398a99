#include "superfit/scalar.hpp"

namespace superfit {

namespace {

long mod(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// extended Euclid inverse mod p
long invMod(long a, long p) {
  long t = 0, newt = 1, r = p, newr = mod(a, p);
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return mod(t, p);
}

}  // namespace

bool isPrime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Scalar Scalar::of(long value, long characteristic) {
  Scalar s(characteristic);
  if (characteristic == 0)
    s.q_ = value;
  else
    s.r_ = mod(value, characteristic);
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(p_);
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  checkField(o);
  if (p_ == 0)
    q_ += o.q_;
  else
    r_ = mod(r_ + o.r_, p_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  checkField(o);
  if (p_ == 0)
    q_ -= o.q_;
  else
    r_ = mod(r_ - o.r_, p_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  checkField(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = mod(r_ * o.r_, p_);  // p fits in 31 bits in practice
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  checkField(o);
  if (o.isZero()) throw std::domain_error("division by zero");
  if (p_ == 0)
    q_ /= o.q_;
  else
    r_ = mod(r_ * invMod(o.r_, p_), p_);
  return *this;
}

Scalar Scalar::inverse() const {
  return one(p_) / *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_);
}

Scalar Scalar::parse(const std::string& s, long characteristic) {
  if (characteristic == 0) return rational(mpq_class(s));
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return of(std::stol(s), characteristic);
  Scalar num = of(std::stol(s.substr(0, slash)), characteristic);
  Scalar den = of(std::stol(s.substr(slash + 1)), characteristic);
  return num / den;
}

}  // namespace superfit
