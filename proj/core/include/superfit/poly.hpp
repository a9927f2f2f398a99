#pragma once

#include <map>
#include <optional>
#include <string>

#include "superfit/ring.hpp"
#include "superfit/scalar.hpp"

#include <nlohmann/json_fwd.hpp>

namespace superfit {

/// Sparse polynomial of the super ring. Terms are kept in canonical
/// degrevlex order with no zero coefficients; the empty map is zero.
class SuperPoly {
public:
  using TermMap = std::map<SuperMonomial, Scalar, CanonicalMonoLess>;

  SuperPoly() = default;
  explicit SuperPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static SuperPoly zero(RingPtr ring) { return SuperPoly(std::move(ring)); }
  static SuperPoly constant(RingPtr ring, const Scalar& c);
  static SuperPoly constant(RingPtr ring, long c);
  static SuperPoly variable(RingPtr ring, bool odd, int index);
  static SuperPoly variable(RingPtr ring, const std::string& name);
  static SuperPoly term(RingPtr ring, SuperMonomial m, Scalar c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  int termCount() const { return (int)terms_.size(); }

  /// Max total degree over terms; -1 for the zero polynomial.
  int degree() const;
  /// Z/2 parity when homogeneous (zero counts as even); nullopt when mixed.
  std::optional<int> parity() const;
  bool isZ2Homogeneous() const { return parity().has_value(); }
  /// All terms of equal total degree (zero counts as homogeneous).
  bool isDegreeHomogeneous() const;

  void addTerm(const SuperMonomial& m, const Scalar& c);

  SuperPoly operator-() const;
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const SuperPoly& f, const SuperPoly& g);
  SuperPoly scaled(const Scalar& c) const;
  /// Signed product sign * (m * f), with m multiplied from the left.
  SuperPoly mulMonoLeft(const SuperMonomial& m, const Scalar& c) const;

  bool operator==(const SuperPoly& o) const;
  bool operator!=(const SuperPoly& o) const { return !(*this == o); }

  /// Leading (greatest) term under the canonical order.
  const std::pair<const SuperMonomial, Scalar>& leadingTerm() const;
  SuperPoly monic() const;

  /// Textual format: integer or n/d coefficients, `*` products, `^` powers
  /// on even variables; round-trips bit-exactly with parse().
  std::string str() const;
  static SuperPoly parse(RingPtr ring, const std::string& text);

  nlohmann::json toJson() const;
  static SuperPoly fromJson(RingPtr ring, const nlohmann::json& j);

private:
  RingPtr ring_;
  TermMap terms_;
};

}  // namespace superfit
