#pragma once

#include <optional>
#include <vector>

#include "superfit/poly.hpp"

namespace superfit {

/// Interreduced, monic Groebner basis of a Z/2-homogeneous ideal in the
/// super-commutative ring, under a fixed term order.
struct GroebnerBasis {
  RingPtr ring;
  TermOrder order;
  std::vector<SuperPoly> generators;
};

/// Leading (greatest) term of f under the given order.
const std::pair<const SuperMonomial, Scalar>& leadingTermUnder(
    const SuperPoly& f, const TermOrder& order);

/// Buchberger with odd self-pairs: besides the usual S-polynomials, for
/// every basis element g and every odd variable v dividing its leading
/// monomial, the product v*g is enqueued (v annihilates the leading
/// monomial but not g in general, so these pairs are required for
/// completeness in the skew-commutative case).
/// Generators must be Z/2-homogeneous; throws otherwise.
GroebnerBasis buchberger(const std::vector<SuperPoly>& gens,
                         const TermOrder& order, RingPtr ring);

/// Fully reduced normal form: no term of the result is divisible by any
/// leading monomial of gb; f - result lies in the ideal.
SuperPoly normalForm(SuperPoly f, const GroebnerBasis& gb);

class Ideal {
public:
  Ideal(RingPtr ring, std::vector<SuperPoly> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<SuperPoly>& generators() const { return gens_; }
  /// Cached Groebner basis under the canonical degrevlex order.
  const GroebnerBasis& gb() const;
  bool contains(const SuperPoly& f) const;
  bool isZero() const;
  bool isUnit() const;

private:
  RingPtr ring_;
  std::vector<SuperPoly> gens_;
  mutable std::optional<GroebnerBasis> gb_;
};

/// I ∩ J via an even tag variable t: eliminate t from t·I + (1-t)·J.
Ideal idealIntersect(const Ideal& I, const Ideal& J);

/// (I : f) = {g : g·f ∈ I}; f = 0 gives the unit ideal. Computed from
/// module syzygies of [f | generators of I].
Ideal idealColon(const Ideal& I, const SuperPoly& f);

/// true iff I ⊇ J.
bool idealContains(const Ideal& I, const Ideal& J);
bool idealEqual(const Ideal& I, const Ideal& J);

/// I ∩ K[remaining variables]; positions use the concatenated indexing
/// (even index i -> i, odd index j -> evenCount + j).
Ideal eliminateVars(const Ideal& I, const std::vector<int>& positions);

/// Graded-Nakayama minimal generators of a homogeneous ideal: per degree,
/// representatives of a basis of I_d modulo (variables)·I_{d-1}.
std::vector<SuperPoly> minimalGenerators(const Ideal& I);

/// K-dimension of the degree-d graded piece, via the Groebner basis
/// (monomials of degree d divisible by some leading monomial).
int idealDimensionInDegree(const Ideal& I, int d);

/// Canonical generator list: monic, sorted, duplicates removed. Used for
/// deterministic output.
std::vector<SuperPoly> canonicalizeGenerators(std::vector<SuperPoly> gens);

}  // namespace superfit
