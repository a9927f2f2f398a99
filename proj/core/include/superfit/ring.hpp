#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace superfit {

struct RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

/// A Z/2-graded polynomial ring: a commutative polynomial algebra on the
/// even variables tensored with an exterior algebra on the odd ones.
/// Every variable has internal degree 1. Immutable; share via RingPtr.
struct RingSpec {
  std::vector<std::string> evenNames;
  std::vector<std::string> oddNames;
  long characteristic = 0;  // 0 or a prime

  static RingPtr make(std::vector<std::string> even,
                      std::vector<std::string> odd, long characteristic);

  int evenCount() const { return (int)evenNames.size(); }
  int oddCount() const { return (int)oddNames.size(); }
  int varCount() const { return evenCount() + oddCount(); }

  /// (isOdd, index) for a variable name; nullopt if unknown.
  std::optional<std::pair<bool, int>> lookup(const std::string& name) const;

  /// Same ring with one extra even variable appended (used as the tag
  /// variable for intersections); existing indices are unchanged.
  RingPtr withEvenVarAppended(const std::string& name) const;

  bool sameAs(const RingSpec& o) const;

private:
  std::unordered_map<std::string, std::pair<bool, int>> index_;
};

inline void requireSameRing(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->sameAs(*b))
    throw std::invalid_argument("ring mismatch");
}

/// Canonical monomial of the super ring: exponents on even variables plus a
/// strictly increasing set of odd variable indices (odd squares vanish).
struct SuperMonomial {
  std::vector<int32_t> even;  // size = ring.evenCount()
  std::vector<int32_t> odd;   // strictly increasing indices

  static SuperMonomial unit(const RingSpec& ring) {
    return SuperMonomial{std::vector<int32_t>(ring.evenCount(), 0), {}};
  }
  int degree() const;
  int parity() const { return (int)(odd.size() & 1); }
  bool isUnit() const;
  bool operator==(const SuperMonomial& o) const {
    return even == o.even && odd == o.odd;
  }
};

/// Koszul-signed product; nullopt when a shared odd variable kills it.
std::optional<std::pair<int, SuperMonomial>> monoMul(const SuperMonomial& a,
                                                     const SuperMonomial& b);

bool monoDivides(const SuperMonomial& d, const SuperMonomial& m);

/// Cofactor c with monoMul(c, d) = (sign, m); requires monoDivides(d, m).
SuperMonomial monoQuotient(const SuperMonomial& m, const SuperMonomial& d);

SuperMonomial monoLcm(const SuperMonomial& a, const SuperMonomial& b);

/// Total order on monomials refining, within each block, total degree.
/// Default: degree-reverse-lexicographic on the concatenated exponent
/// vector (even variables first, then odd ones as 0/1 exponents), with the
/// earlier-listed variable the larger. Elimination orders compare the
/// eliminated block first.
class TermOrder {
public:
  static TermOrder degrevlex(const RingSpec& ring);
  /// Block order: positions of `eliminated` (concatenated indexing: even
  /// index i -> i, odd index j -> evenCount + j) first, rest second.
  static TermOrder elimination(const RingSpec& ring,
                               const std::vector<int>& eliminatedPositions);

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const SuperMonomial& a, const SuperMonomial& b) const;
  bool less(const SuperMonomial& a, const SuperMonomial& b) const {
    return compare(a, b) < 0;
  }

private:
  std::vector<std::vector<int>> blocks_;  // concatenated positions
  int evenCount_ = 0;
};

/// Canonical (single-block degrevlex) "less" usable as a map comparator.
struct CanonicalMonoLess {
  bool operator()(const SuperMonomial& a, const SuperMonomial& b) const;
};

/// All monomials of total degree d, ascending in the canonical order.
std::vector<SuperMonomial> monomialsOfDegree(const RingSpec& ring, int d);

}  // namespace superfit
