#pragma once

#include <vector>

#include "superfit/groebner.hpp"

#include <nlohmann/json_fwd.hpp>

namespace superfit {

/// Free Z/2-graded module R^{rankEven|rankOdd} with an internal-degree
/// twist per basis element. Basis order: even block, then odd block.
struct GradedFreeModule {
  int rankEven = 0;
  int rankOdd = 0;
  std::vector<int> twists;  // size rank(); internal degree of each e_i

  int rank() const { return rankEven + rankOdd; }
  int parityOf(int pos) const { return pos >= rankEven ? 1 : 0; }

  nlohmann::json toJson() const;
  static GradedFreeModule fromJson(const nlohmann::json& j);
};

/// Homogeneous map of graded free modules, stored by entries[target][source].
/// Column s of the matrix is the image of source basis element e'_s, written
/// with coefficients on the left of the target basis.
struct GradedMatrix {
  RingPtr ring;
  GradedFreeModule target;
  GradedFreeModule source;
  std::vector<std::vector<SuperPoly>> entries;

  static GradedMatrix zero(RingPtr ring, GradedFreeModule target,
                           GradedFreeModule source);

  const SuperPoly& at(int t, int s) const { return entries[t][s]; }
  SuperPoly& at(int t, int s) { return entries[t][s]; }
  std::vector<SuperPoly> column(int s) const;

  /// Checks that every nonzero entry is degree homogeneous of degree
  /// source.twists[s] - target.twists[t] and of parity
  /// parityOf(t) + parityOf(s) mod 2. Throws on violation.
  void validate() const;

  nlohmann::json toJson() const;
  static GradedMatrix fromJson(RingPtr ring, const nlohmann::json& j);
};

/// Elements of a free module are plain coordinate vectors over the ring
/// (left coefficients); the zero element is a vector of zero polynomials.
using ModVec = std::vector<SuperPoly>;

bool modIsZero(const ModVec& v);
ModVec modZero(const RingPtr& ring, int rank);
ModVec modUnitVector(const RingPtr& ring, int rank, int pos);
ModVec modSub(ModVec a, const ModVec& b);
/// c * (m * v), the monomial acting from the left on every coordinate.
ModVec modMulMonoLeft(const ModVec& v, const SuperMonomial& m,
                      const Scalar& c);
/// Common total degree of all terms, offset by the basis twists; -1 for the
/// zero element; throws if the element is not degree homogeneous.
int modDegree(const ModVec& v, const std::vector<int>& twists);

/// Position-over-term key: positions compare first (smaller position is
/// greater), ties by the canonical monomial order.
struct ModKey {
  int pos;
  SuperMonomial mono;
  bool operator==(const ModKey& o) const {
    return pos == o.pos && mono == o.mono;
  }
};
struct ModKeyLess {
  bool operator()(const ModKey& a, const ModKey& b) const {
    if (a.pos != b.pos) return a.pos > b.pos;
    return CanonicalMonoLess{}(a.mono, b.mono);
  }
};

/// Groebner basis of a submodule of R^rank under the POT order.
struct ModuleGB {
  RingPtr ring;
  int rank = 0;
  std::vector<ModVec> elements;  // monic, interreduced
};

/// (position, leading term) of the first nonzero coordinate.
std::pair<int, std::pair<const SuperMonomial, Scalar>> modLeadingTerm(
    const ModVec& v);

/// Buchberger over the POT order: S-pairs only between elements sharing the
/// leading position, plus the odd self-pairs v*g required in the
/// skew-commutative case.
ModuleGB moduleGroebner(RingPtr ring, int rank,
                        const std::vector<ModVec>& gens);

/// Fully reduced normal form; zero iff the element lies in the submodule.
ModVec moduleNormalForm(ModVec v, const ModuleGB& gb);

/// First syzygies of gens (elements of R^rank): generators of
/// {(s_1..s_k) : sum_i s_i * gens[i] = 0} in R^k, via the Groebner basis of
/// the augmented elements gens[i] + e_{rank+i} and extraction of the
/// elements supported in the trailing block.
std::vector<ModVec> syzygies(RingPtr ring, int rank,
                             const std::vector<ModVec>& gens);

/// Annihilator of coker(phi): the intersection over target basis elements
/// e_k of the colon submodule {f : f*e_k lies in the column span of phi}.
Ideal annihilator(const GradedMatrix& phi);

/// Dimension of the degree-d piece of the annihilator, computed by dense
/// linear algebra on degree slices (no Groebner bases). Cross-check for
/// annihilator().
int annihilatorOracleDimension(const GradedMatrix& phi, int d);

/// K-dimension of the degree-j piece of the free module (sum over basis
/// elements of the monomial count in degree j - twist).
long freeModuleDimensionInDegree(const RingPtr& ring,
                                 const GradedFreeModule& mod, int j);

/// Rank of the map phi restricted to the degree-j piece of its source,
/// by dense linear algebra.
long matrixRankInDegree(const GradedMatrix& phi, int j);

/// K-dimension of the degree-j piece of coker(phi).
long cokerDimensionInDegree(const GradedMatrix& phi, int j);

/// phi(v) for v in the source free module: sum_s v[s] * column_s, with the
/// coefficients acting from the left.
ModVec applyMatrix(const GradedMatrix& phi, const ModVec& v);

/// Strips unit (nonzero constant) entries by row and column reduction;
/// the cokernel is unchanged and the result has no unit entries.
GradedMatrix minimalize(GradedMatrix phi);

/// Indices into gens of a minimal homogeneous generating subset of the
/// submodule they generate, by graded Nakayama per degree. twists grade the
/// ambient free module; gens must be degree homogeneous.
std::vector<int> minimalGeneratorIndices(const RingPtr& ring,
                                         const std::vector<int>& twists,
                                         const std::vector<ModVec>& gens);

}  // namespace superfit
