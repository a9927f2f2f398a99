#pragma once

#include "superfit/module.hpp"
#include "superfit/schur.hpp"

#include <nlohmann/json_fwd.hpp>

namespace superfit {

/// Basis vector of V or U: (parity, 0-based index within its parity block).
struct BasisVec {
  bool odd = false;
  int idx = 0;
  bool operator==(const BasisVec& o) const {
    return odd == o.odd && idx == o.idx;
  }
};

/// The generic ring S(V tensor U) for dim V = (m|n), dim U = (d|e), with
/// the tautological map Phi = (X A; B Y). Variables: x{i}_{k} (even),
/// y{j}_{l} (even), a{i}_{l} (odd), b{j}_{k} (odd), 1-based subscripts,
/// i <= d, j <= e, k <= m, l <= n. Row index is the U side, column index
/// the V side: x{i}_{k} is the coordinate v_k tensor u_i.
struct GenericSetup {
  int d = 0, e = 0, m = 0, n = 0;
  long characteristic = 0;
  RingPtr ring;
  GradedMatrix Phi;  // target U* = (d|e) twists 0, source V = (m|n) twists 1

  // even variable indices (0-based block offsets)
  int xIdx(int i, int k) const { return i * m + k; }
  int yIdx(int j, int l) const { return d * m + j * n + l; }
  // odd variable indices
  int aIdx(int i, int l) const { return i * n + l; }
  int bIdx(int j, int k) const { return d * n + j * m + k; }

  /// (V factor, U factor) of a variable.
  std::pair<BasisVec, BasisVec> factors(bool varOdd, int varIdx) const;
  /// Variable (isOdd, index) with the given factors.
  std::pair<bool, int> variableFor(BasisVec v, BasisVec u) const;
  SuperPoly variablePoly(BasisVec v, BasisVec u) const;
};

GenericSetup genericSetup(int d, int e, int m, int n, long characteristic);

/// rho_t applied to (v_1 ^ ... ^ v_t) tensor (u_1 ^ ... ^ u_t): the signed
/// sum over permutations sigma of the products (v_r tensor u_{sigma(r)}),
/// with the sign of sigma corrected by the Koszul rule.
SuperPoly rho(const GenericSetup& s, const std::vector<BasisVec>& vrow,
              const std::vector<BasisVec>& urow);

/// Rows of basis vectors; row i has length lambda_i.
using Tableau = std::vector<std::vector<BasisVec>>;

/// Product over rows i of rho(S_i tensor T_i).
SuperPoly rhoTableau(const GenericSetup& s, const Tableau& S,
                     const Tableau& T);

/// Column-stabilizer symmetrizations: pi sums rho(sigma S tensor T) over
/// sigma in P(lambda) with the Koszul sign of sigma as a permutation of the
/// row-major word [S-row 1][T-row 1][S-row 2]...: inverted pairs of odd
/// moving entries plus, for each odd entry changing rows, the odd entries
/// of the fixed tableau in the row blocks it crosses. piPrime symmetrizes
/// T instead.
SuperPoly pi(const GenericSetup& s, const Tableau& S, const Tableau& T);
SuperPoly piPrime(const GenericSetup& s, const Tableau& S, const Tableau& T);

/// Highest weight vector c_lambda: the column symmetrization pi of the
/// prefix-row tableau pair, in primitive integer form; the zero polynomial
/// when some row is inadmissible for the dimensions.
SuperPoly highestWeightVector(const GenericSetup& s, const Partition& lambda);

/// Elementary Lie algebra generator e_{p,q} on the V side (acting from the
/// left) or the U side (from the right, through the supertranspose):
/// replaces basis vector q by basis vector p.
struct LieGenerator {
  bool onU = false;
  BasisVec p, q;
  int parity() const { return (p.odd ? 1 : 0) ^ (q.odd ? 1 : 0); }
};

std::vector<LieGenerator> allLieGenerators(const GenericSetup& s);

/// Superderivation action of g on f, by the signed Leibniz rule on the
/// canonical factorization of each monomial.
SuperPoly lieApply(const GenericSetup& s, const LieGenerator& g,
                   const SuperPoly& f);

/// K-basis of the g-representation generated by c_lambda (the Lie closure
/// of its span); over positive characteristic the integer orbit is built
/// over Q and reduced mod p together with the pi(S,T) family.
std::vector<SuperPoly> schurRepresentationSpan(const GenericSetup& s,
                                               const Partition& lambda);

/// I_lambda: the ideal generated by the representation; zero ideal with an
/// empty generator list when lambda is inadmissible.
Ideal idealILambda(const GenericSetup& s, const Partition& lambda);

/// Cross-check generator family: pi(S,T) over all row-canonical tableaux.
Ideal idealILambdaViaPi(const GenericSetup& s, const Partition& lambda);

/// All row-canonical rows of length t over an (mm|nn) basis: even entries
/// strictly increasing first, then odd entries weakly increasing.
std::vector<std::vector<BasisVec>> canonicalRows(int t, int mm, int nn);

/// The one g-ideal generator Z of Corollary 2; throws std::domain_error
/// "annihilator is zero" outside cases a (m > d or n > e) and
/// b (m = d, n = e).
SuperPoly corollary2Z(const GenericSetup& s);

/// Ideal generated by the image of I under the specialization sending each
/// generic variable to the matching entry of phi (same block dimensions and
/// characteristic required).
Ideal specializeIdeal(const GenericSetup& s, const Ideal& I,
                      const GradedMatrix& phi);

/// dim F_{<=lambda} - dim F_{<lambda} for the rho-span filtration on the
/// degree-|lambda| piece; must equal the product of hook Schur dimensions
/// of the conjugate shape.
long filtrationDim(const GenericSetup& s, const Partition& lambda);

/// Reports, as JSON {claim, instance, status, witnesses}.
nlohmann::json verifyThm1a(const GenericSetup& s);
nlohmann::json verifyThm1b(const GenericSetup& s);
nlohmann::json instanceJson(const GenericSetup& s);

}  // namespace superfit
