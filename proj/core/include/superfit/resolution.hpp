#pragma once

#include "superfit/module.hpp"
#include "superfit/schur.hpp"

#include <map>
#include <string>

#include <nlohmann/json.hpp>

namespace superfit {

/// Graded Betti numbers: (homological degree i, internal degree j) ->
/// (even rank, odd rank), within a truncation window.
struct BettiTable {
  std::map<std::pair<int, int>, std::pair<long, long>> entries;
  int iMax = 0;
  int jMax = 0;
  bool truncated = false;

  std::pair<long, long> at(int i, int j) const;
  void add(int i, int j, long evenRank, long oddRank);
  /// Aligned text grid: rows = internal degree, columns = homological
  /// degree, cells "even|odd".
  std::string text() const;
  nlohmann::json toJson() const;
};

/// A truncated minimal free resolution: differentials[i] maps F_{i+1} to
/// F_i (differentials[0] is the minimalized presentation).
struct Resolution {
  std::vector<GradedMatrix> differentials;
  BettiTable betti;
};

/// Iterated minimal syzygies of coker(phi), truncated at homological degree
/// iMax and internal degree jMax (a dropped high-degree generator sets the
/// truncated flag).
Resolution resolveComplex(const GradedMatrix& phi, int iMax, int jMax);
BettiTable resolve(const GradedMatrix& phi, int iMax, int jMax);

struct ConjecturePrediction {
  BettiTable table;
  nlohmann::json provenance;  // per-i contribution list
};

/// Predicted Betti table of the generic (d,e,m,n) module: F_0 = U* in
/// degree 0, F_1 = V in degree 1, and for i >= 2 the sum over pairs of
/// partitions (alpha, beta) with at most e parts and |alpha|+|beta| = i-2
/// of dim S_Theta(V) * dim S_Lambda(U) in internal degree
/// i - 1 + |Lambda(d,e)|. For e = 0 the stated shapes degenerate and the
/// classical Buchsbaum-Rim ranks are used instead. Non-partition shapes are
/// excluded and flagged in the provenance.
ConjecturePrediction predictConjecture41(int d, int e, int m, int n,
                                         int iMax);

/// Per-(i,j) comparison of two tables on the overlap of their windows,
/// with per-parity diagnostics.
nlohmann::json compareBetti(const BettiTable& actual,
                            const BettiTable& predicted);

}  // namespace superfit
