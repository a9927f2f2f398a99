#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>

#include "superfit/fitting.hpp"
#include "superfit/resolution.hpp"

using namespace superfit;

namespace {

// d_i o d_{i+1} = 0 for every consecutive pair of differentials.
bool composesToZero(const Resolution& r) {
  for (size_t i = 0; i + 1 < r.differentials.size(); ++i) {
    const GradedMatrix& di = r.differentials[i];
    const GradedMatrix& dnext = r.differentials[i + 1];
    for (int s = 0; s < dnext.source.rank(); ++s)
      if (!modIsZero(applyMatrix(di, dnext.column(s)))) return false;
  }
  return true;
}

bool allEntriesNonUnit(const Resolution& r) {
  for (const auto& d : r.differentials)
    for (const auto& row : d.entries)
      for (const auto& f : row)
        if (!f.isZero() && f.degree() == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("Buchsbaum-Rim for a generic 2x3 matrix") {
  GenericSetup s = genericSetup(2, 0, 3, 0, 0);
  Resolution r = resolveComplex(s.Phi, 4, 10);
  CHECK(r.betti.at(0, 0) == std::pair<long, long>{2, 0});
  CHECK(r.betti.at(1, 1) == std::pair<long, long>{3, 0});
  CHECK(r.betti.at(2, 3) == std::pair<long, long>{1, 0});
  // finite: nothing beyond homological degree 2
  for (const auto& [key, cell] : r.betti.entries) CHECK(key.first <= 2);
  CHECK(!r.betti.truncated);
  CHECK(composesToZero(r));
  CHECK(allEntriesNonUnit(r));
}

TEST_CASE("identity presentation minimalizes away") {
  auto ring = RingSpec::make({"x"}, {"a"}, 0);
  GradedFreeModule f{1, 1, {0, 0}};
  GradedMatrix id = GradedMatrix::zero(ring, f, f);
  id.at(0, 0) = SuperPoly::constant(ring, 1);
  id.at(1, 1) = SuperPoly::constant(ring, 1);
  Resolution r = resolveComplex(id, 3, 5);
  CHECK(r.betti.entries.empty());
}

TEST_CASE("square generic presentation is already a resolution") {
  GenericSetup s = genericSetup(1, 1, 1, 1, 0);
  Resolution r = resolveComplex(s.Phi, 3, 8);
  CHECK(r.betti.at(0, 0) == std::pair<long, long>{1, 1});
  CHECK(r.betti.at(1, 1) == std::pair<long, long>{1, 1});
  CHECK(r.betti.entries.size() == 2);  // injective map: no higher syzygies
  CHECK(r.differentials.size() == 1);
  CHECK(!r.betti.truncated);
}

TEST_CASE("exactness and Euler characteristic within the window") {
  GenericSetup s = genericSetup(0, 2, 2, 0, 0);
  const int iMax = 5, jMax = 5;
  Resolution r = resolveComplex(s.Phi, iMax, jMax);
  CHECK(composesToZero(r));
  CHECK(allEntriesNonUnit(r));
  // homology vanishes at F_i for 1 <= i < number of computed steps
  for (size_t i = 1; i < r.differentials.size(); ++i) {
    const GradedMatrix& di = r.differentials[i - 1];   // F_i -> F_{i-1}
    const GradedMatrix& dn = r.differentials[i];       // F_{i+1} -> F_i
    for (int j = 0; j <= jMax; ++j) {
      long kernel = freeModuleDimensionInDegree(di.ring, di.source, j) -
                    matrixRankInDegree(di, j);
      CHECK(kernel == matrixRankInDegree(dn, j));
    }
  }
  // alternating sum of the free ranks per degree matches the cokernel
  for (int j = 0; j <= jMax; ++j) {
    long chi = freeModuleDimensionInDegree(
        s.ring, r.differentials[0].target, j);
    int sign = -1;
    for (const auto& d : r.differentials) {
      chi += sign * freeModuleDimensionInDegree(s.ring, d.source, j);
      sign = -sign;
    }
    CHECK(chi == cokerDimensionInDegree(s.Phi, j));
  }
}

TEST_CASE("mixed instance agrees with the predicted table") {
  GenericSetup s = genericSetup(1, 1, 2, 1, 0);
  Resolution r = resolveComplex(s.Phi, 3, 7);
  CHECK(composesToZero(r));
  CHECK(r.betti.at(2, 4) == std::pair<long, long>{4, 4});
  CHECK(r.betti.at(3, 5) == std::pair<long, long>{12, 12});
  auto pred = predictConjecture41(1, 1, 2, 1, 3);
  auto report = compareBetti(r.betti, pred.table);
  CHECK(report["totals_match"] == true);
  CHECK(report["parities_match"] == true);
  CHECK(report["diffs"].empty());
}

TEST_CASE("prediction structure") {
  auto pred = predictConjecture41(1, 1, 2, 1, 3);
  CHECK(pred.table.at(0, 0) == std::pair<long, long>{1, 1});
  CHECK(pred.table.at(1, 1) == std::pair<long, long>{2, 1});
  // i = 2 comes from the single empty pair (alpha, beta) = (0, 0)
  CHECK(pred.table.at(2, 4) == std::pair<long, long>{4, 4});
  CHECK(!pred.provenance.empty());
  bool sawEmptyPair = false;
  for (const auto& rec : pred.provenance)
    if (rec["i"] == 2 && rec["alpha"].empty() && rec["beta"].empty())
      sawEmptyPair = true;
  CHECK(sawEmptyPair);

  // e = 0 reduces to the Buchsbaum-Rim ranks
  auto br = predictConjecture41(2, 0, 3, 0, 4);
  CHECK(br.table.at(0, 0) == std::pair<long, long>{2, 0});
  CHECK(br.table.at(1, 1) == std::pair<long, long>{3, 0});
  CHECK(br.table.at(2, 3) == std::pair<long, long>{1, 0});
  CHECK(br.table.at(3, 4) == std::pair<long, long>{0, 0});
}

TEST_CASE("table comparison flags mismatches") {
  BettiTable a, b;
  a.iMax = b.iMax = 2;
  a.jMax = b.jMax = 3;
  a.add(0, 0, 2, 1);
  b.add(0, 0, 2, 1);
  a.add(2, 3, 1, 0);
  b.add(2, 3, 0, 1);  // same total, different parity split
  auto same = compareBetti(a, a);
  CHECK(same["totals_match"] == true);
  CHECK(same["parities_match"] == true);
  CHECK(same["diffs"].empty());
  auto diff = compareBetti(a, b);
  CHECK(diff["totals_match"] == true);
  CHECK(diff["parities_match"] == false);
  CHECK(diff["diffs"].size() == 1);
  b.add(1, 1, 5, 0);
  auto worse = compareBetti(a, b);
  CHECK(worse["totals_match"] == false);
}

TEST_CASE("table rendering and serialization") {
  BettiTable t;
  t.iMax = 1;
  t.jMax = 2;
  t.add(0, 0, 2, 1);
  t.add(1, 1, 0, 3);
  CHECK(t.at(0, 0) == std::pair<long, long>{2, 1});
  CHECK(t.at(1, 2) == std::pair<long, long>{0, 0});
  std::string grid = t.text();
  CHECK(grid.find("2|1") != std::string::npos);
  CHECK(grid.find("0|3") != std::string::npos);
  auto j = t.toJson();
  CHECK(j["entries"].size() == 2);
  CHECK(j["truncated"] == false);
}
