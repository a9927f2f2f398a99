#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "superfit/schur.hpp"

using namespace superfit;

namespace {

// Independent classical SSYT counter: entries 1..m, rows weakly increasing,
// columns strictly increasing.
long countSSYT(const Partition& lambda, int m) {
  if (lambda.empty()) return 1;
  int rows = (int)lambda.size();
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lambda[r], 0);
  long count = 0;
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == lambda[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0 && c < lambda[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      t[r][c] = v;
      fill(nr, nc);
    }
  };
  fill(0, 0);
  return count;
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(isPartition({3, 3, 1}));
  CHECK(isPartition({}));
  CHECK(!isPartition({1, 2}));
  CHECK(!isPartition({2, 0}));
  CHECK(partitionWeight({3, 3, 1}) == 7);
  CHECK(conjugate(Partition{3, 3, 3, 2}) == Partition{4, 4, 3});
  CHECK(conjugate(conjugate(Partition{5, 2, 1})) == Partition{5, 2, 1});
  CHECK(conjugate(Partition{}).empty());
}

TEST_CASE("the rectangle shape") {
  CHECK(lambdaDE(2, 3) == Partition{3, 3, 3, 2});
  CHECK(lambdaDE(0, 2) == Partition{1, 1});
  CHECK(lambdaDE(3, 0) == Partition{3});
  CHECK(lambdaDE(1, 1) == Partition{2, 1});
  CHECK(partitionWeight(lambdaDE(2, 3)) == (2 + 1) * (3 + 1) - 1);
}

TEST_CASE("hook schur dimensions, small cases") {
  // one box: the whole (m|n) space
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(hookSchurDim({1}, m, n) == m + n);
  // (1|1): two tableaux for both the row and the column of size 2
  CHECK(hookSchurDim({2}, 1, 1) == 2);
  CHECK(hookSchurDim({1, 1}, 1, 1) == 2);
  // vanishing: lambda_{m+1} > n
  CHECK(hookSchurDim({1, 1}, 1, 0) == 0);
  CHECK(hookSchurDim({2, 2}, 1, 1) == 0);
  CHECK(hookSchurDim({2, 1}, 1, 1) == 2);
  CHECK(hookSchurDim({}, 2, 1) == 1);
}

TEST_CASE("hook schur dimension matches classical SSYT count when n = 0") {
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t <= 4; ++t)
      for (const auto& lambda : partitionsOf(t))
        CHECK(hookSchurDim(lambda, m, 0) == countSSYT(lambda, m));
}

TEST_CASE("hook duality") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int t = 0; t <= 5; ++t)
        for (const auto& lambda : partitionsOf(t))
          CHECK(hookSchurDim(lambda, m, n) ==
                hookSchurDim(conjugate(lambda), n, m));
}

TEST_CASE("parity split adds up") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int t = 0; t <= 4; ++t)
        for (const auto& lambda : partitionsOf(t)) {
          auto [ev, od] = hookSchurDimByParity(lambda, m, n);
          CHECK(ev + od == hookSchurDim(lambda, m, n));
          if (n == 0) CHECK(od == 0);
        }
}

TEST_CASE("super Cauchy identity") {
  for (int t = 0; t <= 5; ++t)
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int d = 0; d <= 2; ++d)
          for (int e = 0; e <= 2; ++e)
            CHECK(cauchyCheck(t, m, n, d, e));
}

TEST_CASE("partition enumeration") {
  CHECK(partitionsOf(0) == std::vector<Partition>{{}});
  CHECK(partitionsOf(3) ==
        std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitionsOf(4, 2) ==
        std::vector<Partition>{{4}, {3, 1}, {2, 2}});
  CHECK(partitionsOf(4, -1, 2) ==
        std::vector<Partition>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitionsOf(5).size() == 7);
  CHECK(partitionsOf(8).size() == 22);
}
