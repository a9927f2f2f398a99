#include "superfit/schur.hpp"

#include <numeric>

#include "superfit/ring.hpp"

namespace superfit {

bool isPartition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partitionWeight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0], 0);
  for (int part : p)
    for (int c = 0; c < part; ++c) ++q[c];
  return q;
}

Partition lambdaDE(int d, int e) {
  Partition p(e, d + 1);
  if (d > 0) p.push_back(d);
  return p;
}

namespace {

// DFS over cells in reading order. Entries 0..m-1 are unprimed, m..m+n-1
// primed. Row rule: weakly increasing, equal neighbors must be unprimed.
// Column rule: weakly increasing, equal neighbors must be primed.
void countTableaux(const Partition& shape, int m, int n, int row, int col,
                   std::vector<std::vector<int>>& fill, long& evenPrimed,
                   long& oddPrimed, int primedSoFar) {
  if (row == (int)shape.size()) {
    (primedSoFar % 2 == 0 ? evenPrimed : oddPrimed) += 1;
    return;
  }
  if (col == shape[row]) {
    countTableaux(shape, m, n, row + 1, 0, fill, evenPrimed, oddPrimed,
                  primedSoFar);
    return;
  }
  int lo = 0;
  if (col > 0) lo = fill[row][col - 1];
  if (row > 0 && col < shape[row - 1] && fill[row - 1][col] > lo)
    lo = fill[row - 1][col];
  for (int v = lo; v < m + n; ++v) {
    if (col > 0 && v == fill[row][col - 1] && v >= m) continue;
    if (row > 0 && col < shape[row - 1] && v == fill[row - 1][col] && v < m)
      continue;
    fill[row][col] = v;
    countTableaux(shape, m, n, row, col + 1, fill, evenPrimed, oddPrimed,
                  primedSoFar + (v >= m ? 1 : 0));
  }
}

std::pair<long, long> countAll(const Partition& lambda, int m, int n) {
  if (lambda.empty()) return {1, 0};
  std::vector<std::vector<int>> fill;
  for (int part : lambda) fill.emplace_back(part, 0);
  long evenPrimed = 0, oddPrimed = 0;
  countTableaux(lambda, m, n, 0, 0, fill, evenPrimed, oddPrimed, 0);
  return {evenPrimed, oddPrimed};
}

}  // namespace

long hookSchurDim(const Partition& lambda, int m, int n) {
  auto [ev, od] = countAll(lambda, m, n);
  return ev + od;
}

std::pair<long, long> hookSchurDimByParity(const Partition& lambda, int m,
                                           int n) {
  return countAll(lambda, m, n);
}

bool cauchyCheck(int t, int m, int n, int d, int e) {
  std::vector<std::string> even(m * d + n * e), odd(m * e + n * d);
  for (size_t i = 0; i < even.size(); ++i) even[i] = "E" + std::to_string(i);
  for (size_t i = 0; i < odd.size(); ++i) odd[i] = "O" + std::to_string(i);
  RingPtr ring = RingSpec::make(std::move(even), std::move(odd), 0);
  long lhs = (long)monomialsOfDegree(*ring, t).size();
  long rhs = 0;
  for (const auto& lambda : partitionsOf(t))
    rhs += hookSchurDim(lambda, m, n) * hookSchurDim(lambda, d, e);
  return lhs == rhs;
}

namespace {

void enumeratePartitions(int remaining, int maxPart, int maxParts,
                         Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (maxParts == 0) return;
  for (int part = std::min(remaining, maxPart); part >= 1; --part) {
    cur.push_back(part);
    enumeratePartitions(remaining - part, part, maxParts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitionsOf(int t, int maxParts, int maxPart) {
  std::vector<Partition> out;
  if (t < 0) return out;
  Partition cur;
  enumeratePartitions(t, maxPart < 0 ? t : maxPart, maxParts < 0 ? t : maxParts,
                      cur, out);
  return out;
}

}  // namespace superfit
