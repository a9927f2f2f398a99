#pragma once

#include <utility>
#include <vector>

namespace superfit {

/// Weakly decreasing list of positive parts; empty = empty partition.
using Partition = std::vector<int>;

bool isPartition(const Partition& p);
int partitionWeight(const Partition& p);
Partition conjugate(const Partition& p);

/// ((d+1)^e, d): the (d+1) x (e+1) rectangle minus its lower right corner,
/// read as a partition (a trailing zero part is dropped when d = 0).
Partition lambdaDE(int d, int e);

/// Number of (m|n) hook semistandard tableaux of shape lambda: entries from
/// 1 < ... < m < 1' < ... < n'; unprimed entries weakly increase along rows
/// and strictly down columns, primed entries strictly along rows and weakly
/// down columns. Zero iff lambda_{m+1} > n.
long hookSchurDim(const Partition& lambda, int m, int n);

/// (count with an even number of primed entries, count with an odd number);
/// the two add up to hookSchurDim.
std::pair<long, long> hookSchurDimByParity(const Partition& lambda, int m,
                                           int n);

/// Degree-t super Cauchy identity: the monomial count of the degree-t piece
/// of the ring with m*d+n*e even and m*e+n*d odd variables must equal
/// sum over |lambda| = t of hookSchurDim(lambda,m,n)*hookSchurDim(lambda,d,e).
bool cauchyCheck(int t, int m, int n, int d, int e);

/// All partitions of t, lexicographically descending; optional caps on the
/// number of parts and the largest part (-1 = unbounded).
std::vector<Partition> partitionsOf(int t, int maxParts = -1,
                                    int maxPart = -1);

}  // namespace superfit
