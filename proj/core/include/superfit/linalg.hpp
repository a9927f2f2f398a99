#pragma once

#include <map>
#include <vector>

#include "superfit/scalar.hpp"

namespace superfit {

/// Incremental row-reduced span of sparse vectors keyed by an ordered key
/// type (monomials, module monomials). Pivot = greatest key of a row.
template <typename Key, typename Less = std::less<Key>>
class SpanBasis {
public:
  using Vec = std::map<Key, Scalar, Less>;

  /// Residual of v after eliminating all current pivots.
  Vec reduce(Vec v) const {
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (auto vi = v.rbegin(); vi != v.rend(); ++vi) {
        auto ri = rows_.find(vi->first);
        if (ri != rows_.end()) {
          axpy(v, -vi->second, ri->second);
          changed = true;
          break;
        }
      }
    }
    return v;
  }

  /// Adds v to the span; returns true if the dimension grew.
  bool add(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Scalar lead = v.rbegin()->second;
    for (auto& [k, c] : v) c /= lead;
    Key pivot = v.rbegin()->first;
    // back-substitute into existing rows
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it != row.end()) axpy(row, -it->second, v);
    }
    rows_.emplace(std::move(pivot), std::move(v));
    return true;
  }

  bool contains(Vec v) const { return reduce(std::move(v)).empty(); }
  int dimension() const { return (int)rows_.size(); }
  const std::map<Key, Vec, Less>& rows() const { return rows_; }

private:
  static void axpy(Vec& v, const Scalar& c, const Vec& w) {
    for (const auto& [k, wc] : w) {
      auto [it, inserted] = v.emplace(k, wc * c);
      if (!inserted) {
        it->second += wc * c;
        if (it->second.isZero()) v.erase(it);
      }
    }
  }

  std::map<Key, Vec, Less> rows_;
};

/// Dense exact matrix, row-major. Used for kernels of degree-truncated maps.
class DenseMatrix {
public:
  DenseMatrix(int rows, int cols, long characteristic);

  Scalar& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int rank() const;
  /// Basis of the right kernel {x : Mx = 0}.
  std::vector<std::vector<Scalar>> kernelBasis() const;

private:
  int rows_, cols_;
  long p_;
  std::vector<Scalar> a_;
};

}  // namespace superfit
