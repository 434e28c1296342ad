#pragma once

#include <vector>

#include <gmpxx.h>

#include "superplancherel/set_partition.hpp"

namespace spl {

/// The measure of a partition on the triangle {0 <= x <= y <= 1}: for every
/// arc (i, j), mass 1/n spread uniformly over the square
/// [(i-1)/n, i/n] x [(j-1)/n, j/n]. Each row and column of the grid carries
/// at most one cell.
class GridMeasure {
 public:
  static GridMeasure embed(const SetPartition& p);

  int size() const noexcept { return n_; }
  const std::vector<Arc>& cells() const noexcept { return cells_; }

  /// Arc statistics of the embedded partition.
  const ArcStatistics& statistics() const noexcept { return stats_; }

  /// Total mass d/n.
  mpq_class mass() const;

 private:
  GridMeasure(int n, std::vector<Arc> cells, ArcStatistics stats)
      : n_(n), cells_(std::move(cells)), stats_(stats) {}

  int n_;
  std::vector<Arc> cells_;
  ArcStatistics stats_;
};

inline GridMeasure embed(const SetPartition& p) { return GridMeasure::embed(p); }

/// Integral of (y - x); equals dim / n^2.
mpq_class i1(const GridMeasure& m);

/// Integral of 1[x1 < x2 < y1 < y2] against m x m; equals
/// (crs + d/4 + adjacent/2) / n^2.
mpq_class i2(const GridMeasure& m);

/// 1/2 - 2 i1 + i2. Vanishes only at the limit shape, which no grid measure is.
mpq_class entropy(const GridMeasure& m);

struct Functionals {
  mpq_class i1;
  mpq_class i2;
  mpq_class entropy;
};

Functionals functionals(const GridMeasure& m);

/// m([0, a] x [1 - b, 1]), exact.
mpq_class cdf(const GridMeasure& m, const mpq_class& a, const mpq_class& b);
double cdf(const GridMeasure& m, double a, double b);

/// Corner CDF of the limit shape (uniform mass 1/2 on {(x, 1 - x) : x <= 1/2}):
/// min(a, b, 1/2).
mpq_class limit_shape_cdf(const mpq_class& a, const mpq_class& b);

inline constexpr int kDefaultDiscrepancyGrid = 100;

/// max over a, b in {1/grid, ..., 1} of |F_m(a, b) - min(a, b, 1/2)|, plus
/// |mass(m) - 1/2|. Evaluated in exact integer arithmetic.
double discrepancy(const GridMeasure& m, int grid = kDefaultDiscrepancyGrid);

/// Masses of a g x g binning of the unit square, row-major, row 0 at the top
/// (y near 1), column 0 at the left.
std::vector<double> heatmap(const GridMeasure& m, int g);

}  // namespace spl
