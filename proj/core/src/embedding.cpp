#include "superplancherel/embedding.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "superplancherel/error.hpp"

namespace spl {
namespace {

mpq_class clamp01(const mpq_class& x) {
  if (x < 0) return 0;
  if (x > 1) return 1;
  return x;
}

std::int64_t overlap(std::int64_t lo1, std::int64_t hi1, std::int64_t lo2, std::int64_t hi2) {
  return std::max<std::int64_t>(0, std::min(hi1, hi2) - std::max(lo1, lo2));
}

}  // namespace

GridMeasure GridMeasure::embed(const SetPartition& p) {
  return GridMeasure(p.size(), p.arcs(), p.statistics());
}

mpq_class GridMeasure::mass() const {
  mpq_class out(static_cast<long>(cells_.size()), static_cast<unsigned long>(n_));
  out.canonicalize();
  return out;
}

mpq_class i1(const GridMeasure& m) {
  // each cell has mass 1/n and centroid ((i - 1/2)/n, (j - 1/2)/n)
  mpz_class gaps = 0;
  for (const Arc& c : m.cells()) gaps += c.right - c.left;
  const auto n = static_cast<long>(m.size());
  mpq_class out(gaps, mpz_class(n) * n);
  out.canonicalize();
  return out;
}

mpq_class i2(const GridMeasure& m) {
  const ArcStatistics& s = m.statistics();
  // n^2 I2 = crs + d/4 + adjacent/2, held as a multiple of 1/4
  const mpz_class quarters = mpz_class(4 * s.crs) + s.d + mpz_class(2 * s.adjacent);
  const auto n = static_cast<long>(m.size());
  mpq_class out(quarters, mpz_class(4) * n * n);
  out.canonicalize();
  return out;
}

mpq_class entropy(const GridMeasure& m) {
  mpq_class out = mpq_class(1, 2) - 2 * i1(m) + i2(m);
  out.canonicalize();
  return out;
}

Functionals functionals(const GridMeasure& m) {
  Functionals f{i1(m), i2(m), 0};
  f.entropy = mpq_class(1, 2) - 2 * f.i1 + f.i2;
  f.entropy.canonicalize();
  return f;
}

mpq_class cdf(const GridMeasure& m, const mpq_class& a, const mpq_class& b) {
  const mpq_class n(m.size());
  mpq_class total = 0;
  for (const Arc& c : m.cells()) {
    const mpq_class fx = clamp01(a * n - (c.left - 1));
    if (fx == 0) continue;
    const mpq_class fy = clamp01(c.right - n * (1 - b));
    total += fx * fy;
  }
  total /= n;
  total.canonicalize();
  return total;
}

double cdf(const GridMeasure& m, double a, double b) {
  return cdf(m, mpq_class(a), mpq_class(b)).get_d();
}

mpq_class limit_shape_cdf(const mpq_class& a, const mpq_class& b) {
  const mpq_class half(1, 2);
  mpq_class out = std::min({a, b, half});
  return out < 0 ? mpq_class(0) : out;
}

double discrepancy(const GridMeasure& m, int grid) {
  if (grid < 2) throw ValidationError("discrepancy grid must be at least 2, got " + std::to_string(grid));
  const std::int64_t n = m.size();
  const std::int64_t g = grid;
  const auto& cells = m.cells();
  // With a = s/g, b = t/g, the covered fractions of cell (i, j) are
  // clamp(s n - (i-1) g, 0, g)/g and clamp(j g - (g - t) n, 0, g)/g, so
  // F(a, b) = S / (n g^2) for the integer S accumulated below.
  std::vector<std::int64_t> fx(cells.size());
  std::int64_t worst = 0;  // in units of 1 / (2 n g^2)
  for (std::int64_t s = 1; s <= g; ++s) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      fx[c] = std::clamp<std::int64_t>(s * n - (cells[c].left - 1) * g, 0, g);
    }
    for (std::int64_t t = 1; t <= g; ++t) {
      std::int64_t sum = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (fx[c] == 0) continue;
        sum += fx[c] * std::clamp<std::int64_t>(cells[c].right * g - (g - t) * n, 0, g);
      }
      const std::int64_t target = n * g * std::min({2 * s, 2 * t, g});
      worst = std::max<std::int64_t>(worst, std::llabs(2 * sum - target));
    }
  }
  const double corner = static_cast<double>(worst) / static_cast<double>(2 * n * g * g);
  const double mass_gap = std::abs(static_cast<double>(2 * static_cast<std::int64_t>(cells.size()) - n)) /
                          static_cast<double>(2 * n);
  return corner + mass_gap;
}

std::vector<double> heatmap(const GridMeasure& m, int g) {
  if (g < 1) throw ValidationError("heatmap grid must be at least 1, got " + std::to_string(g));
  const std::int64_t n = m.size();
  const std::int64_t gg = g;
  std::vector<double> bins(static_cast<std::size_t>(gg * gg), 0.0);
  // Coordinates scaled by n g: cell x-range [(i-1) g, i g], bin column c
  // spans [c n, (c+1) n]; bin row r spans y in [(g-r-1) n, (g-r) n].
  const double scale = 1.0 / static_cast<double>(n * gg * gg);
  for (const Arc& cell : m.cells()) {
    const std::int64_t x_lo = (cell.left - 1) * gg;
    const std::int64_t x_hi = cell.left * gg;
    const std::int64_t y_lo = (cell.right - 1) * gg;
    const std::int64_t y_hi = cell.right * gg;
    for (std::int64_t c = x_lo / n; c < gg && c * n < x_hi; ++c) {
      const std::int64_t lx = overlap(x_lo, x_hi, c * n, (c + 1) * n);
      if (lx == 0) continue;
      for (std::int64_t r = 0; r < gg; ++r) {
        const std::int64_t ly = overlap(y_lo, y_hi, (gg - r - 1) * n, (gg - r) * n);
        if (ly == 0) continue;
        bins[static_cast<std::size_t>(r * gg + c)] += static_cast<double>(lx * ly) * scale;
      }
    }
  }
  return bins;
}

}  // namespace spl
