#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "superplancherel/matrix_sampler.hpp"
#include "superplancherel/set_partition.hpp"

namespace spl {

/// Largest number of decimal digits an exact weight may need before
/// SplWeight::exact() refuses and callers must use log_value().
inline constexpr double kMaxExactDigits = 4000.0;

/// The weight (q - 1)^a * q^b. For the superplancherel weight of a partition
/// of [n]: a = d, b = 2 dim - 2 d - crs - n(n - 1)/2.
struct SplWeight {
  std::int64_t a = 0;
  std::int64_t b = 0;

  /// Exact rational value. Throws SizeLimitError above kMaxExactDigits.
  mpq_class exact(FieldParam q) const;
  double log_value(FieldParam q) const;
  double value(FieldParam q) const;

  friend bool operator==(const SplWeight&, const SplWeight&) = default;
};

/// |U_n(F_q)| = q^{n(n-1)/2}.
mpz_class unitriangular_order(int n, FieldParam q);

SplWeight spl_weight(const SetPartition& p, FieldParam q);

/// Number of matrices of U_n(F_q) whose swept form has nonzeros exactly at
/// the arcs of p: (q - 1)^d q^{2 dim - 2 d - crs}.
mpz_class j_size(const SetPartition& p, FieldParam q);

struct DistributionRow {
  SetPartition partition;
  SplWeight weight;
  mpz_class count;  // j_size; weight = count / |U_n|
};

struct DistributionTable {
  int n = 0;
  FieldParam q{2};
  std::vector<DistributionRow> rows;  // restricted-growth order
  mpq_class total;
};

inline constexpr int kMaxExactDistributionSize = 12;

/// Every partition of [n] with its weight; total is the exact sum.
DistributionTable exact_distribution(int n, FieldParam q);

struct CountMismatch {
  SetPartition partition;
  mpz_class expected;
  mpz_class observed;
};

struct CountReport {
  int n = 0;
  std::int64_t q = 0;
  std::size_t classes = 0;     // partitions hit by the enumeration
  mpz_class matrices;          // total multiplicity enumerated
  std::vector<CountMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Tallies every matrix of U_n(F_q) by its swept partition and compares each
/// tally with j_size().
CountReport verify_counts(int n, FieldParam q);

/// Supercharacter value chi^p on the superclass of s:
/// q^{dim - d - nst_p(s)} (q - 1)^d (-1/(q - 1))^{|D(p) & D(s)|} when every
/// arc of s is p-regular, and 0 otherwise.
mpq_class character_value(const SetPartition& p, const SetPartition& s, FieldParam q);

/// <chi^p, chi^p> = (q - 1)^d q^crs.
mpq_class inner_product_self(const SetPartition& p, FieldParam q);

}  // namespace spl
