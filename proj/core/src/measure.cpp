#include "superplancherel/measure.hpp"

#include <cmath>
#include <map>
#include <string>

#include "superplancherel/error.hpp"

namespace spl {
namespace {

mpz_class ipow(std::int64_t base, std::int64_t exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

// base^exp for a possibly negative exponent.
mpq_class rpow(std::int64_t base, std::int64_t exp) {
  if (exp >= 0) return mpq_class(ipow(base, exp));
  mpq_class out(mpz_class(1), ipow(base, -exp));
  out.canonicalize();
  return out;
}

std::int64_t upper_entries(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

}  // namespace

mpq_class SplWeight::exact(FieldParam q) const {
  const double digits = static_cast<double>(a) * std::log10(static_cast<double>(q.q() - 1)) +
                        static_cast<double>(b < 0 ? -b : b) * std::log10(static_cast<double>(q.q()));
  if (digits > kMaxExactDigits) {
    throw SizeLimitError("exact weight needs about " + std::to_string(static_cast<long long>(digits)) +
                         " digits; use log_value()");
  }
  mpq_class out = rpow(q.q() - 1, a) * rpow(q.q(), b);
  out.canonicalize();
  return out;
}

double SplWeight::log_value(FieldParam q) const {
  return static_cast<double>(a) * std::log(static_cast<double>(q.q() - 1)) +
         static_cast<double>(b) * std::log(static_cast<double>(q.q()));
}

double SplWeight::value(FieldParam q) const { return std::exp(log_value(q)); }

mpz_class unitriangular_order(int n, FieldParam q) { return ipow(q.q(), upper_entries(n)); }

// The exponent pair does not depend on q.
SplWeight spl_weight(const SetPartition& p, [[maybe_unused]] FieldParam q) {
  const ArcStatistics& s = p.statistics();
  return {s.d, 2 * s.dim - 2 * s.d - s.crs - upper_entries(p.size())};
}

mpz_class j_size(const SetPartition& p, FieldParam q) {
  const ArcStatistics& s = p.statistics();
  const std::int64_t exponent = 2 * s.dim - 2 * s.d - s.crs;
  if (exponent < 0) {
    throw std::logic_error("negative exponent 2dim - 2d - crs for " + p.block_string());
  }
  return ipow(q.q() - 1, s.d) * ipow(q.q(), exponent);
}

DistributionTable exact_distribution(int n, FieldParam q) {
  if (n < 1 || n > kMaxExactDistributionSize) {
    throw SizeLimitError("exact distribution supports 1 <= n <= " + std::to_string(kMaxExactDistributionSize) +
                         ", got " + std::to_string(n));
  }
  DistributionTable table;
  table.n = n;
  table.q = q;
  table.rows.reserve(bell_number(n));
  mpz_class numerator = 0;
  for_each_partition(n, [&](const SetPartition& p) {
    mpz_class count = j_size(p, q);
    numerator += count;
    table.rows.push_back({p, spl_weight(p, q), std::move(count)});
  });
  // every weight is count / |U_n|, so the sum is one fraction
  table.total = mpq_class(numerator, unitriangular_order(n, q));
  table.total.canonicalize();
  return table;
}

CountReport verify_counts(int n, FieldParam q) {
  std::map<std::vector<Arc>, mpz_class> tally;
  mpz_class matrices = 0;
  enumerate_matrices(n, q, [&](const UpperUniPattern& m, std::uint64_t multiplicity) {
    const mpz_class mult(std::to_string(multiplicity));
    tally[canonicalize(m).pattern.nonzeros()] += mult;
    matrices += mult;
  });

  CountReport report;
  report.n = n;
  report.q = q.q();
  report.classes = tally.size();
  report.matrices = matrices;
  for_each_partition(n, [&](const SetPartition& p) {
    const mpz_class expected = j_size(p, q);
    const auto it = tally.find(p.arcs());
    const mpz_class observed = it == tally.end() ? mpz_class(0) : it->second;
    if (observed != expected) report.mismatches.push_back({p, expected, observed});
  });
  return report;
}

mpq_class character_value(const SetPartition& p, const SetPartition& s, FieldParam q) {
  if (p.size() != s.size()) {
    throw ValidationError("character_value needs partitions of the same size, got " + std::to_string(p.size()) +
                          " and " + std::to_string(s.size()));
  }
  std::int64_t shared = 0;
  for (const Arc& a : s.arcs()) {
    if (!is_regular(p, a)) return 0;
    if (p.has_arc(a)) ++shared;
  }
  const ArcStatistics& st = p.statistics();
  mpq_class value = rpow(q.q(), st.dim - st.d - nst_weight(p, s)) * rpow(q.q() - 1, st.d);
  value *= rpow(q.q() - 1, -shared);
  if (shared % 2 == 1) value = -value;
  value.canonicalize();
  return value;
}

mpq_class inner_product_self(const SetPartition& p, FieldParam q) {
  const ArcStatistics& s = p.statistics();
  return mpq_class(ipow(q.q() - 1, s.d) * ipow(q.q(), s.crs));
}

}  // namespace spl
