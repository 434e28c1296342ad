#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superplancherel/measure.hpp"
#include "superplancherel/sct.hpp"
#include "superplancherel/set_partition.hpp"

namespace spl::io {

/// {"n": 9, "blocks": [[1,5,7],[2],[3,4,9],[6,8]]}
nlohmann::json partition_to_json(const SetPartition& p);
SetPartition partition_from_json(const nlohmann::json& j);

/// Stats row: n,q,seed,d,dim,crs,nst
inline constexpr const char* kSampleCsvHeader = "n,q,seed,d,dim,crs,nst";
std::string sample_csv_row(const SetPartition& p, std::int64_t q, std::uint64_t seed);

/// Distribution CSV: partition,d,dim,crs,nst,a,b,weight_exact,weight_float
void write_distribution_csv(std::ostream& out, const DistributionTable& table);

/// Heatmap CSV: header "# n q seed g", then g rows of g comma-separated
/// masses, first row at the top of the unit square.
void write_heatmap_csv(std::ostream& out, int n, std::int64_t q, std::uint64_t seed, int g,
                       const std::vector<double>& bins);

/// {"order", "mul", "identity", "superclasses", "characters"}, character
/// values as [re, im] pairs.
nlohmann::json theory_to_json(const SuperTheory& t);
SuperTheory theory_from_json(const nlohmann::json& j);

/// A subgroup theory document plus "injection"; the ambient theory is given
/// separately.
SubgroupEmbedding embedding_from_json(const nlohmann::json& j, const SuperTheory& group);
nlohmann::json embedding_to_json(const SubgroupEmbedding& e);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace spl::io
