#include "superplancherel/io.hpp"

#include <charconv>
#include <sstream>

#include "superplancherel/error.hpp"

namespace spl::io {

using nlohmann::json;

json partition_to_json(const SetPartition& p) {
  return json{{"n", p.size()}, {"blocks", p.blocks()}};
}

SetPartition partition_from_json(const json& j) {
  try {
    return SetPartition::from_blocks(j.at("n").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed partition JSON: ") + e.what());
  }
}

std::string sample_csv_row(const SetPartition& p, std::int64_t q, std::uint64_t seed) {
  const ArcStatistics& s = p.statistics();
  std::ostringstream row;
  row << p.size() << ',' << q << ',' << seed << ',' << s.d << ',' << s.dim << ',' << s.crs << ',' << s.nst;
  return row.str();
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_distribution_csv(std::ostream& out, const DistributionTable& table) {
  out << "partition,d,dim,crs,nst,a,b,weight_exact,weight_float\n";
  for (const DistributionRow& row : table.rows) {
    const ArcStatistics& s = row.partition.statistics();
    out << row.partition.block_string() << ',' << s.d << ',' << s.dim << ',' << s.crs << ',' << s.nst << ','
        << row.weight.a << ',' << row.weight.b << ',' << row.weight.exact(table.q).get_str() << ','
        << format_double(row.weight.value(table.q)) << '\n';
  }
}

void write_heatmap_csv(std::ostream& out, int n, std::int64_t q, std::uint64_t seed, int g,
                       const std::vector<double>& bins) {
  out << "# " << n << ' ' << q << ' ' << seed << ' ' << g << '\n';
  for (int r = 0; r < g; ++r) {
    for (int c = 0; c < g; ++c) {
      if (c) out << ',';
      out << format_double(bins[static_cast<std::size_t>(r) * static_cast<std::size_t>(g) + static_cast<std::size_t>(c)]);
    }
    out << '\n';
  }
}

json theory_to_json(const SuperTheory& t) {
  json chars = json::array();
  for (const auto& row : t.characters()) {
    json r = json::array();
    for (const Complex& v : row) r.push_back({v.real(), v.imag()});
    chars.push_back(r);
  }
  return json{{"order", t.group().order()},
              {"mul", t.group().table()},
              {"identity", t.group().identity()},
              {"superclasses", t.superclasses()},
              {"characters", chars}};
}

SuperTheory theory_from_json(const json& j) {
  try {
    const int order = j.at("order").get<int>();
    auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(mul.size()) != order) {
      throw InvalidTheory("\"order\" is " + std::to_string(order) + " but \"mul\" has " + std::to_string(mul.size()) +
                          " rows");
    }
    FiniteGroup group(std::move(mul), j.at("identity").get<int>());
    auto classes = j.at("superclasses").get<std::vector<std::vector<int>>>();
    std::vector<ClassFunction> chars;
    for (const auto& row : j.at("characters")) {
      ClassFunction values;
      for (const auto& v : row) {
        if (v.is_number()) {
          values.emplace_back(v.get<double>(), 0.0);
        } else {
          values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        }
      }
      chars.push_back(std::move(values));
    }
    return SuperTheory(std::move(group), std::move(classes), std::move(chars));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed theory JSON: ") + e.what());
  }
}

SubgroupEmbedding embedding_from_json(const json& j, const SuperTheory& group) {
  SuperTheory sub = theory_from_json(j);
  try {
    return SubgroupEmbedding(std::move(sub), group, j.at("injection").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed embedding JSON: ") + e.what());
  }
}

json embedding_to_json(const SubgroupEmbedding& e) {
  json j = theory_to_json(e.sub());
  j["injection"] = e.injection();
  return j;
}

}  // namespace spl::io
