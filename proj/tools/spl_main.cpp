#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superplancherel/error.hpp"
#include "superplancherel/experiments.hpp"
#include "superplancherel/io.hpp"
#include "superplancherel/matrix_sampler.hpp"
#include "superplancherel/measure.hpp"
#include "superplancherel/sct.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIdentity = 3;

// Thrown when a verification finds a failed identity.
struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard output, or the file named by --out.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    path_ = path;
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void close() {
    if (!file_) {
      std::cout.flush();
      return;
    }
    file_->close();
    if (!*file_) throw std::runtime_error("failed writing " + path_);
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw spl::ValidationError(path + ": " + e.what());
  }
}

// Accepts a prime power q >= 2.
const CLI::Validator kFieldSize(
    [](std::string& value) -> std::string {
      try {
        const spl::FieldParam q(std::stoll(value));
        if (!q.is_prime_power()) return "field size must be a prime power, got " + value;
      } catch (const std::exception&) {
        return "field size must be a prime power >= 2, got " + value;
      }
      return {};
    },
    "PRIME POWER");

spl::SuperTheory read_theory(const std::string& path) {
  try {
    return spl::io::theory_from_json(read_json(path));
  } catch (const spl::InvalidTheory& e) {
    throw IdentityFailure(path + ": " + e.what());
  }
}

struct SampleArgs {
  int n = 0;
  std::int64_t q = 2;
  std::uint64_t seed = 0;
  int count = 1;
  std::string format = "json";
  std::string out;
};

void run_sample(const SampleArgs& a) {
  const spl::FieldParam q(a.q);
  Output out(a.out);
  std::ostream& os = out.stream();
  if (a.format == "csv") os << spl::io::kSampleCsvHeader << '\n';
  for (int i = 0; i < a.count; ++i) {
    const std::uint64_t seed = spl::sample_seed(a.seed, a.n, static_cast<std::uint64_t>(i));
    const spl::SetPartition p = spl::sample_partition(a.n, q, seed);
    if (a.format == "csv") {
      os << spl::io::sample_csv_row(p, a.q, seed) << '\n';
    } else {
      nlohmann::json j = spl::io::partition_to_json(p);
      const spl::ArcStatistics& s = p.statistics();
      j["q"] = a.q;
      j["seed"] = seed;
      j["d"] = s.d;
      j["dim"] = s.dim;
      j["crs"] = s.crs;
      j["nst"] = s.nst;
      os << j.dump() << '\n';
    }
  }
  out.close();
}

struct ExactArgs {
  int n = 0;
  std::int64_t q = 2;
  std::string out;
};

void run_exact(const ExactArgs& a) {
  const spl::DistributionTable t = spl::exact_distribution(a.n, spl::FieldParam(a.q));
  Output out(a.out);
  spl::io::write_distribution_csv(out.stream(), t);
  out.close();
}

struct VerifyArgs {
  int n_max = 4;
  std::vector<std::int64_t> q_list{2, 3};
  std::string out;
};

void run_verify(const VerifyArgs& a) {
  Output out(a.out);
  std::ostream& os = out.stream();
  bool ok = true;
  for (std::int64_t qv : a.q_list) {
    const spl::FieldParam q(qv);
    for (int n = 1; n <= a.n_max; ++n) {
      const spl::CountReport r = spl::verify_counts(n, q);
      os << "n=" << n << " q=" << qv << " classes=" << r.classes << " matrices=" << r.matrices;
      if (r.ok()) {
        os << " counts OK";
      } else {
        ok = false;
        os << " counts FAILED";
        for (const auto& m : r.mismatches) {
          os << " [" << m.partition.block_string() << " expected " << m.expected << " observed " << m.observed << ']';
        }
      }
      if (n <= spl::kMaxExactDistributionSize) {
        const spl::DistributionTable t = spl::exact_distribution(n, q);
        if (t.total == 1) {
          os << " normalization OK";
        } else {
          ok = false;
          os << " normalization FAILED (total " << t.total << ')';
        }
      }
      os << '\n';
    }
  }
  os << (ok ? "counts OK" : "counts FAILED") << '\n';
  out.close();
  if (!ok) throw IdentityFailure("verification failed");
}

struct ShapeArgs {
  std::string plan_file;
  std::string out;
};

void run_shape(const ShapeArgs& a) {
  spl::ExperimentPlan plan = spl::ExperimentPlan::from_json(read_json(a.plan_file));
  if (!a.out.empty()) plan.output_dir = a.out;
  const spl::ExperimentResult r = spl::run(plan);
  if (plan.output_dir.empty()) {
    spl::write_convergence_csv(std::cout, r.rows);
  } else {
    std::cout << "wrote " << r.rows.size() << " rows and " << r.heatmaps.size() << " heatmaps to " << plan.output_dir
              << '\n';
  }
}

struct SctArgs {
  std::string theory;
  std::string embedding;
  std::string out;
};

void run_sct_validate(const SctArgs& a) {
  const spl::SuperTheory t = read_theory(a.theory);
  Output out(a.out);
  std::ostream& os = out.stream();
  const spl::OrthogonalityReport second = spl::second_orthogonality(t);
  double total = 0;
  for (double w : spl::superplancherel_measure(t)) total += w;
  os << "order " << t.group().order() << ", " << t.class_count() << " superclasses\n";
  os << "row orthogonality OK\n";
  os << "second orthogonality max deviation " << spl::io::format_double(second.max_deviation)
     << (second.pass ? " OK" : " FAILED") << '\n';
  os << "superplancherel total " << spl::io::format_double(total) << '\n';
  const bool ok = second.pass && std::abs(total - 1.0) <= spl::kSctTolerance;
  os << (ok ? "theory OK" : "theory FAILED") << '\n';
  out.close();
  if (!ok) throw IdentityFailure(a.theory + ": theory fails validation");
}

void run_sct_transition(const SctArgs& a) {
  const spl::SuperTheory g = read_theory(a.theory);
  spl::TransitionReport r;
  try {
    const spl::SubgroupEmbedding e = spl::io::embedding_from_json(read_json(a.embedding), g);
    r = spl::check_transition(e);
  } catch (const spl::InvalidTheory& e) {
    throw IdentityFailure(a.embedding + ": " + e.what());
  }
  Output out(a.out);
  std::ostream& os = out.stream();
  for (const auto& row : r.matrix) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << spl::io::format_double(row[c]);
    os << '\n';
  }
  out.close();
  std::cerr << "max row-sum deviation " << spl::io::format_double(r.max_row_sum_deviation)
            << ", max pushforward deviation " << spl::io::format_double(r.max_pushforward_deviation) << '\n';
  if (!r.pass) throw IdentityFailure("transition matrix fails its checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superplancherel measure toolkit: sampling, exact tables, verification, shape experiments and "
               "supercharacter theories"};
  app.require_subcommand(1);

  SampleArgs sample;
  CLI::App* sample_cmd = app.add_subcommand("sample", "Sample set partitions from the superplancherel measure");
  sample_cmd->add_option("--n", sample.n, "Size of the ground set")->required()->check(CLI::Range(1, 1 << 24));
  sample_cmd->add_option("--q", sample.q, "Field size (prime power)")->check(kFieldSize);
  sample_cmd->add_option("--seed", sample.seed, "Base seed; sample i uses a seed derived from (seed, n, i)");
  sample_cmd->add_option("--count", sample.count, "Number of samples")->check(CLI::Range(1, 1 << 30));
  sample_cmd->add_option("--format", sample.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sample_cmd->add_option("--out", sample.out, "Output file (default: standard output)");

  ExactArgs exact;
  CLI::App* exact_cmd = app.add_subcommand("exact", "Exact distribution table as CSV");
  exact_cmd->add_option("--n", exact.n, "Size of the ground set")->required()->check(CLI::Range(1, 1 << 24));
  exact_cmd->add_option("--q", exact.q, "Field size (prime power)")->check(kFieldSize);
  exact_cmd->add_option("--out", exact.out, "Output file (default: standard output)");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check class sizes against matrix enumeration and exact normalization");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n to check")->check(CLI::Range(1, 64));
  verify_cmd->add_option("--q-list", verify.q_list, "Comma-separated field sizes")
      ->delimiter(',')
      ->check(kFieldSize);
  verify_cmd->add_option("--out", verify.out, "Output file (default: standard output)");

  ShapeArgs shape;
  CLI::App* shape_cmd = app.add_subcommand("shape", "Run a limit-shape experiment plan");
  shape_cmd->add_option("--plan-file", shape.plan_file, "Experiment plan JSON")->required()->check(CLI::ExistingFile);
  shape_cmd->add_option("--out", shape.out, "Output directory (overrides the plan's output_dir)");

  SctArgs sct;
  CLI::App* sct_cmd = app.add_subcommand("sct", "Supercharacter theory engine");
  sct_cmd->require_subcommand(1);
  CLI::App* validate_cmd = sct_cmd->add_subcommand("validate", "Validate a theory file");
  validate_cmd->add_option("--theory", sct.theory, "Theory JSON")->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("--out", sct.out, "Output file (default: standard output)");
  CLI::App* transition_cmd = sct_cmd->add_subcommand("transition", "Transition matrix of a subgroup embedding");
  transition_cmd->add_option("--theory", sct.theory, "Ambient theory JSON")->required()->check(CLI::ExistingFile);
  transition_cmd->add_option("--embedding", sct.embedding, "Subgroup theory JSON with \"injection\"")
      ->required()
      ->check(CLI::ExistingFile);
  transition_cmd->add_option("--out", sct.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sample_cmd) {
      run_sample(sample);
    } else if (*exact_cmd) {
      run_exact(exact);
    } else if (*verify_cmd) {
      run_verify(verify);
    } else if (*shape_cmd) {
      run_shape(shape);
    } else if (*validate_cmd) {
      run_sct_validate(sct);
    } else if (*transition_cmd) {
      run_sct_transition(sct);
    }
  } catch (const IdentityFailure& e) {
    std::cerr << "spl: " << e.what() << '\n';
    return kExitIdentity;
  } catch (const std::exception& e) {
    std::cerr << "spl: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
