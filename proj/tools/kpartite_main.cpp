// Command-line surface for the balanced partite subgraph toolkit:
// generate instances, run the finder, verify witnesses, query the
// brute-force oracle, and benchmark runtime scaling.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kpartite/bigint.hpp"
#include "kpartite/combinatorics.hpp"
#include "kpartite/errors.hpp"
#include "kpartite/finder.hpp"
#include "kpartite/generators.hpp"
#include "kpartite/hypergraph.hpp"
#include "kpartite/io.hpp"
#include "kpartite/parameters.hpp"
#include "kpartite/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNegative = 2;

// Accepts "0.35", ".5", "1", or "7/20"; always exact.
kpartite::Rational parse_rational_arg(const std::string& text) {
  using kpartite::BigInt;
  if (text.empty()) throw kpartite::InvalidArguments("empty rational value");
  auto digits_only = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den) || den.find_first_not_of('0') == std::string::npos) {
      throw kpartite::InvalidArguments("malformed fraction '" + text + "'");
    }
    return kpartite::Rational(BigInt(num), BigInt(den));
  }
  std::string whole = text;
  std::string frac;
  if (auto dot = text.find('.'); dot != std::string::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
    if (frac.empty()) throw kpartite::InvalidArguments("malformed decimal '" + text + "'");
  }
  if (whole.empty()) whole = "0";
  if (!digits_only(whole) || (!frac.empty() && !digits_only(frac))) {
    throw kpartite::InvalidArguments("malformed decimal '" + text + "'");
  }
  BigInt numerator(whole);
  BigInt denominator = 1;
  for (char c : frac) {
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  return kpartite::Rational(numerator, denominator);
}

kpartite::Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream input(path, std::ios::binary);
  if (!input) throw kpartite::ParseError("cannot open '" + path + "'");
  return kpartite::parse_hypergraph(input);
}

std::string density_fraction(std::uint64_t edge_count, std::uint32_t uniformity,
                             std::uint64_t vertex_count) {
  std::ostringstream out;
  out << edge_count << "/" << kpartite::binomial(vertex_count, uniformity);
  return out.str();
}

struct GenOptions {
  std::string kind;
  std::uint32_t vertex_count = 0;
  std::uint32_t uniformity = 0;
  std::string probability = "0.5";
  std::uint64_t edge_target = 0;
  std::uint32_t part_size = 0;
  std::uint64_t noise = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_gen(const GenOptions& options) {
  kpartite::GenSpec spec;
  if (options.kind == "complete") {
    spec.kind = kpartite::GenKind::kComplete;
  } else if (options.kind == "empty") {
    spec.kind = kpartite::GenKind::kEmpty;
  } else if (options.kind == "binomial") {
    spec.kind = kpartite::GenKind::kBinomial;
  } else if (options.kind == "exact-m") {
    spec.kind = kpartite::GenKind::kExactCount;
  } else if (options.kind == "planted") {
    spec.kind = kpartite::GenKind::kPlanted;
  } else {
    throw kpartite::InvalidArguments("unknown generator kind '" + options.kind + "'");
  }
  spec.vertex_count = options.vertex_count;
  spec.uniformity = options.uniformity;
  spec.inclusion_probability = parse_rational_arg(options.probability);
  spec.edge_target = options.edge_target;
  spec.planted_part_size = options.part_size;
  spec.noise_removals = options.noise;
  spec.seed = options.seed;

  kpartite::Hypergraph graph = kpartite::generate(spec);
  if (options.out_path.empty()) {
    kpartite::render_hypergraph(graph, std::cout);
  } else {
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) throw kpartite::Error("cannot open '" + options.out_path + "' for writing");
    kpartite::render_hypergraph(graph, out);
  }
  return kExitOk;
}

struct FindOptions {
  std::string in_path;
  std::int64_t forced_part_size = -1;
  bool no_trim = false;
  bool explain = false;
  std::string trace_path;
};

nlohmann::ordered_json trace_to_json(const kpartite::RecursionTrace& trace) {
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (const auto& level : trace.levels) {
    nlohmann::ordered_json entry;
    entry["uniformity"] = level.uniformity;
    entry["vertex_count"] = level.vertex_count;
    entry["edge_count"] = level.edge_count;
    entry["density"] =
        density_fraction(level.edge_count, level.uniformity, level.vertex_count);
    entry["part_size"] = level.part_size;
    entry["pool_size"] = level.pool_size.str();
    entry["link_threshold"] = level.link_threshold.str();
    entry["chosen_part"] = level.chosen_part;
    entry["link_count"] = level.link_count;
    levels.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["levels"] = std::move(levels);
  return doc;
}

int run_find(const FindOptions& options) {
  kpartite::Hypergraph graph = load_hypergraph(options.in_path);

  if (options.explain) {
    std::ostream& err = std::cerr;
    err << "vertex count:   " << graph.vertex_count() << "\n";
    err << "edge count:     " << graph.edge_count() << "\n";
    err << "uniformity:     " << graph.uniformity() << "\n";
    err << "density:        "
        << density_fraction(graph.edge_count(), graph.uniformity(), graph.vertex_count())
        << "\n";
    if (graph.uniformity() >= 2 && graph.edge_count() >= 1) {
      kpartite::ParamSet params = kpartite::derive_params(graph);
      err << "part size:      " << params.part_size << "\n";
      err << "pool size:      " << params.pool_size << "\n";
      err << "link threshold: " << params.link_threshold << "\n";
    }
  }

  std::optional<kpartite::FindResult> result;
  std::uint64_t trim_size = 0;
  if (options.forced_part_size >= 0) {
    const auto forced = static_cast<std::uint64_t>(options.forced_part_size);
    result = kpartite::find_partite_forced(graph, forced);
    if (!result) {
      std::cerr << "no witness with part size " << forced << "\n";
      return kExitNegative;
    }
    trim_size = forced;
  } else {
    result = kpartite::find_partite(graph);
    if (graph.uniformity() >= 2) {
      trim_size = std::max<std::uint64_t>(result->trace.levels.front().part_size, 1);
    }
  }

  if (!options.trace_path.empty()) {
    std::ofstream trace_out(options.trace_path, std::ios::binary);
    if (!trace_out) {
      throw kpartite::Error("cannot open '" + options.trace_path + "' for writing");
    }
    trace_out << trace_to_json(result->trace).dump(2) << "\n";
  }

  kpartite::PartiteWitness output = result->witness;
  if (!options.no_trim && trim_size > 0) {
    output = kpartite::trim_balanced(output, trim_size);
  }
  kpartite::render_witness(output, std::cout);
  return kExitOk;
}

struct VerifyOptions {
  std::string in_path;
  std::string witness_path;
};

int run_verify(const VerifyOptions& options) {
  kpartite::Hypergraph graph = load_hypergraph(options.in_path);
  std::ifstream witness_input(options.witness_path, std::ios::binary);
  if (!witness_input) {
    throw kpartite::ParseError("cannot open '" + options.witness_path + "'");
  }
  kpartite::PartiteWitness witness = kpartite::parse_witness(witness_input);

  if (witness.parts.size() != graph.uniformity()) {
    std::cout << "INVALID: witness has " << witness.parts.size()
              << " parts, the graph is " << graph.uniformity() << "-uniform\n";
    return kExitNegative;
  }
  for (std::size_t i = 0; i < witness.parts.size(); ++i) {
    for (std::uint32_t vertex : witness.parts[i]) {
      if (vertex >= graph.vertex_count()) {
        std::cout << "INVALID: part " << i << " vertex " << vertex
                  << " is outside the graph\n";
        return kExitNegative;
      }
    }
  }

  auto violation = kpartite::find_witness_violation(graph, witness.parts);
  if (!violation) {
    std::cout << "VALID\n";
    return kExitOk;
  }
  switch (violation->kind) {
    case kpartite::WitnessViolation::Kind::kEmptyPart:
      std::cout << "INVALID: part " << violation->part_a << " is empty\n";
      break;
    case kpartite::WitnessViolation::Kind::kSharedVertex:
      std::cout << "INVALID: parts " << violation->part_a << " and " << violation->part_b
                << " share vertex " << violation->vertex << "\n";
      break;
    case kpartite::WitnessViolation::Kind::kMissingTransversal: {
      std::cout << "INVALID: missing transversal edge:";
      for (std::uint32_t vertex : violation->transversal) std::cout << " " << vertex;
      std::cout << "\n";
      break;
    }
  }
  return kExitNegative;
}

int run_oracle(const std::string& in_path) {
  kpartite::Hypergraph graph = load_hypergraph(in_path);
  std::cout << kpartite::max_balanced_partite_bruteforce(graph) << "\n";
  return kExitOk;
}

struct BenchOptions {
  std::uint32_t uniformity = 2;
  std::uint32_t start_vertices = 512;
  std::uint32_t doublings = 3;
  std::string density = "1";
  std::uint64_t seed = 0;
  std::uint32_t repeats = 3;
};

int run_bench(const BenchOptions& options) {
  if (options.uniformity < 2) {
    throw kpartite::InvalidArguments("bench needs uniformity at least 2");
  }
  if (options.repeats < 1) {
    throw kpartite::InvalidArguments("bench needs at least one repeat");
  }
  std::cout << "n,m,t,wall_ns,witness_min_part\n";
  std::vector<double> log_sizes;
  std::vector<double> log_walls;
  for (std::uint32_t i = 0; i <= options.doublings; ++i) {
    const std::uint64_t vertices = static_cast<std::uint64_t>(options.start_vertices) << i;
    kpartite::GenSpec spec;
    spec.kind = kpartite::GenKind::kBinomial;
    spec.vertex_count = static_cast<std::uint32_t>(vertices);
    spec.uniformity = options.uniformity;
    spec.inclusion_probability = parse_rational_arg(options.density);
    spec.seed = options.seed;
    kpartite::Hypergraph graph = kpartite::generate(spec);

    kpartite::ParamSet params = kpartite::derive_params(graph);
    std::vector<std::int64_t> walls;
    std::uint64_t min_part = 0;
    for (std::uint32_t r = 0; r < options.repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      kpartite::FindResult result = kpartite::find_partite(graph);
      const auto stop = std::chrono::steady_clock::now();
      walls.push_back(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      min_part = result.witness.parts.front().size();
      for (const auto& part : result.witness.parts) {
        min_part = std::min<std::uint64_t>(min_part, part.size());
      }
    }
    std::sort(walls.begin(), walls.end());
    const std::int64_t wall = walls[walls.size() / 2];
    std::cout << vertices << "," << graph.edge_count() << "," << params.part_size << ","
              << wall << "," << min_part << "\n";
    log_sizes.push_back(std::log(static_cast<double>(vertices)));
    log_walls.push_back(std::log(static_cast<double>(std::max<std::int64_t>(wall, 1))));
  }
  // Least-squares slope of ln(wall) against ln(n).
  const std::size_t count = log_sizes.size();
  double mean_x = 0;
  double mean_y = 0;
  for (std::size_t i = 0; i < count; ++i) {
    mean_x += log_sizes[i];
    mean_y += log_walls[i];
  }
  mean_x /= static_cast<double>(count);
  mean_y /= static_cast<double>(count);
  double cov = 0;
  double var = 0;
  for (std::size_t i = 0; i < count; ++i) {
    cov += (log_sizes[i] - mean_x) * (log_walls[i] - mean_y);
    var += (log_sizes[i] - mean_x) * (log_sizes[i] - mean_x);
  }
  const double slope = var > 0 ? cov / var : 0.0;
  char line[64];
  std::snprintf(line, sizeof line, "slope,%.6f\n", slope);
  std::cout << line;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced partite subgraph toolkit for uniform hypergraphs"};
  app.require_subcommand(1);

  GenOptions gen_options;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", gen_options.kind, "complete|empty|binomial|exact-m|planted")
      ->required();
  gen->add_option("--n", gen_options.vertex_count, "vertex count")->required();
  gen->add_option("--k", gen_options.uniformity, "uniformity")->required();
  gen->add_option("--p", gen_options.probability, "inclusion probability (binomial)");
  gen->add_option("--m", gen_options.edge_target, "edge count (exact-m)");
  gen->add_option("--part-size", gen_options.part_size, "planted part size");
  gen->add_option("--noise", gen_options.noise, "planted noise removals");
  gen->add_option("--seed", gen_options.seed, "PRNG seed");
  gen->add_option("--out", gen_options.out_path, "output path (default stdout)");

  FindOptions find_options;
  CLI::App* find = app.add_subcommand("find", "search for a balanced partite witness");
  find->add_option("--in", find_options.in_path, "hypergraph file")->required();
  find->add_option("--forced-t", find_options.forced_part_size,
                   "impose this part size at every level");
  find->add_flag("--no-trim", find_options.no_trim, "emit untrimmed parts");
  find->add_flag("--explain", find_options.explain,
                 "print the derived parameters to stderr before searching");
  find->add_option("--trace", find_options.trace_path, "write the recursion trace as JSON");

  VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand("verify", "check a witness against a hypergraph");
  verify->add_option("--in", verify_options.in_path, "hypergraph file")->required();
  verify->add_option("--witness", verify_options.witness_path, "witness file")->required();

  std::string oracle_in;
  CLI::App* oracle = app.add_subcommand("oracle", "exact best balanced part size (small instances)");
  oracle->add_option("--in", oracle_in, "hypergraph file")->required();

  BenchOptions bench_options;
  CLI::App* bench = app.add_subcommand("bench", "runtime-scaling benchmark (CSV on stdout)");
  bench->add_option("--k", bench_options.uniformity, "uniformity");
  bench->add_option("--n-start", bench_options.start_vertices, "smallest vertex count");
  bench->add_option("--doublings", bench_options.doublings, "number of size doublings");
  bench->add_option("--density", bench_options.density, "target density");
  bench->add_option("--seed", bench_options.seed, "PRNG seed");
  bench->add_option("--repeats", bench_options.repeats, "timing repeats per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen->parsed()) return run_gen(gen_options);
    if (find->parsed()) return run_find(find_options);
    if (verify->parsed()) return run_verify(verify_options);
    if (oracle->parsed()) return run_oracle(oracle_in);
    if (bench->parsed()) return run_bench(bench_options);
  } catch (const kpartite::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
