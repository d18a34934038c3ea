#include "preorder_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "preorder/generator.hpp"
#include "preorder/instance_io.hpp"
#include "preorder/oracle.hpp"
#include "preorder/pipeline.hpp"

namespace preorder::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

struct PipelineArgs {
  std::string conditions = "all";
  std::size_t rounds = 100;
  bool single_pass = false;

  void add_to(CLI::App& app) {
    app.add_option("--conditions", conditions, "Comma-separated condition names or 'all'")->capture_default_str();
    app.add_option("--rounds", rounds, "Maximum rounds over the condition list")->capture_default_str();
    app.add_flag("--single-pass", single_pass, "Run the condition list once");
  }

  PipelineConfig config() const {
    PipelineConfig cfg;
    if (conditions != "all") {
      cfg.conditions.clear();
      for (const auto& name : split_list(conditions)) {
        const auto id = parse_condition(name);
        if (!id) throw UsageError("unknown condition '" + name + "'");
        cfg.conditions.push_back(*id);
      }
      if (cfg.conditions.empty()) throw UsageError("--conditions is empty");
    }
    if (rounds == 0) throw UsageError("--rounds must be positive");
    cfg.max_rounds = rounds;
    cfg.single_pass = single_pass;
    return cfg;
  }
};

struct ManifestRow {
  std::string alpha;
  std::string edge_density;
  std::string truth_seed;
  std::string value_seed;
};

const char* const kManifestHeader = "file,n,alpha,edge_density,truth_seed,value_seed";

/// file name -> row, for manifest.csv next to generated instances.
std::map<std::string, ManifestRow> read_manifest(const fs::path& path) {
  std::map<std::string, ManifestRow> rows;
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line)) return rows;
  while (std::getline(in, line)) {
    const auto f = split_list(line);
    if (f.size() != 6) continue;
    rows[f[0]] = {f[2], f[3], f[4], f[5]};
  }
  return rows;
}

/// Appends `lines` to a CSV, writing `header` first when the file is new or
/// empty. Throws DataError when an existing file has a different header.
void append_csv(const fs::path& path, const std::string& header, const std::vector<std::string>& lines) {
  bool fresh = true;
  if (fs::exists(path) && fs::file_size(path) > 0) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    if (first != header) throw DataError(path.string() + ": existing file has a different header");
    fresh = false;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  if (fresh) out << header << '\n';
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw DataError("write to " + path.string() + " failed");
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) s += ',';
    s += items[k];
  }
  return s;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::size_t n = 0;
  double alpha = 0.0;
  double edge_density = 0.0;
  std::size_t truths = 5;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  if (a.truths == 0 || a.count == 0 || a.count % a.truths != 0) {
    throw UsageError("--count must be a positive multiple of --truths");
  }
  const std::size_t per_truth = a.count / a.truths;
  GeneratorConfig base;
  base.n = a.n;
  base.alpha = a.alpha;
  base.edge_density = a.edge_density;
  try {
    base.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const fs::path dir(a.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());

  const fs::path manifest_path = dir / "manifest.csv";
  const auto existing = read_manifest(manifest_path);
  std::vector<std::string> rows;
  for (std::size_t t = 0; t < a.truths; ++t) {
    const std::uint64_t truth_seed = mix_seed(a.seed + t);
    for (std::size_t v = 0; v < per_truth; ++v) {
      GeneratorConfig cfg = base;
      cfg.seed = truth_seed;
      cfg.value_seed = mix_seed(truth_seed + 1 + v);
      const std::string name = "n" + std::to_string(a.n) + "_a" + fmt(a.alpha) + "_p" + fmt(a.edge_density) + "_s" +
                               std::to_string(a.seed) + "_t" + std::to_string(t) + "_v" + std::to_string(v) + ".csv";
      save_instance(generate_synthetic(cfg).first, dir / name);
      if (existing.count(name) == 0) {
        rows.push_back(join({name, std::to_string(a.n), fmt(a.alpha), fmt(a.edge_density), std::to_string(truth_seed),
                             std::to_string(*cfg.value_seed)}));
      }
    }
  }
  append_csv(manifest_path, kManifestHeader, rows);
  out << "wrote " << a.count << " instances to " << dir.string() << '\n';
  return kOk;
}

// --------------------------------------------------------------------- fix

struct FixArgs {
  std::vector<std::string> inputs;
  bool ego = false;
  PipelineArgs pipeline;
  std::size_t threads = 1;
  std::string emit_partial;
  std::string out;
};

struct FixOutcome {
  std::optional<PipelineStats> stats;
  int code = kOk;
  std::string error;
};

Instance load_input(const fs::path& path, bool ego) {
  if (!ego) return load_instance(path);
  const auto edges = load_edge_list(path);
  return ingest_ego_network(edges, edge_list_nodes(edges));
}

FixOutcome fix_one(const fs::path& path, const FixArgs& a, const PipelineConfig& cfg) {
  FixOutcome o;
  try {
    const Instance instance = load_input(path, a.ego);
    PipelineResult r = run_joint(instance, cfg);
    if (!a.emit_partial.empty()) {
      save_partial(r.partial.assignment(), fs::path(a.emit_partial) / (path.stem().string() + ".partial.csv"));
    }
    o.stats = std::move(r.stats);
  } catch (const InconsistencyError& e) {
    o.code = kInconsistency;
    o.error = e.what();
  } catch (const DataError& e) {
    o.code = kDataError;
    o.error = e.what();
  } catch (const fs::filesystem_error& e) {
    o.code = kDataError;
    o.error = e.what();
  }
  return o;
}

std::string stats_row(const std::string& id, const PipelineStats& s, const ManifestRow& m) {
  std::vector<std::string> f{id,
                             std::to_string(s.size),
                             std::to_string(s.pair_count),
                             m.alpha,
                             m.edge_density,
                             m.truth_seed,
                             m.value_seed,
                             std::to_string(s.rounds),
                             std::to_string(s.zeros),
                             std::to_string(s.ones),
                             fmt(s.percent_fixed),
                             std::to_string(s.total_nanoseconds)};
  for (ConditionId id_c : default_conditions()) {
    ConditionStats total{id_c, 0, 0, 0};
    for (const auto& c : s.conditions) {
      if (c.id != id_c) continue;
      total.zeros += c.zeros;
      total.ones += c.ones;
      total.nanoseconds += c.nanoseconds;
    }
    f.push_back(std::to_string(total.zeros));
    f.push_back(std::to_string(total.ones));
    f.push_back(std::to_string(total.nanoseconds));
  }
  return join(f);
}

int cmd_fix(const FixArgs& a, std::ostream& out, std::ostream& err) {
  const PipelineConfig cfg = a.pipeline.config();
  if (a.threads == 0) throw UsageError("--threads must be positive");
  if (!a.emit_partial.empty()) {
    std::error_code ec;
    fs::create_directories(a.emit_partial, ec);
    if (ec) throw DataError("cannot create " + a.emit_partial + ": " + ec.message());
  }
  std::vector<std::string> inputs;
  for (const auto& in : a.inputs) {
    if (!a.ego && fs::path(in).filename() == "manifest.csv") continue;
    inputs.push_back(in);
  }
  const std::size_t count = inputs.size();
  std::vector<FixOutcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) outcomes[k] = fix_one(inputs[k], a, cfg);
  };
  const std::size_t workers = std::min(a.threads, count);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<fs::path, std::map<std::string, ManifestRow>> manifests;
  std::vector<std::string> rows;
  std::vector<double> percents;
  int code = kOk;
  for (std::size_t k = 0; k < count; ++k) {
    const fs::path path(inputs[k]);
    const FixOutcome& o = outcomes[k];
    if (!o.stats) {
      err << path.string() << ": " << o.error << '\n';
      code = std::max(code, o.code);
      continue;
    }
    const fs::path dir = path.parent_path();
    if (manifests.count(dir) == 0) manifests[dir] = read_manifest(dir / "manifest.csv");
    const auto& manifest = manifests[dir];
    const auto it = manifest.find(path.filename().string());
    const ManifestRow meta = it == manifest.end() ? ManifestRow{} : it->second;
    rows.push_back(stats_row(path.stem().string(), *o.stats, meta));
    percents.push_back(o.stats->percent_fixed);
    err << path.stem().string() << ": n=" << o.stats->size << " fixed=" << fmt(o.stats->percent_fixed) << "%\n";
  }

  const std::string header = join(stats_columns());
  if (a.out.empty()) {
    out << header << '\n';
    for (const auto& r : rows) out << r << '\n';
  } else {
    append_csv(a.out, header, rows);
  }
  if (!percents.empty()) {
    std::ostream& summary = a.out.empty() ? err : out;
    summary << "percent_fixed median=" << fmt(quantile(percents, 0.5)) << " q25=" << fmt(quantile(percents, 0.25))
            << " q75=" << fmt(quantile(percents, 0.75)) << " instances=" << percents.size() << '\n';
  }
  return code;
}

// ------------------------------------------------------------ oracle-check

struct OracleArgs {
  std::string instance;
  std::string partial;
  PipelineArgs pipeline;
};

std::string describe(const Relation& x) {
  std::string s;
  for (const Pair& a : x.arcs()) s += " " + std::to_string(a.p) + "->" + std::to_string(a.q);
  return s;
}

int cmd_oracle_check(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const Instance instance = load_instance(a.instance);
  if (instance.size() > kOracleMaxSize) {
    throw UsageError("oracle-check supports n <= " + std::to_string(kOracleMaxSize) + ", got n=" +
                     std::to_string(instance.size()));
  }
  PartialAssignment x(instance.size());
  if (a.partial.empty()) {
    x = run_joint(instance, a.pipeline.config()).partial.assignment();
  } else {
    x = load_partial(a.partial);
    if (x.size() != instance.size()) throw DataError("partial assignment size does not match the instance");
  }
  const OptimumSet all = solve_exact(instance);
  if (const auto witness = certify_witness(instance, x)) {
    out << "pass value=" << fmt(all.value) << " fixed=" << x.decided_count() << " witness:" << describe(*witness)
        << '\n';
    return kOk;
  }
  // Prefer a fixation that no optimum satisfies; otherwise name one the
  // first optimum violates.
  std::optional<std::pair<Pair, bool>> named;
  for (Element p = 0; p < instance.size() && !named; ++p) {
    for (Element q = 0; q < instance.size() && !named; ++q) {
      if (p == q || !x.is_decided(p, q)) continue;
      const bool v = x.is_one(p, q);
      const bool none = std::none_of(all.optima.begin(), all.optima.end(),
                                     [&](const Relation& o) { return o.get(p, q) == v; });
      if (none) named = {{p, q}, v};
    }
  }
  for (Element p = 0; p < instance.size() && !named; ++p) {
    for (Element q = 0; q < instance.size() && !named; ++q) {
      if (p != q && x.is_decided(p, q) && all.optima.front().get(p, q) != x.is_one(p, q)) {
        named = {{p, q}, x.is_one(p, q)};
      }
    }
  }
  err << "fail value=" << fmt(all.value);
  if (named) err << " violated fixation x(" << named->first.p << "," << named->first.q << ")=" << named->second;
  err << '\n';
  return kInconsistency;
}

}  // namespace

const std::vector<std::string>& stats_columns() {
  static const std::vector<std::string> columns = [] {
    std::vector<std::string> c{"instance",   "n",     "pairs", "alpha",         "edge_density", "truth_seed",
                               "value_seed", "rounds", "zeros", "ones", "percent_fixed", "total_ns"};
    for (ConditionId id : default_conditions()) {
      const std::string name = condition_name(id);
      c.push_back(name + "_zeros");
      c.push_back(name + "_ones");
      c.push_back(name + "_ns");
    }
    return c;
  }();
  return columns;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial optimality for the preordering problem"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write synthetic instance ensembles");
  generate->add_option("--n", gen.n, "Number of elements")->required();
  generate->add_option("--alpha", gen.alpha, "Noise level in [0, 1]")->required();
  generate->add_option("--pe", gen.edge_density, "Edge density of the true preorder")->required();
  generate->add_option("--truths", gen.truths, "Number of true preorders")->capture_default_str();
  generate->add_option("--count", gen.count, "Total number of instances")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Base seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output directory")->required();

  FixArgs fix;
  auto* fix_cmd = app.add_subcommand("fix", "Run the conditions and emit one stats row per instance");
  fix_cmd->add_option("inputs", fix.inputs, "Instance files")->required();
  fix_cmd->add_flag("--ego", fix.ego, "Inputs are follower edge lists");
  fix.pipeline.add_to(*fix_cmd);
  fix_cmd->add_option("--threads", fix.threads, "Parallel workers")->capture_default_str();
  fix_cmd->add_option("--emit-partial", fix.emit_partial, "Directory for final partial assignments");
  fix_cmd->add_option("--out", fix.out, "Stats CSV to append to (stdout if omitted)");

  OracleArgs oracle;
  auto* check = app.add_subcommand("oracle-check", "Certify fixations against exhaustive optima (n <= 6)");
  check->add_option("instance", oracle.instance, "Instance file")->required();
  check->add_option("--partial", oracle.partial, "Partial assignment to certify instead of running the pipeline");
  oracle.pipeline.add_to(*check);

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (fix_cmd->parsed()) return cmd_fix(fix, out, err);
    return cmd_oracle_check(oracle, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kInconsistency;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const fs::filesystem_error& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace preorder::cli
