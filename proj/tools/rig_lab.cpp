#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riglab/coupling.hpp"
#include "riglab/experiment.hpp"
#include "riglab/generators.hpp"
#include "riglab/io.hpp"
#include "riglab/properties.hpp"
#include "riglab/thresholds.hpp"

using namespace riglab;
using nlohmann::json;

namespace {

constexpr int kExitPlanning = 2;
constexpr int kExitIo = 3;

// Shared model flags; values from --config are used where a flag was not given.
struct ModelArgs {
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<double> p;
  std::string p_list;
  std::optional<std::uint64_t> seed;
  std::string config;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--n", n, "vertex count");
    cmd->add_option("--m", m, "feature count (homogeneous p)");
    cmd->add_option("--p", p, "homogeneous feature probability");
    cmd->add_option("--p-list", p_list, "comma-separated p_1,...,p_m");
    cmd->add_option("--seed", seed, "master seed");
    cmd->add_option("--config", config, "JSON file with n, m, p (number or array), seed");
  }

  json file_config() const {
    if (config.empty()) return json::object();
    std::ifstream in(config);
    if (!in) throw IoError("cannot open config " + config);
    try {
      return json::parse(in);
    } catch (const json::exception& e) {
      throw ValidationError("bad JSON in " + config + ": " + e.what());
    }
  }

  std::size_t vertex_count(const json& cfg) const {
    if (n) return *n;
    if (cfg.contains("n")) return cfg.at("n").get<std::size_t>();
    throw ValidationError("--n is required");
  }

  std::uint64_t master_seed(const json& cfg) const {
    if (seed) return *seed;
    if (cfg.contains("seed")) return cfg.at("seed").get<std::uint64_t>();
    return 1;
  }

  FeatureProbabilities probabilities(const json& cfg) const {
    if (!p_list.empty()) {
      std::vector<double> values;
      std::stringstream ss(p_list);
      std::string item;
      while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
      return FeatureProbabilities(values);
    }
    if (p) {
      std::size_t mm = m ? *m : cfg.value("m", std::size_t{0});
      if (mm == 0) throw ValidationError("--m is required with --p");
      return FeatureProbabilities::homogeneous(mm, *p);
    }
    if (cfg.contains("p")) {
      const auto& jp = cfg.at("p");
      if (jp.is_array()) return FeatureProbabilities(jp.get<std::vector<double>>());
      std::size_t mm = m ? *m : cfg.value("m", std::size_t{0});
      if (mm == 0) throw ValidationError("m is required with a scalar p");
      return FeatureProbabilities::homogeneous(mm, jp.get<double>());
    }
    throw ValidationError("feature probabilities missing: give --p with --m, --p-list, or a config");
  }
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

int run_gen(ModelArgs& args, const std::string& model, std::size_t arity, double phat, std::uint64_t draws,
            double lambda, const std::string& format, const std::string& out) {
  json cfg = args.file_config();
  const std::size_t n = args.vertex_count(cfg);
  Seed seed{args.master_seed(cfg), label_hash("gen"), 0, 0};
  std::ostringstream text;
  if (model == "rig") {
    auto rig = sample_rig(n, args.probabilities(cfg), seed);
    write_edge_list(text, project_rig(rig));
  } else {
    UniformHypergraph h(n, arity);
    if (model == "h") {
      h = sample_h_independent(n, arity, phat, seed);
    } else if (model == "gstar") {
      h = sample_g_star(n, arity, draws, seed);
    } else if (model == "gstar-poisson") {
      h = sample_g_star_poisson(n, arity, lambda, seed);
    } else {
      throw ValidationError("unknown model '" + model + "'");
    }
    if (format == "hyper") write_hypergraph(text, h); else write_edge_list(text, project_hypergraph(h));
  }
  write_text(out, text.str());
  return 0;
}

int run_stats(ModelArgs& args, std::optional<double> omega, const std::string& variant, std::optional<std::size_t> t_max) {
  json cfg = args.file_config();
  const std::size_t n = args.vertex_count(cfg);
  auto p = args.probabilities(cfg);
  auto stats = summary_stats(n, p, t_max ? *t_max : default_t_max(n));
  double w = omega ? *omega : cfg.value("omega", default_omega(n));
  auto params = coupling_parameters(stats, n, w, parse_variant(variant));
  json j = {{"n", stats.n},
            {"m", stats.m},
            {"S1", stats.s1},
            {"S2", stats.s2},
            {"S3", stats.s3},
            {"S1t", stats.s1t},
            {"a_n", stats.a_n},
            {"p_hat", params.p_hat},
            {"p_hat2", params.p_hat2},
            {"p_hat3", params.p_hat3},
            {"regime", to_string(params.regime)},
            {"omega", params.omega},
            {"variant", to_string(params.variant)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_check(const std::vector<std::string>& files, const std::string& property, int k, const std::string& mode,
              std::uint64_t budget, std::uint64_t seed, double gamma, std::size_t cutoff, std::size_t samples) {
  for (const auto& file : files) {
    SimpleGraph g = load_edge_list(file);
    json j = {{"file", file}, {"property", property}, {"n", g.vertex_count()}, {"edges", g.edge_count()}};
    if (property == "mindeg") {
      auto d = min_degree(g);
      j["min_degree"] = d;
      j["k"] = k;
      j["verdict"] = d >= static_cast<std::size_t>(k) ? "yes" : "no";
    } else if (property == "kconn") {
      auto cm = mode == "edge" ? ConnectivityMode::Edge : ConnectivityMode::Vertex;
      j["k"] = k;
      j["mode"] = mode;
      j["verdict"] = is_k_connected(g, k, cm) ? "yes" : "no";
    } else if (property == "pm") {
      j["verdict"] = has_perfect_matching(g) ? "yes" : "no";
    } else if (property == "hc") {
      HamiltonicityOptions opts;
      opts.budget = budget;
      opts.seed = seed;
      auto hv = hamiltonicity(g, opts);
      j["verdict"] = to_string(hv.verdict);
      j["reason"] = hv.reason;
      j["effort"] = hv.effort;
      if (hv.verdict == Verdict::Yes) j["cycle"] = hv.certificate;
    } else if (property == "audit") {
      AuditParams ap;
      ap.gamma = gamma;
      ap.k = k;
      ap.degree_cutoff = cutoff;
      ap.sample_count = samples;
      ap.seed = seed;
      auto rep = structure_audit(g, ap);
      auto sampled = [](const SampledCheck& s) {
        return json{{"sets_sampled", s.sets_sampled},
                    {"violations", s.violations},
                    {"size_classes", s.size_classes},
                    {"min_size", s.min_size},
                    {"max_size", s.max_size}};
      };
      j["B1"] = sampled(rep.b1);
      j["B2"] = sampled(rep.b2);
      j["B3"] = sampled(rep.b3);
      j["B3"]["eligible_vertices"] = rep.b3_eligible_vertices;
      j["B4"] = {{"low_degree_vertices", rep.b4_low_degree_vertices},
                 {"violating_pairs", rep.b4_violating_pairs},
                 {"vacuous", rep.b4_vacuous}};
    } else {
      throw ValidationError("unknown property '" + property + "'");
    }
    std::cout << j.dump() << "\n";
  }
  return 0;
}

struct TrialSink {
  std::string out_dir;
  std::ofstream file;

  void open() {
    if (out_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
    auto path = std::filesystem::path(out_dir) / "trials.jsonl";
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + path.string() + " for writing");
  }
  void record(const json& j) {
    if (out_dir.empty()) std::cout << j.dump() << "\n"; else file << j.dump() << "\n";
  }
  void summary(const json& j) {
    if (out_dir.empty()) {
      std::cout << json{{"summary", j}}.dump() << "\n";
      return;
    }
    file.close();
    if (!file) throw IoError("write failed for trials.jsonl in " + out_dir);
    write_text((std::filesystem::path(out_dir) / "summary.json").string(), j.dump(2) + "\n");
  }
};

int run_couple(ModelArgs& args, std::optional<double> omega, std::size_t trials, const std::string& out) {
  json cfg = args.file_config();
  const std::size_t n = args.vertex_count(cfg);
  auto p = args.probabilities(cfg);
  double w = omega ? *omega : cfg.value("omega", default_omega(n));
  Seed base{args.master_seed(cfg), label_hash("couple"), 0, 0};
  TrialSink sink{out, {}};
  sink.open();
  std::size_t contained = 0, guards = 0, prefix_given_guards = 0, infeasible = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rep = run_coupling_trial(n, p, w, base.with_trial(t));
    contained += rep.contained;
    guards += rep.guards_hold();
    prefix_given_guards += rep.guards_hold() && rep.prefix_contained;
    infeasible += rep.regime_infeasible;
    json j = {{"trial", t},
              {"contained", rep.contained},
              {"prefix_contained", rep.prefix_contained},
              {"guard_events", rep.guard_events()},
              {"regime_infeasible", rep.regime_infeasible},
              {"M2", rep.m2},
              {"M3", rep.m3},
              {"sumY", rep.sum_y},
              {"m2_prime", rep.m2_prime},
              {"m3_prime", rep.m3_prime},
              {"rig_edges", rep.rig_edges},
              {"coupled_edges", rep.coupled_edges},
              {"prefix_edges", rep.prefix_edges}};
    sink.record(j);
  }
  auto stats = summary_stats(n, p, 2);
  sink.summary({{"n", n},
                {"m", p.size()},
                {"omega", w},
                {"S1", stats.s1},
                {"S3", stats.s3},
                {"trials", trials},
                {"contained", contained},
                {"guards_hold", guards},
                {"prefix_contained_given_guards", prefix_given_guards},
                {"regime_infeasible", infeasible},
                {"seed", base.master}});
  return 0;
}

int run_collector(ModelArgs& args, std::optional<double> omega, std::size_t trials, const std::string& out) {
  json cfg = args.file_config();
  const std::size_t n = args.vertex_count(cfg);
  auto p = args.probabilities(cfg);
  double w = omega ? *omega : cfg.value("omega", default_omega(n));
  Seed base{args.master_seed(cfg), label_hash("collector"), 0, 0};
  TrialSink sink{out, {}};
  sink.open();
  std::size_t delta = 0, sandwich_violations = 0, a_minus = 0, a_plus = 0, b = 0;
  double overhead = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rep = coupon_collector_trial(n, p, w, base.with_trial(t));
    delta += rep.delta_ge_1;
    sandwich_violations += !rep.sandwich_holds();
    a_minus += rep.a_minus;
    a_plus += rep.a_plus;
    b += rep.b;
    overhead += static_cast<double>(rep.overhead);
    sink.record({{"trial", t},
                 {"T", rep.total_draws},
                 {"sumY", rep.sum_y},
                 {"overhead", rep.overhead},
                 {"covered_at", rep.covered_at},
                 {"T_minus", rep.t_minus},
                 {"T_plus", rep.t_plus},
                 {"A_minus", rep.a_minus},
                 {"A_plus", rep.a_plus},
                 {"B", rep.b},
                 {"B1", rep.b1},
                 {"B2", rep.b2},
                 {"delta_ge_1", rep.delta_ge_1}});
  }
  auto stats = summary_stats(n, p, 2);
  const double td = trials ? static_cast<double>(trials) : 1.0;
  sink.summary({{"n", n},
                {"m", p.size()},
                {"omega", w},
                {"S1", stats.s1},
                {"trials", trials},
                {"delta_ge_1_rate", static_cast<double>(delta) / td},
                {"A_minus_rate", static_cast<double>(a_minus) / td},
                {"A_plus_rate", static_cast<double>(a_plus) / td},
                {"B_rate", static_cast<double>(b) / td},
                {"mean_overhead", overhead / td},
                {"sandwich_violations", sandwich_violations},
                {"seed", base.master}});
  return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out, std::optional<unsigned> threads,
                  std::optional<std::uint64_t> seed, bool timing) {
  std::ifstream in(config_path);
  if (!in) throw IoError("cannot open config " + config_path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("bad JSON in " + config_path + ": " + e.what());
  }
  auto cfg = ExperimentConfig::from_json(j);
  if (seed) cfg.master_seed = *seed;
  SweepOptions opts;
  opts.threads = threads ? *threads : j.value("threads", 1u);
  if (opts.threads == 0) opts.threads = std::max(1u, std::thread::hardware_concurrency());
  opts.record_timing = timing;
  auto result = run_sweep(cfg, opts);
  emit_outputs(result, out);
  for (const auto& s : compare_to_limit(result)) {
    std::cerr << "c=" << s.c << " freq=" << (s.frequency ? std::to_string(*s.frequency) : "n/a")
              << " predicted=" << (s.predicted ? std::to_string(*s.predicted) : "n/a") << " unknown=" << s.unknown
              << "\n";
  }
  if (result.aborted) {
    std::cerr << "sweep aborted: " << result.error << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rig-lab: random intersection graph experiments"};
  app.require_subcommand(1);

  ModelArgs gen_args;
  std::string gen_model = "rig", gen_format = "edges", gen_out;
  std::size_t gen_arity = 2;
  double gen_phat = 0.0, gen_lambda = 0.0;
  std::uint64_t gen_draws = 0;
  auto* gen = app.add_subcommand("gen", "sample a graph and write it as an edge list");
  gen_args.add_to(gen);
  gen->add_option("--model", gen_model, "rig | h | gstar | gstar-poisson")
      ->check(CLI::IsMember({"rig", "h", "gstar", "gstar-poisson"}));
  gen->add_option("--arity", gen_arity, "hyperedge size (2 or 3)");
  gen->add_option("--phat", gen_phat, "hyperedge probability for --model h");
  gen->add_option("--draws", gen_draws, "draw count for --model gstar");
  gen->add_option("--lambda", gen_lambda, "Poisson mean for --model gstar-poisson");
  gen->add_option("--format", gen_format, "edges | hyper")->check(CLI::IsMember({"edges", "hyper"}));
  gen->add_option("--out", gen_out, "output file (default stdout)");

  ModelArgs stats_args;
  std::optional<double> stats_omega;
  std::string stats_variant = "linear";
  std::optional<std::size_t> stats_tmax;
  auto* stats = app.add_subcommand("stats", "print S1, S2, S3, S1t and coupling parameters as JSON");
  stats_args.add_to(stats);
  stats->add_option("--omega", stats_omega, "omega (default max(2, ln ln n))");
  stats->add_option("--variant", stats_variant, "linear | exponential");
  stats->add_option("--t-max", stats_tmax, "largest t for S1t (default min(n, 12))");

  std::vector<std::string> check_files;
  std::string check_property, check_mode = "vertex";
  int check_k = 1;
  std::uint64_t check_budget = HamiltonicityOptions{}.budget, check_seed = 1;
  double check_gamma = AuditParams{}.gamma;
  std::size_t check_cutoff = AuditParams{}.degree_cutoff, check_samples = AuditParams{}.sample_count;
  auto* check = app.add_subcommand("check", "evaluate a graph property on edge-list files");
  check->add_option("files", check_files, "edge-list files")->required();
  check->add_option("--property", check_property, "mindeg | kconn | pm | hc | audit")
      ->required()
      ->check(CLI::IsMember({"mindeg", "kconn", "pm", "hc", "audit"}));
  check->add_option("--k", check_k, "k for mindeg, kconn and audit");
  check->add_option("--mode", check_mode, "vertex | edge")->check(CLI::IsMember({"vertex", "edge"}));
  check->add_option("--budget", check_budget, "Hamiltonicity effort budget");
  check->add_option("--seed", check_seed, "seed for hc and audit");
  check->add_option("--gamma", check_gamma, "audit exponent gamma");
  check->add_option("--cutoff", check_cutoff, "audit degree cutoff C");
  check->add_option("--samples", check_samples, "audit sets per size class");

  ModelArgs couple_args;
  std::optional<double> couple_omega;
  std::size_t couple_trials = 100;
  std::string couple_out;
  auto* couple = app.add_subcommand("couple", "run the coupling chain trials");
  couple_args.add_to(couple);
  couple->add_option("--omega", couple_omega, "omega (default max(2, ln ln n))");
  couple->add_option("--trials", couple_trials, "number of trials");
  couple->add_option("--out", couple_out, "directory for trials.jsonl and summary.json (default stdout)");

  ModelArgs coll_args;
  std::optional<double> coll_omega;
  std::size_t coll_trials = 100;
  std::string coll_out;
  auto* collector = app.add_subcommand("collector", "run the coupon-collector coupling trials");
  coll_args.add_to(collector);
  collector->add_option("--omega", coll_omega, "omega (default max(2, ln ln n))");
  collector->add_option("--trials", coll_trials, "number of trials");
  collector->add_option("--out", coll_out, "directory for trials.jsonl and summary.json (default stdout)");

  std::string sweep_config, sweep_out;
  std::optional<unsigned> sweep_threads;
  std::optional<std::uint64_t> sweep_seed;
  bool sweep_timing = false;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over a c grid");
  sweep->add_option("--config", sweep_config, "experiment JSON")->required();
  sweep->add_option("--out", sweep_out, "output directory")->required();
  sweep->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");
  sweep->add_option("--seed", sweep_seed, "override master_seed");
  sweep->add_flag("--timing", sweep_timing, "record per-trial elapsed_ms and timing.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*gen) return run_gen(gen_args, gen_model, gen_arity, gen_phat, gen_draws, gen_lambda, gen_format, gen_out);
    if (*stats) return run_stats(stats_args, stats_omega, stats_variant, stats_tmax);
    if (*check) {
      return run_check(check_files, check_property, check_k, check_mode, check_budget, check_seed, check_gamma,
                       check_cutoff, check_samples);
    }
    if (*couple) return run_couple(couple_args, couple_omega, couple_trials, couple_out);
    if (*collector) return run_collector(coll_args, coll_omega, coll_trials, coll_out);
    if (*sweep) return run_sweep_cmd(sweep_config, sweep_out, sweep_threads, sweep_seed, sweep_timing);
  } catch (const PlanningError& e) {
    std::cerr << "planning error: " << e.what() << "\n";
    return kExitPlanning;
  } catch (const OutOfRange& e) {
    std::cerr << "planning error: " << e.what() << "\n";
    return kExitPlanning;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
