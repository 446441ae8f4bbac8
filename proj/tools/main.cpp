#include <cstdlib>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "codedomain/errors.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace {

using cli::RunConfig;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || v[0] == '-') throw cli::ConfigError(std::string(name) + " must be a non-negative integer");
  return x;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool searches) {
  sub->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
  if (searches) {
    sub->add_option("--seed", cfg.budget.rng_seed, "RNG seed")->capture_default_str();
    sub->add_option("--max-nodes", cfg.budget.max_nodes, "Search node budget (env CODEDOMAIN_MAX_NODES)")
        ->capture_default_str();
    sub->add_option("--max-millis", cfg.budget.max_millis, "Search time budget in ms (env CODEDOMAIN_MAX_MILLIS)")
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    cfg.budget.max_nodes = env_u64("CODEDOMAIN_MAX_NODES", cfg.budget.max_nodes);
    cfg.budget.max_millis = env_u64("CODEDOMAIN_MAX_MILLIS", cfg.budget.max_millis);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfig;
  }

  CLI::App app{"Code points, bound curves and effective-set approximations"};
  app.set_version_flag("--version", std::string("codedomain ") + CODEDOMAIN_VERSION);
  app.require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "Tabulate bound curves");
  bounds->add_option("--q", cfg.q, "Alphabet size")->capture_default_str();
  bounds->add_option("--grid", cfg.grid, "Number of delta samples in [0, 1]")->capture_default_str();
  bounds->add_option("--precision", cfg.precision, "Enclosure precision in bits")->capture_default_str();
  bounds->add_option("--curves", cfg.curves, "Comma list of vg, gv, singleton, hamming, plotkin")->capture_default_str();
  bounds->add_flag("--svg", cfg.svg, "Also write an SVG overlay");
  add_common(bounds, cfg, false);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate a point cloud of code parameters");
  enumerate->add_option("--q", cfg.q, "Alphabet size")->capture_default_str();
  enumerate->add_option("--nmax", cfg.n_max, "Largest code length")->capture_default_str();
  enumerate->add_option("--strategy", cfg.strategy,
                        "Comma list of exhaustive, exhaustive-linear, greedy, random, seeded-family")
      ->capture_default_str();
  enumerate->add_flag("--svg", cfg.svg, "Also write an SVG scatter");
  add_common(enumerate, cfg, true);

  auto* sample = app.add_subcommand("sample", "Minimum distances of random codes");
  sample->add_option("--q", cfg.q, "Alphabet size")->capture_default_str();
  sample->add_option("--n", cfg.n, "Code length")->capture_default_str();
  sample->add_option("--m", cfg.m, "Cardinality")->capture_default_str();
  sample->add_option("--trials", cfg.trials, "Number of random codes")->capture_default_str();
  add_common(sample, cfg, true);

  auto* oracle = app.add_subcommand("oracle", "Exact existence or best-distance search");
  oracle->add_option("--q", cfg.q, "Alphabet size")->capture_default_str();
  oracle->add_option("--n", cfg.n, "Code length")->capture_default_str();
  oracle->add_option("--m", cfg.m, "Cardinality")->capture_default_str();
  oracle->add_option("--d", cfg.d, "Decide existence of an (n, m, d) code instead of maximizing d");
  oracle->add_flag("--linear", cfg.linear, "Search systematic linear codes (m must be a power of q)");
  add_common(oracle, cfg, true);

  auto* spoil = app.add_subcommand("spoil", "Apply lengthen/puncture/shorten steps to a code file");
  spoil->add_option("--code", cfg.code_path, "Code file ('q n m' header, one word per line)")->required();
  spoil->add_option("--ops", cfg.ops, "Comma list of lengthen, puncture, shorten")->required();
  add_common(spoil, cfg, false);

  auto* realize = app.add_subcommand("realize", "Codes of growing length sharing one code point");
  realize->add_option("--q", cfg.q, "Alphabet size")->capture_default_str();
  realize->add_option("--target", cfg.target, "Target point 'R,delta' as rationals")->required();
  realize->add_option("--count", cfg.count, "Number of codes")->capture_default_str();
  add_common(realize, cfg, true);

  auto* strip = app.add_subcommand("strip", "N-strip of a decreasing curve");
  strip->add_option("--curve", cfg.curve, "synthetic:diag, synthetic:const:<r>, vg:<q>, gv:<q>, polyline:...")
      ->required();
  strip->add_option("--N", cfg.grid_n, "Grid resolution")->capture_default_str();
  strip->add_option("--timeout-ms", cfg.timeout_ms, "Wall-clock limit")->capture_default_str();
  strip->add_flag("--svg", cfg.svg, "Also write an SVG picture");
  add_common(strip, cfg, false);

  auto* approx = app.add_subcommand("approx", "Exceptional balls of the domain below a curve");
  approx->add_option("--curve", cfg.curve, "synthetic:diag, synthetic:const:<r>, vg:<q>, gv:<q>, polyline:...")
      ->required();
  approx->add_option("--N", cfg.grid_n, "Grid resolution")->capture_default_str();
  approx->add_option("--timeout-ms", cfg.timeout_ms, "Wall-clock limit")->capture_default_str();
  approx->add_flag("--svg", cfg.svg, "Also write an SVG picture");
  add_common(approx, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfig;
  }

  const std::map<CLI::App*, std::pair<const char*, int (*)(const RunConfig&)>> dispatch{
      {bounds, {"bounds", cli::cmd_bounds}},     {enumerate, {"enumerate", cli::cmd_enumerate}},
      {sample, {"sample", cli::cmd_sample}},     {oracle, {"oracle", cli::cmd_oracle}},
      {spoil, {"spoil", cli::cmd_spoil}},        {realize, {"realize", cli::cmd_realize}},
      {strip, {"strip", cli::cmd_strip}},        {approx, {"approx", cli::cmd_approx}},
  };
  auto it = dispatch.find(app.get_subcommands().front());
  cfg.command = it->second.first;
  try {
    int code = it->second.second(cfg);
    if (code == cli::kExitPartial) std::cerr << cfg.command << ": partial results (budget or timeout)\n";
    return code;
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const codedomain::ContractViolation& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const codedomain::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return cli::kExitPartial;
  } catch (const codedomain::InternalContractError& e) {
    std::cerr << "internal contract violation: " << e.what() << "\n";
    return cli::kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
