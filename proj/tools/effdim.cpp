#include <iostream>

#include <CLI11.hpp>

#include "effdim/commands.hpp"

int main(int argc, char** argv) {
  using effdim::RunConfig;

  CLI::App app{"Effective dimensions of path semigroups of quivers"};
  app.require_subcommand(1);

  RunConfig cfg;
  bool json = false;
  std::string labels = "primes";
  std::size_t truncate = 0, max_len = 0;

  auto common = [&](CLI::App* sub, bool quiver_required) {
    auto* opt = sub->add_option("quiver", cfg.quiver_path, "quiver file");
    if (quiver_required) opt->required();
    sub->add_option("--truncate,-N", truncate, "truncation N (paths of length >= N vanish)");
    sub->add_flag("--json", json, "machine-readable output");
    sub->add_option("--out,-o", cfg.out_path, "write output to FILE");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  };

  auto* analyze = app.add_subcommand("analyze", "per-vertex lengths, K(x), d_x and totals");
  common(analyze, true);

  auto* construct = app.add_subcommand("construct", "write an effective representation as JSON");
  common(construct, true);
  construct->add_option("--labels", labels, "coefficients of the truncated construction")
      ->check(CLI::IsMember({"primes", "transcendental"}));

  auto* verify = app.add_subcommand("verify", "build (or load) a representation and check injectivity");
  common(verify, true);
  verify->add_option("--max-len", max_len, "longest path checked for the untruncated semigroup");
  verify->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--rep", cfg.rep_path, "representation JSON to check instead of building one");
  verify->add_option("--labels", labels, "coefficients of the truncated construction")
      ->check(CLI::IsMember({"primes", "transcendental"}));

  auto* stabilize = app.add_subcommand("stabilize", "affine law eff.dim(P_N) = aN + b");
  common(stabilize, true);

  auto* formula = app.add_subcommand("formula", "closed form for type-A quivers");
  common(formula, false);
  formula->add_option("--segments", cfg.segments, "run sizes n_1,...,n_r")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : effdim::exit_code::input_error;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  auto* sub = app.get_subcommands().front();
  if (sub->count("--truncate")) cfg.truncate = truncate;
  if (sub->get_option_no_throw("--max-len") && sub->count("--max-len")) cfg.max_len = max_len;
  cfg.format = json ? effdim::OutputFormat::json : effdim::OutputFormat::text;
  cfg.labels = labels == "transcendental" ? effdim::LabelField::transcendental : effdim::LabelField::primes;

  return effdim::run_command(cfg, std::cout, std::cerr);
}
