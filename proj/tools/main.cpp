#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "config.hpp"
#include "exotica/errors.hpp"
#include "experiments.hpp"

int main(int argc, char** argv) {
  using namespace exotica;
  CLI::App app{"Desk-scale checks for positive definite functions, group ring seminorms and congruence quotients"};
  app.require_subcommand(1, 1);

  std::string config_path, out_path, format = "csv";
  std::uint64_t seed = 42;
  unsigned threads = 1;
  std::vector<std::string> params;
  app.add_option("--config", config_path, "flat key = value parameter file");
  app.add_option("--out", out_path, "write the artifact here instead of stdout");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "seed for randomized sampling");
  app.add_option("--threads", threads, "worker threads for grid points")->check(CLI::Range(1u, 1024u));
  app.add_option("--param", params, "override one parameter, key=value (repeatable)");
  app.fallthrough();

  for (const auto& name : cli::subcommands()) app.add_subcommand(name, "run the " + name + " experiment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    cli::Config cfg(name);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file " + config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      cfg.load_text(buf.str());
    }
    for (const auto& p : params) cfg.set(p);

    auto outcome = cli::run_experiment(name, cfg, format == "json" ? cli::Format::Json : cli::Format::Csv, seed, threads);
    if (out_path.empty()) {
      std::cout << outcome.body;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + out_path);
      out << outcome.body;
    }
    return outcome.status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
