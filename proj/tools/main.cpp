#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tropmirror/diagnostics.hpp"
#include "tropmirror_cli/config.hpp"
#include "tropmirror_cli/run.hpp"

namespace cli = tropmirror::cli;

int main(int argc, char** argv) {
  CLI::App app{"tropmirror: tropical mirror symmetry toolkit"};
  std::string command, t_text, window_text;
  cli::JobConfig config;

  app.add_option("command", command, "subdivide | tropical | amoeba | verify | hilbert")->required();
  app.add_option("--input", config.input, "fan JSON")->required();
  app.add_option("--out", config.out, "output directory")->required();
  app.add_option("--t", t_text, "scale t > 1, or e^X");
  app.add_option("--s", config.s, "deformation parameter in [0,1]");
  app.add_option("--eps", config.eps, "cutoff width");
  app.add_option("--J", config.J, "maximal twist");
  app.add_option("--grid", config.grid, "moduli per fiber axis");
  app.add_option("--window", window_text, "x0,x1,y0,y1 in rescaled coordinates");
  app.add_option("--seed", config.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kBadInput;
  }

  tropmirror::set_diagnostic_sink([](const std::string& m) { std::cerr << "warning: " << m << "\n"; });
  try {
    config.command = cli::parse_command(command);
    if (!t_text.empty()) config.log_t = cli::parse_log_t(t_text);
    if (!window_text.empty()) config.window = cli::parse_window(window_text);
  } catch (const tropmirror::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kBadInput;
  }
  return cli::run(config, std::cout, std::cerr);
}
