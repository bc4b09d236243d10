#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pacs/run_config.hpp"

namespace {

constexpr const char* kCommands[] = {
    "fig1", "fig2", "fig3",  "fig4",  "fig5",  "fig6",   "fig7",  "fig8",
    "fig9", "fig10", "fig11", "fig12", "verify", "stats", "pnd",  "weight",
    "sweep"};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "PA-SIPCS toolkit: photon-added coherent states for shape-invariant "
      "systems (figure data, statistics, weights, verification)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::vector<std::string> params;
  bool emit_plot = false;

  std::string chosen;
  for (const char* name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->callback([&chosen, name] { chosen = name; });
    sub->add_option("--config", config_path, "flat key=value config file");
    sub->add_option("--out", out_path, "output CSV path");
    sub->add_option("--param", params, "key=value override (repeatable)");
    sub->add_flag("--emit-plot-script", emit_plot,
                  "write a gnuplot script next to the CSV");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    pacs::cli::RunConfig cfg = pacs::cli::default_config(chosen);
    if (!config_path.empty())
      pacs::cli::load_config_file(cfg, config_path);
    for (const std::string& p : params) {
      const std::size_t eq = p.find('=');
      if (eq == std::string::npos)
        throw pacs::cli::ConfigError("--param expects key=value, got '" + p +
                                     "'");
      pacs::cli::apply_override(cfg, p.substr(0, eq), p.substr(eq + 1));
    }
    if (!out_path.empty())
      cfg.output_path = out_path;
    cfg.emit_plot_script = emit_plot;
    return pacs::cli::run_command(cfg, std::cout);
  } catch (const pacs::cli::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
