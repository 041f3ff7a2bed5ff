// subosc: command-line front end for bandpass / bandlimited synthesis.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subosc/cli.hpp"
#include "subosc/errors.hpp"

namespace {

using subosc::cli::JobConfig;

subosc::AnalyticTarget parse_target(const std::string& spec, const std::vector<double>& params) {
  if (!spec.empty() && spec.front() == '{') {
    return subosc::target_from_json(subosc::Json::parse(spec));
  }
  subosc::Json j;
  j["kind"] = spec;
  auto need = [&](std::size_t n) {
    if (params.size() < n) {
      throw subosc::DomainError("target '" + spec + "' needs " + std::to_string(n) +
                                " --target-param value(s)");
    }
  };
  if (spec == "constant") {
    j["value"] = subosc::Json::array({params.empty() ? 1.0 : params[0],
                                      params.size() > 1 ? params[1] : 0.0});
  } else if (spec == "complex_exponential") {
    need(1);
    j["rate"] = subosc::Json::array({params[0], params.size() > 1 ? params[1] : 0.0});
  } else if (spec == "sinusoid") {
    need(1);
    j["frequency"] = params[0];
  } else if (spec == "polynomial") {
    need(1);
    j["coefficients"] = params;
  } else if (spec == "gaussian") {
    need(1);
    j["width"] = params[0];
  }
  return subosc::target_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesis and verification of sub- and superoscillatory functions"};
  app.require_subcommand(1, 1);

  std::string config_path, preset, target_spec, mode, emit_config;
  std::vector<double> target_params, interval, band;
  double omega = 0, delta = 0, epsilon = 0, density = 0, window = 0, margin = 0;
  std::size_t order = 0, points = 0;
  std::vector<std::size_t> sweep_orders;
  std::vector<double> sweep_deltas, sweep_omegas, sweep_widths;
  JobConfig job;

  struct Flags {
    CLI::Option* preset;
    CLI::Option* target;
    CLI::Option* target_params;
    CLI::Option* omega;
    CLI::Option* delta;
    CLI::Option* order;
    CLI::Option* interval;
    CLI::Option* epsilon;
    CLI::Option* density;
    CLI::Option* window;
    CLI::Option* mode;
    CLI::Option* band;
    CLI::Option* margin;
    CLI::Option* points;
    CLI::Option* superosc;
    CLI::Option* force;
    CLI::Option* out;
    CLI::Option* format;
  };
  std::vector<std::pair<CLI::App*, Flags>> commands;

  for (const char* name : {"plan", "synth", "verify", "spectrum", "sweep"}) {
    CLI::App* sub = app.add_subcommand(name);
    Flags f{};
    sub->add_option("--config", config_path, "JSON job configuration; flags override it");
    sub->add_option("--emit-config", emit_config, "write the effective configuration as JSON");
    f.preset = sub->add_option("--preset", preset, "named parameter set (fig1)");
    f.target = sub->add_option("--target", target_spec,
                               "target kind (constant, complex_exponential, sinusoid, "
                               "polynomial, gaussian) or a JSON record");
    f.target_params = sub->add_option("--target-param", target_params, "target parameters");
    f.omega = sub->add_option("--omega", omega, "carrier frequency (rad/unit-time)");
    f.delta = sub->add_option("--delta", delta, "envelope dilation factor");
    f.order = sub->add_option("--order", order, "polynomial degree N");
    f.interval = sub->add_option("--interval", interval, "approximation interval A B")->expected(2);
    f.epsilon = sub->add_option("--epsilon", epsilon, "total error budget");
    f.density = sub->add_option("--grid-density", density, "samples per period of omega_max");
    f.window = sub->add_option("--window", window, "survey half-width about the interval centre");
    f.mode = sub->add_option("--mode", mode, "one-sided | two-sided-half | two-sided-conj")
                 ->check(CLI::IsMember({"one-sided", "two-sided-half", "two-sided-conj"}));
    f.band = sub->add_option("--band", band, "target band W1 W2")->expected(2);
    f.margin = sub->add_option("--flatness-margin", margin, "a <= margin (N+1) delta");
    f.points = sub->add_option("--points", points, "spectrum sample count");
    f.superosc = sub->add_flag("--superoscillation", job.superoscillation,
                               "allow a band containing omega = 0");
    f.force = sub->add_flag("--force", job.force, "synthesize even if the plan is infeasible");
    f.out = sub->add_option("--out", job.out, "output path (default stdout)");
    f.format = sub->add_option("--format", job.format, "csv | json | svg")
                   ->check(CLI::IsMember({"csv", "json", "svg"}));
    if (std::string(name) == "sweep") {
      sub->add_option("--orders", sweep_orders, "N values");
      sub->add_option("--deltas", sweep_deltas, "delta values");
      sub->add_option("--omegas", sweep_omegas, "Omega values");
      sub->add_option("--half-widths", sweep_widths, "interval half-widths");
    }
    commands.emplace_back(sub, f);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? subosc::cli::kOk : subosc::cli::kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const Flags* f = nullptr;
    for (const auto& [s, flags] : commands) {
      if (s == sub) f = &flags;
    }

    JobConfig c;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "I/O error: cannot read '" << config_path << "'\n";
        return subosc::cli::kIoFailure;
      }
      c = subosc::cli::job_from_json(subosc::Json::parse(in));
    }
    c.command = sub->get_name();
    if (f->preset->count()) c = subosc::cli::apply_preset(c, preset);
    if (f->target->count()) c.target = parse_target(target_spec, target_params);
    if (f->omega->count()) c.omega = omega;
    if (f->delta->count()) c.delta = delta;
    if (f->order->count()) c.order = order;
    if (f->interval->count()) c.interval = {interval[0], interval[1]};
    if (f->epsilon->count()) {
      c.epsilon = epsilon;
      if (!f->order->count() && !c.preset) c.order.reset();
    }
    if (f->density->count()) c.grid_density = density;
    if (f->window->count()) c.window = window;
    if (f->mode->count()) c.mode = subosc::split_mode_from_string(mode);
    if (f->band->count()) c.band = std::make_pair(band[0], band[1]);
    if (f->margin->count()) c.flatness_margin = margin;
    if (f->points->count()) c.spectrum_points = points;
    if (f->superosc->count()) c.superoscillation = true;
    if (f->force->count()) c.force = true;
    if (f->out->count()) c.out = job.out;
    if (f->format->count()) c.format = job.format;
    if (!sweep_orders.empty()) c.sweep_orders = sweep_orders;
    if (!sweep_deltas.empty()) c.sweep_deltas = sweep_deltas;
    if (!sweep_omegas.empty()) c.sweep_omegas = sweep_omegas;
    if (!sweep_widths.empty()) c.sweep_half_widths = sweep_widths;
    if (const char* cap = std::getenv("SUBOSC_NMAX")) c.n_max = std::stoul(cap);

    if (!emit_config.empty()) {
      std::ofstream cfg(emit_config);
      if (!cfg) {
        std::cerr << "I/O error: cannot write '" << emit_config << "'\n";
        return subosc::cli::kIoFailure;
      }
      cfg << subosc::cli::to_json(c).dump(2) << '\n';
    }
    return subosc::cli::run_job(c, std::cout, std::cerr);
  } catch (const subosc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return subosc::cli::kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return subosc::cli::kUsage;
  }
}
