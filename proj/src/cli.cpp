#include "subosc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include "subosc/errors.hpp"
#include "subosc/plot.hpp"
#include "subosc/spectral.hpp"
#include "subosc/verify.hpp"

namespace subosc::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDefaultSurvey = 500.0;

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

bool to_stdout(const std::string& path) { return path.empty() || path == "-"; }

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (to_stdout(path)) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string sidecar_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? path.substr(0, dot) : path) + ".knots.json";
}

Interval survey_window(const JobConfig& c, double default_half) {
  const double half = c.window.value_or(default_half);
  const double centre = c.interval.center();
  Interval w{centre - half, centre + half};
  w.lower = std::min(w.lower, c.interval.lower);
  w.upper = std::max(w.upper, c.interval.upper);
  return w;
}

// Uniform grid over the window with at least `density` samples per period of
// the highest frequency present.
std::vector<double> time_grid(const Interval& w, double omega_max, double density) {
  const double step = 2.0 * kPi / omega_max / density;
  const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(w.length() / step)));
  std::vector<double> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i] = i == n ? w.upper : w.lower + w.length() * static_cast<double>(i) / static_cast<double>(n);
  }
  return t;
}

BandpassFunction synthesize(const JobConfig& c, std::ostream& err, bool& infeasible) {
  const SynthesisPlan plan = build_plan(c);
  infeasible = !plan.feasible && !c.force;
  if (infeasible) {
    err << "plan is infeasible:";
    for (const auto& d : plan.diagnostics) err << "\n  " << d;
    err << "\n(use --force to synthesize anyway)\n";
  }
  return assemble(plan, c.target, true);
}

int cmd_plan(const JobConfig& c, std::ostream& out) {
  const SynthesisPlan plan = build_plan(c);
  write_text(c.out, to_json(plan).dump(2) + "\n", out);
  return plan.feasible ? kOk : kInfeasible;
}

int cmd_synth(const JobConfig& c, std::ostream& out, std::ostream& err) {
  bool infeasible = false;
  const BandpassFunction f = synthesize(c, err, infeasible);
  if (infeasible) return kInfeasible;
  const Interval window = survey_window(c, 1.5 * c.interval.half_width());
  if (!(c.grid_density >= kMinGridDensity)) {
    throw DomainError("grid density must be at least 50 samples per period");
  }
  const auto ts = time_grid(window, f.max_frequency(), c.grid_density);

  std::vector<Complex> values(ts.size());
  std::vector<double> log_err(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    values[i] = f(ts[i]);
    const double e = std::abs(values[i] - c.target(ts[i]));
    log_err[i] = e > 0.0 ? std::log10(e) : -std::numeric_limits<double>::infinity();
  }

  if (c.format == "csv") {
    std::ostringstream csv;
    csv << "t,re,im,abs,log10_abs_error\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      csv << format_number(ts[i]) << ',' << format_number(values[i].real()) << ','
          << format_number(values[i].imag()) << ',' << format_number(std::abs(values[i]))
          << ',' << format_number(log_err[i]) << '\n';
    }
    write_text(c.out, csv.str(), out);
  } else if (c.format == "json") {
    Json j;
    j["plan"] = to_json(f.plan());
    j["target"] = to_json(c.target);
    Json rows = Json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      rows.push_back({ts[i], values[i].real(), values[i].imag(), std::abs(values[i]), log_err[i]});
    }
    j["columns"] = {"t", "re", "im", "abs", "log10_abs_error"};
    j["rows"] = std::move(rows);
    write_text(c.out, j.dump() + "\n", out);
  } else if (c.format == "svg") {
    PlotSpec plot;
    plot.title = "bandpass synthesis over [" + format_number(window.lower) + ", " +
                 format_number(window.upper) + "]";
    plot.x_label = "t";
    plot.y_label = "value";
    PlotSeries re{"Re f", "#1f77b4", ts, {}}, im{"Im f", "#d62728", ts, {}};
    PlotSeries le{"log10|f - s|", "#000000", ts, log_err};
    for (const Complex& v : values) {
      re.y.push_back(v.real());
      im.y.push_back(v.imag());
    }
    plot.series = {re, im, le};
    const double w_min = f.plan().min_frequency();
    if (w_min > 0.0) {
      PlotSeries ref{"cos(w_min t) - 5", "#555555", ts, {}, true};
      for (double t : ts) ref.y.push_back(std::cos(w_min * t) - 5.0);
      plot.series.push_back(std::move(ref));
    }
    write_text(c.out, render_svg(plot), out);
  } else {
    throw DomainError("unknown format '" + c.format + "'");
  }
  return kOk;
}

int cmd_spectrum(const JobConfig& c, std::ostream& out, std::ostream& err) {
  bool infeasible = false;
  const BandpassFunction f = synthesize(c, err, infeasible);
  if (infeasible) return kInfeasible;
  const CompositeSpectrum spec = analytic_spectrum(f);
  double lo = spec.parts.front().lower(), hi = spec.parts.front().upper();
  for (const auto& p : spec.parts) {
    lo = std::min(lo, p.lower());
    hi = std::max(hi, p.upper());
  }
  const double margin = 0.1 * (hi - lo);
  lo -= margin;
  hi += margin;
  const std::size_t n = std::max<std::size_t>(c.spectrum_points, 2);
  std::vector<double> ws(n);
  std::vector<Complex> fs(n);
  for (std::size_t i = 0; i < n; ++i) {
    ws[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    fs[i] = spec(ws[i]);
  }
  const Json sidecar = spectrum_sidecar(spec);

  if (c.format == "csv") {
    std::ostringstream csv;
    csv << "omega,re,im,abs\n";
    for (std::size_t i = 0; i < n; ++i) {
      csv << format_number(ws[i]) << ',' << format_number(fs[i].real()) << ','
          << format_number(fs[i].imag()) << ',' << format_number(std::abs(fs[i])) << '\n';
    }
    write_text(c.out, csv.str(), out);
    if (!to_stdout(c.out)) write_text(sidecar_path(c.out), sidecar.dump(2) + "\n", out);
  } else if (c.format == "json") {
    Json j = sidecar;
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back({ws[i], fs[i].real(), fs[i].imag(), std::abs(fs[i])});
    }
    j["columns"] = {"omega", "re", "im", "abs"};
    j["rows"] = std::move(rows);
    write_text(c.out, j.dump() + "\n", out);
  } else if (c.format == "svg") {
    PlotSpec plot;
    plot.title = "spectrum magnitude |F(omega)|";
    plot.x_label = "omega";
    plot.y_label = "|F|";
    PlotSeries mag{"|F|", "#1f77b4", {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      mag.x.push_back(ws[i]);
      mag.y.push_back(std::abs(fs[i]));
    }
    plot.series = {mag};
    for (const auto& p : spec.parts) {
      for (std::size_t k = 0; k < p.pieces.knot_count(); ++k) {
        const double l = std::abs(p.pieces.left_limit(k));
        const double r = std::abs(p.pieces.right_limit(k));
        if (l != r) plot.markers.push_back({p.pieces.knot(k), l, r});
      }
    }
    write_text(c.out, render_svg(plot), out);
  } else {
    throw DomainError("unknown format '" + c.format + "'");
  }
  return kOk;
}

int cmd_verify(const JobConfig& c, std::ostream& out, std::ostream& err) {
  bool infeasible = false;
  const BandpassFunction f = synthesize(c, err, infeasible);
  if (infeasible) return kInfeasible;
  const VerificationReport report =
      verify(f, c.target, survey_window(c, kDefaultSurvey), c.grid_density);
  write_text(c.out, to_json(report).dump(2) + "\n", out);
  return kOk;
}

struct SweepRow {
  std::size_t order = 0;
  double delta = 0.0;
  double omega = 0.0;
  double half_width = 0.0;
  bool feasible = false;
  double eps1 = std::numeric_limits<double>::quiet_NaN();
  double eps2 = std::numeric_limits<double>::quiet_NaN();
  double measured = std::numeric_limits<double>::quiet_NaN();
  double dynamic_range = std::numeric_limits<double>::quiet_NaN();
  std::string note{};
};

void run_cell(const JobConfig& c, SweepRow& row) {
  const double centre = c.interval.center();
  const Interval iv{centre - row.half_width, centre + row.half_width};
  PlanOptions opt;
  opt.mode = c.mode;
  opt.superoscillation = c.superoscillation;
  opt.flatness_margin = c.flatness_margin;
  opt.search.max_order = c.n_max;
  try {
    const SynthesisPlan plan =
        make_plan(c.target, iv, row.omega, row.order, row.delta, opt, c.epsilon);
    row.feasible = plan.feasible;
    row.eps1 = plan.epsilon1;
    row.eps2 = plan.epsilon2;
    const BandpassFunction f = assemble(plan, c.target, true);
    row.measured = measure_error(f, c.target, iv, c.grid_density).sup_error;
    const double half = c.window.value_or(kDefaultSurvey);
    const Interval w{std::min(iv.lower, centre - half), std::max(iv.upper, centre + half)};
    row.dynamic_range = measure_dynamic_range(f, iv, w, c.grid_density);
    if (!plan.diagnostics.empty()) row.note = plan.diagnostics.front();
  } catch (const Error& e) {
    row.note = e.what();
  }
}

int cmd_sweep(const JobConfig& c, std::ostream& out) {
  const auto orders = c.sweep_orders.empty()
                          ? std::vector<std::size_t>{c.order.value_or(19)}
                          : c.sweep_orders;
  const auto deltas = c.sweep_deltas.empty() ? std::vector<double>{c.delta} : c.sweep_deltas;
  const auto omegas = c.sweep_omegas.empty() ? std::vector<double>{c.omega} : c.sweep_omegas;
  const auto widths = c.sweep_half_widths.empty()
                          ? std::vector<double>{c.interval.half_width()}
                          : c.sweep_half_widths;
  std::vector<SweepRow> rows;
  for (auto n : orders)
    for (double d : deltas)
      for (double w : omegas)
        for (double a : widths) {
          SweepRow row;
          row.order = n;
          row.delta = d;
          row.omega = w;
          row.half_width = a;
          rows.push_back(std::move(row));
        }

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, rows.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < workers; ++k) {
      pool.emplace_back([&, k] {
        for (std::size_t i = k; i < rows.size(); i += workers) run_cell(c, rows[i]);
      });
    }
  }

  std::ostringstream csv;
  csv << "order,delta,omega,half_width,feasible,eps1_bound,eps2_bound,measured_error,"
         "dynamic_range_orders,note\n";
  for (const auto& r : rows) {
    std::string note = r.note;
    std::replace(note.begin(), note.end(), ',', ';');
    std::replace(note.begin(), note.end(), '"', '\'');
    csv << r.order << ',' << format_number(r.delta) << ',' << format_number(r.omega) << ','
        << format_number(r.half_width) << ',' << (r.feasible ? "true" : "false") << ','
        << format_number(r.eps1) << ',' << format_number(r.eps2) << ','
        << format_number(r.measured) << ',' << format_number(r.dynamic_range) << ",\"" << note
        << "\"\n";
  }
  write_text(c.out, csv.str(), out);
  return kOk;
}

}  // namespace

Json to_json(const JobConfig& c) {
  Json j;
  j["command"] = c.command;
  j["preset"] = optional_json(c.preset);
  j["target"] = to_json(c.target);
  j["interval"] = {c.interval.lower, c.interval.upper};
  j["omega"] = c.omega;
  j["delta"] = c.delta;
  j["order"] = optional_json(c.order);
  j["epsilon"] = optional_json(c.epsilon);
  j["mode"] = to_string(c.mode);
  j["superoscillation"] = c.superoscillation;
  j["band"] = c.band ? Json::array({c.band->first, c.band->second}) : Json(nullptr);
  j["flatness_margin"] = c.flatness_margin;
  j["grid_density"] = c.grid_density;
  j["window"] = optional_json(c.window);
  j["spectrum_points"] = c.spectrum_points;
  j["n_max"] = c.n_max;
  j["force"] = c.force;
  j["out"] = c.out;
  j["format"] = c.format;
  j["sweep"] = {{"orders", c.sweep_orders},
                {"deltas", c.sweep_deltas},
                {"omegas", c.sweep_omegas},
                {"half_widths", c.sweep_half_widths}};
  return j;
}

JobConfig job_from_json(const Json& j) {
  JobConfig c;
  try {
    c.command = j.value("command", c.command);
    c.preset = optional_from<std::string>(j, "preset");
    if (c.preset) c = apply_preset(c, *c.preset);
    if (j.contains("target")) c.target = target_from_json(j["target"]);
    if (j.contains("interval")) {
      const auto& iv = j["interval"];
      c.interval = {iv.at(0).get<double>(), iv.at(1).get<double>()};
    }
    c.omega = j.value("omega", c.omega);
    c.delta = j.value("delta", c.delta);
    if (j.contains("order")) c.order = optional_from<std::size_t>(j, "order");
    if (j.contains("epsilon")) c.epsilon = optional_from<double>(j, "epsilon");
    if (j.contains("mode")) c.mode = split_mode_from_string(j["mode"].get<std::string>());
    c.superoscillation = j.value("superoscillation", c.superoscillation);
    if (j.contains("band") && !j["band"].is_null()) {
      c.band = std::make_pair(j["band"].at(0).get<double>(), j["band"].at(1).get<double>());
    }
    c.flatness_margin = j.value("flatness_margin", c.flatness_margin);
    c.grid_density = j.value("grid_density", c.grid_density);
    if (j.contains("window")) c.window = optional_from<double>(j, "window");
    c.spectrum_points = j.value("spectrum_points", c.spectrum_points);
    c.n_max = j.value("n_max", c.n_max);
    c.force = j.value("force", c.force);
    c.out = j.value("out", c.out);
    c.format = j.value("format", c.format);
    if (j.contains("sweep")) {
      const auto& s = j["sweep"];
      c.sweep_orders = s.value("orders", c.sweep_orders);
      c.sweep_deltas = s.value("deltas", c.sweep_deltas);
      c.sweep_omegas = s.value("omegas", c.sweep_omegas);
      c.sweep_half_widths = s.value("half_widths", c.sweep_half_widths);
    }
  } catch (const Json::exception& e) {
    throw DomainError(std::string("invalid job configuration: ") + e.what());
  }
  return c;
}

JobConfig apply_preset(JobConfig c, const std::string& name) {
  if (name != "fig1") throw DomainError("unknown preset '" + name + "'");
  c.preset = name;
  c.target = AnalyticTarget::constant(1.0);
  c.interval = {-1.0, 1.0};
  c.omega = 2.0 * kPi;
  c.delta = 4.0;
  c.order = 19;
  c.mode = SplitMode::one_sided;
  c.superoscillation = false;
  c.band.reset();
  return c;
}

SynthesisPlan build_plan(const JobConfig& c) {
  PlanOptions opt;
  opt.mode = c.mode;
  opt.superoscillation = c.superoscillation;
  opt.flatness_margin = c.flatness_margin;
  opt.search.max_order = c.n_max;
  if (c.band) {
    const auto [w1, w2] = *c.band;
    if (c.order) {
      const BandMapping map = band_mapping(w1, w2, c.delta, c.superoscillation);
      opt.time_scale = map.time_scale;
      return make_plan(c.target, c.interval, map.carrier, *c.order, map.dilation, opt, c.epsilon);
    }
    if (!c.epsilon) throw DomainError("a band needs either an order or an epsilon");
    return plan_for_band(c.target, c.interval, *c.epsilon, w1, w2, c.delta, opt);
  }
  if (c.order) return make_plan(c.target, c.interval, c.omega, *c.order, c.delta, opt, c.epsilon);
  if (c.epsilon) return plan_synthesis(c.target, c.interval, *c.epsilon, c.omega, c.delta, opt);
  throw DomainError("either an order or an epsilon is required");
}

int run_job(const JobConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "plan") return cmd_plan(c, out);
    if (c.command == "synth") return cmd_synth(c, out, err);
    if (c.command == "spectrum") return cmd_spectrum(c, out, err);
    if (c.command == "verify") return cmd_verify(c, out, err);
    if (c.command == "sweep") return cmd_sweep(c, out);
    err << "unknown command '" << c.command << "'\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const SynthesisError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const Error& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  }
}

}  // namespace subosc::cli
