#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "subosc/cli.hpp"
#include "subosc/errors.hpp"

using namespace subosc;
using namespace subosc::cli;
using std::numbers::pi;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const JobConfig& c) {
  std::ostringstream out, err;
  const int code = run_job(c, out, err);
  return {code, out.str(), err.str()};
}

JobConfig fig1(const std::string& command) {
  JobConfig c;
  c.command = command;
  return apply_preset(c, "fig1");
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      if (cell == "-inf") row.push_back(-std::numeric_limits<double>::infinity());
      else row.push_back(std::stod(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "subosc_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("job configuration round-trips through JSON") {
  JobConfig c;
  c.command = "sweep";
  c.target = AnalyticTarget(target::Polynomial{{{1.0, 0.5}, {0.0, -2.0}}}, 0.25);
  c.interval = {-2.0, 3.0};
  c.omega = 9.5;
  c.delta = 2.5;
  c.order = 12;
  c.epsilon = 1e-3;
  c.mode = SplitMode::two_sided_half;
  c.band = std::make_pair(3.0, 5.0);
  c.flatness_margin = 0.2;
  c.grid_density = 80.0;
  c.window = 40.0;
  c.spectrum_points = 101;
  c.n_max = 77;
  c.force = true;
  c.out = "result.csv";
  c.format = "json";
  c.sweep_orders = {5, 9};
  c.sweep_deltas = {1.0, 2.0};
  c.sweep_omegas = {6.0};
  c.sweep_half_widths = {0.5, 1.0};
  CHECK(job_from_json(Json::parse(to_json(c).dump())) == c);

  const JobConfig preset = fig1("verify");
  CHECK(job_from_json(Json::parse(to_json(preset).dump())) == preset);
  CHECK(job_from_json(Json::parse(to_json(JobConfig{}).dump())) == JobConfig{});
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"interval": "wide"})")), DomainError);
}

TEST_CASE("the published preset is pinned") {
  const JobConfig c = fig1("plan");
  CHECK(c.interval == Interval{-1.0, 1.0});
  CHECK(c.order == 19u);
  CHECK(c.omega == 2.0 * pi);
  CHECK(c.delta == 4.0);
  CHECK(c.target == AnalyticTarget::constant(1.0));
  CHECK(c.mode == SplitMode::one_sided);
  CHECK_THROWS_AS(apply_preset(JobConfig{}, "fig2"), DomainError);

  const Run r = run(c);
  CHECK(r.code == kOk);
  CHECK(r.out == read_file(std::filesystem::path(SUBOSC_TEST_DATA_DIR) / "fig1_plan.json"));
}

TEST_CASE("outputs are deterministic") {
  for (const char* command : {"plan", "synth", "spectrum", "verify"}) {
    const JobConfig c = fig1(command);
    const Run a = run(c);
    const Run b = run(c);
    INFO(command);
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  JobConfig json = fig1("synth");
  json.format = "json";
  CHECK(run(json).out == run(json).out);
  JobConfig sweep = fig1("sweep");
  sweep.sweep_deltas = {1.0, 2.0, 4.0};
  sweep.window = 20.0;
  CHECK(run(sweep).out == run(sweep).out);
}

TEST_CASE("synthesized waveform meets the error claim inside the interval") {
  std::string header;
  const auto rows = parse_csv(run(fig1("synth")).out, &header);
  CHECK(header == "t,re,im,abs,log10_abs_error");
  std::size_t inside = 0;
  for (const auto& row : rows) {
    REQUIRE(row.size() == 5);
    if (row[0] > -1.0 && row[0] < 1.0) {
      ++inside;
      CHECK(row[4] < -2.0);
      CHECK(std::hypot(row[1] - 1.0, row[2]) < 1e-2);
    }
  }
  CHECK(inside > 100);
  CHECK(rows.front()[0] == -1.5);
  CHECK(rows.back()[0] == 1.5);
}

TEST_CASE("wide synthesis window shows the dynamic range") {
  JobConfig c = fig1("synth");
  c.window = 500.0;
  const auto rows = parse_csv(run(c).out);
  double inside = 0.0, overall = 0.0;
  for (const auto& row : rows) {
    overall = std::max(overall, std::abs(row[1]));
    if (row[0] >= -1.0 && row[0] <= 1.0) inside = std::max(inside, std::abs(row[1]));
  }
  CHECK(overall / inside >= 1e20);
}

TEST_CASE("carrier-free synthesis emits the bare envelope") {
  JobConfig c;
  c.command = "synth";
  c.target = AnalyticTarget::constant(1.0);
  c.order = 0;
  c.omega = 0.0;
  c.delta = 2.0;
  c.superoscillation = true;
  c.force = true;
  c.window = 30.0;
  const Run r = run(c);
  REQUIRE(r.code == kOk);
  for (const auto& row : parse_csv(r.out)) {
    const double x = pi * row[0] / 2.0;
    const double expected = row[0] == 0.0 ? 1.0 : std::sin(x) / x;
    CHECK(std::abs(row[1] - expected) <= 1e-15);
    CHECK(row[2] == 0.0);
  }
}

TEST_CASE("spectrum export is zero outside the band and has a sidecar") {
  JobConfig c = fig1("spectrum");
  const auto path = scratch("fig1_spectrum.csv");
  c.out = path.string();
  REQUIRE(run(c).code == kOk);
  std::string header;
  const auto rows = parse_csv(read_file(path), &header);
  CHECK(header == "omega,re,im,abs");
  CHECK(rows.size() == 2001);
  std::size_t outside = 0;
  for (const auto& row : rows) {
    if (row[0] < 7.0 * pi / 4.0 || row[0] > 9.0 * pi / 4.0) {
      ++outside;
      CHECK(row[1] == 0.0);
      CHECK(row[2] == 0.0);
    }
  }
  CHECK(outside > 100);

  const auto sidecar = Json::parse(read_file(scratch("fig1_spectrum.knots.json")));
  REQUIRE(sidecar["parts"].size() == 1);
  CHECK_FALSE(sidecar["parts"][0]["discontinuities"].empty());
  CHECK(sidecar["parts"][0]["knots"].size() == 21);
}

TEST_CASE("verification classifies the published function") {
  const Run r = run(fig1("verify"));
  REQUIRE(r.code == kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["classification"] == "suboscillatory");
  CHECK(j["sup_error"].get<double>() < 1e-2);
  CHECK(j["periods"].get<double>() == doctest::Approx(1.75));
  CHECK(j["dynamic_range_orders"].get<double>() >= 20.0);
  CHECK(j["window"] == Json::array({-500.0, 500.0}));
}

TEST_CASE("sweeping the dilation reduces the error") {
  JobConfig c = fig1("sweep");
  c.sweep_deltas = {1.0, 2.0, 4.0, 8.0};
  c.window = 10.0;
  const Run r = run(c);
  REQUIRE(r.code == kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "order,delta,omega,half_width,feasible,eps1_bound,eps2_bound,measured_error,"
        "dynamic_range_orders,note");
  std::vector<double> errors, deltas;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream s(line);
    std::string cell;
    while (std::getline(s, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() >= 9);
    CHECK(cells[0] == "19");
    deltas.push_back(std::stod(cells[1]));
    errors.push_back(std::stod(cells[7]));
  }
  REQUIRE(errors.size() == 4);
  CHECK(deltas == std::vector<double>{1.0, 2.0, 4.0, 8.0});
  for (std::size_t i = 1; i < errors.size(); ++i) CHECK(errors[i] <= errors[i - 1]);
}

TEST_CASE("exit codes") {
  SUBCASE("infeasible plan") {
    JobConfig c = fig1("plan");
    c.interval = {-0.1, 0.1};
    CHECK(run(c).code == kInfeasible);
    c.command = "synth";
    const Run r = run(c);
    CHECK(r.code == kInfeasible);
    CHECK(r.err.find("--force") != std::string::npos);
    CHECK(r.out.empty());
    c.force = true;
    CHECK(run(c).code == kOk);
  }
  SUBCASE("carrier inside the half band") {
    JobConfig c = fig1("plan");
    c.omega = pi / 8.0;
    const Run r = run(c);
    CHECK(r.code == kInfeasible);
    CHECK(r.err.find("not bandpass") != std::string::npos);
  }
  SUBCASE("coefficient overflow") {
    JobConfig c;
    c.command = "synth";
    c.target = AnalyticTarget(target::ComplexExponential{{1e5, 0.0}});
    c.order = 150;
    c.force = true;
    CHECK(run(c).code == kNumericFailure);
  }
  SUBCASE("unwritable output") {
    JobConfig c = fig1("plan");
    c.out = "/nonexistent-directory/plan.json";
    CHECK(run(c).code == kIoFailure);
  }
  SUBCASE("unknown command") {
    JobConfig c = fig1("plot");
    CHECK(run(c).code == kUsage);
  }
}

TEST_CASE("svg and json formats render") {
  JobConfig c = fig1("synth");
  c.format = "svg";
  const Run svg = run(c);
  CHECK(svg.code == kOk);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(svg.out.find("</svg>") != std::string::npos);
  c.command = "spectrum";
  c.format = "json";
  const Json j = Json::parse(run(c).out);
  CHECK(j["columns"] == Json::array({"omega", "re", "im", "abs"}));
  CHECK(j["rows"].size() == 2001);
}
