#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int exit_code;
  std::string output;  // stdout only
};

CmdResult run_cmd(const std::string& args) {
  const std::string cmd = std::string(SWEBC_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "swebc_cli_tests";
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and missing subcommands") {
  CHECK(run_cmd("--help").exit_code == 0);
  CHECK(run_cmd("classify --help").exit_code == 0);
  CHECK(run_cmd("").exit_code == 2);          // a subcommand is required
  CHECK(run_cmd("frobnicate").exit_code == 2);
}

TEST_CASE("classify reports the regime, counts, and comparison") {
  const auto res =
      run_cmd("classify --phi 4 --u -0.5 --v 0 --nx 1 --ny 0 --gravity 9.81");
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.output);
  CHECK(out["regime"] == "subcritical_inflow_low_fr");
  CHECK(out["required_bc_count"] == 2);
  CHECK(out["froude"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(out["comparison"]["nonlinear"] == 2);
  CHECK(out["comparison"]["linear"] == 2);
  CHECK(out["comparison"]["entropy"] == 3);

  const auto out75 = run_cmd("classify --phi 4 --u 1.5 --v 0 --nx 1 --ny 0");
  REQUIRE(out75.exit_code == 0);
  const json j75 = json::parse(out75.output);
  CHECK(j75["regime"] == "subcritical_outflow_high_fr");
  CHECK(j75["required_bc_count"] == 0);
  CHECK(j75["comparison"]["nonlinear"] == 0);
  CHECK(j75["comparison"]["linear"] == 1);
  CHECK(j75["comparison"]["entropy"] == 0);
}

TEST_CASE("classify exit codes for bad and ambiguous input") {
  CHECK(run_cmd("classify --phi -1 --u 0 --v 0 --nx 1 --ny 0").exit_code == 2);
  CHECK(run_cmd("classify --phi 1 --u 0 --v 0 --nx 0 --ny 0").exit_code == 2);
  CHECK(run_cmd("classify --phi 1 --u 0 --v 0 --nx 1").exit_code == 2);  // missing flag
  // Froude number exactly 1: crossover
  CHECK(run_cmd("classify --phi 1 --u 1 --v 0 --nx 1 --ny 0").exit_code == 3);
  // Froude number exactly 1/2: crossover
  CHECK(run_cmd("classify --phi 4 --u -1 --v 0 --nx 1 --ny 0").exit_code == 3);
}

TEST_CASE("compare emits the three counts") {
  const auto res = run_cmd("compare --phi 4 --u -1.5 --v 0 --nx 1 --ny 0");
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.output);
  CHECK(out["nonlinear"] == 3);
  CHECK(out["linear"] == 2);
  CHECK(out["entropy"] == 3);
  CHECK(out["regime"] == "subcritical_inflow_high_fr");
}

TEST_CASE("verify passes and is reproducible") {
  const auto a = run_cmd("verify --trials 1000 --seed 42");
  REQUIRE(a.exit_code == 0);
  const json out = json::parse(a.output);
  CHECK(out["pass"] == true);
  for (const auto& [name, value] : out["residuals"].items()) {
    INFO(name);
    CHECK(value.get<double>() <= 1e-12);
  }

  const auto b = run_cmd("verify --trials 1000 --seed 42");
  CHECK(a.output == b.output);  // bit-for-bit reproducible

  const auto tiny = run_cmd("verify --trials 1 --seed 7");
  REQUIRE(tiny.exit_code == 0);
  CHECK(json::parse(tiny.output)["residuals"].size() == 5);

  CHECK(run_cmd("verify --trials 0").exit_code == 2);
}

TEST_CASE("ellipse emits CSV and SVG and rejects out-of-band Froude numbers") {
  const auto csv = run_cmd("ellipse --fr 0.25 --kind inflow --samples 256 --format csv");
  REQUIRE(csv.exit_code == 0);
  std::istringstream in(csv.output);
  std::string line;
  std::getline(in, line);
  CHECK(line == "gamma,theta");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    const double gamma = std::stod(line.substr(0, comma));
    const double theta = std::stod(line.substr(comma + 1));
    CHECK(std::abs(gamma * gamma * 0.25 + theta * theta * 0.75 - 0.25) <= 1e-12);
    ++rows;
  }
  CHECK(rows == 256);

  const fs::path svg_path = temp_dir() / "region.svg";
  const auto svg = run_cmd("ellipse --fr 0.25 --kind outflow --format svg --output " +
                           svg_path.string());
  REQUIRE(svg.exit_code == 0);
  std::ifstream svg_in(svg_path);
  REQUIRE(svg_in.good());
  std::stringstream svg_text;
  svg_text << svg_in.rdbuf();
  CHECK(svg_text.str().find("<svg") != std::string::npos);
  CHECK(svg_text.str().find("points=") != std::string::npos);

  CHECK(run_cmd("ellipse --fr 0.6 --kind inflow").exit_code == 2);
  CHECK(run_cmd("ellipse --fr 0.25 --kind sideways").exit_code == 2);
}

TEST_CASE("simulate runs the walled-box configuration") {
  const fs::path dir = temp_dir();
  const fs::path cfg = dir / "wall_box.json";
  const fs::path ecsv = dir / "energy.csv";
  const fs::path fcsv = dir / "field.csv";
  std::ostringstream doc;
  doc << R"({
  "domain": {"a": 1.0, "b": 1.0, "nx": 16, "ny": 16},
  "physics": {"gravity": 1.0, "coriolis": 0.0},
  "initial": {"preset": "rest_bump", "phi0": 1.0, "amplitude": 1e-3, "width": 0.12},
  "boundaries": {
    "left": {"regime": "wall"}, "right": {"regime": "wall"},
    "bottom": {"regime": "wall"}, "top": {"regime": "wall"}
  },
  "time": {"cfl": 0.4, "steps": 40},
  "output": {"energy_csv": ")"
      << ecsv.string() << R"(", "field_csv": ")" << fcsv.string() << R"("}
})";
  write_file(cfg, doc.str());

  const auto res = run_cmd("simulate " + cfg.string());
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.output);
  CHECK(out["status"] == "completed");
  CHECK(out["regime_mismatched_nodes"] == 0);

  std::ifstream energy_in(ecsv);
  REQUIRE(energy_in.good());
  std::string line;
  std::getline(energy_in, line);
  CHECK(line == "time,energy,boundary_flux");
  double e0 = -1.0;
  int rows = 0;
  while (std::getline(energy_in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double e = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    if (e0 < 0) e0 = e;
    CHECK(e <= e0 * (1.0 + 1e-8));  // bounded, monotone up to rounding
    ++rows;
  }
  CHECK(rows == 41);
  CHECK(fs::exists(fcsv));
}

TEST_CASE("simulate exit codes distinguish the failure modes") {
  const fs::path dir = temp_dir();
  CHECK(run_cmd("simulate " + (dir / "missing.json").string()).exit_code == 2);

  const fs::path bad = dir / "bad.json";
  write_file(bad, "{\"domain\": {}}");
  CHECK(run_cmd("simulate " + bad.string()).exit_code == 2);

  // inflow coefficients outside the stability region, with a reflecting
  // outflow that keeps feeding the boundary: the bound is lost
  const fs::path diverging = dir / "unstable.json";
  write_file(diverging, R"({
  "domain": {"a": 1.0, "b": 1.0, "nx": 16, "ny": 16},
  "physics": {"gravity": 1.0, "coriolis": 0.0},
  "initial": {"preset": "stream_bump", "phi0": 1.0, "u0": 0.25, "amplitude": 1e-2, "width": 0.12},
  "boundaries": {
    "left": {"regime": "subcritical_inflow_low_fr", "coefficients": [0.0, 2.0],
             "external_state": {"phi": 1.0, "u": 0.25, "v": 0.0}},
    "right": {"regime": "subcritical_outflow_low_fr", "coefficients": [1.0, 0.0],
              "external_state": {"phi": 1.0, "u": 0.25, "v": 0.0}},
    "bottom": {"regime": "wall"}, "top": {"regime": "wall"}
  },
  "time": {"cfl": 0.4, "steps": 500},
  "output": {"energy_csv": ")" + (dir / "unstable_energy.csv").string() +
                            R"(", "field_csv": ")" + (dir / "unstable_field.csv").string() + R"("}
})");
  const auto res = run_cmd("simulate " + diverging.string());
  // the lost bound shows up as divergence or as a growing energy column
  if (res.exit_code == 0) {
    const json out = json::parse(res.output);
    CHECK(out["max_energy"].get<double>() >
          out["initial_energy"].get<double>() * (1.0 + 1e-3));
  } else {
    CHECK(res.exit_code == 5);
  }

  // rejecting unstable coefficients up front is opt-in
  const fs::path validated = dir / "validated.json";
  std::string doc2 = R"({
  "domain": {"a": 1.0, "b": 1.0, "nx": 16, "ny": 16},
  "physics": {"gravity": 1.0, "coriolis": 0.0},
  "initial": {"preset": "stream_bump", "phi0": 1.0, "u0": 0.25, "amplitude": 1e-2, "width": 0.12},
  "boundaries": {
    "left": {"regime": "subcritical_inflow_low_fr", "coefficients": [0.0, 2.0],
             "external_state": {"phi": 1.0, "u": 0.25, "v": 0.0}},
    "right": {"regime": "subcritical_outflow_low_fr", "coefficients": [1.0, 0.0],
              "external_state": {"phi": 1.0, "u": 0.25, "v": 0.0}},
    "bottom": {"regime": "wall"}, "top": {"regime": "wall"}
  },
  "time": {"cfl": 0.4, "steps": 10},
  "validate_stability": true
})";
  write_file(validated, doc2);
  CHECK(run_cmd("simulate " + validated.string()).exit_code == 2);
}

}  // TEST_SUITE
