#include "swe/run_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "swe/characteristics.hpp"

namespace swe {

namespace {

using nlohmann::json;

double get_number(const json& obj, const char* key, std::optional<double> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw BadRunConfig(std::string("missing numeric key: ") + key);
  }
  if (!obj.at(key).is_number()) throw BadRunConfig(std::string("key is not a number: ") + key);
  return obj.at(key).get<double>();
}

int get_int(const json& obj, const char* key, std::optional<int> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw BadRunConfig(std::string("missing integer key: ") + key);
  }
  if (!obj.at(key).is_number_integer())
    throw BadRunConfig(std::string("key is not an integer: ") + key);
  return obj.at(key).get<int>();
}

std::string get_string(const json& obj, const char* key, std::optional<std::string> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw BadRunConfig(std::string("missing string key: ") + key);
  }
  if (!obj.at(key).is_string()) throw BadRunConfig(std::string("key is not a string: ") + key);
  return obj.at(key).get<std::string>();
}

EdgeConfig parse_edge(const json& obj, const char* name) {
  if (!obj.is_object()) throw BadRunConfig(std::string("boundary entry is not an object: ") + name);
  EdgeConfig e;
  try {
    e.regime = regime_from_string(get_string(obj, "regime"));
  } catch (const std::invalid_argument& err) {
    throw BadRunConfig(std::string(name) + ": " + err.what());
  }
  if (obj.contains("coefficients")) {
    if (!obj.at("coefficients").is_array())
      throw BadRunConfig(std::string(name) + ".coefficients must be an array");
    e.coefficients = obj.at("coefficients").get<std::vector<double>>();
  }
  if (obj.contains("external_data")) {
    if (!obj.at("external_data").is_array())
      throw BadRunConfig(std::string(name) + ".external_data must be an array");
    e.external_data = obj.at("external_data").get<std::vector<double>>();
  }
  if (obj.contains("external_state")) {
    const json& st = obj.at("external_state");
    e.external_state = State{get_number(st, "phi"), get_number(st, "u"), get_number(st, "v")};
  }
  if (!e.external_data.empty() && e.external_state)
    throw BadRunConfig(std::string(name) + ": give external_data or external_state, not both");
  return e;
}

InitialPreset preset_from_string(const std::string& name) {
  if (name == "rest_bump") return InitialPreset::RestBump;
  if (name == "uniform_stream") return InitialPreset::UniformStream;
  if (name == "stream_bump") return InitialPreset::StreamBump;
  throw BadRunConfig("unknown initial preset: " + name);
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& err) {
    throw BadRunConfig(std::string("configuration is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw BadRunConfig("configuration root must be an object");

  RunConfig cfg;
  try {
    const json& dom = doc.at("domain");
    cfg.a = get_number(dom, "a");
    cfg.b = get_number(dom, "b");
    cfg.nx = get_int(dom, "nx");
    cfg.ny = get_int(dom, "ny");

    if (doc.contains("physics")) {
      const json& ph = doc.at("physics");
      cfg.params.gravity = get_number(ph, "gravity", 9.81);
      cfg.params.coriolis = get_number(ph, "coriolis", 0.0);
    }

    const json& ini = doc.at("initial");
    cfg.initial.preset = preset_from_string(get_string(ini, "preset"));
    cfg.initial.phi0 = get_number(ini, "phi0");
    cfg.initial.amplitude = get_number(ini, "amplitude", 0.0);
    cfg.initial.width = get_number(ini, "width", 0.1);
    cfg.initial.cx = get_number(ini, "center_x", 0.5 * cfg.a);
    cfg.initial.cy = get_number(ini, "center_y", 0.5 * cfg.b);
    cfg.initial.u0 = get_number(ini, "u0", 0.0);
    cfg.initial.v0 = get_number(ini, "v0", 0.0);

    const json& bnd = doc.at("boundaries");
    cfg.edges[static_cast<std::size_t>(Edge::Left)] = parse_edge(bnd.at("left"), "left");
    cfg.edges[static_cast<std::size_t>(Edge::Right)] = parse_edge(bnd.at("right"), "right");
    cfg.edges[static_cast<std::size_t>(Edge::Bottom)] = parse_edge(bnd.at("bottom"), "bottom");
    cfg.edges[static_cast<std::size_t>(Edge::Top)] = parse_edge(bnd.at("top"), "top");

    const json& tm = doc.at("time");
    cfg.dt = get_number(tm, "dt", 0.0);
    cfg.cfl = get_number(tm, "cfl", 0.4);
    cfg.steps = get_int(tm, "steps");

    cfg.dissipation = get_number(doc, "dissipation", 0.0);
    cfg.penalty = get_number(doc, "penalty", 1.0);
    if (doc.contains("wall_closure")) {
      const std::string wc = get_string(doc, "wall_closure");
      if (wc == "reflect") cfg.wall_closure = WallClosure::Reflect;
      else if (wc == "one_sided") cfg.wall_closure = WallClosure::OneSided;
      else throw BadRunConfig("wall_closure must be \"reflect\" or \"one_sided\"");
    }
    if (doc.contains("strict_regimes")) {
      if (!doc.at("strict_regimes").is_boolean())
        throw BadRunConfig("strict_regimes must be a boolean");
      cfg.strict_regimes = doc.at("strict_regimes").get<bool>();
    }
    if (doc.contains("validate_stability")) {
      if (!doc.at("validate_stability").is_boolean())
        throw BadRunConfig("validate_stability must be a boolean");
      cfg.validate_stability = doc.at("validate_stability").get<bool>();
    }
    if (doc.contains("output")) {
      const json& out = doc.at("output");
      cfg.energy_csv = get_string(out, "energy_csv", cfg.energy_csv);
      cfg.field_csv = get_string(out, "field_csv", cfg.field_csv);
    }
  } catch (const json::exception& err) {
    throw BadRunConfig(std::string("configuration error: ") + err.what());
  }

  if (cfg.steps < 1) throw BadRunConfig("time.steps must be at least 1");
  if (cfg.dt < 0.0) throw BadRunConfig("time.dt must be non-negative");
  if (!(cfg.cfl > 0.0)) throw BadRunConfig("time.cfl must be positive");
  if (cfg.dissipation < 0.0) throw BadRunConfig("dissipation must be non-negative");
  if (cfg.penalty < 0.0) throw BadRunConfig("penalty must be non-negative");
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadRunConfig("cannot open configuration file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

PreparedRun prepare_run(const RunConfig& cfg) {
  PreparedRun run;
  try {
    validate_params(cfg.params);
    run.grid = make_grid(cfg.a, cfg.b, cfg.nx, cfg.ny);
    run.initial = build_initial_field(run.grid, cfg.params, cfg.initial);
  } catch (const std::exception& err) {
    throw BadRunConfig(std::string("invalid run setup: ") + err.what());
  }

  auto build_edge = [&](Edge e) {
    const EdgeConfig& ec = cfg.edges[static_cast<std::size_t>(e)];
    const UnitNormal n = edge_normal(e);

    std::optional<double> validate_fr;
    if (cfg.validate_stability && (ec.regime == Regime::SubcriticalInflowLowFr ||
                                   ec.regime == Regime::SubcriticalOutflowLowFr)) {
      const int i = (e == Edge::Left) ? 0 : (e == Edge::Right ? run.grid.nx : run.grid.npx() / 2);
      const int j = (e == Edge::Bottom) ? 0 : (e == Edge::Top ? run.grid.ny : run.grid.npy() / 2);
      const double fr = froude(run.initial.at(i, j), n);
      if (!(fr > 0.0) || !(fr < 0.5))
        throw BadRunConfig("validate_stability: initial edge state is not in the subcritical "
                           "low-Froude band for the configured regime");
      validate_fr = fr;
    }

    BCSpec bc;
    try {
      bc = build_bc(ec.regime, ec.coefficients, validate_fr);
    } catch (const std::exception& err) {
      throw BadRunConfig(std::string("boundary specification rejected: ") + err.what());
    }

    if (ec.external_state) {
      // anchor the data so the given primitive state satisfies the
      // condition exactly: g = w^- - R w^+ evaluated on that state
      const CharVars w = to_characteristic(*ec.external_state, n, cfg.params);
      const double wv[3] = {w.w1, w.w2, w.w3};
      for (std::size_t r = 0; r < bc.incoming.size(); ++r) {
        double value = wv[bc.incoming[r]];
        for (std::size_t c = 0; c < bc.outgoing.size(); ++c)
          value -= bc.reflection(static_cast<int>(r), static_cast<int>(c)) * wv[bc.outgoing[c]];
        bc.external_data(static_cast<int>(r)) = value;
      }
    } else if (!ec.external_data.empty()) {
      if (ec.external_data.size() != bc.incoming.size())
        throw BadRunConfig("external_data length must equal the number of incoming "
                           "characteristics (" + std::to_string(bc.incoming.size()) + ")");
      for (std::size_t r = 0; r < bc.incoming.size(); ++r)
        bc.external_data(static_cast<int>(r)) = ec.external_data[r];
    }
    return bc;
  };

  run.bcs.left = build_edge(Edge::Left);
  run.bcs.right = build_edge(Edge::Right);
  run.bcs.bottom = build_edge(Edge::Bottom);
  run.bcs.top = build_edge(Edge::Top);

  run.options.penalty = cfg.penalty;
  run.options.dissipation = cfg.dissipation;
  run.options.wall_closure = cfg.wall_closure;
  run.options.strict_regimes = cfg.strict_regimes;
  run.options.advisory_cfl = cfg.cfl;

  run.dt = cfg.dt > 0.0 ? cfg.dt : cfl_timestep(run.initial, cfg.cfl);
  run.steps = cfg.steps;
  return run;
}

}  // namespace swe
