#include "mbspec/config_file.hpp"

#include <fstream>
#include <sstream>

#include "json_io.hpp"

namespace mbspec {

// ---- JSON serialization (shared by checkpoints and output artifacts) ----

json to_json(const SimConfig& cfg) {
  return json{{"dim", cfg.grid.dim()},
              {"N", cfg.grid.n()},
              {"R", cfg.R},
              {"s", cfg.s},
              {"buoyancy_axis", cfg.axis() + 1},
              {"dealias", cfg.dealias},
              {"dt_policy", cfg.dt_policy == DtPolicy::fixed ? "fixed" : "cfl"},
              {"dt", cfg.dt},
              {"cfl_cmax", cfg.cfl_cmax},
              {"dt_max", cfg.dt_max},
              {"t_end", cfg.t_end},
              {"workers", cfg.workers}};
}

SimConfig sim_config_from_json(const json& j) {
  SimConfig cfg;
  cfg.grid = Grid(j.at("dim").get<int>(), j.at("N").get<int>());
  cfg.R = j.at("R").get<double>();
  cfg.s = j.at("s").get<double>();
  cfg.buoyancy_axis = j.at("buoyancy_axis").get<int>() - 1;
  cfg.dealias = j.at("dealias").get<std::string>();
  cfg.dt_policy = j.at("dt_policy").get<std::string>() == "cfl" ? DtPolicy::cfl
                                                                : DtPolicy::fixed;
  cfg.dt = j.at("dt").get<double>();
  cfg.cfl_cmax = j.at("cfl_cmax").get<double>();
  cfg.dt_max = j.at("dt_max").get<double>();
  cfg.t_end = j.at("t_end").get<double>();
  cfg.workers = j.at("workers").get<int>();
  return cfg;
}

namespace {

std::string kind_name(InitialSpec::Kind k) {
  switch (k) {
    case InitialSpec::Kind::taylor_green: return "taylor_green";
    case InitialSpec::Kind::random_band: return "random_band";
    case InitialSpec::Kind::from_checkpoint: return "from_checkpoint";
  }
  return "taylor_green";
}

InitialSpec::Kind kind_from_name(const std::string& s) {
  if (s == "taylor_green") return InitialSpec::Kind::taylor_green;
  if (s == "random_band") return InitialSpec::Kind::random_band;
  if (s == "from_checkpoint") return InitialSpec::Kind::from_checkpoint;
  throw ConfigError("unknown initial-data kind '" + s + "'");
}

}  // namespace

json to_json(const InitialSpec& init) {
  return json{{"kind", kind_name(init.kind)},
              {"theta_amplitude", init.theta_amplitude},
              {"b_amplitude", init.b_amplitude},
              {"seed", init.seed},
              {"spectrum_exponent", init.spectrum_exponent},
              {"band_min", init.band_min},
              {"band_max", init.band_max},
              {"norm_u", init.norm_u},
              {"norm_theta", init.norm_theta},
              {"norm_b", init.norm_b},
              {"checkpoint", init.checkpoint_path}};
}

InitialSpec initial_spec_from_json(const json& j) {
  InitialSpec init;
  init.kind = kind_from_name(j.at("kind").get<std::string>());
  init.theta_amplitude = j.at("theta_amplitude").get<double>();
  init.b_amplitude = j.at("b_amplitude").get<double>();
  init.seed = j.at("seed").get<std::uint64_t>();
  init.spectrum_exponent = j.at("spectrum_exponent").get<double>();
  init.band_min = j.at("band_min").get<double>();
  init.band_max = j.at("band_max").get<double>();
  init.norm_u = j.at("norm_u").get<double>();
  init.norm_theta = j.at("norm_theta").get<double>();
  init.norm_b = j.at("norm_b").get<double>();
  init.checkpoint_path = j.at("checkpoint").get<std::string>();
  return init;
}

json to_json(const RunOptions& opts) {
  return json{{"diag_every", opts.diag_every},
              {"checkpoint_every", opts.checkpoint_every},
              {"norm_flavor", to_string(opts.flavor)}};
}

RunOptions run_options_from_json(const json& j) {
  RunOptions opts;
  opts.diag_every = j.at("diag_every").get<int>();
  opts.checkpoint_every = j.at("checkpoint_every").get<int>();
  opts.flavor = norm_flavor_from_string(j.at("norm_flavor").get<std::string>());
  return opts;
}

json to_json(const DiagState& st) {
  json acc = json::array();
  for (const auto& a : st.acc)
    acc.push_back(json{{"has_prev", a.has_prev},
                       {"prev_t", a.prev_t},
                       {"prev_full", a.prev_full},
                       {"prev_relaxed", a.prev_relaxed},
                       {"full", a.full},
                       {"relaxed", a.relaxed}});
  return json{{"acc", acc},
              {"has_prev", st.has_prev},
              {"prev_t", st.prev_t},
              {"prev_gradu", st.prev_gradu},
              {"gradu_integral", st.gradu_integral},
              {"Y0", st.Y0},
              {"X0", st.X0},
              {"u_hs0", st.u_hs0},
              {"gradtheta0_linf", st.gradtheta0_linf}};
}

DiagState diag_state_from_json(const json& j) {
  DiagState st;
  const auto& acc = j.at("acc");
  for (int i = 0; i < 3; ++i) {
    const auto& a = acc.at(i);
    st.acc[i].has_prev = a.at("has_prev").get<bool>();
    st.acc[i].prev_t = a.at("prev_t").get<double>();
    st.acc[i].prev_full = a.at("prev_full").get<double>();
    st.acc[i].prev_relaxed = a.at("prev_relaxed").get<double>();
    st.acc[i].full = a.at("full").get<double>();
    st.acc[i].relaxed = a.at("relaxed").get<double>();
  }
  st.has_prev = j.at("has_prev").get<bool>();
  st.prev_t = j.at("prev_t").get<double>();
  st.prev_gradu = j.at("prev_gradu").get<double>();
  st.gradu_integral = j.at("gradu_integral").get<double>();
  st.Y0 = j.at("Y0").get<double>();
  st.X0 = j.at("X0").get<double>();
  st.u_hs0 = j.at("u_hs0").get<double>();
  st.gradtheta0_linf = j.at("gradtheta0_linf").get<double>();
  return st;
}

json physical_echo(const SimConfig& cfg, const InitialSpec& init) {
  return json{{"sim", to_json(cfg)}, {"init", to_json(init)}};
}

// ---- key = value config files ----

namespace {

struct RawConfig {
  int dim = 2, N = 64;
  FileConfig out;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + v);
  }
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for '" + key + "': " + v);
  }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad seed value for '" + key + "': " + v);
  }
}

void apply_key(RawConfig& raw, const std::string& key, const std::string& value) {
  FileConfig& fc = raw.out;
  if (key == "dim") raw.dim = to_int(key, value);
  else if (key == "N") raw.N = to_int(key, value);
  else if (key == "R") fc.sim.R = to_double(key, value);
  else if (key == "s") fc.sim.s = to_double(key, value);
  else if (key == "buoyancy_axis") fc.sim.buoyancy_axis = to_int(key, value) - 1;
  else if (key == "dealias") fc.sim.dealias = value;
  else if (key == "dt_policy") {
    if (value == "fixed") fc.sim.dt_policy = DtPolicy::fixed;
    else if (value == "cfl") fc.sim.dt_policy = DtPolicy::cfl;
    else throw ConfigError("dt_policy must be fixed or cfl, got '" + value + "'");
  } else if (key == "dt") fc.sim.dt = to_double(key, value);
  else if (key == "cfl_cmax") fc.sim.cfl_cmax = to_double(key, value);
  else if (key == "dt_max") fc.sim.dt_max = to_double(key, value);
  else if (key == "t_end") fc.sim.t_end = to_double(key, value);
  else if (key == "workers") fc.sim.workers = to_int(key, value);
  else if (key == "init") fc.init.kind = kind_from_name(value);
  else if (key == "seed") fc.init.seed = to_u64(key, value);
  else if (key == "spectrum_exponent") fc.init.spectrum_exponent = to_double(key, value);
  else if (key == "band_min") fc.init.band_min = to_double(key, value);
  else if (key == "band_max") fc.init.band_max = to_double(key, value);
  else if (key == "norm_u") fc.init.norm_u = to_double(key, value);
  else if (key == "norm_theta") fc.init.norm_theta = to_double(key, value);
  else if (key == "norm_b") fc.init.norm_b = to_double(key, value);
  else if (key == "theta_amplitude") fc.init.theta_amplitude = to_double(key, value);
  else if (key == "b_amplitude") fc.init.b_amplitude = to_double(key, value);
  else if (key == "checkpoint") fc.init.checkpoint_path = value;
  else if (key == "diag_every") fc.opts.diag_every = to_int(key, value);
  else if (key == "checkpoint_every") fc.opts.checkpoint_every = to_int(key, value);
  else if (key == "norm_flavor") fc.opts.flavor = norm_flavor_from_string(value);
  else if (key == "out_dir") fc.out_dir = value;
  else throw ConfigError("unknown config key '" + key + "'");
}

}  // namespace

FileConfig parse_config_text(const std::string& text) {
  RawConfig raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        " is not 'key = value': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        " is missing a key or value");
    apply_key(raw, key, value);
  }
  raw.out.sim.grid = Grid(raw.dim, raw.N);
  raw.out.sim.validate();
  return raw.out;
}

FileConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return parse_config_text(body.str());
}

std::string config_file_grammar() {
  return
      "grammar: one `key = value` per line; `#` starts a comment; unknown keys rejected\n"
      "  dim (2|3)            N (even >= 8)        R (0 < R <= N/3)\n"
      "  s (> dim/2 + 1)      buoyancy_axis (1..dim, default dim)\n"
      "  dealias (two_thirds) dt_policy (fixed|cfl)\n"
      "  dt                   cfl_cmax             dt_max\n"
      "  t_end                workers (>= 1)\n"
      "  init (taylor_green|random_band|from_checkpoint)\n"
      "  seed                 spectrum_exponent    band_min  band_max\n"
      "  norm_u  norm_theta  norm_b   (H^s targets for random_band)\n"
      "  theta_amplitude  b_amplitude (taylor_green perturbations)\n"
      "  checkpoint (path for from_checkpoint)\n"
      "  diag_every  checkpoint_every  norm_flavor (linf|besov|bmo)  out_dir\n";
}

}  // namespace mbspec
