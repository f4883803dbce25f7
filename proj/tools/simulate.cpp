// Configuration-driven experiment runner. Every experiment reads a strict
// JSON config (schema_version 1, unknown keys rejected), writes a JSON
// summary embedding the fully resolved config, and emits CSV series where
// the experiment produces curves. Thread count comes from HUBLAT_THREADS.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hublat/band.hpp"
#include "hublat/csv.hpp"
#include "hublat/effective.hpp"
#include "hublat/runs.hpp"
#include "hublat/scattering.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using std::numbers::pi;

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// strict key-value access: every key must be known, required keys must
// be present, and the resolved (defaulted) values are echoed back
class Config {
 public:
  explicit Config(const json& j) : j_(j) {
    if (!j_.is_object()) throw ConfigError("config root must be a JSON object");
  }

  double num(const std::string& key, std::optional<double> def = {}) {
    const json* v = fetch(key, def.has_value());
    const double out = v ? require_number(key, *v) : *def;
    resolved_[key] = out;
    return out;
  }
  int integer(const std::string& key, std::optional<int> def = {}) {
    const json* v = fetch(key, def.has_value());
    int out;
    if (v) {
      if (!v->is_number_integer())
        throw ConfigError("field $." + key + " must be an integer");
      out = v->get<int>();
    } else {
      out = *def;
    }
    resolved_[key] = out;
    return out;
  }
  bool flag(const std::string& key, std::optional<bool> def = {}) {
    const json* v = fetch(key, def.has_value());
    bool out;
    if (v) {
      if (!v->is_boolean()) throw ConfigError("field $." + key + " must be a boolean");
      out = v->get<bool>();
    } else {
      out = *def;
    }
    resolved_[key] = out;
    return out;
  }
  std::string str(const std::string& key, std::optional<std::string> def = {}) {
    const json* v = fetch(key, def.has_value());
    std::string out;
    if (v) {
      if (!v->is_string()) throw ConfigError("field $." + key + " must be a string");
      out = v->get<std::string>();
    } else {
      out = *def;
    }
    resolved_[key] = out;
    return out;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.contains(it.key()))
        throw ConfigError("unknown field: $." + it.key());
  }
  const json& resolved() const { return resolved_; }

 private:
  const json* fetch(const std::string& key, bool has_default) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) {
      if (!has_default) throw ConfigError("missing required field: $." + key);
      return nullptr;
    }
    return &*it;
  }
  static double require_number(const std::string& key, const json& v) {
    if (!v.is_number()) throw ConfigError("field $." + key + " must be a number");
    return v.get<double>();
  }

  const json& j_;
  std::set<std::string> seen_;
  json resolved_;
};

void check_schema(Config& cfg, const std::string& experiment) {
  const int version = cfg.integer("schema_version");
  if (version != 1) throw ConfigError("unsupported schema_version (expected 1)");
  const std::string declared = cfg.str("experiment", experiment);
  if (declared != experiment)
    throw ConfigError("field $.experiment ('" + declared +
                      "') does not match the subcommand '" + experiment + "'");
}

hublat::BpRunParams bp_params(Config& cfg) {
  hublat::BpRunParams p;
  p.t = cfg.num("t", 1.0);
  p.u = cfg.num("u", 40.0);
  p.v = cfg.num("v", p.u);
  p.t0 = cfg.num("t0", std::pow(2.0, 0.25));
  p.us_offset = cfg.num("us_offset", 40.0);
  p.k0 = cfg.num("k0");
  p.alpha = cfg.num("alpha", 0.05);
  p.full_model = cfg.flag("full_model", false);
  p.n_sites = cfg.integer("n_sites", 0);
  p.accuracy = cfg.num("accuracy", 1e-10);
  return p;
}

hublat::BtRunParams bt_params(Config& cfg) {
  hublat::BtRunParams p;
  p.t = cfg.num("t", 1.0);
  p.v = cfg.num("v", 40.0);
  p.k0 = cfg.num("k0");
  p.alpha = cfg.num("alpha", 0.05);
  p.full_model = cfg.flag("full_model", false);
  p.n_sites = cfg.integer("n_sites", 0);
  p.accuracy = cfg.num("accuracy", 1e-10);
  return p;
}

hublat::FermiRunParams fermi_params(Config& cfg) {
  hublat::FermiRunParams p;
  p.t = cfg.num("t", 1.0);
  p.u = cfg.num("u", 40.0);
  p.t0 = cfg.num("t0", std::pow(2.0, 0.25));
  p.us_offset = cfg.num("us_offset", 40.0);
  p.k0 = cfg.num("k0");
  p.alpha = cfg.num("alpha", 0.05);
  p.n_sites = cfg.integer("n_sites", 0);
  p.accuracy = cfg.num("accuracy", 1e-10);
  return p;
}

json outcome_json(const hublat::RunResult& r) {
  json out;
  out["p_separated"] = r.outcome.p_separated;
  out["p_bound_reflected"] = r.outcome.p_bound_reflected;
  out["p_other"] = r.outcome.p_other;
  out["resident_population"] = r.outcome.resident_population;
  if (r.outcome.entanglement) {
    out["entropy"] = r.outcome.entanglement->entropy;
    out["concurrence"] = r.outcome.entanglement->concurrence;
  }
  out["evolution_time"] = r.evolution_time;
  out["lattice_sites"] = r.lattice_sites;
  out["dimension"] = r.dimension;
  out["norm_drift"] = r.norm_drift;
  out["energy_drift"] = r.energy_drift;
  return out;
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream os(dir / name);
  if (!os) throw std::runtime_error("cannot write " + (dir / name).string());
  return os;
}

json run_band(Config& cfg, const fs::path& out) {
  hublat::LatticeSpec lat;
  lat.n_sites = cfg.integer("n_sites", 41);
  lat.boundary = hublat::Boundary::periodic;
  lat.hopping = cfg.num("t", 1.0);
  lat.onsite_u = cfg.num("u", 40.0);
  lat.nn_v = cfg.num("v", lat.onsite_u);
  cfg.finish();

  auto os = open_out(out, "band.csv");
  hublat::CsvWriter csv(os, {"k", "n", "energy", "classification"});
  int n_resonant = 0;
  for (int n = 1; n <= lat.n_sites; ++n) {
    const auto block = hublat::momentum_block(n, lat);
    for (const auto& s : hublat::solve_block(block)) {
      csv.row(std::array{block.k, double(n), s.energy,
                         double(static_cast<int>(s.classification))});
      if (s.classification == hublat::BoundClass::resonant_bp) ++n_resonant;
    }
  }
  json res;
  res["resonant_states"] = n_resonant;
  res["resonant_bandwidth"] = hublat::narrowband_width(
      lat.onsite_u, lat.nn_v, lat.hopping, lat.n_sites,
      hublat::BoundClass::resonant_bp);
  return res;
}

json run_trimer_band(Config& cfg, const fs::path& out) {
  const double t = cfg.num("t", 1.0);
  const int n_points = cfg.integer("n_points", 200);
  cfg.finish();

  auto os = open_out(out, "trimer_band.csv");
  hublat::CsvWriter csv(os, {"k", "root0", "root1", "root2"});
  for (int i = 0; i < n_points; ++i) {
    const double k = -pi + 2.0 * pi * (i + 1) / n_points;
    const auto sol = hublat::trimer_band(k, t);
    csv.row(std::array{k, sol.roots[0], sol.roots[1], sol.roots[2]});
  }
  json res;
  const auto at0 = hublat::trimer_band(0.0, t);
  res["roots_at_k0"] = {at0.roots[0], at0.roots[1], at0.roots[2]};
  return res;
}

json run_transmission_sweep(Config& cfg, const fs::path& out) {
  const double t = cfg.num("t", 1.0);
  const double t0 = cfg.num("t0", std::pow(2.0, 0.25));
  const int n_points = cfg.integer("n_points", 1000);
  cfg.finish();

  const auto jc = hublat::bp_scattering_chain(t, t0, 20, 20);
  const auto curve = hublat::sweep(jc.chain, n_points);
  auto os = open_out(out, "transmission.csv");
  hublat::CsvWriter csv(os, {"k0", "P", "v_g"});
  for (std::size_t i = 0; i < curve.k0.size(); ++i)
    csv.row(std::array{curve.k0[i], curve.p[i], curve.v_g[i]});
  json res;
  res["rows"] = curve.k0.size();
  res["p_at_pi_over_2"] =
      hublat::junction_scattering(jc.chain, pi / 2.0).transmission();
  res["chain"] = json::parse(jc.chain.to_json());
  return res;
}

json run_bp_separate(Config& cfg, const fs::path&) {
  const auto p = bp_params(cfg);
  cfg.finish();
  json res = outcome_json(hublat::run_bp_separation(p));
  if (!p.full_model) {
    // same geometry the run itself uses
    const int m = static_cast<int>(std::ceil(5.0 / p.alpha));
    const double e = -2.0 * std::numbers::sqrt2 * p.t * std::cos(p.k0);
    const double v_in = std::abs(2.0 * std::numbers::sqrt2 * p.t * std::sin(p.k0));
    const double v_out =
        std::abs(e) < 2.0 * p.t ? 2.0 * p.t * std::sin(std::acos(-e / (2.0 * p.t)))
                                : 0.0;
    const int n_right =
        std::max(30, static_cast<int>(std::ceil(v_out * 2.0 * m / v_in)) + 20);
    const auto jc = hublat::bp_scattering_chain(p.t, p.t0, 2 * m + 6, n_right);
    res["effective_chain"] = json::parse(jc.chain.to_json());
  }
  res["closed_form_p"] = p.k0 <= pi / 2.0 + 1e-12
                             ? hublat::bp_separation_closed_form(
                                   std::min(p.k0, pi / 2.0))
                             : 0.0;
  return res;
}

json run_bp_combine(Config& cfg, const fs::path&) {
  const auto p = bp_params(cfg);
  const bool with_resident = cfg.flag("with_resident", true);
  cfg.finish();
  return outcome_json(hublat::run_bp_combination(p, with_resident));
}

json run_bt_separate(Config& cfg, const fs::path&) {
  const auto p = bt_params(cfg);
  cfg.finish();
  json res = outcome_json(hublat::run_bt_separation(p));
  const auto pw = hublat::bt_plane_wave_transmission(p.t, p.k0);
  res["plane_wave_p"] = pw.transmission();
  return res;
}

json run_fermi_singlet_cmd(Config& cfg, const fs::path&) {
  const auto p = fermi_params(cfg);
  cfg.finish();
  return outcome_json(hublat::run_fermi_singlet(p));
}

json run_fermi_arbitrary_cmd(Config& cfg, const fs::path&) {
  const auto p = fermi_params(cfg);
  const std::complex<double> a(cfg.num("alpha_re"), cfg.num("alpha_im", 0.0));
  const std::complex<double> b(cfg.num("beta_re"), cfg.num("beta_im", 0.0));
  cfg.finish();
  const auto w = hublat::run_fermi_arbitrary(a, b, p);
  json res;
  res["reflected_up"] = w.reflected_up;
  res["bp"] = w.bp;
  res["triplet_reflected"] = w.triplet_reflected;
  res["singlet_reflected"] = w.singlet_reflected;
  res["sum"] = w.sum();
  return res;
}

json run_effective_compare(Config& cfg, const fs::path&) {
  const std::string model = cfg.str("model", "bp");
  json res;
  if (model == "bp") {
    auto p = bp_params(cfg);
    cfg.finish();
    p.full_model = true;
    const auto full = hublat::run_bp_separation(p);
    p.full_model = false;
    p.n_sites = 0;
    const auto eff = hublat::run_bp_separation(p);
    res["full"] = outcome_json(full);
    res["effective"] = outcome_json(eff);
    res["difference"] =
        std::abs(full.outcome.p_separated - eff.outcome.p_separated);
  } else if (model == "bt") {
    auto p = bt_params(cfg);
    cfg.finish();
    p.full_model = true;
    const auto full = hublat::run_bt_separation(p);
    p.full_model = false;
    const auto eff = hublat::run_bt_separation(p);
    res["full"] = outcome_json(full);
    res["effective"] = outcome_json(eff);
    res["difference"] =
        std::abs(full.outcome.p_separated - eff.outcome.p_separated);
  } else {
    throw ConfigError("field $.model must be 'bp' or 'bt'");
  }
  return res;
}

using Handler = json (*)(Config&, const fs::path&);

const std::vector<std::pair<std::string, Handler>> kExperiments = {
    {"band", run_band},
    {"trimer-band", run_trimer_band},
    {"transmission-sweep", run_transmission_sweep},
    {"bp-separate", run_bp_separate},
    {"bp-combine", run_bp_combine},
    {"bt-separate", run_bt_separate},
    {"fermi-singlet", run_fermi_singlet_cmd},
    {"fermi-arbitrary", run_fermi_arbitrary_cmd},
    {"effective-compare", run_effective_compare},
};

int run_experiment(const std::string& name, Handler handler,
                   const std::string& config_path, const std::string& out_dir) {
  json raw;
  {
    std::ifstream is(config_path);
    if (!is) {
      std::cerr << "simulate: cannot open config " << config_path << "\n";
      return 1;
    }
    try {
      raw = json::parse(is);
    } catch (const json::parse_error& e) {
      std::cerr << "simulate: config parse error: " << e.what() << "\n";
      return 1;
    }
  }
  try {
    Config cfg(raw);
    check_schema(cfg, name);
    const fs::path out(out_dir);
    const json results = handler(cfg, out);
    json summary;
    summary["schema_version"] = 1;
    summary["experiment"] = name;
    summary["config"] = cfg.resolved();
    summary["results"] = results;
    auto os = open_out(out, "summary.json");
    os << summary.dump(2) << "\n";
    std::cout << summary.dump(2) << "\n";
  } catch (const ConfigError& e) {
    std::cerr << "simulate: config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Few-particle bound-state experiments on the extended Hubbard chain.\n"
      "Energies are in units of t, time in 1/t. Matvec threads are taken\n"
      "from the HUBLAT_THREADS environment variable (default 1)."};
  app.require_subcommand(0, 1);

  bool list = false;
  app.add_flag("--list-experiments", list, "List available experiments and exit");

  struct Sub {
    CLI::App* cmd;
    std::string config;
    std::string out = ".";
  };
  std::vector<Sub> subs(kExperiments.size());
  for (std::size_t i = 0; i < kExperiments.size(); ++i) {
    subs[i].cmd = app.add_subcommand(kExperiments[i].first);
    subs[i].cmd->add_option("--config", subs[i].config, "JSON config file")
        ->required();
    subs[i].cmd->add_option("--out", subs[i].out, "Output directory");
  }

  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& [name, handler] : kExperiments) std::cout << name << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < kExperiments.size(); ++i)
    if (subs[i].cmd->parsed())
      return run_experiment(kExperiments[i].first, kExperiments[i].second,
                            subs[i].config, subs[i].out);
  std::cerr << app.help();
  return 1;
}
