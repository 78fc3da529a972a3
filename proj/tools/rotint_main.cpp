// rotint -- command-line front end for the rotating-loop interferometer
// toolkit. Subcommands cover single-scenario evaluations (kinematics,
// sagnac, hom, reveal-conceal, phase) and bulk data generation (sweep,
// fig3). All physics lives in the library; this file only parses options,
// builds configs and serializes results.
//
// Every subcommand accepts --config FILE, a flat key=value file whose keys
// are the subcommand's long option names; command-line flags take
// precedence over file values. --dump-config prints the effective
// configuration in exactly that format, so a dumped config reproduces the
// run that produced it.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotint/constants.hpp"
#include "rotint/detection.hpp"
#include "rotint/errors.hpp"
#include "rotint/evolution.hpp"
#include "rotint/experiments.hpp"
#include "rotint/interferometer.hpp"
#include "rotint/kinematics.hpp"
#include "rotint/spectra.hpp"
#include "rotint/units.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr auto take_last = CLI::MultiOptionPolicy::TakeLast;

// ---------------------------------------------------------------------------
// key=value helpers (config dump format)
// ---------------------------------------------------------------------------

void kv(std::ostream& out, const char* key, const std::string& value) {
  out << key << '=' << value << '\n';
}

void kv(std::ostream& out, const char* key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out << key << '=' << buf << '\n';
}

void kv(std::ostream& out, const char* key, bool value) {
  out << key << '=' << (value ? "true" : "false") << '\n';
}

void kv(std::ostream& out, const char* key, int value) {
  out << key << '=' << value << '\n';
}

void kv(std::ostream& out, const char* key, std::size_t value) {
  out << key << '=' << value << '\n';
}

// ---------------------------------------------------------------------------
// Shared option groups
// ---------------------------------------------------------------------------

// Platform geometry. A positive --radius takes precedence over --area (the
// two describe the same thing; radius 0 means "derive from area").
struct PlatformOpts {
  double radius = 0.0;
  double area = 22.7;
  int windings = 35;
  double index = 1.45;
  double freq = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--radius", radius,
                    "loop radius in m; overrides --area when positive")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--area", area, "enclosed area in m^2")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--windings", windings, "fibre winding count")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--index", index, "refractive index of the fibre")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--freq", freq, "platform rotation frequency in Hz")
        ->capture_default_str()
        ->multi_option_policy(take_last);
  }

  void dump(std::ostream& out) const {
    kv(out, "radius", radius);
    kv(out, "area", area);
    kv(out, "windings", windings);
    kv(out, "index", index);
    kv(out, "freq", freq);
  }

  rotint::PlatformConfig make() const {
    if (radius > 0.0) {
      rotint::PlatformConfig cfg;
      cfg.radius = radius;
      cfg.windings = windings;
      cfg.refractive_index = index;
      cfg.angular_frequency = 2.0 * std::numbers::pi * freq;
      cfg.validate();
      return cfg;
    }
    return rotint::PlatformConfig::from_area(area, windings, index, freq);
  }
};

// Photon spectrum. Wavelength-domain options are the friendly interface;
// positive --mu / --sigma (rad/s) take precedence over them. The bandwidth
// convention defaults to whatever is native for the subcommand ("auto").
struct PhotonOpts {
  double wavelength_nm = 800.0;
  double bandwidth_nm = 5.0;
  double mu = 0.0;
  double sigma = 0.0;
  std::string convention = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("--wavelength", wavelength_nm, "central wavelength in nm")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--bandwidth", bandwidth_nm, "bandwidth in nm")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--mu", mu,
                    "mean angular frequency in rad/s; overrides --wavelength "
                    "when positive")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--sigma", sigma,
                    "bandwidth in rad/s; overrides --bandwidth when positive")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--convention", convention,
                    "bandwidth convention: amplitude | intensity | auto "
                    "(auto = the subcommand's native convention)")
        ->capture_default_str()
        ->multi_option_policy(take_last)
        ->check(CLI::IsMember({"auto", "amplitude", "intensity"}));
  }

  void dump(std::ostream& out) const {
    kv(out, "wavelength", wavelength_nm);
    kv(out, "bandwidth", bandwidth_nm);
    kv(out, "mu", mu);
    kv(out, "sigma", sigma);
    kv(out, "convention", convention);
  }

  rotint::GaussianSpec make(rotint::GaussianConvention native) const {
    rotint::GaussianSpec spec;
    spec.mean = mu > 0.0
                    ? mu
                    : rotint::angular_frequency_from_wavelength_nm(wavelength_nm);
    spec.bandwidth =
        sigma > 0.0
            ? sigma
            : rotint::bandwidth_from_wavelength_nm(bandwidth_nm, wavelength_nm);
    if (convention == "auto") {
      spec.convention = native;
    } else if (convention == "amplitude") {
      spec.convention = rotint::GaussianConvention::AmplitudeStd;
    } else {
      spec.convention = rotint::GaussianConvention::IntensityStd;
    }
    spec.validate();
    return spec;
  }
};

struct GridOpts {
  std::size_t points = 1024;
  double span = 8.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid-points", points, "samples per frequency axis")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--grid-span", span,
                    "half-span of the frequency axis in amplitude-std units")
        ->capture_default_str()
        ->multi_option_policy(take_last);
  }

  void dump(std::ostream& out) const {
    kv(out, "grid-points", points);
    kv(out, "grid-span", span);
  }

  rotint::GridSettings make() const {
    rotint::GridSettings grid{span, points};
    grid.validate();
    return grid;
  }
};

// Per-subcommand plumbing: config file in, config dump out, output target.
// (--config is consumed by the pre-parse expansion in main(); the option
// exists so it shows up in --help and is accepted by the parser.)
struct IoOpts {
  std::string config_path;
  std::string out;
  bool dump_config = false;

  void attach(CLI::App* cmd, const std::string& out_help) {
    cmd->add_option("--config", config_path,
                    "flat key=value file with this subcommand's long option "
                    "names; command-line flags take precedence")
        ->multi_option_policy(take_last);
    cmd->add_flag("--dump-config", dump_config,
                  "print the effective configuration as key=value lines and "
                  "exit")
        ->multi_option_policy(take_last);
    cmd->add_option("--out", out, out_help)
        ->capture_default_str()
        ->multi_option_policy(take_last);
  }

  // Returns true when the caller should stop (config dumped instead of
  // running). --config and --dump-config themselves stay out of the dump.
  bool handle_dump(const std::function<void(std::ostream&)>& dump) const {
    if (!dump_config) {
      return false;
    }
    dump(std::cout);
    return true;
  }

  void emit(const std::function<void(std::ostream&)>& writer) const {
    if (out.empty()) {
      writer(std::cout);
      return;
    }
    std::ofstream file(out);
    if (!file) {
      throw rotint::validation_error("cannot open output file: " + out);
    }
    writer(file);
  }
};

void emit_json(const IoOpts& io, const json& doc) {
  io.emit([&doc](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

rotint::Scenario parse_scenario(const std::string& name) {
  if (name == "sagnac") {
    return rotint::Scenario::QuantumSagnac;
  }
  if (name == "hom") {
    return rotint::Scenario::RotatingHom;
  }
  if (name == "reveal-conceal") {
    return rotint::Scenario::RevealConceal;
  }
  throw rotint::validation_error("unknown scenario: " + name);
}

rotint::SweptParameter parse_swept(const std::string& name) {
  if (name == "freq") {
    return rotint::SweptParameter::RotationFrequency;
  }
  if (name == "delay") {
    return rotint::SweptParameter::Delay;
  }
  if (name == "bandwidth") {
    return rotint::SweptParameter::Bandwidth;
  }
  throw rotint::validation_error("unknown sweep parameter: " + name);
}

rotint::GaussianConvention native_convention(rotint::Scenario scenario) {
  return scenario == rotint::Scenario::RotatingHom
             ? rotint::GaussianConvention::IntensityStd
             : rotint::GaussianConvention::AmplitudeStd;
}

rotint::RotationProfile read_profile_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw rotint::validation_error("cannot open profile file: " + path);
  }
  std::string line;
  if (!std::getline(file, line)) {
    throw rotint::validation_error("profile CSV: empty file");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != "t,omega") {
    throw rotint::validation_error(
        "profile CSV: expected header 't,omega', got '" + line + "'");
  }
  std::vector<std::pair<double, double>> samples;
  std::size_t line_no = 1;
  while (std::getline(file, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos ||
        line.find(',', comma + 1) != std::string::npos) {
      throw rotint::validation_error("profile CSV: expected 2 fields on line " +
                                     std::to_string(line_no));
    }
    try {
      samples.emplace_back(std::stod(line.substr(0, comma)),
                           std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw rotint::validation_error("profile CSV: malformed number on line " +
                                     std::to_string(line_no));
    }
  }
  return rotint::RotationProfile::piecewise_linear(std::move(samples));
}

// ---------------------------------------------------------------------------
// Subcommand state + handlers
// ---------------------------------------------------------------------------

struct KinematicsCmd {
  PlatformOpts platform;
  IoOpts io;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "kinematics", "report the platform kinematics as JSON");
    platform.attach(cmd);
    io.attach(cmd, "output file (default: stdout)");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (io.handle_dump([this](std::ostream& out) {
          platform.dump(out);
          kv(out, "out", io.out);
        })) {
      return;
    }
    const rotint::PlatformConfig cfg = platform.make();
    const rotint::KinematicsReport rep = rotint::kinematics_report(cfg);
    json doc{{"beta", rep.beta},
             {"gamma", rep.gamma},
             {"path_length_m", rep.path_length},
             {"area_m2", rep.area},
             {"u_plus", rep.u_plus},
             {"u_minus", rep.u_minus},
             {"t_a_plus", rep.t_a_plus},
             {"t_a_minus", rep.t_a_minus},
             {"t_sagnac", rep.sagnac}};
    emit_json(io, doc);
  }
};

struct SagnacCmd {
  PlatformOpts platform;
  PhotonOpts photon;
  GridOpts grid;
  IoOpts io;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "sagnac", "single-photon interference of counter-propagating paths");
    platform.attach(cmd);
    photon.attach(cmd);
    grid.attach(cmd);
    io.attach(cmd, "output file (default: stdout)");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (io.handle_dump([this](std::ostream& out) {
          platform.dump(out);
          photon.dump(out);
          grid.dump(out);
          kv(out, "out", io.out);
        })) {
      return;
    }
    const rotint::PlatformConfig cfg = platform.make();
    const rotint::GaussianSpec spec =
        photon.make(rotint::GaussianConvention::AmplitudeStd);
    const double f = cfg.rotation_frequency();
    const auto [pc_closed, pd_closed] =
        rotint::p1_sagnac_closed(spec.mean, cfg.area(), f);
    const rotint::OnePhotonResult q =
        rotint::p1(rotint::build_quantum_sagnac(cfg, spec, grid.make()));
    json doc{{"scenario", "quantum-sagnac"},
             {"rotation_frequency_hz", f},
             {"sagnac_delay_s", rotint::sagnac_delay(cfg.area(), f)},
             {"p_c_closed", pc_closed},
             {"p_d_closed", pd_closed},
             {"p_c_quadrature", q.p_c},
             {"p_d_quadrature", q.p_d}};
    emit_json(io, doc);
  }
};

struct HomCmd {
  PlatformOpts platform;
  PhotonOpts photon;
  GridOpts grid;
  IoOpts io;
  double delta_t = 0.0;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "hom", "two-photon interference of independent photons");
    platform.attach(cmd);
    photon.attach(cmd);
    grid.attach(cmd);
    io.attach(cmd, "output file (default: stdout)");
    cmd->add_option("--delta-t", delta_t, "relative input delay in s")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->callback([this] { run(); });
  }

  void run() {
    if (io.handle_dump([this](std::ostream& out) {
          kv(out, "delta-t", delta_t);
          platform.dump(out);
          photon.dump(out);
          grid.dump(out);
          kv(out, "out", io.out);
        })) {
      return;
    }
    const rotint::PlatformConfig cfg = platform.make();
    const rotint::GaussianSpec spec =
        photon.make(rotint::GaussianConvention::IntensityStd);
    const double t_s =
        rotint::sagnac_delay(cfg.area(), cfg.rotation_frequency());
    const double closed =
        rotint::p2_hom_closed(spec.intensity_std(), t_s, delta_t);
    const rotint::TwoPhotonResult q = rotint::p2(
        rotint::build_rotating_hom(cfg, spec, delta_t, grid.make()));
    json doc{{"scenario", "rotating-hom"},
             {"rotation_frequency_hz", cfg.rotation_frequency()},
             {"delta_t_s", delta_t},
             {"sagnac_delay_s", t_s},
             {"p2_closed", closed},
             {"p2_quadrature", q.p2},
             {"classification", rotint::to_string(rotint::classify(closed).band)}};
    emit_json(io, doc);
  }
};

struct RevealConcealCmd {
  PlatformOpts platform;
  PhotonOpts photon;
  GridOpts grid;
  IoOpts io;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "reveal-conceal",
        "energy-correlated pair behind the lossy loop filter");
    platform.attach(cmd);
    photon.attach(cmd);
    grid.attach(cmd);
    io.attach(cmd, "output file (default: stdout)");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (io.handle_dump([this](std::ostream& out) {
          platform.dump(out);
          photon.dump(out);
          grid.dump(out);
          kv(out, "out", io.out);
        })) {
      return;
    }
    const rotint::PlatformConfig cfg = platform.make();
    const rotint::GaussianSpec spec =
        photon.make(rotint::GaussianConvention::AmplitudeStd);
    const double t_s =
        rotint::sagnac_delay(cfg.area(), cfg.rotation_frequency());
    const double closed = rotint::p2_reveal_conceal_closed(
        spec.mean, spec.amplitude_std(), t_s);
    const rotint::TwoPhotonSpectrum input =
        rotint::TwoPhotonSpectrum::correlated_gaussian(spec, grid.make());
    const rotint::LoopAmplitudeResult loop = rotint::sagnac_loop_amplitude(
        input, cfg.beta(), cfg.propagation_time());
    const rotint::TwoPhotonResult q = rotint::p2(loop.spectrum);
    json doc{{"scenario", "reveal-conceal"},
             {"rotation_frequency_hz", cfg.rotation_frequency()},
             {"sagnac_delay_s", t_s},
             {"p2_closed", closed},
             {"p2_quadrature", q.p2},
             {"survival_probability", loop.survival_probability},
             {"classification", rotint::to_string(rotint::classify(closed).band)}};
    emit_json(io, doc);
  }
};

struct SweepCmd {
  PlatformOpts platform;
  PhotonOpts photon;
  GridOpts grid;
  IoOpts io;
  std::string scenario = "reveal-conceal";
  std::string param = "freq";
  double from = 0.0;
  double to = 3.0;
  std::size_t steps = 600;
  double delta_t = 0.0;
  bool closed_form = true;
  bool quadrature = true;
  std::string format = "csv";

  void attach(CLI::App& app) {
    CLI::App* cmd =
        app.add_subcommand("sweep", "sweep one parameter of a scenario");
    cmd->add_option("--scenario", scenario,
                    "scenario: sagnac | hom | reveal-conceal")
        ->capture_default_str()
        ->multi_option_policy(take_last)
        ->check(CLI::IsMember({"sagnac", "hom", "reveal-conceal"}));
    cmd->add_option("--param", param,
                    "swept parameter: freq (Hz) | delay (s, hom only) | "
                    "bandwidth (rad/s)")
        ->capture_default_str()
        ->multi_option_policy(take_last)
        ->check(CLI::IsMember({"freq", "delay", "bandwidth"}));
    cmd->add_option("--from", from, "first parameter value")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--to", to, "last parameter value")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--steps", steps, "number of samples")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_option("--delta-t", delta_t,
                    "baseline relative input delay in s (hom)")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->add_flag("--closed-form,!--no-closed-form", closed_form,
                  "compute the closed-form column (default: on)")
        ->multi_option_policy(take_last);
    cmd->add_flag("--quadrature,!--no-quadrature", quadrature,
                  "compute the quadrature column (default: on)")
        ->multi_option_policy(take_last);
    cmd->add_option("--format", format, "output format: csv | json")
        ->capture_default_str()
        ->multi_option_policy(take_last)
        ->check(CLI::IsMember({"csv", "json"}));
    platform.attach(cmd);
    photon.attach(cmd);
    grid.attach(cmd);
    io.attach(cmd, "output file (default: stdout)");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (io.handle_dump([this](std::ostream& out) {
          kv(out, "scenario", scenario);
          kv(out, "param", param);
          kv(out, "from", from);
          kv(out, "to", to);
          kv(out, "steps", steps);
          kv(out, "delta-t", delta_t);
          kv(out, "closed-form", closed_form);
          kv(out, "quadrature", quadrature);
          kv(out, "format", format);
          platform.dump(out);
          photon.dump(out);
          grid.dump(out);
          kv(out, "out", io.out);
        })) {
      return;
    }
    rotint::SweepSpec spec;
    spec.scenario = parse_scenario(scenario);
    spec.swept = parse_swept(param);
    spec.range = rotint::SweepRange{from, to, steps};
    spec.platform = platform.make();
    spec.photon = photon.make(native_convention(spec.scenario));
    spec.delay = delta_t;
    spec.closed_form = closed_form;
    spec.quadrature = quadrature;
    spec.grid = grid.make();

    const rotint::SweepResult result = rotint::run_sweep(spec);
    io.emit([&](std::ostream& out) {
      if (format == "csv") {
        rotint::write_csv(result, out);
      } else {
        rotint::write_json(result, out);
      }
    });
  }
};

struct Fig3Cmd {
  IoOpts io;  // io.out doubles as the output directory here

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "fig3", "write the two reference reveal/conceal sweep datasets");
    cmd->add_option("--config", io.config_path,
                    "flat key=value file with this subcommand's long option "
                    "names; command-line flags take precedence")
        ->multi_option_policy(take_last);
    cmd->add_flag("--dump-config", io.dump_config,
                  "print the effective configuration as key=value lines and "
                  "exit")
        ->multi_option_policy(take_last);
    cmd->add_option("--out", io.out,
                    "output directory (default: $ROTINT_OUTPUT_DIR or '.')")
        ->envname("ROTINT_OUTPUT_DIR")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    cmd->callback([this] { run(); });
  }

  void run() {
    if (io.handle_dump(
            [this](std::ostream& out) { kv(out, "out", io.out); })) {
      return;
    }
    namespace fs = std::filesystem;
    const fs::path dir = io.out.empty() ? fs::path(".") : fs::path(io.out);
    fs::create_directories(dir);

    const auto datasets = rotint::fig3_dataset();
    const std::array<std::string, 2> names{"fig3_5nm", "fig3_40nm"};
    for (std::size_t i = 0; i < datasets.size(); ++i) {
      const fs::path csv_path = dir / (names[i] + ".csv");
      const fs::path json_path = dir / (names[i] + ".json");
      std::ofstream csv(csv_path);
      if (!csv) {
        throw rotint::validation_error("cannot open output file: " +
                                       csv_path.string());
      }
      rotint::write_csv(datasets[i], csv);
      std::ofstream js(json_path);
      if (!js) {
        throw rotint::validation_error("cannot open output file: " +
                                       json_path.string());
      }
      rotint::write_json(datasets[i], js);
      std::cout << "wrote " << csv_path.string() << '\n'
                << "wrote " << json_path.string() << '\n';
    }
  }
};

struct PhaseCmd {
  PlatformOpts platform;
  IoOpts io;
  double omega = 0.0;
  std::string direction = "counter";
  std::string profile_path;
  double duration = -1.0;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "phase", "accumulated dynamical phase of one loop direction");
    cmd->add_option("--omega", omega, "photon angular frequency in rad/s")
        ->required()
        ->multi_option_policy(take_last);
    cmd->add_option("--direction", direction,
                    "propagation direction: counter | co")
        ->capture_default_str()
        ->multi_option_policy(take_last)
        ->check(CLI::IsMember({"counter", "co"}));
    cmd->add_option("--profile", profile_path,
                    "CSV file with header 't,omega' holding piecewise-linear "
                    "(t, Omega) samples; default is the uniform --freq value")
        ->multi_option_policy(take_last);
    cmd->add_option("--duration", duration,
                    "integration time in s (default: one full pass, L n / c)")
        ->capture_default_str()
        ->multi_option_policy(take_last);
    platform.attach(cmd);
    io.attach(cmd, "output file (default: stdout)");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (io.handle_dump([this](std::ostream& out) {
          kv(out, "omega", omega);
          kv(out, "direction", direction);
          kv(out, "profile", profile_path);
          kv(out, "duration", duration);
          platform.dump(out);
          kv(out, "out", io.out);
        })) {
      return;
    }
    const rotint::PlatformConfig cfg = platform.make();
    const double t_end = duration >= 0.0 ? duration : cfg.propagation_time();
    const rotint::ModeDirection dir =
        direction == "counter" ? rotint::ModeDirection::CounterRotating
                               : rotint::ModeDirection::CoRotating;
    const rotint::RotationProfile profile =
        profile_path.empty()
            ? rotint::RotationProfile::uniform(cfg.angular_frequency)
            : read_profile_csv(profile_path);

    const double phase = rotint::dynamical_phase(
        profile, omega, dir, cfg.radius, cfg.refractive_index, t_end);
    json doc{{"omega_rad_s", omega},
             {"direction", direction},
             {"duration_s", t_end},
             {"phase_rad", phase}};
    if (profile.is_uniform()) {
      rotint::EvolutionParams params =
          rotint::EvolutionParams::for_mode(cfg, dir);
      doc["phase_uniform_closed_rad"] =
          rotint::mode_frequency(omega, params, true) * t_end;
    }
    emit_json(io, doc);
  }
};

// ---------------------------------------------------------------------------
// Flat config expansion
// ---------------------------------------------------------------------------

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

// Reads a flat key=value file and returns one "--key=value" token per entry.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw rotint::validation_error("cannot open config file: " + path);
  }
  std::vector<std::string> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#' || text.front() == ';') {
      continue;
    }
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw rotint::validation_error("config: expected key=value on line " +
                                     std::to_string(line_no));
    }
    const std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (key.empty()) {
      throw rotint::validation_error("config: empty key on line " +
                                     std::to_string(line_no));
    }
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (value.empty()) {
      // "--key=" would be read as a bare "--key" that swallows the next
      // token, so pass empty values as a separate argument instead.
      tokens.push_back("--" + key);
      tokens.push_back("");
    } else {
      tokens.push_back("--" + key + "=" + value);
    }
  }
  return tokens;
}

// Splices config-file values into the argument list right after the
// subcommand name, so that explicit command-line flags (parsed later, with
// take-last policy) override them.
std::vector<std::string> expand_config(int argc, char** argv) {
  static const std::vector<std::string> subcommands{
      "kinematics", "sagnac", "hom",  "reveal-conceal",
      "sweep",      "fig3",   "phase"};

  std::vector<std::string> args(argv + 1, argv + argc);
  std::size_t sub_index = args.size();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (std::find(subcommands.begin(), subcommands.end(), args[i]) !=
        subcommands.end()) {
      sub_index = i;
      break;
    }
  }
  if (sub_index == args.size()) {
    return args;
  }

  std::string config_path;
  for (std::size_t i = sub_index + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty()) {
    return args;
  }

  const std::vector<std::string> tokens = config_tokens(config_path);
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_index) + 1,
              tokens.begin(), tokens.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotating-loop interferometer toolkit", "rotint"};
  app.require_subcommand(1);

  KinematicsCmd kinematics;
  SagnacCmd sagnac;
  HomCmd hom;
  RevealConcealCmd reveal_conceal;
  SweepCmd sweep;
  Fig3Cmd fig3;
  PhaseCmd phase;

  kinematics.attach(app);
  sagnac.attach(app);
  hom.attach(app);
  reveal_conceal.attach(app);
  sweep.attach(app);
  fig3.attach(app);
  phase.attach(app);

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes back-to-front
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const rotint::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const rotint::numerical_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
