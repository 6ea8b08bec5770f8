// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinhol/errors.hpp"
#include "spinhol/gates_lab.hpp"
#include "spinhol/grassmann.hpp"
#include "spinhol/holonomy.hpp"
#include "spinhol/json_io.hpp"
#include "spinhol/stellar.hpp"

namespace spinhol::cli {

namespace {

struct Settings {
  std::uint64_t seed = 0;
  // demo
  std::string demo;
  int steps = 2001;
  double demo_tol = 1e-8;
  // audit / constellation
  std::string file;
  int tmax = 1;
  double audit_tol = kAnticoherenceTol;
  // invariance
  std::string sweep;
  int seeds = 50;
  std::vector<double> amplitudes{0.1, 0.5, 1.0, 2.0};
  int modes = 3;
  double sweep_tol = 1e-7;
  std::string out;
};

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw DataError("cannot write '" + path + "'");
  o << text;
}

Json verdict(bool pass, double value, double tol) { return Json{{"pass", pass}, {"value", value}, {"tol", tol}}; }

Json holonomy_diagnostics(const GateResult& g) {
  const Holonomy& h = g.holonomy;
  return Json{{"samples", h.samples},
              {"doublings", g.doublings},
              {"max_connection_norm", h.max_connection_norm},
              {"max_hermitian_defect", h.max_hermitian_defect},
              {"min_overlap_singular_value", h.min_overlap_singular_value},
              {"f_unitarity_defect", h.f_unitarity_defect},
              {"f_identity_deviation", max_abs(h.f - Matrix::Identity(h.f.rows(), h.f.cols()))},
              {"q_unitarity_defect", unitarity_defect(h.q)},
              {"step_halving_delta", h.step_halving_delta}};
}

Json anticoherence_json(const AnticoherenceReport& r) {
  return Json{{"order", r.order}, {"residuals", r.residuals}, {"tol", r.tol}};
}

KPlane plane_of(const PlaneFile& f) {
  std::vector<Vector> kets = f.kets;
  return plane_from_kets(f.spin(), kets);
}

/// Outputs, diagnostics and verdicts of one command.
struct Result {
  Json outputs = Json::object();
  Json diagnostics = Json::object();
  Json verdicts = Json::object();
  std::string input_bytes;
};

Result cmd_demo(const Settings& s) {
  const GateDemo d = gate_demo(s.demo);
  const KPlane p = entry_plane(d.entry);
  const RotationCurve curve = rotation_curve(d.curve.axis, d.curve.angle, s.steps);
  GateOptions options;
  options.samples = s.steps;
  const GateResult g = extract_gate(p, curve, options);
  const GateComparison cmp = compare_gate(g.holonomy.u, d.curve.expected, CompareMode::exact, s.demo_tol);
  const AnticoherenceReport ac = anticoherence(p, 1);

  Result r;
  r.outputs = Json{{"entry", d.entry.name},
                   {"holonomy", matrix_to_json(g.holonomy.u)},
                   {"expected", matrix_to_json(d.curve.expected)},
                   {"expected_source", d.curve.source},
                   {"deviation", cmp.distance},
                   {"determinant", complex_to_json(g.holonomy.u.determinant())},
                   {"anticoherence", anticoherence_json(ac)},
                   {"spin_expectation_residual", spin_expectation_residual(p)},
                   {"endpoint", Json{{"rotation", rotation_to_json(curve.back())},
                                     {"symmetric", g.closed},
                                     {"residual", g.endpoint_residual}}}};
  r.diagnostics = holonomy_diagnostics(g);
  r.verdicts = Json{{"gate", verdict(cmp.match, cmp.distance, s.demo_tol)},
                    {"anticoherent", verdict(ac.order >= 1, ac.residuals.at(0), ac.tol)},
                    {"endpoint_symmetric", verdict(g.closed, g.endpoint_residual, kPlaneTol)}};
  return r;
}

Result cmd_audit(const Settings& s) {
  Result r;
  r.input_bytes = read_file(s.file);
  const PlaneFile f = parse_plane_file(r.input_bytes);
  const KPlane p = plane_of(f);
  if (s.tmax < 1 || s.tmax > f.twice_s) {
    throw DataError("--tmax must lie in [1, 2s] = [1, " + std::to_string(f.twice_s) + "]");
  }
  const AnticoherenceReport ac = anticoherence(p, s.tmax, s.audit_tol);
  const MultiConstellation mc = multiconstellation(p);

  Json weights = Json::array();
  for (const WeightedConstellation& w : mc.multiplets) {
    weights.push_back(Json{{"j", w.j.value()}, {"copy", w.copy}, {"weight", complex_to_json(w.weight)},
                           {"modulus", std::abs(w.weight)}});
  }
  Json symmetries = Json::object();
  try {
    const SymmetrySearch search = multiconstellation_symmetries(mc);
    Json rotations = Json::array();
    double worst = 0.0;
    for (const Rotation& rot : search.rotations) {
      const SymmetryCheck check = is_symmetry_rotation(p, rot);
      worst = std::max(worst, check.residual);
      Json entry = rotation_to_json(rot);
      entry["plane_residual"] = check.residual;
      rotations.push_back(entry);
    }
    symmetries["rotations"] = rotations;
    symmetries["continuous_axis"] = search.continuous_axis ? vec3_to_json(*search.continuous_axis) : Json(nullptr);
    r.diagnostics["max_symmetry_plane_residual"] = worst;
  } catch (const DomainError& e) {
    symmetries["rotations"] = Json::array();
    symmetries["continuous_axis"] = nullptr;
    symmetries["unavailable"] = e.what();
  }

  r.outputs = Json{{"name", f.name ? Json(*f.name) : Json(nullptr)},
                   {"twice_s", f.twice_s},
                   {"k", p.k()},
                   {"anticoherence", anticoherence_json(ac)},
                   {"spin_expectation_residual", spin_expectation_residual(p)},
                   {"multiplets", weights},
                   {"symmetries", symmetries}};
  return r;
}

Result cmd_constellation(const Settings& s) {
  Result r;
  r.input_bytes = read_file(s.file);
  const PlaneFile f = parse_plane_file(r.input_bytes);
  Json stars;
  if (f.is_state()) {
    stars = star_file_to_json(f.spin(), majorana_constellation(f.kets.front().normalized()));
  } else {
    stars = star_file_to_json(multiconstellation(plane_of(f)));
  }
  if (!s.out.empty()) write_file(s.out, dump(stars));
  r.outputs = Json{{"kind", f.is_state() ? "state" : "plane"}, {"star_file", stars}};
  return r;
}

Result cmd_invariance(const Settings& s) {
  const GateDemo d = gate_demo(s.sweep);
  const KPlane p = entry_plane(d.entry);
  const RotationCurve base = rotation_curve(d.curve.axis, d.curve.angle, s.steps);
  SweepConfig config;
  for (int i = 0; i < s.seeds; ++i) config.seeds.push_back(s.seed + static_cast<std::uint64_t>(i));
  config.amplitudes = s.amplitudes;
  config.n_modes = s.modes;
  config.gate.samples = s.steps;
  for (double a : s.amplitudes) {
    if (!(a >= 0.0)) throw DataError("amplitudes must be non-negative");
  }

  const GateResult reference = extract_gate(p, base, config.gate);
  const std::vector<SweepPoint> points = invariance_sweep(p, base, reference.holonomy.u, config);
  Json table = Json::array();
  double worst = 0.0;
  for (const SweepPoint& pt : points) {
    worst = std::max(worst, pt.deviation);
    table.push_back(Json{{"seed", pt.seed}, {"amplitude", pt.amplitude}, {"deviation", pt.deviation},
                         {"samples", pt.samples}});
  }
  const GateComparison vs_expected =
      compare_gate(reference.holonomy.u, d.curve.expected, CompareMode::exact, s.sweep_tol);

  Result r;
  r.outputs = Json{{"reference_holonomy", matrix_to_json(reference.holonomy.u)},
                   {"expected", matrix_to_json(d.curve.expected)},
                   {"reference_vs_expected", vs_expected.distance},
                   {"sweep", table},
                   {"max_deviation", worst}};
  r.diagnostics = Json{{"reference", holonomy_diagnostics(reference)}, {"grid_points", points.size()}};
  r.verdicts = Json{{"invariance", verdict(worst < s.sweep_tol, worst, s.sweep_tol)}};
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Anticoherent spin subspaces, Wilczek-Zee holonomies and topological gates"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", s.seed, "Base random seed")->capture_default_str();

  const std::vector<std::string> demos = gate_demo_names();
  auto* demo = app.add_subcommand("demo", "Compute one of the catalog gates");
  demo->add_option("name", s.demo, "not | cnot1 | cnot2")->required()->check(CLI::IsMember(demos));
  demo->add_option("--steps", s.steps, "Initial number of curve samples")->capture_default_str()->check(CLI::Range(13, 10000000));
  demo->add_option("--tol", s.demo_tol, "Gate tolerance")->capture_default_str();
  demo->add_option("--out", s.out, "Also write the report here");

  auto* audit = app.add_subcommand("audit", "Anticoherence and symmetry audit of a plane file");
  audit->add_option("file", s.file, "Plane file")->required();
  audit->add_option("--tmax", s.tmax, "Highest anticoherence order tested")->capture_default_str();
  audit->add_option("--tol", s.audit_tol, "Anticoherence tolerance")->capture_default_str();
  audit->add_option("--out", s.out, "Also write the report here");

  auto* constellation = app.add_subcommand("constellation", "Majorana constellation or multiconstellation");
  constellation->add_option("file", s.file, "State or plane file")->required();
  constellation->add_option("--out", s.out, "Star file to write");

  auto* invariance = app.add_subcommand("invariance", "Perturbation sweep of a catalog gate");
  invariance->add_option("name", s.sweep, "not | cnot1 | cnot2")->required()->check(CLI::IsMember(demos));
  invariance->add_option("--seeds", s.seeds, "Number of seeds")->capture_default_str()->check(CLI::Range(0, 100000));
  invariance->add_option("--amplitude", s.amplitudes, "Perturbation amplitudes")->capture_default_str();
  invariance->add_option("--modes", s.modes, "Sine modes per perturbation")->capture_default_str()->check(CLI::Range(0, 1000));
  invariance->add_option("--steps", s.steps, "Initial number of curve samples")->capture_default_str()->check(CLI::Range(13, 10000000));
  invariance->add_option("--tol", s.sweep_tol, "Deviation tolerance")->capture_default_str();
  invariance->add_option("--out", s.out, "Also write the report here");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Result result;
  std::string command;
  try {
    if (*demo) {
      command = "demo";
      result = cmd_demo(s);
    } else if (*audit) {
      command = "audit";
      result = cmd_audit(s);
    } else if (*constellation) {
      command = "constellation";
      result = cmd_constellation(s);
    } else {
      command = "invariance";
      result = cmd_invariance(s);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "data error: " << e.what() << "\n";
    return kDataError;
  }

  bool pass = true;
  for (const auto& [name, v] : result.verdicts.items()) pass = pass && v.at("pass").get<bool>();

  std::uint64_t digest = fnv1a(result.input_bytes);
  for (std::size_t i = 1; i < args.size(); ++i) digest = fnv1a(args[i] + '\0', digest);
  Json echo = Json::array();
  for (std::size_t i = 1; i < args.size(); ++i) echo.push_back(args[i]);

  const Json report{{"command", Json{{"name", command}, {"argv", echo}, {"seed", s.seed}}},
                    {"inputs_digest", hex(digest)},
                    {"outputs", result.outputs},
                    {"diagnostics", result.diagnostics},
                    {"verdicts", result.verdicts},
                    {"status", pass ? "PASS" : "FAIL"}};
  const std::string text = dump(report);
  out << text;
  if (!s.out.empty() && command != "constellation") {
    try {
      write_file(s.out, text);
    } catch (const Error& e) {
      err << "data error: " << e.what() << "\n";
      return kDataError;
    }
  }
  return pass ? kPass : kFail;
}

}  // namespace spinhol::cli
