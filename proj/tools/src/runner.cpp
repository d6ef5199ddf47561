#include "nml_cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "nml/baselines.hpp"
#include "nml/diagnostics.hpp"
#include "nml/errors.hpp"
#include "nml/multiscale.hpp"
#include "nml/trajectory_io.hpp"
#include "nml/volterra.hpp"

namespace nml::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kFigureGamma = 1.0;
constexpr double kFigureLambda = 0.1;

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Solve: return "solve";
    case Command::Perturb: return "perturb";
    case Command::Compare: return "compare";
    case Command::Diagnose: return "diagnose";
    case Command::Sweep: return "sweep";
    case Command::Figure: return "figure";
  }
  return "unknown";
}

KernelKind parse_kernel(const std::string& name) {
  if (auto kind = kernel_kind_from_string(name)) return *kind;
  throw UsageError("unknown kernel '" + name +
                   "' (expected lorentzian, gaussian-error, inverse-law or gaussian)");
}

Method parse_method(const std::string& name) {
  if (auto method = method_from_string(name)) return *method;
  throw UsageError("unknown method '" + name +
                   "' (expected exact, closed-form, ms0, ms1, odp2, odp6, gme2, tcl2 or tcl6)");
}

fs::path output_root() {
  if (const char* env = std::getenv("NML_OUT_DIR"); env && *env) return fs::path(env);
  return fs::path(".");
}

fs::path out_or(const RunSpec& spec, const fs::path& fallback) {
  return spec.out.empty() ? output_root() / fallback : spec.out;
}

double step_of(const RunSpec& spec) { return spec.dt.value_or(1e-3 / spec.gamma); }
double horizon_of(const RunSpec& spec) { return spec.t_max.value_or(20.0 / spec.gamma); }

Json files_json(const std::vector<fs::path>& files) {
  Json out = Json::array();
  for (const auto& f : files) out.push_back(f.generic_string());
  return out;
}

void validate_parameters(const RunSpec& spec) {
  if (!(spec.gamma > 0.0) || !(spec.lambda > 0.0)) {
    throw UsageError("--gamma and --lambda must be positive");
  }
  if (!(spec.threshold > 0.0 && spec.threshold < 1.0)) {
    throw UsageError("--threshold must lie in (0, 1)");
  }
  SolverConfig{step_of(spec), horizon_of(spec), false}.validate();
}

AmplitudeTrajectory exact_reference(KernelKind kind, double gamma, double lambda, double dt,
                                    double t_max) {
  if (kind == KernelKind::Lorentzian) {
    return lorentzian_closed_form_trajectory(gamma, lambda, dt, t_max);
  }
  return solve_exact(make_kernel(kind, gamma, lambda), SolverConfig{dt, t_max, false});
}

// ---------------------------------------------------------------- commands

RunResult write_single(const RunSpec& spec, Method method) {
  std::string warning;
  const AmplitudeTrajectory traj = produce(spec, method, &warning);
  const fs::path path = out_or(spec, fs::path(std::string(to_string(method)) + ".csv"));
  write_trajectory(path, traj);

  RunResult result;
  result.files = {path, metadata_path(path)};
  result.summary["method"] = traj.method_tag;
  result.summary["kernel"] = std::string(nml::to_string(spec.kernel));
  result.summary["gamma"] = spec.gamma;
  result.summary["lambda"] = spec.lambda;
  result.summary["rows"] = traj.size();
  if (!warning.empty()) result.summary["warning"] = warning;
  return result;
}

RunResult run_perturb(const RunSpec& spec) {
  if (!spec.method) throw UsageError("perturb needs --method");
  if (*spec.method == Method::MS1 &&
      !derive_ms_coefficients(
           taylor_coefficients(make_kernel(spec.kernel, spec.gamma, spec.lambda), 4), spec.gamma,
           spec.lambda)
           .collapsed_tau &&
      !ms1_available(spec.kernel, spec.gamma, spec.lambda, step_of(spec), horizon_of(spec))) {
    RunResult result;
    result.summary["method"] = "ms1";
    result.summary["status"] = "unavailable";
    result.summary["reason"] = "MS1 does not improve on MS0 against the exact solution for kernel " +
                               std::string(nml::to_string(spec.kernel));
    return result;
  }
  return write_single(spec, *spec.method);
}

AmplitudeTrajectory load_input(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("no such file: " + path.string());
  return read_trajectory(path);
}

RunResult run_compare(const RunSpec& spec) {
  if (spec.inputs.size() != 2) throw UsageError("compare needs exactly two CSV files");
  const AmplitudeTrajectory a = load_input(spec.inputs[0]);
  const AmplitudeTrajectory b = load_input(spec.inputs[1]);
  const ComparisonReport report = compare(a, b);
  Json json = comparison_report(report);
  json["a"] = spec.inputs[0].generic_string();
  json["b"] = spec.inputs[1].generic_string();
  const fs::path path = out_or(spec, "compare.json");
  write_file_atomic(path, json.dump(2) + "\n");

  RunResult result;
  result.files = {path};
  result.summary["report"] = comparison_report(report);
  return result;
}

RunResult run_diagnose(const RunSpec& spec) {
  AmplitudeTrajectory traj;
  if (spec.inputs.size() > 1) throw UsageError("diagnose takes at most one CSV file");
  if (!spec.inputs.empty()) {
    traj = load_input(spec.inputs.front());
  } else {
    traj = produce(spec, spec.method.value_or(Method::Exact));
  }
  const MasterEqCoefficients coeffs = master_coefficients(traj, spec.threshold);
  const MarkovianVerdict verdict = is_markovian(coeffs, markovian_tolerance(traj));
  const auto t_hat = minimal_evolution_time(traj, spec.threshold);

  const fs::path csv = out_or(spec, "diagnose.csv");
  fs::path json_path = csv;
  json_path.replace_extension(".diagnostics.json");
  write_trajectory(csv, traj, &coeffs);
  Json report = diagnostics_report(coeffs, verdict, t_hat);
  write_file_atomic(json_path, report.dump(2) + "\n");

  RunResult result;
  result.files = {csv, metadata_path(csv), json_path};
  result.summary["diagnostics"] = std::move(report);
  return result;
}

RunResult run_sweep(const RunSpec& spec) {
  if (!spec.sweep) throw UsageError("sweep needs --sweep <name>:<start>:<stop>:<count>");
  const Method method = spec.method.value_or(Method::Exact);
  const std::vector<double> values = spec.sweep->values();
  const fs::path dir = out_or(spec, "sweep");

  std::vector<RunSpec> jobs(values.size(), spec);
  std::vector<fs::path> paths(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    (spec.sweep->parameter == "gamma" ? jobs[i].gamma : jobs[i].lambda) = values[i];
    char name[64];
    std::snprintf(name, sizeof name, "%s_%s_%03zu.csv", std::string(to_string(method)).c_str(),
                  spec.sweep->parameter.c_str(), i);
    paths[i] = dir / name;
    validate_parameters(jobs[i]);
  }

  // Jobs are independent; each file lands via an atomic rename.
  std::vector<std::exception_ptr> errors(values.size());
  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    for (std::size_t i = cursor++; i < values.size(); i = cursor++) {
      try {
        write_trajectory(paths[i], produce(jobs[i], method));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, values.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Json index;
  index["parameter"] = spec.sweep->parameter;
  index["method"] = std::string(to_string(method));
  index["kernel"] = std::string(nml::to_string(spec.kernel));
  index["values"] = values;
  Json files = Json::array();
  for (const auto& p : paths) files.push_back(p.filename().generic_string());
  index["files"] = files;
  const fs::path index_path = dir / "index.json";
  write_file_atomic(index_path, index.dump(2) + "\n");

  RunResult result;
  result.files = paths;
  result.files.push_back(index_path);
  result.summary["count"] = values.size();
  result.summary["index"] = index_path.generic_string();
  return result;
}

// ---------------------------------------------------------------- figures

struct Curve {
  std::string label;
  std::string csv;
  std::string style;
  std::string panel;
};

Json curve_json(const Curve& c) {
  Json j;
  j["label"] = c.label;
  j["csv"] = c.csv;
  j["style"] = c.style;
  j["panel"] = c.panel;
  return j;
}

void write_kernel_csv(const fs::path& path, const ReservoirKernel& kernel, double dt, double t_max) {
  std::string out = "t,correlation\n";
  for (double t : uniform_grid(dt, t_max)) {
    out += format_number(t);
    out += ',';
    out += format_number(correlation(kernel, t));
    out += '\n';
  }
  write_file_atomic(path, out);
}

RunResult run_figure(const RunSpec& base) {
  if (base.figure < 1 || base.figure > 3) throw UsageError("figure must be 1, 2 or 3");
  RunSpec spec = base;
  spec.gamma = kFigureGamma;
  spec.lambda = kFigureLambda;
  spec.kernel = KernelKind::Lorentzian;
  const fs::path dir = out_or(spec, "figure" + std::to_string(spec.figure));
  const double dt = step_of(spec);
  const double t_max = horizon_of(spec);

  std::vector<Curve> curves;
  Json panels = Json::array();
  Json unavailable = Json::array();
  RunResult result;
  const auto emit = [&](const AmplitudeTrajectory& traj, Curve curve) {
    const fs::path path = dir / curve.csv;
    write_trajectory(path, traj);
    result.files.push_back(path);
    curves.push_back(std::move(curve));
  };
  const auto panel = [&](const std::string& id, const std::string& title, const std::string& kind) {
    Json p;
    p["id"] = id;
    p["title"] = title;
    p["kind"] = kind;
    panels.push_back(p);
  };

  if (spec.figure == 1) {
    panel("main", "Baseline methods", "population");
    emit(exact_reference(KernelKind::Lorentzian, spec.gamma, spec.lambda, dt, t_max),
         {"Exact", "exact.csv", "k-", "main"});
    const std::pair<BaselineMethod, const char*> methods[] = {
        {BaselineMethod::ODP2, "ODP-2"}, {BaselineMethod::ODP6, "ODP-6"},
        {BaselineMethod::GME2, "GME-2"}, {BaselineMethod::TCL2, "TCL-2"},
        {BaselineMethod::TCL6, "TCL-6"}};
    const char* styles[] = {"C0--", "C1--", "C2-.", "C3:", "C4:"};
    int s = 0;
    for (const auto& [m, label] : methods) {
      emit(baseline_trajectory({m, spec.gamma, spec.lambda}, dt, t_max),
           {label, std::string(to_string(m)) + ".csv", styles[s++], "main"});
    }
  } else if (spec.figure == 2) {
    panel("main", "Multiple-scale approximants", "population");
    emit(exact_reference(KernelKind::Lorentzian, spec.gamma, spec.lambda, dt, t_max),
         {"Exact", "exact.csv", "k-", "main"});
    emit(produce(spec, Method::MS0), {"MS0", "ms0.csv", "C0--", "main"});
    emit(produce(spec, Method::MS1), {"MS1", "ms1.csv", "C1-.", "main"});
  } else {
    const std::tuple<KernelKind, const char*, const char*, const char*> kernels[] = {
        {KernelKind::GaussianError, "a", "d", "Gaussian error"},
        {KernelKind::InverseLaw, "b", "e", "Inverse law"},
        {KernelKind::Gaussian, "c", "f", "Gaussian"}};
    for (const auto& [kind, kpanel, _, title] : kernels) panel(kpanel, title, "kernel");
    for (const auto& [kind, __, spanel, title] : kernels) panel(spanel, title, "population");
    for (const auto& [kind, kpanel, spanel, title] : kernels) {
      const std::string tag(nml::to_string(kind));
      RunSpec job = spec;
      job.kernel = kind;
      const ReservoirKernel kernel = make_kernel(kind, spec.gamma, spec.lambda);
      const fs::path kernel_path = dir / ("kernel_" + tag + ".csv");
      write_kernel_csv(kernel_path, kernel, dt, t_max);
      result.files.push_back(kernel_path);
      curves.push_back({"G(t)", kernel_path.filename().string(), "k-", kpanel});

      emit(produce(job, Method::Exact), {"Exact", "exact_" + tag + ".csv", "k-", spanel});
      emit(produce(job, Method::MS0), {"MS0", "ms0_" + tag + ".csv", "C0--", spanel});
      const auto coeffs = derive_ms_coefficients(taylor_coefficients(kernel, 4), spec.gamma, spec.lambda);
      std::string reason;
      if (coeffs.collapsed_tau) {
        reason = "auxiliary time scale collapsed (G1 = 0)";
      } else if (!ms1_available(kind, spec.gamma, spec.lambda, dt, t_max)) {
        reason = "MS1 does not improve on MS0 against the exact solution";
      }
      if (reason.empty()) {
        emit(produce(job, Method::MS1), {"MS1", "ms1_" + tag + ".csv", "C1-.", spanel});
      } else {
        Json u;
        u["label"] = "MS1";
        u["panel"] = spanel;
        u["reason"] = reason;
        unavailable.push_back(u);
      }
    }
  }

  Json manifest;
  manifest["figure"] = spec.figure;
  manifest["gamma"] = spec.gamma;
  manifest["lambda"] = spec.lambda;
  manifest["dt"] = dt;
  manifest["t_max"] = t_max;
  manifest["initial_population"] = 1.0;
  manifest["panels"] = panels;
  Json list = Json::array();
  for (const auto& c : curves) list.push_back(curve_json(c));
  manifest["curves"] = list;
  manifest["unavailable"] = unavailable;
  const fs::path manifest_path = dir / "manifest.json";
  write_file_atomic(manifest_path, manifest.dump(2) + "\n");
  result.files.push_back(manifest_path);
  result.summary["manifest"] = manifest_path.generic_string();
  result.summary["curves"] = curves.size();
  return result;
}

// ---------------------------------------------------------------- config

void apply_config(const fs::path& path, RunSpec& spec, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  Json config;
  try {
    config = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + path.string() + ": " + e.what());
  }
  if (!config.is_object()) throw UsageError("config must be a flat JSON object");
  const auto given = [&](const char* flag) { return app.count(flag) > 0; };
  try {
    for (const auto& [key, value] : config.items()) {
      if (key == "kernel") {
        if (!given("--kernel")) spec.kernel = parse_kernel(value.get<std::string>());
      } else if (key == "gamma") {
        if (!given("--gamma")) spec.gamma = value.get<double>();
      } else if (key == "lambda") {
        if (!given("--lambda")) spec.lambda = value.get<double>();
      } else if (key == "method") {
        if (!given("--method")) spec.method = parse_method(value.get<std::string>());
      } else if (key == "dt") {
        if (!given("--dt")) spec.dt = value.get<double>();
      } else if (key == "t-max") {
        if (!given("--t-max")) spec.t_max = value.get<double>();
      } else if (key == "out") {
        if (!given("--out")) spec.out = value.get<std::string>();
      } else if (key == "sweep") {
        if (!given("--sweep")) spec.sweep = parse_sweep(value.get<std::string>());
      } else if (key == "threshold") {
        if (!given("--threshold")) spec.threshold = value.get<double>();
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + path.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  if (count == 1) return {start};
  for (int i = 0; i < count; ++i) {
    out.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return out;
}

SweepSpec parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const auto colon = text.find(':', begin);
    parts.push_back(text.substr(begin, colon - begin));
    if (colon == std::string::npos) break;
    begin = colon + 1;
  }
  if (parts.size() != 4) throw UsageError("--sweep expects <name>:<start>:<stop>:<count>");
  SweepSpec sweep;
  sweep.parameter = parts[0];
  if (sweep.parameter != "gamma" && sweep.parameter != "lambda") {
    throw UsageError("--sweep parameter must be gamma or lambda");
  }
  try {
    std::size_t used = 0;
    sweep.start = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("start");
    sweep.stop = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("stop");
    sweep.count = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw UsageError("--sweep has a malformed number: " + text);
  }
  if (sweep.count < 1) throw UsageError("--sweep count must be >= 1");
  return sweep;
}

RunSpec parse_args(int argc, const char* const* argv) {
  CLI::App app{"Two-level open-system amplitude dynamics in structured reservoirs", "nml"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string kernel = "lorentzian", method, out, config, sweep;
  double gamma = 1.0, lambda = 0.1, dt = 0.0, t_max = 0.0, threshold = 1e-6;
  app.add_option("--kernel", kernel, "lorentzian | gaussian-error | inverse-law | gaussian");
  app.add_option("--gamma", gamma, "coupling strength");
  app.add_option("--lambda", lambda, "spectral width");
  app.add_option("--method", method, "exact | closed-form | ms0 | ms1 | odp2 | odp6 | gme2 | tcl2 | tcl6");
  app.add_option("--dt", dt, "time step (default 1e-3/gamma)");
  app.add_option("--t-max", t_max, "horizon (default 20/gamma)");
  app.add_option("--out", out, "output file or directory");
  app.add_option("--config", config, "flat JSON object keyed by flag names");
  app.add_option("--sweep", sweep, "<name>:<start>:<stop>:<count>");
  app.add_option("--threshold", threshold, "singularity threshold on |C|");

  std::vector<std::string> compare_inputs, diagnose_inputs;
  int figure = 0;
  auto* solve_cmd = app.add_subcommand("solve", "exact numeric solution");
  auto* perturb_cmd = app.add_subcommand("perturb", "approximate solution by --method");
  auto* compare_cmd = app.add_subcommand("compare", "population errors between two CSVs");
  compare_cmd->add_option("inputs", compare_inputs, "two trajectory CSVs")->expected(2);
  auto* diagnose_cmd = app.add_subcommand("diagnose", "master-equation coefficients");
  diagnose_cmd->add_option("input", diagnose_inputs, "trajectory CSV (default: solve now)");
  auto* sweep_cmd = app.add_subcommand("sweep", "one trajectory per parameter value");
  auto* figure_cmd = app.add_subcommand("figure", "curve datasets and manifest for figure 1, 2 or 3");
  figure_cmd->add_option("number", figure, "1, 2 or 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunSpec spec;
  if (*solve_cmd) spec.command = Command::Solve;
  else if (*perturb_cmd) spec.command = Command::Perturb;
  else if (*compare_cmd) spec.command = Command::Compare;
  else if (*diagnose_cmd) spec.command = Command::Diagnose;
  else if (*sweep_cmd) spec.command = Command::Sweep;
  else spec.command = Command::Figure;

  if (!config.empty()) apply_config(config, spec, app);
  if (app.count("--kernel")) spec.kernel = parse_kernel(kernel);
  if (app.count("--gamma")) spec.gamma = gamma;
  if (app.count("--lambda")) spec.lambda = lambda;
  if (app.count("--method")) spec.method = parse_method(method);
  if (app.count("--dt")) spec.dt = dt;
  if (app.count("--t-max")) spec.t_max = t_max;
  if (app.count("--out")) spec.out = out;
  if (app.count("--sweep")) spec.sweep = parse_sweep(sweep);
  if (app.count("--threshold")) spec.threshold = threshold;

  const auto& inputs = spec.command == Command::Compare ? compare_inputs : diagnose_inputs;
  for (const auto& in : inputs) spec.inputs.emplace_back(in);
  spec.figure = figure;
  return spec;
}

double markovian_tolerance(const AmplitudeTrajectory& traj) {
  return traj.dt() > 0.0 ? 1e-10 / traj.dt() : 0.0;
}

bool ms1_available(KernelKind kind, double gamma, double lambda, double dt, double t_max) {
  const ReservoirKernel kernel = make_kernel(kind, gamma, lambda);
  const MsCoefficients coeffs = derive_ms_coefficients(taylor_coefficients(kernel, 4), gamma, lambda);
  if (coeffs.collapsed_tau) return false;
  const TrajectoryParams params{kind, gamma, lambda};
  const AmplitudeTrajectory exact = exact_reference(kind, gamma, lambda, dt, t_max);
  const double alpha = kernel.alpha();
  const double ms0 =
      compare(ms_trajectory(coeffs, alpha, MsOrder::MS0, params, dt, t_max), exact).linf_population;
  const double ms1 =
      compare(ms_trajectory(coeffs, alpha, MsOrder::MS1, params, dt, t_max), exact).linf_population;
  return ms1 < ms0;
}

AmplitudeTrajectory produce(const RunSpec& spec, Method method, std::string* warning) {
  validate_parameters(spec);
  const double dt = step_of(spec);
  const double t_max = horizon_of(spec);
  const ReservoirKernel kernel = make_kernel(spec.kernel, spec.gamma, spec.lambda);
  const TrajectoryParams params{spec.kernel, spec.gamma, spec.lambda};

  if (const auto baseline = baseline_from_method(method)) {
    if (spec.kernel != KernelKind::Lorentzian) {
      throw UsageError("method " + std::string(to_string(method)) +
                       " is only defined for the lorentzian kernel");
    }
    return baseline_trajectory({*baseline, spec.gamma, spec.lambda}, dt, t_max);
  }
  switch (method) {
    case Method::Exact: {
      AmplitudeTrajectory traj = solve_exact(kernel, SolverConfig{dt, t_max, false});
      traj.method_tag = "exact";
      return traj;
    }
    case Method::ClosedForm:
      if (spec.kernel != KernelKind::Lorentzian) {
        throw UsageError("closed-form is only available for the lorentzian kernel");
      }
      return lorentzian_closed_form_trajectory(spec.gamma, spec.lambda, dt, t_max);
    case Method::MS0:
    case Method::MS1: {
      const MsCoefficients coeffs =
          derive_ms_coefficients(taylor_coefficients(kernel, 4), spec.gamma, spec.lambda);
      MsOrder order = method == Method::MS1 ? MsOrder::MS1 : MsOrder::MS0;
      if (order == MsOrder::MS1 && coeffs.collapsed_tau) {
        order = MsOrder::MS0;
        if (warning) *warning = "ms1 undefined for a collapsed auxiliary scale; emitted ms0";
      }
      return ms_trajectory(coeffs, kernel.alpha(), order, params, dt, t_max);
    }
    default: break;
  }
  throw UsageError("unsupported method");
}

RunResult run(const RunSpec& spec) {
  RunResult result;
  switch (spec.command) {
    case Command::Solve:
      validate_parameters(spec);
      result = write_single(spec, Method::Exact);
      break;
    case Command::Perturb:
      validate_parameters(spec);
      result = run_perturb(spec);
      break;
    case Command::Compare: result = run_compare(spec); break;
    case Command::Diagnose:
      validate_parameters(spec);
      result = run_diagnose(spec);
      break;
    case Command::Sweep: result = run_sweep(spec); break;
    case Command::Figure: result = run_figure(spec); break;
  }
  Json summary;
  summary["command"] = std::string(to_string(spec.command));
  summary["status"] = result.summary.value("status", std::string("ok"));
  summary["files"] = files_json(result.files);
  for (const auto& [key, value] : result.summary.items()) {
    if (key != "status") summary[key] = value;
  }
  result.summary = std::move(summary);
  result.exit_code = kExitOk;
  return result;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const RunSpec spec = parse_args(argc, argv);
    const RunResult result = run(spec);
    out << result.summary.dump() << '\n';
    return result.exit_code;
  } catch (const CLI::CallForHelp&) {
    out << "usage: nml {solve|perturb|compare|diagnose|sweep|figure} [--kernel K] [--gamma G] "
           "[--lambda L] [--method M] [--dt DT] [--t-max T] [--out PATH] [--config FILE] "
           "[--sweep name:start:stop:count] [--threshold X]\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalInstabilityError& e) {
    err << "numerical instability: " << e.what() << '\n';
    return kExitUnstable;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nml::cli
