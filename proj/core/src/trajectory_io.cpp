#include "nml/trajectory_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "nml/errors.hpp"

namespace nml {

namespace fs = std::filesystem;

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  // General format drops trailing zeros.
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move result into " + path.string());
  }
}

fs::path metadata_path(const fs::path& csv_path) {
  fs::path meta = csv_path;
  meta.replace_extension(".meta.json");
  return meta;
}

std::string trajectory_csv(const AmplitudeTrajectory& traj, const MasterEqCoefficients* diagnostics) {
  std::string out;
  out.reserve(traj.size() * 64 + 64);
  out += kTrajectoryCsvHeader;
  out += '\n';
  std::size_t next = 0;  // cursor into diagnostics->grid_index
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out += format_number(traj.times[i]);
    out += ',';
    if (traj.has_amplitude()) {
      out += format_number(traj.c[i].real());
      out += ',';
      out += format_number(traj.c[i].imag());
    } else {
      out += ',';
    }
    out += ',';
    out += format_number(traj.population[i]);
    out += ',';
    if (diagnostics) {
      while (next < diagnostics->grid_index.size() && diagnostics->grid_index[next] < i) ++next;
      if (next < diagnostics->grid_index.size() && diagnostics->grid_index[next] == i) {
        out += format_number(diagnostics->gamma_t[next]);
        out += ',';
        out += format_number(diagnostics->s_t[next]);
      } else {
        out += ',';
      }
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

void write_trajectory(const fs::path& csv_path, const AmplitudeTrajectory& traj,
                      const MasterEqCoefficients* diagnostics) {
  write_file_atomic(csv_path, trajectory_csv(traj, diagnostics));
  nlohmann::ordered_json meta;
  meta["method"] = traj.method_tag;
  meta["kernel"] = traj.params.kind ? nlohmann::ordered_json(std::string(to_string(*traj.params.kind)))
                                    : nlohmann::ordered_json(nullptr);
  meta["gamma"] = traj.params.gamma;
  meta["lambda"] = traj.params.lambda;
  meta["dt"] = traj.dt();
  meta["t_max"] = traj.t_max();
  meta["rows"] = traj.size();
  write_file_atomic(metadata_path(csv_path), meta.dump(2) + "\n");
}

namespace {

double parse_number(std::string_view field, const fs::path& path, std::size_t line) {
  double value = 0.0;
  if (field == "nan") return std::nan("");
  if (field == "inf") return HUGE_VAL;
  if (field == "-inf") return -HUGE_VAL;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

AmplitudeTrajectory read_trajectory(const fs::path& csv_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + csv_path.string());
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryCsvHeader) {
    throw IoError(csv_path.string() + ": expected header '" + std::string(kTrajectoryCsvHeader) + "'");
  }
  AmplitudeTrajectory traj;
  traj.method_tag = csv_path.stem().string();
  bool amplitude = true;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 6) {
      throw IoError(csv_path.string() + ":" + std::to_string(line_no) + ": expected 6 columns");
    }
    traj.times.push_back(parse_number(fields[0], csv_path, line_no));
    if (fields[1].empty() || fields[2].empty()) {
      amplitude = false;
    } else {
      traj.c.emplace_back(parse_number(fields[1], csv_path, line_no),
                          parse_number(fields[2], csv_path, line_no));
    }
    traj.population.push_back(parse_number(fields[3], csv_path, line_no));
  }
  if (!amplitude) traj.c.clear();
  if (traj.times.empty()) throw IoError(csv_path.string() + ": no rows");

  const fs::path meta_path = metadata_path(csv_path);
  if (fs::exists(meta_path)) {
    std::ifstream meta_in(meta_path);
    try {
      const auto meta = nlohmann::json::parse(meta_in);
      traj.method_tag = meta.value("method", traj.method_tag);
      traj.params.gamma = meta.value("gamma", 0.0);
      traj.params.lambda = meta.value("lambda", 0.0);
      if (meta.contains("kernel") && meta["kernel"].is_string()) {
        traj.params.kind = kernel_kind_from_string(meta["kernel"].get<std::string>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw IoError(meta_path.string() + ": " + e.what());
    }
  }
  return traj;
}

}  // namespace nml
