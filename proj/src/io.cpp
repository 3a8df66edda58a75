#include "hinfcalc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hinfcalc/errors.hpp"

namespace hinfcalc::io {

namespace {

using nlohmann::json;

json matrix_to_json_value(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json_value(const json& value) {
  if (!value.is_object() || !value.contains("dim") || !value.contains("entries")) {
    throw InvalidInputError("matrix JSON needs \"dim\" and \"entries\"");
  }
  const auto n = value["dim"].get<Eigen::Index>();
  const json& entries = value["entries"];
  if (n < 1 || !entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n * n) {
    throw InvalidInputError("matrix JSON entries must hold dim*dim [re, im] pairs");
  }
  Matrix m(n, n);
  Eigen::Index flat = 0;
  for (const json& pair : entries) {
    if (!pair.is_array() || pair.size() != 2) {
      throw InvalidInputError("matrix JSON entry is not a [re, im] pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw InvalidInputError("matrix JSON entry is not finite");
    }
    m(flat / n, flat % n) = Complex(re, im);
    ++flat;
  }
  return m;
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return matrix_to_json_value(m).dump(); }

Matrix matrix_from_json(const std::string& text) {
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) {
    throw InvalidInputError("malformed matrix JSON");
  }
  return matrix_from_json_value(value);
}

Matrix read_matrix_json(const std::string& path) {
  return matrix_from_json(read_text_file(path));
}

void write_matrix_json(const Matrix& m, const std::string& path) {
  write_text_file(path, matrix_to_json(m) + "\n");
}

std::string calculus_result_to_json(const calculus::CalculusResult& result) {
  json value = matrix_to_json_value(result.value);
  json out;
  out["gA"] = value["entries"];
  out["dim"] = value["dim"];
  out["residual"] = result.extraction_residual;
  out["grid"] = {{"dt", result.grid.dt},
                 {"n_samples", result.grid.n_samples},
                 {"pad_factor", result.grid.pad_factor}};
  out["extraction_times"] = result.extraction_times;
  out["horizon_warning"] = result.horizon_warning;
  return out.dump();
}

void write_calculus_json(const calculus::CalculusResult& result, const std::string& path) {
  write_text_file(path, calculus_result_to_json(result) + "\n");
}

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

namespace {

void dump_rows(const Eigen::MatrixXcd& values, const std::vector<double>& axis,
               const char* axis_name, std::ostream& out) {
  out << axis_name;
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    out << ", re_" << j << ", im_" << j;
  }
  out << "\n";
  for (Eigen::Index k = 0; k < values.rows(); ++k) {
    out << format_number(axis[k]);
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      out << ", " << format_number(values(k, j).real()) << ", "
          << format_number(values(k, j).imag());
    }
    out << "\n";
  }
}

}  // namespace

void dump_trajectory_csv(const signals::Trajectory& f, std::ostream& out) {
  std::vector<double> times(f.grid.n_samples);
  for (int k = 0; k < f.grid.n_samples; ++k) times[k] = f.grid.time_at(k);
  dump_rows(f.values, times, "t", out);
}

void dump_spectrum_csv(const signals::SpectrumSamples& spectrum, std::ostream& out) {
  dump_rows(spectrum.values, spectrum.frequencies, "omega", out);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) {
    throw InvalidInputError("cannot open for writing: " + path);
  }
  stream << content;
  if (!stream) {
    throw InvalidInputError("failed writing: " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw InvalidInputError("cannot open: " + path);
  }
  std::ostringstream content;
  content << stream.rdbuf();
  return content.str();
}

}  // namespace hinfcalc::io
