#pragma once

#include <ostream>
#include <string>

#include "hinfcalc/calculus.hpp"
#include "hinfcalc/signals.hpp"
#include "hinfcalc/types.hpp"

namespace hinfcalc::io {

/// Matrix file schema: {"dim": n, "entries": [[re, im], ...]} with n*n
/// row-major [re, im] pairs. Readers validate shape and finiteness.
Matrix read_matrix_json(const std::string& path);
void write_matrix_json(const Matrix& m, const std::string& path);

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

/// CalculusResult schema: {"gA": [[re, im], ...], "residual": r,
/// "grid": {"dt": ..., "n_samples": ..., "pad_factor": ...},
/// "extraction_times": [...], "horizon_warning": b}.
std::string calculus_result_to_json(const calculus::CalculusResult& result);
void write_calculus_json(const calculus::CalculusResult& result, const std::string& path);

/// Dumps with headers `t, re_0, im_0, ...` and `omega, re_0, im_0, ...`.
void dump_trajectory_csv(const signals::Trajectory& f, std::ostream& out);
void dump_spectrum_csv(const signals::SpectrumSamples& spectrum, std::ostream& out);

/// Deterministic shortest-ish float formatting used by every CSV writer.
std::string format_number(double value);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace hinfcalc::io
