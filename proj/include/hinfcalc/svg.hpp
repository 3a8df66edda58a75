#pragma once

#include <string>
#include <vector>

#include "hinfcalc/sweep.hpp"

namespace hinfcalc::svg {

/// Static line chart of log_ratio against log10(eps), one polyline per
/// (family, g_id) series. A pure function of the records: identical input
/// produces identical bytes.
std::string render_log_ratio_chart(const std::vector<sweep::SweepRecord>& records);

}  // namespace hinfcalc::svg
