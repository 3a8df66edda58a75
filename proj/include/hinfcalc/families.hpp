#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hinfcalc/funcspec.hpp"
#include "hinfcalc/linops.hpp"

namespace hinfcalc::families {

/// Builtin generator families, all with bounded stiffness so the
/// trajectory-based construction stays within its resolution budget:
///   geometric  - diagonal ratio-2 ladder -2, -4, ..., capped at -32
///   laplacian  - Dirichlet second difference shifted to unit margin
///                (tridiag 1, -3, 1); self-adjoint negative definite
///   jordan     - distinct diagonal from -1 to -8 with 0.5 superdiagonal
///                coupling; mildly non-normal
///   random     - seeded complex Ginibre matrix shifted to abscissa -1
linops::GeneratorMatrix make(const std::string& family, int n);

const std::vector<std::string>& family_names();

/// Parses a generator description:
///   "diag:-1,-2"        diagonal from a comma-separated list
///   "<family>:<n>"      builtin family instance, e.g. "jordan:8"
///   "file:<path>"       matrix from a JSON file
linops::GeneratorMatrix from_spec(const std::string& spec);

/// Reference function set used by the suites: (id, source text) pairs.
const std::vector<std::pair<std::string, std::string>>& reference_functions();

/// Parsed-and-certified reference set in the reference_functions order.
std::vector<funcspec::FuncExpr> reference_set();

/// Resolves a function argument: a known reference id or a source string.
funcspec::FuncExpr function_from_spec(const std::string& spec);

/// Fixed five-factor Blaschke reference product.
funcspec::FuncExpr fixed_blaschke_product();

/// Random Blaschke product with factor count in [0, max_factors], parameters
/// drawn from Re in [-2.5, -0.35], Im in [-3, 3].
funcspec::FuncExpr random_blaschke(int max_factors, std::mt19937_64& rng);

}  // namespace hinfcalc::families
