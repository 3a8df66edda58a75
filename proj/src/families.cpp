#include "hinfcalc/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hinfcalc/io.hpp"

namespace hinfcalc::families {

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Matrix geometric_entries(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    a(k, k) = -std::pow(2.0, std::min(k + 1, 5));
  }
  return a;
}

Matrix laplacian_entries(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = -3.0;
    if (i + 1 < n) {
      a(i, i + 1) = 1.0;
      a(i + 1, i) = 1.0;
    }
  }
  return a;
}

Matrix jordan_entries(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = n > 1 ? -1.0 - 7.0 * i / (n - 1.0) : -1.0;
    if (i + 1 < n) a(i, i + 1) = 0.5;
  }
  return a;
}

Matrix random_entries(int n) {
  std::mt19937_64 rng(12345 + static_cast<std::uint64_t>(n));
  Matrix g(n, n);
  const double scale = 1.0 / std::sqrt(2.0 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Box-Muller from the hand-rolled uniform keeps the draw reproducible
      // across standard library implementations.
      const double u1 = std::max(uniform01(rng), 1e-300);
      const double u2 = uniform01(rng);
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double angle = 2.0 * std::numbers::pi * u2;
      g(i, j) = scale * Complex(r * std::cos(angle), r * std::sin(angle));
    }
  }
  const double abscissa = linops::spectral_abscissa(g);
  g -= (abscissa + 1.0) * Matrix::Identity(n, n);
  return g;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"geometric", "laplacian", "jordan", "random"};
  return names;
}

linops::GeneratorMatrix make(const std::string& family, int n) {
  if (n < 1) {
    throw InvalidInputError("family size must be >= 1");
  }
  if (family == "geometric") return linops::GeneratorMatrix(geometric_entries(n));
  if (family == "laplacian") return linops::GeneratorMatrix(laplacian_entries(n));
  if (family == "jordan") return linops::GeneratorMatrix(jordan_entries(n));
  if (family == "random") return linops::GeneratorMatrix(random_entries(n));
  throw InvalidInputError("unknown generator family: " + family);
}

linops::GeneratorMatrix from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw InvalidInputError("generator spec needs a ':', got " + spec);
  }
  const std::string head = spec.substr(0, colon);
  const std::string tail = spec.substr(colon + 1);
  if (head == "diag") {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos < tail.size()) {
      std::size_t next = tail.find(',', pos);
      if (next == std::string::npos) next = tail.size();
      values.push_back(std::strtod(tail.substr(pos, next - pos).c_str(), nullptr));
      pos = next + 1;
    }
    if (values.empty()) {
      throw InvalidInputError("diag spec has no entries: " + spec);
    }
    Matrix a = Matrix::Zero(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) a(i, i) = values[i];
    return linops::GeneratorMatrix(std::move(a));
  }
  if (head == "file") {
    return linops::GeneratorMatrix(io::read_matrix_json(tail));
  }
  char* end = nullptr;
  const long n = std::strtol(tail.c_str(), &end, 10);
  if (end == tail.c_str() || *end != '\0' || n < 1) {
    throw InvalidInputError("bad family size in generator spec: " + spec);
  }
  return make(head, static_cast<int>(n));
}

const std::vector<std::pair<std::string, std::string>>& reference_functions() {
  static const std::vector<std::pair<std::string, std::string>> set = {
      {"one", "1"},
      {"cayley", "(1+s)/(1-s)"},
      {"resolvent", "1/(1-s)"},
      {"shift", "exp(1*s)"},
      {"sinc", "(exp(1*s)-1)/s"},
      {"blaschke5", funcspec::to_string(fixed_blaschke_product())},
  };
  return set;
}

std::vector<funcspec::FuncExpr> reference_set() {
  std::vector<funcspec::FuncExpr> out;
  for (const auto& [id, source] : reference_functions()) {
    out.push_back(funcspec::parse(source));
  }
  return out;
}

funcspec::FuncExpr function_from_spec(const std::string& spec) {
  for (const auto& [id, source] : reference_functions()) {
    if (spec == id) return funcspec::parse(source);
  }
  return funcspec::parse(spec);
}

funcspec::FuncExpr fixed_blaschke_product() {
  static const std::vector<Complex> params = {
      {-1.693955, 2.383283}, {-2.017724, -1.648757}, {-0.995358, 2.241321},
      {-0.361320, 1.927371}, {-2.063699, -0.192390},
  };
  return funcspec::blaschke_product(params);
}

funcspec::FuncExpr random_blaschke(int max_factors, std::mt19937_64& rng) {
  if (max_factors < 0 || max_factors > 32) {
    throw InvalidInputError("random_blaschke: factor cap must be in [0, 32]");
  }
  const int count = max_factors == 0
                        ? 0
                        : static_cast<int>(rng() % static_cast<std::uint64_t>(max_factors + 1));
  std::vector<Complex> params;
  params.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double re = -0.35 - 2.15 * uniform01(rng);
    const double im = -3.0 + 6.0 * uniform01(rng);
    params.emplace_back(re, im);
  }
  return funcspec::blaschke_product(params);
}

}  // namespace hinfcalc::families
