#include "hinfcalc/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

#include "hinfcalc/errors.hpp"

namespace hinfcalc::detail {

Fft::Fft(std::size_t n) : n_(n) {
  if (n < 2 || (n & (n - 1)) != 0) {
    throw InvalidInputError("FFT length must be a power of two >= 2, got " + std::to_string(n));
  }

  bit_reversal_.resize(n);
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    bit_reversal_[i] = static_cast<std::uint32_t>(j);
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
  }

  stage_offset_.clear();
  std::size_t total = 0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    stage_offset_.push_back(total);
    total += len / 2;
  }
  twiddles_.resize(total);
  std::size_t s = 0;
  for (std::size_t len = 2; len <= n; len <<= 1, ++s) {
    for (std::size_t j = 0; j < len / 2; ++j) {
      const double angle =
          -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(len);
      twiddles_[stage_offset_[s] + j] = {std::cos(angle), std::sin(angle)};
    }
  }
}

void Fft::permute(std::complex<double>* data) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bit_reversal_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
}

void Fft::dit_passes(std::complex<double>* data, bool conjugate) const {
  std::size_t s = 0;
  for (std::size_t len = 2; len <= n_; len <<= 1, ++s) {
    const std::size_t half = len >> 1;
    const std::complex<double>* w = twiddles_.data() + stage_offset_[s];
    for (std::size_t block = 0; block < n_; block += len) {
      std::complex<double>* lo = data + block;
      std::complex<double>* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const std::complex<double> wj = conjugate ? std::conj(w[j]) : w[j];
        const std::complex<double> t = hi[j] * wj;
        hi[j] = lo[j] - t;
        lo[j] += t;
      }
    }
  }
}

void Fft::dif_passes(std::complex<double>* data) const {
  std::size_t s = stage_offset_.size();
  for (std::size_t len = n_; len >= 2; len >>= 1) {
    --s;
    const std::size_t half = len >> 1;
    const std::complex<double>* w = twiddles_.data() + stage_offset_[s];
    for (std::size_t block = 0; block < n_; block += len) {
      std::complex<double>* lo = data + block;
      std::complex<double>* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const std::complex<double> a = lo[j];
        const std::complex<double> b = hi[j];
        lo[j] = a + b;
        hi[j] = (a - b) * w[j];
      }
    }
  }
}

void Fft::forward(std::complex<double>* data) const {
  permute(data);
  dit_passes(data, false);
}

void Fft::inverse(std::complex<double>* data) const {
  permute(data);
  dit_passes(data, true);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) data[i] *= scale;
}

void Fft::forward_bitrev(std::complex<double>* data) const { dif_passes(data); }

void Fft::inverse_bitrev(std::complex<double>* data) const {
  dit_passes(data, true);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) data[i] *= scale;
}

std::vector<std::complex<double>> Fft::to_bitrev(
    const std::vector<std::complex<double>>& bins) const {
  std::vector<std::complex<double>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = bins[bit_reversal_[i]];
  return out;
}

std::shared_ptr<const Fft> fft_plan(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const Fft>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_shared<const Fft>(n)).first;
  }
  return it->second;
}

}  // namespace hinfcalc::detail
