#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace hinfcalc::detail {

/// Iterative radix-2 FFT for power-of-two lengths with per-stage twiddle
/// tables. Forward uses the e^{-2*pi*i*jk/n} convention; inverse includes
/// the 1/n factor.
///
/// Besides the natural-order pair, exposes a decimation-in-frequency /
/// decimation-in-time pair that skips both bit-reversal passes for
/// multiply-in-frequency pipelines: the spectrum (and the multiplier) then
/// live in bit-reversed index order between the two calls.
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;

  /// Natural input -> bit-reversed-order spectrum.
  void forward_bitrev(std::complex<double>* data) const;
  /// Bit-reversed-order spectrum -> natural output, including 1/n.
  void inverse_bitrev(std::complex<double>* data) const;

  /// Reorders a natural-order bin vector into the bit-reversed layout
  /// produced by forward_bitrev.
  std::vector<std::complex<double>> to_bitrev(const std::vector<std::complex<double>>& bins) const;

 private:
  void permute(std::complex<double>* data) const;
  void dit_passes(std::complex<double>* data, bool conjugate) const;
  void dif_passes(std::complex<double>* data) const;

  std::size_t n_;
  std::vector<std::uint32_t> bit_reversal_;
  // Stage s (len = 2^{s+1}) has len/2 twiddles e^{-2 pi i j / len}, stored
  // contiguously; stage_offset_[s] indexes into twiddles_.
  std::vector<std::complex<double>> twiddles_;
  std::vector<std::size_t> stage_offset_;
};

/// Shared, thread-safe plan cache. Plans are immutable once built.
std::shared_ptr<const Fft> fft_plan(std::size_t n);

}  // namespace hinfcalc::detail
