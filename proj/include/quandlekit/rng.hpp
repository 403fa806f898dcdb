#ifndef QUANDLEKIT_RNG_HPP
#define QUANDLEKIT_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace quandlekit {

/// Deterministic generator for the numerical routines. All randomness is
/// derived from explicit 64-bit draws so runs with equal seeds match
/// bit for bit.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double uniform_signed() { return 2.0 * uniform01() - 1.0; }

  std::complex<double> complex_in_square() {
    const double re = uniform_signed();
    return {re, uniform_signed()};
  }

  /// Uniform on the unit circle.
  std::complex<double> unit_complex() {
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * uniform01();
    return std::polar(1.0, theta);
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return bits() % n; }

private:
  std::mt19937_64 engine_;
};

} // namespace quandlekit

#endif
