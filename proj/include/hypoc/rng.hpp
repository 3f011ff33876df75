#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace hypoc {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// A stream is addressed by (seed, stream): the seed forms the Philox key,
// the stream id occupies the upper half of the 128-bit counter. Draws from
// distinct streams are independent and reproducible regardless of the order
// in which streams are consumed, which is what makes parallel trajectory
// ensembles bitwise reproducible.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_lo_(static_cast<std::uint32_t>(seed)),
        key_hi_(static_cast<std::uint32_t>(seed >> 32)),
        stream_(stream) {}

  std::uint64_t next_u64() {
    if (have_half_) {
      have_half_ = false;
      return half_;
    }
    const std::array<std::uint32_t, 4> r = block(counter_++);
    half_ = (static_cast<std::uint64_t>(r[2]) << 32) | r[3];
    have_half_ = true;
    return (static_cast<std::uint64_t>(r[0]) << 32) | r[1];
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the pair is consumed deterministically.
  double normal() {
    if (have_normal_) {
      have_normal_ = false;
      return spare_normal_;
    }
    const double u1 = 1.0 - uniform();  // (0,1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_normal_ = r * std::sin(a);
    have_normal_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint32_t mul_hi(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) >> 32);
  }

  std::array<std::uint32_t, 4> block(std::uint64_t ctr) const;

  std::uint32_t key_lo_, key_hi_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::uint64_t half_ = 0;
  bool have_half_ = false;
  double spare_normal_ = 0.0;
  bool have_normal_ = false;
};

// Order-insensitive accumulation helper (Kahan-Neumaier). Keeps ensemble
// reductions stable to ~1e-16 so results do not depend on summation order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace hypoc
