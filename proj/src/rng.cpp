#include "hypoc/rng.hpp"

namespace hypoc {

namespace {
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
}  // namespace

std::array<std::uint32_t, 4> CounterRng::block(std::uint64_t ctr) const {
  std::uint32_t c0 = static_cast<std::uint32_t>(ctr);
  std::uint32_t c1 = static_cast<std::uint32_t>(ctr >> 32);
  std::uint32_t c2 = static_cast<std::uint32_t>(stream_);
  std::uint32_t c3 = static_cast<std::uint32_t>(stream_ >> 32);
  std::uint32_t k0 = key_lo_;
  std::uint32_t k1 = key_hi_;
  for (int round = 0; round < 10; ++round) {
    const std::uint32_t hi0 = mul_hi(kPhiloxM0, c0);
    const std::uint32_t lo0 = kPhiloxM0 * c0;
    const std::uint32_t hi1 = mul_hi(kPhiloxM1, c2);
    const std::uint32_t lo1 = kPhiloxM1 * c2;
    const std::uint32_t n0 = hi1 ^ c1 ^ k0;
    const std::uint32_t n1 = lo1;
    const std::uint32_t n2 = hi0 ^ c3 ^ k1;
    const std::uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return {c0, c1, c2, c3};
}

}  // namespace hypoc
