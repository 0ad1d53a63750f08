#include "lensarray/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lens {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> Philox::block(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

double Philox::uniform(std::uint64_t bits) {
  // (0, 1]: zero maps to the smallest representable step, never to 0.
  return (static_cast<double>(bits) + 1.0) * 0x1p-64;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  const std::array<std::uint32_t, 4> out = Philox::block(
      {static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
       0xA5A5A5A5u, 0x5A5A5A5Au},
      {static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32)});
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Eigen::VectorXcd sample_complex_gaussian(int n, double variance, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_complex_gaussian: n < 0");
  if (!(variance > 0.0))
    throw std::invalid_argument("sample_complex_gaussian: variance must be > 0");

  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                            static_cast<std::uint32_t>(seed >> 32)};
  Eigen::VectorXcd out(n);
  for (int i = 0; i < n; ++i) {
    const std::array<std::uint32_t, 4> r = Philox::block(
        {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(std::uint64_t(i) >> 32),
         0u, 1u},
        key);
    const double u1 =
        Philox::uniform((static_cast<std::uint64_t>(r[0]) << 32) | r[1]);
    const double u2 =
        Philox::uniform((static_cast<std::uint64_t>(r[2]) << 32) | r[3]);
    const double radius = std::sqrt(-variance * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    out[i] = std::complex<double>(radius * std::cos(angle), radius * std::sin(angle));
  }
  return out;
}

}  // namespace lens
