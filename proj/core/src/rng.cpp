#include "ck/rng.hpp"

#include "ck/stats.hpp"

namespace ck {
namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c,
                         const std::array<std::uint32_t, 2>& k) noexcept {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c[2];
  c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
       static_cast<std::uint32_t>(p1),
       static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
       static_cast<std::uint32_t>(p0)};
}

}  // namespace

std::array<std::uint32_t, 4> Philox::block(std::uint64_t stream,
                                           std::uint64_t counter) const noexcept {
  std::array<std::uint32_t, 4> c = {
      static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> k = key_;
  for (int round = 0; round < 9; ++round) {
    philox_round(c, k);
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  philox_round(c, k);
  return c;
}

double Philox::uniform(std::uint64_t stream, std::uint64_t counter) const noexcept {
  const auto b = block(stream, counter);
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(b[0]) << 32) | static_cast<std::uint64_t>(b[1]);
  // Center 53-bit integers in (0,1): never returns 0 or 1 exactly.
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double Philox::normal(std::uint64_t stream, std::uint64_t counter) const {
  return normal_quantile(uniform(stream, counter));
}

}  // namespace ck
