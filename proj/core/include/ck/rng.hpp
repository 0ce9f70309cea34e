// Counter-based random numbers (Philox4x32-10). Every draw is addressed by a
// (stream, counter) pair, so results are independent of evaluation order and
// of how work is split across threads.
#pragma once

#include <array>
#include <cstdint>

namespace ck {

class Philox {
 public:
  explicit Philox(std::uint64_t seed) noexcept
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)} {}

  // Raw 128-bit block for counter (stream, counter).
  std::array<std::uint32_t, 4> block(std::uint64_t stream,
                                     std::uint64_t counter) const noexcept;

  // Uniform on the open interval (0, 1); 53 usable bits.
  double uniform(std::uint64_t stream, std::uint64_t counter) const noexcept;

  // Standard normal via the inverse CDF, so one counter = one variate.
  double normal(std::uint64_t stream, std::uint64_t counter) const;

  std::uint64_t seed() const noexcept {
    return static_cast<std::uint64_t>(key_[0]) |
           (static_cast<std::uint64_t>(key_[1]) << 32);
  }

 private:
  std::array<std::uint32_t, 2> key_;
};

// Sequential convenience view over one stream of a Philox generator.
class RngStream {
 public:
  RngStream(const Philox& rng, std::uint64_t stream) noexcept
      : rng_(rng), stream_(stream) {}

  double uniform() { return rng_.uniform(stream_, pos_++); }
  double normal() { return rng_.normal(stream_, pos_++); }
  void skip(std::uint64_t n) noexcept { pos_ += n; }
  std::uint64_t position() const noexcept { return pos_; }

 private:
  Philox rng_;
  std::uint64_t stream_;
  std::uint64_t pos_ = 0;
};

}  // namespace ck
