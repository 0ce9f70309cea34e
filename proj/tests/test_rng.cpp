// Counter-based generator: known-answer vectors against the reference Philox
// implementation, addressing semantics (order independence), and the
// distributional sanity of the uniform/normal maps.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ck/errors.hpp"
#include "ck/rng.hpp"
#include "ck/stats.hpp"

namespace {

// Reconstructs (stream, counter) from a raw 128-bit counter laid out as
// c = {counter_lo, counter_hi, stream_lo, stream_hi}.
std::array<std::uint32_t, 4> raw_block(std::uint64_t key, std::uint32_t c0,
                                       std::uint32_t c1, std::uint32_t c2,
                                       std::uint32_t c3) {
  const std::uint64_t counter =
      static_cast<std::uint64_t>(c0) | (static_cast<std::uint64_t>(c1) << 32);
  const std::uint64_t stream =
      static_cast<std::uint64_t>(c2) | (static_cast<std::uint64_t>(c3) << 32);
  return ck::Philox(key).block(stream, counter);
}

}  // namespace

TEST_CASE("philox reference vectors", "[rng]") {
  // Round-10 vectors from the Random123 distribution (kat_vectors).
  SECTION("zero key, zero counter") {
    const auto out = raw_block(0, 0, 0, 0, 0);
    CHECK(out[0] == 0x6627e8d5u);
    CHECK(out[1] == 0xe169c58du);
    CHECK(out[2] == 0xbc57ac4cu);
    CHECK(out[3] == 0x9b00dbd8u);
  }
  SECTION("pi-digit key and counter") {
    const std::uint64_t key = 0xa4093822ull | (0x299f31d0ull << 32);
    const auto out = raw_block(key, 0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u);
    CHECK(out[0] == 0xd16cfe09u);
    CHECK(out[1] == 0x94fdccebu);
    CHECK(out[2] == 0x5001e420u);
    CHECK(out[3] == 0x24126ea1u);
  }
  SECTION("all-ones key and counter") {
    const std::uint64_t key = 0xffffffffull | (0xffffffffull << 32);
    const auto out = raw_block(key, 0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu);
    CHECK(out[0] == 0x408f276du);
    CHECK(out[1] == 0x41c83b0eu);
    CHECK(out[2] == 0xa20bc7c6u);
    CHECK(out[3] == 0x6d5451fdu);
  }
}

TEST_CASE("draws are addressed, not sequenced", "[rng]") {
  const ck::Philox rng(1234);
  const double late = rng.uniform(7, 1'000'000);
  // Consuming other counters first cannot change an addressed draw.
  (void)rng.uniform(7, 0);
  (void)rng.uniform(3, 1'000'000);
  CHECK(rng.uniform(7, 1'000'000) == late);

  // Distinct addresses give distinct values (collision would be a 2^-53 fluke).
  CHECK(rng.uniform(7, 0) != rng.uniform(7, 1));
  CHECK(rng.uniform(7, 0) != rng.uniform(8, 0));

  // Seeds are honored exactly.
  CHECK(ck::Philox(1234).uniform(0, 0) == rng.uniform(0, 0));
  CHECK(ck::Philox(1235).uniform(0, 0) != rng.uniform(0, 0));
}

TEST_CASE("uniform draws live strictly inside (0,1)", "[rng]") {
  const ck::Philox rng(99);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100'000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform(0, static_cast<std::uint64_t>(i));
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  // Mean of n uniforms has sd 1/sqrt(12 n) ~ 9.1e-4; allow 4 sigma.
  CHECK(std::abs(sum / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
}

TEST_CASE("normal transform matches the quantile map and has unit moments", "[rng]") {
  const ck::Philox rng(7);
  // One counter, one variate: the normal is the quantile of the same uniform.
  const double u = rng.uniform(5, 42);
  CHECK(rng.normal(5, 42) == ck::normal_quantile(u));

  const int n = 100'000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal(1, static_cast<std::uint64_t>(i));
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("stream view walks its counter and can skip", "[rng]") {
  const ck::Philox rng(2024);
  ck::RngStream s(rng, 3);
  const double first = s.uniform();
  CHECK(first == rng.uniform(3, 0));
  CHECK(s.position() == 1);
  s.skip(9);
  CHECK(s.uniform() == rng.uniform(3, 10));
}

TEST_CASE("quantile rejects the closed endpoints", "[stats]") {
  CHECK_THROWS_AS(ck::normal_quantile(0.0), ck::Error);
  CHECK_THROWS_AS(ck::normal_quantile(1.0), ck::Error);
  CHECK(ck::normal_quantile(0.5) == Catch::Approx(0.0).margin(1e-15));
  CHECK(ck::normal_quantile(0.975) == Catch::Approx(1.959964).margin(1e-5));
  CHECK(ck::normal_cdf(1.959964) == Catch::Approx(0.975).margin(1e-6));
}
