// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

// Counter-based random streams (Philox4x32-10, Salmon et al. 2011).
//
// A stream is addressed by a (seed, stream_id) pair: the seed forms the Philox
// key and the stream id the high counter words, so distinct pairs index
// disjoint counter spaces and the same pair always replays the identical
// sequence. That is what makes sample batches independent of how work is
// scheduled across threads.

namespace spherelab {

/// Address of one logical random stream.
struct RngStreamSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

class PhiloxStream {
 public:
  explicit PhiloxStream(const RngStreamSpec& s) noexcept : PhiloxStream(s.seed, s.stream_id) {}

  PhiloxStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        ctr2_(static_cast<std::uint32_t>(stream_id)),
        ctr3_(static_cast<std::uint32_t>(stream_id >> 32)) {}

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  /// Uniform draw on the open interval (0, 1); never returns an endpoint.
  double next_double() {
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the sine partner is cached.
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

 private:
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;

  static void round_once(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
  }

  void refill() {
    buf_ = {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32), ctr2_,
            ctr3_};
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int r = 0; r < 10; ++r) {
      round_once(buf_, k0, k1);
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    ++block_;
    pos_ = 0;
  }

  std::uint32_t key0_, key1_, ctr2_, ctr3_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace spherelab
