#pragma once

#include <array>
#include <cstdint>

namespace mixprof::montecarlo {

/// Philox4x32-10 (Salmon et al., SC'11). Stateless: output is a pure
/// function of (key, counter), so any schedule of workers reproduces it.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;

  explicit Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  Counter operator()(Counter ctr) const {
    std::array<std::uint32_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

  /// Four words for draw `block` of `step` in stream `stream`.
  Counter draw(std::uint64_t stream, std::uint64_t step, std::uint32_t block = 0) const {
    return (*this)({static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32) ^ (block << 16),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)});
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
  std::array<std::uint32_t, 2> key_;
};

/// Uniform integer in [0, bound) from two 32-bit words (bias below bound / 2^64).
inline std::uint64_t uniform_below(std::uint32_t hi, std::uint32_t lo, std::uint64_t bound) {
  const std::uint64_t x = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * bound) >> 64);
}

/// Sequential draws from one (stream, step) pair, four words per counter block.
class PhiloxStream {
 public:
  PhiloxStream(const Philox4x32& gen, std::uint64_t stream, std::uint64_t step) : gen_(gen), stream_(stream), step_(step) {}

  std::uint64_t below(std::uint64_t bound) {
    if (used_ == 4) refill();
    const auto v = uniform_below(buf_[used_], buf_[used_ + 1], bound);
    used_ += 2;
    return v;
  }

 private:
  void refill() {
    buf_ = gen_.draw(stream_, step_, block_++);
    used_ = 0;
  }

  const Philox4x32& gen_;
  std::uint64_t stream_;
  std::uint64_t step_;
  std::uint32_t block_ = 0;
  Philox4x32::Counter buf_{};
  int used_ = 4;
};

}  // namespace mixprof::montecarlo
