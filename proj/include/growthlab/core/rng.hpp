#pragma once

#include <cstdint>
#include <vector>

namespace growthlab {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kStreamSalt = 0x632BE59BD9B4E019ULL;

/// Counter-based random stream.
///
/// The stream key is mix64(master_seed ^ mix64(stream_index ^ kStreamSalt)).
/// Draw number k (1-based) is mix64(key + k * kGolden), i.e. SplitMix64 seeded
/// with the key. The whole generator state is (master_seed, stream_index,
/// cursor), so a stream is a plain value that serializes to three integers.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index, std::uint64_t cursor = 0) noexcept
      : master_seed_(master_seed),
        stream_index_(stream_index),
        key_(mix64(master_seed ^ mix64(stream_index ^ kStreamSalt))),
        cursor_(cursor) {}

  std::uint64_t next_u64() noexcept {
    ++cursor_;
    return mix64(key_ + cursor_ * kGolden);
  }

  /// Uniform integer in [0, bound) from exactly one draw (multiply-high
  /// reduction; bias is below bound / 2^64).
  std::uint64_t below(std::uint64_t bound) noexcept {
    __extension__ using u128 = unsigned __int128;
    const u128 wide = static_cast<u128>(next_u64()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
  }

  /// Skips `draws` values without producing them.
  void advance(std::uint64_t draws) noexcept { cursor_ += draws; }

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }
  std::uint64_t cursor() const noexcept { return cursor_; }
  std::uint64_t key() const noexcept { return key_; }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t key_;
  std::uint64_t cursor_;
};

inline RngStream derive_stream(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return RngStream(master_seed, index);
}

/// Policy streams live in the upper half of the index space so they never
/// collide with per-game engine streams.
inline constexpr std::uint64_t kPolicyStreamBit = 1ULL << 63;

struct DieRoll {
  int value = 1;
  friend bool operator==(const DieRoll&, const DieRoll&) = default;
};

/// One six-sided die roll; consumes exactly one draw.
inline DieRoll roll_die(RngStream& stream) noexcept {
  return DieRoll{static_cast<int>(stream.below(6)) + 1};
}

/// Fisher-Yates from the back: for i = n-1 .. 1 swap(i, below(i+1)).
/// Consumes max(n-1, 0) draws.
template <class T>
std::uint64_t shuffle_in_place(std::vector<T>& items, RngStream& stream) {
  std::uint64_t draws = 0;
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(stream.below(i));
    std::swap(items[i - 1], items[j]);
    ++draws;
  }
  return draws;
}

}  // namespace growthlab
