#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace uflp {

/// Deterministic 64-bit generator (splitmix64). A pure state machine: the
/// output stream is a function of the seed alone, so instances and runs are
/// reproducible bit-for-bit across platforms and language ports.
class Rng64 {
 public:
  Rng64() = default;
  explicit Rng64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t state() const { return state_; }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [lo, hi], both endpoints included. Reduction is by
  /// modulo; the bias is below 2^-32 for the range widths allowed here.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
      throw std::invalid_argument("Rng64::uniform_int: empty range, lo > hi");
    }
    const std::uint64_t width =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (width == 0 || width > (std::uint64_t{1} << 32)) {
      throw std::invalid_argument("Rng64::uniform_int: range wider than 2^32");
    }
    return lo + static_cast<std::int64_t>(next() % width);
  }

 private:
  std::uint64_t state_ = 0;
};

/// Folds a sequence of values into a master seed, one splitmix64 step per
/// part. Used to give every instance and every run of an experiment its own
/// seed while keeping the whole experiment reproducible from one integer.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> parts) {
  Rng64 rng(master);
  for (std::uint64_t part : parts) {
    rng = Rng64(rng.next() ^ part);
  }
  return rng.next();
}

}  // namespace uflp
