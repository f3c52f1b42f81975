#include <array>
#include <cstdint>
#include <stdexcept>

#include <doctest.h>

#include "uflp/rng.hpp"

using uflp::Rng64;

TEST_CASE("next reproduces the frozen reference stream for seed 0") {
  // First four outputs computed by hand-evaluating the recurrence once per
  // draw; frozen here so any change to the constants or the mixing breaks
  // loudly.
  Rng64 rng(0);
  CHECK(rng.next() == 16294208416658607535ULL);
  CHECK(rng.next() == 7960286522194355700ULL);
  CHECK(rng.next() == 487617019471545679ULL);
  CHECK(rng.next() == 17909611376780542444ULL);
}

TEST_CASE("seed 1 starts a different stream") {
  Rng64 rng(1);
  CHECK(rng.next() == 10451216379200822465ULL);
  CHECK(Rng64(0).next() != Rng64(1).next());
}

TEST_CASE("identical seeds give identical streams") {
  Rng64 a(42);
  Rng64 b(42);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(a.next() == b.next());
  }
}

TEST_CASE("uniform_int on a singleton range always returns the endpoint") {
  Rng64 rng(3);
  for (int i = 0; i < 100; ++i) {
    CHECK(rng.uniform_int(5, 5) == 5);
  }
}

TEST_CASE("uniform_int stays inside the requested range") {
  Rng64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto value = rng.uniform_int(-3, 12);
    CHECK(value >= -3);
    CHECK(value <= 12);
  }
}

TEST_CASE("uniform_int frequencies over 1..10 are near uniform") {
  Rng64 rng(2024);
  std::array<int, 11> counts{};
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) {
    counts[rng.uniform_int(1, 10)] += 1;
  }
  for (int value = 1; value <= 10; ++value) {
    const double frequency = double(counts[value]) / draws;
    CHECK(frequency > 0.09);
    CHECK(frequency < 0.11);
  }
}

TEST_CASE("uniform_int over {1,2} equals the parity of the raw stream") {
  // By definition the bounded draw is lo + next() % width, so a width-2 draw
  // must track the parity of the underlying outputs exactly.
  Rng64 bounded(99);
  Rng64 raw(99);
  for (int i = 0; i < 1000; ++i) {
    CHECK(bounded.uniform_int(1, 2) == 1 + std::int64_t(raw.next() % 2));
  }
}

TEST_CASE("uniform_int rejects an empty range") {
  Rng64 rng(0);
  CHECK_THROWS_AS(rng.uniform_int(3, 2), std::invalid_argument);
}

TEST_CASE("uniform_int rejects ranges wider than 2^32") {
  Rng64 rng(0);
  CHECK_THROWS_AS(rng.uniform_int(0, (std::int64_t{1} << 33)),
                  std::invalid_argument);
}

TEST_CASE("derive_seed depends on every part and on order") {
  const auto base = uflp::derive_seed(0, {1, 2, 3});
  CHECK(base == uflp::derive_seed(0, {1, 2, 3}));
  CHECK(base != uflp::derive_seed(0, {1, 2, 4}));
  CHECK(base != uflp::derive_seed(0, {3, 2, 1}));
  CHECK(base != uflp::derive_seed(1, {1, 2, 3}));
}
