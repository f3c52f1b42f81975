#include <sstream>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "uflp/errors.hpp"
#include "uflp/eval.hpp"
#include "uflp/exact.hpp"
#include "uflp/instance.hpp"
#include "uflp/rng.hpp"

#include "test_util.hpp"

using uflp::brute_force_opt;
using uflp::brute_force_opt_naive;
using uflp::Cost;
using uflp::ExactResult;
using uflp::export_lp;
using uflp::FeasibilityError;
using uflp::generate;
using uflp::import_open_set;
using uflp::Instance;
using uflp::ModelId;
using uflp::ParseError;
using uflp::Rng64;
using uflp::testing::make_instance;

TEST_CASE("a single facility is the only feasible answer") {
  const ExactResult result = brute_force_opt(make_instance({5}, {{3, 4}}));
  CHECK(result.optimal_objective == 12);
  CHECK(result.optimal_open_set == std::vector<std::uint8_t>{1});
  CHECK(result.enumerated_count == 1);
}

TEST_CASE("the symmetric pair needs both facilities open") {
  const ExactResult result =
      brute_force_opt(make_instance({1, 1}, {{1, 10}, {10, 1}}));
  CHECK(result.optimal_objective == 4);
  CHECK(result.optimal_open_set == std::vector<std::uint8_t>{1, 1});
  CHECK(result.enumerated_count == 3);
}

TEST_CASE("a dominated facility stays closed") {
  const ExactResult result =
      brute_force_opt(make_instance({1, 10}, {{1, 1}, {1, 1}}));
  CHECK(result.optimal_objective == 3);
  CHECK(result.optimal_open_set == std::vector<std::uint8_t>{1, 0});
}

TEST_CASE("objective ties prefer the lowest-index facilities") {
  // Both single-facility sets score 4; the tie must go to facility 0.
  const ExactResult result =
      brute_force_opt(make_instance({1, 1}, {{3}, {3}}));
  CHECK(result.optimal_objective == 4);
  CHECK(result.optimal_open_set == std::vector<std::uint8_t>{1, 0});
}

TEST_CASE("the oracle refuses more than 25 facilities") {
  const Instance instance = generate(ModelId::from_number(1), 26, 2, 0);
  CHECK_THROWS_AS(brute_force_opt(instance), std::invalid_argument);
}

TEST_CASE("the optimum is certified by a from-scratch evaluation") {
  for (int model = 1; model <= 4; ++model) {
    const Instance instance =
        generate(ModelId::from_number(model), 8, 15, 40 + model);
    const ExactResult result = brute_force_opt(instance);
    CHECK(evaluate_full(instance, result.optimal_open_set) ==
          result.optimal_objective);
    CHECK(result.enumerated_count == 255);  // 2^8 - 1
  }
}

TEST_CASE("the incremental and naive enumerations agree everywhere") {
  Rng64 rng(60);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + int(rng.next() % 10);
    const int m = 1 + int(rng.next() % 15);
    const Instance instance = generate(
        ModelId::from_number(1 + int(rng.next() % 4)), n, m, rng.next());
    const ExactResult fast = brute_force_opt(instance);
    const ExactResult naive = brute_force_opt_naive(instance);
    REQUIRE(fast.optimal_objective == naive.optimal_objective);
    REQUIRE(fast.optimal_open_set == naive.optimal_open_set);
    REQUIRE(fast.enumerated_count == naive.enumerated_count);
  }
}

TEST_CASE("the smallest LP prints exactly as specified") {
  const std::string text = export_lp(make_instance({5}, {{3}}));
  CHECK(text ==
        "Minimize\n"
        "obj: 5 y1 + 3 x1_1\n"
        "Subject To\n"
        "assign_1: x1_1 = 1\n"
        "link_1_1: x1_1 - y1 <= 0\n"
        "Binary\n"
        "y1\n"
        "x1_1\n"
        "End\n");
}

TEST_CASE("unit coefficients are left off the objective terms") {
  const std::string text = export_lp(make_instance({1, 2}, {{1, 7}, {2, 1}}));
  CHECK(text.find("obj: y1 + 2 y2 + x1_1 + 7 x1_2 + 2 x2_1 + x2_2\n") !=
        std::string::npos);
}

TEST_CASE("the LP carries one constraint per customer and per pair") {
  const Instance instance = generate(ModelId::from_number(3), 4, 6, 9);
  const std::string text = export_lp(instance);

  auto count = [&text](const std::string& needle) {
    std::size_t occurrences = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + 1)) {
      ++occurrences;
    }
    return occurrences;
  };
  CHECK(count("assign_") == 6);
  CHECK(count("link_") == 4 * 6);

  // Binary section: n + n*m variable lines between "Binary" and "End".
  const auto binary_at = text.find("Binary\n");
  REQUIRE(binary_at != std::string::npos);
  const std::string tail = text.substr(binary_at + 7);
  std::size_t lines = 0;
  std::istringstream in(tail);
  for (std::string line; std::getline(in, line) && line != "End";) ++lines;
  CHECK(lines == 4 + 4 * 6);
}

TEST_CASE("export is byte deterministic") {
  const Instance instance = generate(ModelId::from_number(2), 5, 7, 21);
  CHECK(export_lp(instance) == export_lp(instance));
}

TEST_CASE("an imported open set comes back verified") {
  const Instance pair = make_instance({1, 1}, {{1, 10}, {10, 1}});
  const auto solution = import_open_set(pair, "1 1");
  CHECK(solution.objective == 4);
  CHECK(solution.open_set == std::vector<std::uint8_t>{1, 1});

  CHECK(import_open_set(pair, " 1\n0 ").objective == 12);
}

TEST_CASE("imports reject bad token counts, non-bits, and the empty set") {
  const Instance pair = make_instance({1, 1}, {{1, 10}, {10, 1}});
  CHECK_THROWS_AS(import_open_set(pair, "1 0 1"), ParseError);
  CHECK_THROWS_AS(import_open_set(pair, "1"), ParseError);
  CHECK_THROWS_AS(import_open_set(pair, "1 2"), ParseError);
  CHECK_THROWS_AS(import_open_set(pair, "0 0"), FeasibilityError);
}
