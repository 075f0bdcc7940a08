#include <gtest/gtest.h>

#include <cstring>
#include <stdexcept>

#include "qcs/observables.hpp"
#include "qcs/sweep.hpp"

using namespace qcs;

TEST(Linspace, EndpointsExact) {
  const auto xs = linspace(0.0, 5.0, 201);
  ASSERT_EQ(xs.size(), 201u);
  EXPECT_EQ(xs.front(), 0.0);
  EXPECT_EQ(xs.back(), 5.0);
  EXPECT_DOUBLE_EQ(xs[40], 1.0);
  EXPECT_EQ(linspace(2.0, 9.0, 1), std::vector<double>{2.0});
}

TEST(Sweep, ParallelBitIdenticalToSerial) {
  const Deformation d(0.75);
  const auto xs = linspace(0.0, 10.0, 401);
  auto fn = [&](double x) { return mandel_q(x, d) + squeezing_ratio(x, d); };
  const auto serial = evaluate_grid(xs, fn, Execution::serial);
  const auto parallel = evaluate_grid(xs, fn, Execution::parallel);
  ASSERT_EQ(serial.size(), parallel.size());
  EXPECT_EQ(std::memcmp(serial.data(), parallel.data(), serial.size() * sizeof(double)), 0);
}

TEST(Sweep, LowestFailingIndexWins) {
  auto fn = [](std::size_t i) -> int {
    if (i >= 37 && i % 5 == 2) throw std::runtime_error("index " + std::to_string(i));
    return static_cast<int>(i);
  };
  for (auto exec : {Execution::serial, Execution::parallel}) {
    try {
      map_indices(500, fn, exec);
      FAIL() << "expected a throw";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "index 37");
    }
  }
}

TEST(Sweep, ThreadCountPositive) { EXPECT_GE(sweep_threads(), 1); }
