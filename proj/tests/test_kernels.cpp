#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

#include "support.hpp"

using namespace testing_support;

TEST(Kernels, BoxPointsOrderAndSize) {
  auto pts = kernels::box_points(2, 3);
  EXPECT_EQ(pts.size(), 49u);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  EXPECT_EQ(pts.front(), (GroupElement{-3, -3}));
  EXPECT_EQ(kernels::box_points(3, 0), (std::vector<GroupElement>{{0, 0, 0}}));
}

TEST(Kernels, SublatticeBoxMatchesFilter) {
  Random rng(71);
  for (int k = 0; k < 20; ++k) {
    Lattice l = Lattice::from_elements(3, {rng.element(3, 3), rng.element(3, 3)});
    std::vector<GroupElement> expect;
    for (const auto& g : kernels::box_points(3, 4))
      if (l.contains(g)) expect.push_back(g);
    EXPECT_EQ(kernels::box_points(l, 4, kernels::Exec::serial), expect);
    EXPECT_EQ(kernels::box_points(l, 4, kernels::Exec::parallel), expect);
  }
}

TEST(Kernels, SerialAndParallelAgree) {
  auto pred = [](std::size_t i) { return (i * 2654435761u) % 7 == 3; };
  EXPECT_EQ(kernels::select_indices(10000, pred, kernels::Exec::serial),
            kernels::select_indices(10000, pred, kernels::Exec::parallel));
  std::atomic<std::size_t> sum{0};
  kernels::for_each_index(1000, [&](std::size_t i) { sum += i; }, kernels::Exec::parallel);
  EXPECT_EQ(sum.load(), 999u * 1000u / 2);
}

TEST(Kernels, LowestIndexExceptionWins) {
  auto body = [](std::size_t i) {
    if (i % 100 == 37) throw std::runtime_error("at " + std::to_string(i));
  };
  for (auto exec : {kernels::Exec::serial, kernels::Exec::parallel}) {
    try {
      kernels::for_each_index(1000, body, exec);
      FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "at 37");
    }
  }
}
