#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

IntMatrix random_matrix(Random& rng, std::size_t rows, std::size_t cols, std::int64_t range) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.integer(-range, range));
  return m;
}

bool unimodular(const IntMatrix& u) {
  Integer d = determinant(u);
  return d == 1 || d == -1;
}

}  // namespace

TEST(Smith, SpecExamples) {
  auto hs = hermite_smith(IntMatrix({{Integer(2), Integer(0)}, {Integer(0), Integer(3)}}));
  EXPECT_EQ(hs.smith.d, IntMatrix({{Integer(1), Integer(0)}, {Integer(0), Integer(6)}}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).d, IntMatrix::identity(3));
  EXPECT_EQ(smith_normal_form(IntMatrix({{Integer(3)}, {Integer(2)}})).d, IntMatrix({{Integer(1)}, {Integer(0)}}));
}

TEST(Smith, InvariantsFuzz) {
  Random rng(31);
  for (int k = 0; k < 60; ++k) {
    std::size_t rows = static_cast<std::size_t>(rng.integer(1, 4)), cols = static_cast<std::size_t>(rng.integer(1, 4));
    IntMatrix m = random_matrix(rng, rows, cols, 9);
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.left * m * s.right, s.d);
    EXPECT_TRUE(unimodular(s.left));
    EXPECT_TRUE(unimodular(s.right));
    EXPECT_EQ(s.right * s.right_inverse, IntMatrix::identity(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) { EXPECT_EQ(s.d(i, j), 0); }
    for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.d(i + 1, i + 1) % s.d(i, i), 0);
    for (std::size_t i = 0; i < s.rank; ++i) EXPECT_GT(s.d(i, i), 0);

    HermiteForm h = hermite_normal_form(m);
    EXPECT_EQ(h.transform * m, h.h);
    EXPECT_TRUE(unimodular(h.transform));
    EXPECT_EQ(h.rank, s.rank);
    for (std::size_t r = 0; r < h.rank; ++r) {
      EXPECT_GT(h.h(r, h.pivots[r]), 0);
      for (std::size_t above = 0; above < r; ++above) {
        EXPECT_GE(h.h(above, h.pivots[r]), 0);
        EXPECT_LT(h.h(above, h.pivots[r]), h.h(r, h.pivots[r]));
      }
    }
  }
}

TEST(Lattice, KernelAndMembership) {
  IntMatrix m({{Integer(2), Integer(-3)}});
  auto ker = integer_kernel(m);
  ASSERT_EQ(ker.size(), 1u);
  Lattice l = Lattice::from_generators(2, ker);
  EXPECT_EQ(l.str(), "(3,2)");
  EXPECT_TRUE(l.contains(GroupElement{-6, -4}));
  EXPECT_FALSE(l.contains(GroupElement{3, 1}));
  EXPECT_EQ(l.coset_representative(GroupElement{4, 3}), l.coset_representative(GroupElement{1, 1}));
  EXPECT_NE(l.coset_representative(GroupElement{4, 3}), l.coset_representative(GroupElement{0, 0}));
  EXPECT_EQ(Lattice::trivial(2).str(), "{0}");
}

TEST(Lattice, ComplementExamples) {
  Lattice k = Lattice::from_elements(2, {GroupElement{3, 2}});
  Lattice h = complement(k);
  EXPECT_EQ(h.rank(), 1u);
  EXPECT_TRUE(is_complement(h, k));
  EXPECT_NE(sum_index(h, k), 0);
  EXPECT_EQ(complement(Lattice::trivial(2)), Lattice::full(2));
  EXPECT_EQ(complement(Lattice::full(2)).rank(), 0u);
  // Saturation matters: 2Z has complement {0} in Z, not Z.
  Lattice two = Lattice::from_elements(1, {GroupElement{2}});
  EXPECT_EQ(complement(two).rank(), 0u);
  EXPECT_FALSE(is_complement(Lattice::full(1), two));
}

TEST(Lattice, ComplementFuzz) {
  Random rng(32);
  for (int k = 0; k < 60; ++k) {
    std::size_t d = static_cast<std::size_t>(rng.integer(1, 4));
    std::size_t gens = static_cast<std::size_t>(rng.integer(0, d));
    std::vector<GroupElement> g;
    for (std::size_t i = 0; i < gens; ++i) g.push_back(rng.element(d, 6));
    Lattice kl = Lattice::from_elements(d, g);
    Lattice h = complement(kl);
    EXPECT_EQ(h.rank() + kl.rank(), d);
    EXPECT_TRUE(is_complement(h, kl));
    Lattice other = perturbed_complement(h, kl, rng.engine());
    EXPECT_TRUE(is_complement(other, kl));
  }
}
