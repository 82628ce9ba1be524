#include <gtest/gtest.h>

#include "acplx/linalg.hpp"
#include "support.hpp"

using namespace acplx;
using testing_support::Rng;

namespace {

ExactMatrix dense(std::vector<std::vector<Scalar>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return ExactMatrix::from_dense(rows, cols);
}

ExactMatrix random_sparse(Rng& rng, std::size_t rows, std::size_t cols, int fill_percent, bool complex_entries) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.uniform(1, 100) <= fill_percent) m.set(r, c, complex_entries ? rng.gaussian() : Scalar(rng.rational()));
  return m;
}

/// Low-rank product so that kernels and intersections are nontrivial.
ExactMatrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  return random_sparse(rng, rows, inner, 60, true) * random_sparse(rng, inner, cols, 60, true);
}

std::vector<std::vector<double>> to_double(const ExactMatrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).re().get_d();
  return out;
}

Subspace span_of(std::size_t ambient, std::vector<std::vector<Scalar>> columns) {
  ExactMatrix b(ambient, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < ambient; ++r) b.set(r, c, columns[c][r]);
  return Subspace(ambient, b);
}

}  // namespace

TEST(Rref, Identity) {
  auto id = ExactMatrix::identity(4);
  auto rr = rref(id);
  EXPECT_EQ(rr.reduced, id);
  EXPECT_EQ(rr.pivots, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Rref, GaussianRankOne) {
  Scalar i = Scalar::i();
  auto m = dense({{1, i}, {-i, 1}});
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rref, ZeroMatrix) {
  ExactMatrix z(3, 5);
  auto rr = rref(z);
  EXPECT_TRUE(rr.reduced.is_zero());
  EXPECT_TRUE(rr.pivots.empty());
}

TEST(Rref, IdempotentAndAgreesWithFloatingRank) {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    auto m = random_sparse(rng, 12, 15, 30, false);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    EXPECT_EQ(twice.reduced, once.reduced);
    EXPECT_EQ(twice.pivots, once.pivots);
    EXPECT_EQ(static_cast<int>(once.pivots.size()), testing_support::numeric_rank(to_double(m)));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(ExactMatrix::identity(3)).dim(), 0u);
  auto k = kernel_basis(dense({{1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(same_subspace(k, span_of(2, {{1, -1}})));
}

TEST(Kernel, RankNullityOnRandomSparse) {
  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    auto m = t % 2 ? random_sparse(rng, 20, 30, 15, true) : random_low_rank(rng, 20, 30, 7);
    auto k = kernel_basis(m);
    auto im = image_basis(m);
    EXPECT_EQ(k.dim() + im.dim(), 30u);
    EXPECT_TRUE((m * k.basis()).is_zero());
    EXPECT_EQ(im.dim(), rank(m));
  }
}

TEST(Intersect, Examples) {
  auto e = [](int i) {
    std::vector<Scalar> v(3);
    v[i] = 1;
    return v;
  };
  auto a = span_of(3, {e(0), e(1)});
  auto b = span_of(3, {e(1), e(2)});
  EXPECT_TRUE(same_subspace(subspace_intersect(a, a), a));
  EXPECT_TRUE(same_subspace(subspace_intersect(a, b), span_of(3, {e(1)})));
  EXPECT_THROW(subspace_intersect(a, Subspace(4)), Error);
}

TEST(Intersect, RandomSubspaces) {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    auto a = image_basis(random_low_rank(rng, 12, 8, rng.uniform(3, 8)));
    auto b = image_basis(random_low_rank(rng, 12, 8, rng.uniform(3, 8)));
    auto c = subspace_intersect(a, b);
    EXPECT_GE(static_cast<long>(c.dim()), static_cast<long>(a.dim() + b.dim()) - 12);
    EXPECT_TRUE(contains(a, c));
    EXPECT_TRUE(contains(b, c));
    EXPECT_EQ(c.dim() + subspace_sum(a, b).dim(), a.dim() + b.dim());
  }
}

TEST(Quotient, Examples) {
  auto e = [](int i) {
    std::vector<Scalar> v(3);
    v[i] = 1;
    return v;
  };
  auto full = span_of(3, {e(0), e(1), e(2)});
  EXPECT_EQ(quotient_dim(full, full), 0u);
  EXPECT_EQ(quotient_dim(full, Subspace(3)), 3u);
  EXPECT_EQ(quotient_dim(full, span_of(3, {{1, 1, 0}})), 2u);
  try {
    quotient_dim(span_of(3, {e(0)}), span_of(3, {e(1)}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotASubspace);
  }
}

TEST(Quotient, ComplementExtendsDenominator) {
  Rng rng(44);
  for (int t = 0; t < 10; ++t) {
    auto num = image_basis(random_low_rank(rng, 10, 7, 6));
    auto den = image_basis(num.basis().columns({0, 1}));
    auto comp = complement_basis(num, den);
    EXPECT_EQ(comp.cols(), quotient_dim(num, den));
    EXPECT_TRUE(same_subspace(Subspace(10, ExactMatrix::hstack(den.basis(), comp)), num));
  }
}

TEST(Subspace, RejectsDependentColumns) {
  EXPECT_THROW(span_of(2, {{1, 2}, {2, 4}}), Error);
  EXPECT_THROW(Subspace(3, ExactMatrix(2, 1)), Error);
}

TEST(ExactMatrix, NoStoredZerosAndAlgebra) {
  ExactMatrix m(2, 2);
  m.set(0, 0, 1);
  m.set(0, 0, 0);
  EXPECT_EQ(m.nonzeros(), 0u);
  Rng rng(45);
  auto a = random_sparse(rng, 5, 6, 50, true), b = random_sparse(rng, 6, 4, 50, true), c = random_sparse(rng, 4, 3, 50, true);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  EXPECT_TRUE((a - a).is_zero());
}
