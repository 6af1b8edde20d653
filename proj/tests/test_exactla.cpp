#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "folnerlab/error.hpp"
#include "folnerlab/exactla.hpp"
#include "support.hpp"

using namespace folnerlab;
using testing_support::q;

namespace {

ScalarMatrix exact_matrix(const std::vector<std::vector<long>>& rows)
{
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) {
        s.emplace_back();
        for (long v : r)
            s.back().push_back(Scalar::from_int(v, ScalarMode::exact));
    }
    return ScalarMatrix::from_rows(s, ScalarMode::exact);
}

ScalarMatrix random_exact(std::size_t rows, std::size_t cols, std::size_t rank, std::mt19937_64& rng)
{
    // product of random integer matrices rows x rank and rank x cols
    std::uniform_int_distribution<long> d(-4, 4);
    std::vector<std::vector<long>> a(rows, std::vector<long>(rank)), b(rank, std::vector<long>(cols));
    for (auto& r : a)
        for (auto& x : r)
            x = d(rng);
    for (auto& r : b)
        for (auto& x : r)
            x = d(rng);
    ScalarMatrix m(rows, cols, ScalarMode::exact);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long s = 0;
            for (std::size_t k = 0; k < rank; ++k)
                s += a[i][k] * b[k][j];
            GaussianRational v(s, i % 3 == 0 ? s : 0); // rows scaled by 1 + i
            m.set(i, j, Scalar(v));
        }
    return m;
}

} // namespace

TEST(RankNullity, Examples)
{
    auto ones = exact_matrix({{1, 1}, {1, 1}});
    auto rn = rank_nullity(ones);
    EXPECT_EQ(rn.rank, 1u);
    EXPECT_EQ(rn.nullity, 1u);
    auto basis = nullspace_basis(ones);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0][0], Scalar::one(ScalarMode::exact));
    EXPECT_EQ(basis[0][1], Scalar::from_int(-1, ScalarMode::exact));

    ScalarMatrix id(4, 4, ScalarMode::exact);
    for (std::size_t i = 0; i < 4; ++i)
        id.set(i, i, Scalar::one(ScalarMode::exact));
    EXPECT_EQ(rank_nullity(id).rank, 4u);
    EXPECT_TRUE(nullspace_basis(id).empty());

    ScalarMatrix zero(2, 3, ScalarMode::exact);
    auto zb = nullspace_basis(zero);
    ASSERT_EQ(zb.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_EQ(zb[i][j], Scalar::from_int(i == j ? 1 : 0, ScalarMode::exact));
}

TEST(RankNullity, BidiagonalHasFullColumnRank)
{
    ScalarMatrix m(5, 4, ScalarMode::exact);
    for (std::size_t k = 0; k < 4; ++k) {
        m.set(k, k, Scalar::one(ScalarMode::exact));
        m.set(k + 1, k, Scalar::from_int(-1, ScalarMode::exact));
    }
    auto rn = rank_nullity(m);
    EXPECT_EQ(rn.rank, 4u);
    EXPECT_EQ(rn.nullity, 0u);
}

TEST(RankNullity, RandomLowRankAndPermutationInvariance)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t rows = 6 + trial % 4, cols = 7 + trial % 3, rank = 1 + trial % 5;
        auto m = random_exact(rows, cols, rank, rng);
        auto rn = rank_nullity(m);
        EXPECT_LE(rn.rank, rank);
        EXPECT_EQ(rn.rank + rn.nullity, cols);
        auto basis = nullspace_basis(m);
        EXPECT_EQ(basis.size(), rn.nullity);
        for (const auto& v : basis)
            EXPECT_TRUE(is_kernel_vector(m, v));
        auto first = first_kernel_vector(m);
        ASSERT_EQ(first.has_value(), !basis.empty());
        if (first)
            EXPECT_EQ(*first, basis.front());

        std::vector<std::size_t> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        ScalarMatrix p(rows, cols, ScalarMode::exact);
        for (std::size_t c = 0; c < cols; ++c)
            for (const auto& [r, v] : m.column(c))
                p.set(rp[r], cp[c], v);
        EXPECT_EQ(rank_nullity(p).rank, rn.rank);
    }
}

TEST(RankNullity, RationalEntries)
{
    ScalarMatrix m(2, 2, ScalarMode::exact);
    m.set(0, 0, Scalar(GaussianRational(q("1/3"))));
    m.set(0, 1, Scalar(GaussianRational(q("2/7"))));
    m.set(1, 0, Scalar(GaussianRational(q("7/6"))));
    m.set(1, 1, Scalar(GaussianRational(1)));
    EXPECT_EQ(rank_nullity(m).rank, 1u);
    auto v = first_kernel_vector(m);
    ASSERT_TRUE(v);
    EXPECT_EQ((*v)[0], Scalar::one(ScalarMode::exact));
    EXPECT_EQ((*v)[1], Scalar(GaussianRational(q("-7/6"))));
}

TEST(RankNullity, GaussianEntries)
{
    // rows (1, i) and (i, -1) are dependent over Q(i)
    ScalarMatrix m(2, 2, ScalarMode::exact);
    m.set(0, 0, Scalar(GaussianRational(1)));
    m.set(0, 1, Scalar(GaussianRational(0, 1)));
    m.set(1, 0, Scalar(GaussianRational(0, 1)));
    m.set(1, 1, Scalar(GaussianRational(-1)));
    EXPECT_EQ(rank_nullity(m).rank, 1u);
    auto v = first_kernel_vector(m);
    ASSERT_TRUE(v);
    EXPECT_TRUE(is_kernel_vector(m, *v));
}

TEST(FloatRank, StableUnderSmallPerturbation)
{
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    const std::size_t rows = 8, cols = 6;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, 3), b = Eigen::MatrixXcd::Zero(3, cols);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        a.data()[i] = {g(rng), g(rng)};
    for (Eigen::Index i = 0; i < b.size(); ++i)
        b.data()[i] = {g(rng), g(rng)};
    Eigen::MatrixXcd p = a * b;
    double norm = p.norm();
    for (int trial = 0; trial < 5; ++trial) {
        ScalarMatrix m(rows, cols, ScalarMode::floating);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                Complex noise(g(rng), g(rng));
                m.set(i, j, Scalar(Complex(p(i, j)) + noise * (0.01 * 1e-9 * norm / std::sqrt(2.0 * rows * cols))));
            }
        EXPECT_EQ(rank_nullity(m).rank, 3u);
        auto basis = nullspace_basis(m);
        ASSERT_EQ(basis.size(), 3u);
        for (const auto& v : basis)
            EXPECT_TRUE(is_kernel_vector(m, v, 1e-8));
    }
}

TEST(FloatRank, RejectsBadInput)
{
    ScalarMatrix m(1, 1, ScalarMode::floating);
    m.set(0, 0, Scalar(Complex(std::nan(""), 0)));
    EXPECT_THROW(rank_nullity(m), Error);
    ScalarMatrix ok(1, 1, ScalarMode::floating);
    EXPECT_THROW(rank_nullity(ok, 0.0), Error);
}

TEST(ExactLa, Deterministic)
{
    std::mt19937_64 rng(3);
    auto m = random_exact(9, 12, 4, rng);
    EXPECT_EQ(nullspace_basis(m), nullspace_basis(m));
}
