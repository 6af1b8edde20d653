#include <gtest/gtest.h>

#include "folnerlab/error.hpp"
#include "folnerlab/tower.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace folnerlab;
using namespace testing_support;

namespace {

std::shared_ptr<const GroupAlgebra> group_algebra(const std::string& tag)
{
    return std::dynamic_pointer_cast<const GroupAlgebra>(algebra(tag));
}

} // namespace

TEST(Omega, Examples)
{
    auto z = make_ring("group:Z");
    EXPECT_EQ(omega_set(*z, interval(-2, 2), IrrepSet{IrrepLabel(0), IrrepLabel(1)}), interval(-2, 3));
    EXPECT_EQ(omega_set(*z, interval(4, 5), IrrepSet{IrrepLabel(0)}), (IrrepSet{IrrepLabel(0), IrrepLabel(4), IrrepLabel(5)}));
    auto su2 = make_ring("su2");
    EXPECT_EQ(omega_set(*su2, interval(0, 1), IrrepSet{IrrepLabel(1)}), interval(0, 2));
}

TEST(QuotientMapTest, InjectivityAndProducts)
{
    auto src = group_algebra("group:Z");
    for (std::int64_t m : {3, 5, 7, 11}) {
        QuotientMap pi(src, m);
        for (std::int64_t N : {1, 2, 3, 5})
            EXPECT_EQ(local_injectivity_check(pi, interval(-N, N)), m >= 2 * N + 1);
        EXPECT_TRUE(pi.respects_products(interval(-6, 6)));
        EXPECT_TRUE(local_injectivity_check(pi, IrrepSet{IrrepLabel(0)}));
    }
    QuotientMap pi3(src, 3);
    EXPECT_FALSE(local_injectivity_check(pi3, IrrepSet{IrrepLabel(0), IrrepLabel(3)}));

    auto heis = group_algebra("group:heisenberg");
    QuotientMap ph(heis, 4);
    EXPECT_TRUE(ph.respects_products(IrrepSet(heis->ring().standard_window(1))));
    auto a = random_exact(heis, heis->ring().standard_window(1).labels(), *std::make_unique<std::mt19937_64>(3));
    auto b = AlgebraElement::group_element(heis, {3, -2, 7});
    EXPECT_EQ(ph.push(a * b), ph.push(a) * ph.push(b));
}

TEST(QuotientTowerTest, CompositesCommute)
{
    auto src = group_algebra("group:ZxZ/2");
    QuotientTower t(src, {2, 4, 8, 16});
    EXPECT_TRUE(t.composites_commute(box_z_z2(20)));
    EXPECT_THROW(QuotientTower(src, {3, 4}), PreconditionError);
    EXPECT_THROW(QuotientTower(src, {}), PreconditionError);
}

TEST(Haar, Examples)
{
    auto src = group_algebra("group:Z");
    auto g3 = AlgebraElement::group_element(src, IrrepLabel(3));
    auto h = haar_approx_sequence(g3, QuotientTower(src, {2, 4, 8, 16}));
    for (const auto& l : h.levels)
        EXPECT_TRUE(l.value.is_zero());
    ASSERT_TRUE(h.first_injective);
    EXPECT_EQ(*h.first_injective, 0u); // 3 is already nonzero mod 2
    EXPECT_TRUE(h.eventual_equality);

    auto h39 = haar_approx_sequence(g3, QuotientTower(src, {3, 9}));
    EXPECT_EQ(h39.levels[0].value, Scalar::one(ScalarMode::exact));
    EXPECT_TRUE(h39.levels[1].value.is_zero());
    EXPECT_EQ(*h39.first_injective, 1u);
    EXPECT_TRUE(h39.eventual_equality);

    auto hu = haar_approx_sequence(AlgebraElement::unit(src), QuotientTower(src, {2, 6, 12}));
    for (const auto& l : hu.levels)
        EXPECT_EQ(l.value, Scalar::one(ScalarMode::exact));
}

TEST(TowerKernel, DifferenceOnIntegers)
{
    auto src = group_algebra("group:Z");
    auto T = MatrixOverPol::scalar(exact(src, {{IrrepLabel(0), "1"}, {IrrepLabel(1), "-1"}}));
    const std::int64_t N = 10;
    auto report = tower_kernel_dims(T, QuotientTower(src, {3, 9, 27, 81}), interval(-N, N));
    EXPECT_TRUE(report.composites_commute);
    EXPECT_TRUE(report.identities_hold);
    ASSERT_EQ(report.levels.size(), 4u);
    for (const auto& l : report.levels) {
        ASSERT_TRUE(l.quotient_dim);
        EXPECT_EQ(*l.quotient_dim, mpq_class(1, l.modulus));
        EXPECT_DOUBLE_EQ(oracles::dft_kernel_dim_cyclic({{0, 1.0}, {1, -1.0}}, l.modulus),
                         1.0 / static_cast<double>(l.modulus));
        EXPECT_EQ(l.omega_injective, l.modulus > 2 * N + 1);
    }
    EXPECT_EQ(*report.first_injective, 2u);
}

TEST(TowerKernel, ProjectionStaysHalf)
{
    auto src = group_algebra("group:ZxZ/2");
    auto T = MatrixOverPol::scalar(exact(src, {{{0, 0}, "1/2"}, {{0, 1}, "1/2"}}));
    auto report = tower_kernel_dims(T, QuotientTower(src, {2, 4, 8, 16, 32}), box_z_z2(5));
    EXPECT_TRUE(report.identities_hold);
    for (const auto& l : report.levels)
        EXPECT_EQ(*l.quotient_dim, q("1/2"));
}

TEST(TowerKernel, UnitAndHeisenberg)
{
    auto heis = group_algebra("group:heisenberg");
    auto T = MatrixOverPol::scalar(AlgebraElement::unit(heis));
    auto report = tower_kernel_dims(T, QuotientTower(heis, {2, 4}), IrrepSet(heis->ring().standard_window(1)));
    for (const auto& l : report.levels)
        EXPECT_EQ(*l.quotient_dim, 0);
    EXPECT_THROW(tower_kernel_dims(MatrixOverPol(heis, 1), QuotientTower(heis, {2}), IrrepSet{IrrepLabel{0, 0, 0}}),
                 PreconditionError);
}

TEST(TowerKernel, OversizedLevelIsReportedNotFatal)
{
    auto heis = group_algebra("group:heisenberg");
    auto T = MatrixOverPol::scalar(AlgebraElement::unit(heis));
    auto report = tower_kernel_dims(T, QuotientTower(heis, {2, 32}), IrrepSet(heis->ring().standard_window(1)));
    EXPECT_FALSE(report.levels[0].error);
    EXPECT_TRUE(report.levels[1].error);
}
