#include <gtest/gtest.h>

#include <chrono>

#include "folnerlab/clebsch_gordan.hpp"
#include "folnerlab/error.hpp"
#include "folnerlab/fusion.hpp"
#include "folnerlab/groups.hpp"
#include "oracles.hpp"

using namespace folnerlab;

namespace {

IrrepSet labels(std::initializer_list<std::int64_t> xs)
{
    std::vector<IrrepLabel> out;
    for (auto x : xs)
        out.emplace_back(x);
    return IrrepSet(std::move(out));
}

} // namespace

TEST(Groups, HeisenbergLaw)
{
    HeisenbergGroup h;
    IrrepLabel x{1, 0, 0}, y{0, 1, 0};
    EXPECT_EQ(h.multiply(x, y), (IrrepLabel{1, 1, 1}));
    EXPECT_EQ(h.multiply(y, x), (IrrepLabel{1, 1, 0}));
    IrrepLabel g{2, -3, 5};
    EXPECT_EQ(h.multiply(g, h.inverse(g)), h.identity());
    EXPECT_EQ(h.multiply(h.inverse(g), g), h.identity());
}

TEST(Groups, ParseAndQuotient)
{
    auto z = parse_group("Z");
    EXPECT_EQ(z->name(), "Z");
    EXPECT_EQ(z->quotient(6)->name(), "Z/6");
    auto zz2 = parse_group("ZxZ/2");
    EXPECT_EQ(zz2->quotient(5)->name(), "Z/5xZ/2");
    EXPECT_EQ(*parse_group("Z/6")->order(), 6u);
    EXPECT_EQ(parse_group("heisenberg")->quotient(3)->elements().size(), 27u);
    EXPECT_THROW(parse_group("free2"), Error);
}

TEST(Su2, ClebschGordanRule)
{
    Su2Ring r;
    auto p = r.product(IrrepLabel(2), IrrepLabel(3));
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[0].label, IrrepLabel(1));
    EXPECT_EQ(p[2].label, IrrepLabel(5));
    EXPECT_EQ(r.dim(IrrepLabel(4)), 5);
    EXPECT_THROW(r.require_valid(IrrepLabel(-1)), InvalidLabel);
}

TEST(Su2, CoefficientsMatchRacahFormula)
{
    const auto& cg = clebsch_gordan();
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = std::abs(a - b); c <= a + b; c += 2)
                for (int ma = -a; ma <= a; ma += 2)
                    for (int mb = -b; mb <= b; mb += 2) {
                        if (std::abs(ma + mb) > c)
                            continue;
                        EXPECT_NEAR(cg(a, ma, b, mb, c, ma + mb), oracles::racah_cg(a, ma, b, mb, c, ma + mb), 1e-12)
                            << a << " " << ma << " " << b << " " << mb << " " << c;
                    }
}

TEST(FiniteS3, CharacterTable)
{
    auto ring = make_ring("finite:S3");
    auto all = ring->all_irreps();
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(weighted_size(*ring, all), 6);
    // std x std = triv + sgn + std
    IrrepLabel std_label(2);
    auto p = ring->product(std_label, std_label);
    ASSERT_EQ(p.size(), 3u);
    for (const auto& t : p)
        EXPECT_EQ(t.multiplicity, 1);
    EXPECT_EQ(ring->label_to_json(std_label), "std");
}

TEST(Boundary, IntegerWindow)
{
    auto ring = make_ring("group:Z");
    IrrepSet F = labels({-2, -1, 0, 1, 2});
    auto bd = boundary_decomposition(*ring, F, labels({-1, 1}));
    EXPECT_EQ(bd.boundary, labels({-2, 2}));
    EXPECT_EQ(bd.coboundary, labels({-3, 3}));
    EXPECT_EQ(bd.symmetric_boundary.size(), 4u);
    EXPECT_THROW(boundary_decomposition(*ring, F, IrrepSet{}), Error);
}

TEST(Boundary, LeftAndRightDifferInHeisenberg)
{
    auto ring = make_ring("group:heisenberg");
    IrrepSet F{IrrepLabel{0, 0, 0}, IrrepLabel{1, 0, 0}, IrrepLabel{1, 1, 0}};
    IrrepSet S{IrrepLabel{0, 1, 0}};
    // right: (1,0,0)(0,1,0) = (1,1,1) leaves F; left: (0,1,0)(1,0,0) = (1,1,0) stays
    EXPECT_FALSE(interior(*ring, F, S, Side::right).contains(IrrepLabel{1, 0, 0}));
    EXPECT_TRUE(interior(*ring, F, S, Side::left).contains(IrrepLabel{1, 0, 0}));
}

TEST(Balls, Su2AndIntegers)
{
    auto su2 = make_ring("su2");
    EXPECT_EQ(ball(*su2, labels({1}), 5), labels({0, 1, 2, 3, 4, 5}));
    auto z = make_ring("group:Z");
    EXPECT_EQ(ball(*z, labels({1}), 3), labels({-3, -2, -1, 0, 1, 2, 3}));
    auto bs = balls(*z, labels({1}), 4);
    ASSERT_EQ(bs.size(), 5u);
    EXPECT_EQ(bs[0], labels({0}));
}

TEST(Axioms, HoldOnBuiltins)
{
    for (const char* tag : {"su2", "finite:S3", "group:Z/6", "group:heisenberg", "group:Z^2", "group:ZxZ/2"}) {
        auto ring = make_ring(tag);
        auto report = check_fusion_axioms(*ring, default_axiom_labels(*ring));
        EXPECT_TRUE(report.ok()) << tag << ": " << (report.failures.empty() ? "" : report.failures.front());
        EXPECT_GT(report.pairs_checked, 0u);
    }
}

TEST(Conjugation, Closure)
{
    auto z = make_ring("group:Z");
    EXPECT_EQ(conjugation_closure(*z, labels({1, 2})), labels({-2, -1, 1, 2}));
    EXPECT_FALSE(is_conjugation_closed(*z, labels({0, 1})));
    auto su2 = make_ring("su2");
    EXPECT_TRUE(is_conjugation_closed(*su2, labels({3, 7})));
}
