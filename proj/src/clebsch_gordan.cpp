#include "folnerlab/clebsch_gordan.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>

#include "folnerlab/error.hpp"

namespace folnerlab {

bool cg_admissible(int a, int b, int c)
{
    return a >= 0 && b >= 0 && c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0;
}

namespace {

// sqrt((j - m)(j + m + 1)) in doubled units: J+ |j m> = raise(j, m) |j m+1>
double raise(int j, int m)
{
    return 0.5 * std::sqrt(static_cast<double>((j - m) * (j + m + 2)));
}

// J- |j m> = lower(j, m) |j m-1>
double lower(int j, int m)
{
    return 0.5 * std::sqrt(static_cast<double>((j + m) * (j - m + 2)));
}

} // namespace

ClebschGordanTable::Block ClebschGordanTable::build(int a, int b, int c)
{
    Block blk;
    blk.a = a;
    blk.b = b;
    blk.c = c;
    blk.values.assign(static_cast<std::size_t>((a + 1) * (c + 1)), 0.0);
    auto at = [&](int ma, int mc) -> double& {
        return blk.values[static_cast<std::size_t>(((c - mc) / 2) * (a + 1) + (a - ma) / 2)];
    };

    // highest weight: c(m1) with m2 = J - m1, descending from m1 = j1
    at(a, c) = 1.0;
    double norm = 1.0;
    for (int ma = a - 2; ma >= -a; ma -= 2) {
        int mb = c - ma;
        if (mb > b)
            break;
        // c(m1) raise1(m1) + c(m1+1) raise2(J-m1-1) = 0
        at(ma, c) = -at(ma + 2, c) * raise(b, mb - 2) / raise(a, ma);
        norm += at(ma, c) * at(ma, c);
    }
    norm = std::sqrt(norm);
    for (int ma = a; ma >= -a; ma -= 2)
        at(ma, c) /= norm;

    for (int mc = c; mc > -c; mc -= 2) {
        double denom = lower(c, mc);
        for (int ma = -a; ma <= a; ma += 2) {
            int mb = mc - 2 - ma;
            if (std::abs(mb) > b)
                continue;
            double v = 0.0;
            if (ma + 2 <= a)
                v += at(ma + 2, mc) * lower(a, ma + 2);
            if (mb + 2 <= b)
                v += at(ma, mc) * lower(b, mb + 2);
            at(ma, mc - 2) = v / denom;
        }
    }
    return blk;
}

const ClebschGordanTable::Block& ClebschGordanTable::block(int a, int b, int c) const
{
    auto key = std::make_tuple(a, b, c);
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }
    Block fresh = build(a, b, c);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(fresh)).first->second;
}

double ClebschGordanTable::operator()(int a, int ma, int b, int mb, int c, int mc) const
{
    if (!cg_admissible(a, b, c))
        throw PreconditionError("inadmissible Clebsch-Gordan triple");
    if (std::abs(ma) > a || std::abs(mb) > b || std::abs(mc) > c || (a - ma) % 2 != 0 || (b - mb) % 2 != 0 ||
        (c - mc) % 2 != 0)
        throw PreconditionError("magnetic number out of range");
    if (ma + mb != mc)
        return 0.0;
    return block(a, b, c).at(ma, mc);
}

const ClebschGordanTable& clebsch_gordan()
{
    static const ClebschGordanTable table;
    return table;
}

} // namespace folnerlab
