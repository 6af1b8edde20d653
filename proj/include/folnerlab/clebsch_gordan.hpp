#pragma once

#include <map>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace folnerlab {

/// Real Clebsch-Gordan coefficients <j1 m1; j2 m2 | J M>, Condon-Shortley phase.
/// Every argument is doubled (a = 2 j1, ma = 2 m1, ...), so all are integers.
///
/// Each (j1, j2, J) block is generated once: the highest-weight vector |J J> is
/// fixed by J+|J J> = 0 with <j1 j1; j2 J-j1 | J J> > 0, and the remaining
/// weights follow from J- = J1- + J2-. Blocks are cached; lookups are safe from
/// several threads.
class ClebschGordanTable {
public:
    double operator()(int a, int ma, int b, int mb, int c, int mc) const;

private:
    struct Block {
        int a = 0, b = 0, c = 0;
        std::vector<double> values; ///< [(c - mc)/2 * (a + 1) + (a - ma)/2]
        double at(int ma, int mc) const { return values[((c - mc) / 2) * (a + 1) + (a - ma) / 2]; }
    };

    const Block& block(int a, int b, int c) const;
    static Block build(int a, int b, int c);

    mutable std::shared_mutex mutex_;
    mutable std::map<std::tuple<int, int, int>, Block> cache_;
};

/// Process-wide table.
const ClebschGordanTable& clebsch_gordan();

/// True when (a, b, c) satisfy the triangle rule with a + b + c even.
bool cg_admissible(int a, int b, int c);

} // namespace folnerlab
