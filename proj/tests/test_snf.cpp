#include <doctest.h>

#include <random>

#include "pincalc/abelian.hpp"
#include "pincalc/snf.hpp"

using namespace pincalc;

TEST_CASE("smith form factorization holds") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    for (int round = 0; round < 200; ++round) {
        IntMatrix m(dim(rng), dim(rng));
        for (auto& x : m.a) x = entry(rng);
        SmithForm s = smith_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(s.v * s.v_inv == IntMatrix::identity(m.cols));
        // diagonal, non-negative, divisibility chain
        for (int i = 0; i < s.d.rows; ++i)
            for (int j = 0; j < s.d.cols; ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);
        for (int i = 0; i + 1 < std::min(s.d.rows, s.d.cols); ++i) {
            CHECK(s.d.at(i, i) >= 0);
            if (s.d.at(i + 1, i + 1) != 0)
                CHECK(s.d.at(i + 1, i + 1) % std::max<std::int64_t>(s.d.at(i, i), 1) == 0);
        }
    }
}

TEST_CASE("kernel basis spans the kernel") {
    IntMatrix m(2, 4, {1, 2, 0, 2,
                       0, 0, 0, 0});
    SmithForm s = smith_form(m);
    IntMatrix k = smith_kernel_basis(s);
    CHECK(k.cols == 4 - s.rank);
    IntMatrix prod = m * k;
    for (auto x : prod.a) CHECK(x == 0);
}

TEST_CASE("snf cokernel examples") {
    // diagonal(2) presents Z/2
    CHECK(snf_cokernel(IntMatrix(1, 1, {2})) == FgAbelianGroup::cyclic(2));
    // no relations on three generators: Z^3
    CHECK(snf_cokernel(IntMatrix(0, 3)) == FgAbelianGroup::free_group(3));
    // Kronecker presentation of Z/4 (x) Z/6: relations 4e, 6e on one generator
    CHECK(snf_cokernel(IntMatrix(2, 1, {4, 6})) == FgAbelianGroup::cyclic(2));
}
