#pragma once

#include <cstdint>
#include <vector>

#include "pincalc/error.hpp"

namespace pincalc {

// Dense integer matrix, row major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {
        if (r < 0 || c < 0) throw MisuseError("IntMatrix: negative dimensions");
    }
    IntMatrix(int r, int c, std::vector<std::int64_t> entries)
        : rows(r), cols(c), a(std::move(entries)) {
        if (r < 0 || c < 0) throw MisuseError("IntMatrix: negative dimensions");
        if (a.size() != static_cast<std::size_t>(r) * c)
            throw MisuseError("IntMatrix: entry count != rows*cols");
    }

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);
    IntMatrix transposed() const;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    bool operator==(const IntMatrix&) const = default;
};

// Smith normal form u*a*v = d with u, v unimodular, d diagonal with
// non-negative entries d_1 | d_2 | ... ; v_inv tracks the inverse of v so
// kernel coordinates can be read off without a separate inversion.
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inv;
    int rank = 0;
};

SmithForm smith_form(const IntMatrix& m);

// Kernel of m as a map Z^cols -> Z^rows on column vectors: a basis for
// {x : m x = 0}, one column per basis vector.
IntMatrix smith_kernel_basis(const SmithForm& s);

}  // namespace pincalc
