#include "pincalc/snf.hpp"

#include <cstdlib>
#include <limits>

namespace pincalc {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw MisuseError("IntMatrix multiply: shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::int64_t xv = x.at(i, k);
            if (!xv) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

namespace {

struct Worker {
    IntMatrix d, u, v, v_inv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        // column swap on v corresponds to a row swap on v_inv
        for (int c = 0; c < v_inv.cols; ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
    }
    // row_j += f * row_i
    void add_row(int j, int i, std::int64_t f) {
        for (int c = 0; c < d.cols; ++c) d.at(j, c) += f * d.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(j, c) += f * u.at(i, c);
    }
    // col_j += f * col_i
    void add_col(int j, int i, std::int64_t f) {
        for (int r = 0; r < d.rows; ++r) d.at(r, j) += f * d.at(r, i);
        for (int r = 0; r < v.rows; ++r) v.at(r, j) += f * v.at(r, i);
        // on v_inv: row_i -= f * row_j
        for (int c = 0; c < v_inv.cols; ++c) v_inv.at(i, c) -= f * v_inv.at(j, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithForm smith_form(const IntMatrix& m) {
    Worker w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols),
             IntMatrix::identity(m.cols)};
    IntMatrix& d = w.d;
    const int nmin = std::min(m.rows, m.cols);

    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            // pivot: smallest nonzero |entry| in the lower-right block
            int pi = -1, pj = -1;
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            for (int i = s; i < d.rows; ++i)
                for (int j = s; j < d.cols; ++j) {
                    std::int64_t x = std::llabs(d.at(i, j));
                    if (x != 0 && x < best) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;  // block is zero, done
            w.swap_rows(s, pi);
            w.swap_cols(s, pj);

            bool clean = true;
            for (int i = s + 1; i < d.rows; ++i) {
                if (d.at(i, s) != 0) {
                    w.add_row(i, s, -(d.at(i, s) / d.at(s, s)));
                    if (d.at(i, s) != 0) clean = false;
                }
            }
            for (int j = s + 1; j < d.cols; ++j) {
                if (d.at(s, j) != 0) {
                    w.add_col(j, s, -(d.at(s, j) / d.at(s, s)));
                    if (d.at(s, j) != 0) clean = false;
                }
            }
            if (!clean) continue;

            // enforce the divisibility chain: fold in any entry d(s,s) misses
            int bi = -1;
            for (int i = s + 1; i < d.rows && bi < 0; ++i)
                for (int j = s + 1; j < d.cols; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            w.add_row(s, bi, 1);
        }
        if (s < nmin && d.at(s, s) < 0) w.negate_row(s);
    }

    SmithForm out{std::move(w.d), std::move(w.u), std::move(w.v), std::move(w.v_inv), 0};
    for (int i = 0; i < nmin; ++i)
        if (out.d.at(i, i) != 0) ++out.rank;
    return out;
}

IntMatrix smith_kernel_basis(const SmithForm& s) {
    const int n = s.d.cols;
    const int k = n - s.rank;
    IntMatrix basis(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) basis.at(i, j) = s.v.at(i, s.rank + j);
    return basis;
}

}  // namespace pincalc
