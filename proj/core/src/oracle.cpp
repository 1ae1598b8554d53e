#include "pincalc/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pincalc::oracle {

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace

FgAbelianGroup homology(const IntComplex& c, int k) {
    if (k < 0 || k >= static_cast<int>(c.boundary.size()))
        throw MisuseError("homology: degree outside the complex");
    const IntMatrix& dk = c.boundary[k];
    SmithForm s = smith_form(dk);
    const int n = dk.cols;
    const int nk = n - s.rank;  // kernel dimension

    IntMatrix din = (k + 1 < static_cast<int>(c.boundary.size()))
                        ? c.boundary[k + 1]
                        : IntMatrix(n, 0);
    // kernel coordinates of the incoming boundaries: bottom rows of v_inv * d_{k+1}
    IntMatrix w_full = s.v_inv * din;
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < w_full.cols; ++j)
            if (w_full.at(i, j) != 0)
                throw MisuseError("homology: boundary composition is nonzero (not a complex)");
    IntMatrix w(nk, w_full.cols);
    for (int i = 0; i < nk; ++i)
        for (int j = 0; j < w_full.cols; ++j) w.at(i, j) = w_full.at(s.rank + i, j);
    // H = Z^nk / column span of w
    return snf_cokernel(w.transposed());
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int p = 0; p < b.rows; ++p)
                for (int q = 0; q < b.cols; ++q)
                    r.at(i * b.rows + p, j * b.cols + q) = a.at(i, j) * b.at(p, q);
        }
    return r;
}

IntComplex tensor_complex(const IntComplex& a, const IntComplex& b) {
    const int ta = a.top_degree(), tb = b.top_degree();
    const int top = ta + tb;
    // dimensions of the total complex
    std::vector<int> dims(top + 2, 0);
    for (int k = 0; k <= top; ++k)
        for (int i = std::max(0, k - tb); i <= std::min(k, ta); ++i)
            dims[k] += a.dim(i) * b.dim(k - i);

    IntComplex out;
    out.boundary.reserve(top + 1);
    for (int k = 0; k <= top; ++k) {
        IntMatrix d(k > 0 ? dims[k - 1] : 0, dims[k]);
        if (k > 0) {
            // block structure: source blocks (i, k-i), target blocks (i', k-1-i')
            auto src_off = [&](int i) {
                int off = 0;
                for (int x = std::max(0, k - tb); x < i; ++x) off += a.dim(x) * b.dim(k - x);
                return off;
            };
            auto dst_off = [&](int i) {
                int off = 0;
                for (int x = std::max(0, k - 1 - tb); x < i; ++x)
                    off += a.dim(x) * b.dim(k - 1 - x);
                return off;
            };
            for (int i = std::max(0, k - tb); i <= std::min(k, ta); ++i) {
                const int j = k - i;
                const int cols_here = a.dim(i) * b.dim(j);
                if (cols_here == 0) continue;
                // d_a (x) id : block (i, j) -> (i-1, j)
                if (i > 0 && a.dim(i - 1) > 0) {
                    for (int r = 0; r < a.dim(i - 1); ++r)
                        for (int cc = 0; cc < a.dim(i); ++cc) {
                            std::int64_t v = a.boundary[i].at(r, cc);
                            if (!v) continue;
                            for (int q = 0; q < b.dim(j); ++q)
                                d.at(dst_off(i - 1) + r * b.dim(j) + q,
                                     src_off(i) + cc * b.dim(j) + q) += v;
                        }
                }
                // (-1)^i id (x) d_b : block (i, j) -> (i, j-1)
                if (j > 0 && b.dim(j - 1) > 0) {
                    const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
                    for (int p = 0; p < a.dim(i); ++p)
                        for (int r = 0; r < b.dim(j - 1); ++r)
                            for (int cc = 0; cc < b.dim(j); ++cc) {
                                std::int64_t v = b.boundary[j].at(r, cc);
                                if (!v) continue;
                                d.at(dst_off(i) + p * b.dim(j - 1) + r,
                                     src_off(i) + p * b.dim(j) + cc) += sign * v;
                            }
                }
            }
        }
        out.boundary.push_back(std::move(d));
    }
    return out;
}

IntComplex rp_complex(int n) {
    // one cell per degree; the boundary alternates 0, 2, 0, 2, ...
    IntComplex c;
    c.boundary.push_back(IntMatrix(0, 1));
    for (int k = 1; k <= n; ++k) {
        IntMatrix d(1, 1);
        d.at(0, 0) = (k % 2 == 0) ? 2 : 0;
        c.boundary.push_back(std::move(d));
    }
    return c;
}

IntComplex sphere_complex(int n) {
    IntComplex c;
    c.boundary.push_back(IntMatrix(0, 1));
    for (int k = 1; k < n; ++k) c.boundary.push_back(IntMatrix(k == 1 ? 1 : 0, 0));
    c.boundary.push_back(IntMatrix(n == 1 ? 1 : 0, 1));
    return c;
}

IntComplex klein_complex() {
    // one 0-cell, loops alpha and beta, one 2-cell along alpha beta alpha beta^-1
    IntComplex c;
    c.boundary.push_back(IntMatrix(0, 1));
    c.boundary.push_back(IntMatrix(1, 2));  // both loops bound nothing
    IntMatrix d2(2, 1);
    d2.at(0, 0) = 2;  // alpha appears twice with the same sign
    d2.at(1, 0) = 0;  // beta cancels against beta^-1
    c.boundary.push_back(std::move(d2));
    return c;
}

IntMatrix presentation_of(const FgAbelianGroup& g) {
    const int t = static_cast<int>(g.torsion_orders().size());
    IntMatrix p(t, t + g.free_rank());
    for (int i = 0; i < t; ++i)
        p.at(i, i) = static_cast<std::int64_t>(g.torsion_orders()[i]);
    return p;
}

IntMatrix mixed_presentation(const FgAbelianGroup& g, std::mt19937& rng) {
    IntMatrix p = presentation_of(g);
    if (p.rows == 0 || p.cols == 0) return p;
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> row_of(0, p.rows - 1);
    std::uniform_int_distribution<int> col_of(0, p.cols - 1);
    for (int step = 0; step < 12; ++step) {
        const std::int64_t f = coin(rng) ? 1 : -1;
        int i = row_of(rng), j = row_of(rng);
        if (i != j)
            for (int c = 0; c < p.cols; ++c) p.at(j, c) += f * p.at(i, c);
        i = col_of(rng), j = col_of(rng);
        if (i != j)
            for (int r = 0; r < p.rows; ++r) p.at(r, j) += f * p.at(r, i);
    }
    return p;
}

IntMatrix tensor_presentation(const IntMatrix& a, const IntMatrix& b) {
    // generators e_i (x) f_j; relations R_A (x) id and id (x) R_B
    IntMatrix ra = kron(a, IntMatrix::identity(b.cols));
    IntMatrix rb = kron(IntMatrix::identity(a.cols), b);
    IntMatrix out(ra.rows + rb.rows, a.cols * b.cols);
    for (int i = 0; i < ra.rows; ++i)
        for (int j = 0; j < out.cols; ++j) out.at(i, j) = ra.at(i, j);
    for (int i = 0; i < rb.rows; ++i)
        for (int j = 0; j < out.cols; ++j) out.at(ra.rows + i, j) = rb.at(i, j);
    return out;
}

FgAbelianGroup tor_via_resolution(const IntMatrix& a, const IntMatrix& b) {
    // resolutions 0 -> Z^rows --pres^T--> Z^cols -> G -> 0; Tor_1 = H_1 of the
    // total complex of the tensor of the two resolutions
    IntComplex ca, cb;
    ca.boundary.push_back(IntMatrix(0, a.cols));
    ca.boundary.push_back(a.transposed());
    cb.boundary.push_back(IntMatrix(0, b.cols));
    cb.boundary.push_back(b.transposed());
    return homology(tensor_complex(ca, cb), 1);
}

FgAbelianGroup hom_z_oracle(const IntMatrix& pres) {
    return FgAbelianGroup::free_group(pres.cols - smith_form(pres).rank);
}

FgAbelianGroup ext_z_oracle(const IntMatrix& pres) {
    SmithForm s = smith_form(pres);
    FgAbelianGroup acc;
    for (int i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) > 1)
            acc = direct_sum(acc, FgAbelianGroup::cyclic(
                                      static_cast<std::uint64_t>(s.d.at(i, i))));
    return acc;
}

namespace {

// rows of `pres` plus m * identity: presents G/mG
IntMatrix with_mod_rows(const IntMatrix& pres, std::uint64_t m) {
    IntMatrix out(pres.rows + pres.cols, pres.cols);
    for (int i = 0; i < pres.rows; ++i)
        for (int j = 0; j < pres.cols; ++j) out.at(i, j) = pres.at(i, j);
    for (int j = 0; j < pres.cols; ++j)
        out.at(pres.rows + j, j) = static_cast<std::int64_t>(m);
    return out;
}

}  // namespace

FgAbelianGroup hom_mod_oracle(const IntMatrix& pres, std::uint64_t m) {
    return snf_cokernel(with_mod_rows(pres, m));
}

FgAbelianGroup ext_mod_oracle(const IntMatrix& pres, std::uint64_t m) {
    // Ext(G, Z/m) ~ T(G)/mT(G); read the torsion off the invariant factors
    SmithForm s = smith_form(pres);
    std::vector<std::int64_t> torsion;
    for (int i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) > 1) torsion.push_back(s.d.at(i, i));
    IntMatrix t(static_cast<int>(torsion.size()), static_cast<int>(torsion.size()));
    for (std::size_t i = 0; i < torsion.size(); ++i)
        t.at(static_cast<int>(i), static_cast<int>(i)) = torsion[i];
    return snf_cokernel(with_mod_rows(t, m));
}

FgAbelianGroup hom_enumeration(const IntMatrix& pres, std::uint64_t m) {
    if (m < 2) throw MisuseError("hom_enumeration: modulus must be >= 2");
    const int g = pres.cols;
    double size = 1;
    for (int i = 0; i < g; ++i) size *= static_cast<double>(m);
    if (size > 2e6)
        throw MisuseError("hom_enumeration: search space too large for enumeration");

    std::vector<std::uint64_t> phi(g, 0);
    std::vector<std::uint64_t> orders;
    const auto total = static_cast<std::uint64_t>(size);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < g; ++i) {
            phi[i] = c % m;
            c /= m;
        }
        bool ok = true;
        for (int r = 0; r < pres.rows && ok; ++r) {
            std::int64_t acc = 0;
            for (int i = 0; i < g; ++i)
                acc += pres.at(r, i) * static_cast<std::int64_t>(phi[i]);
            ok = (acc % static_cast<std::int64_t>(m) + static_cast<std::int64_t>(m)) %
                     static_cast<std::int64_t>(m) ==
                 0;
        }
        if (!ok) continue;
        std::uint64_t order = 1;
        for (int i = 0; i < g; ++i) {
            if (phi[i] == 0) continue;
            std::uint64_t oi = m / gcd64(m, phi[i]);
            order = order / gcd64(order, oi) * oi;
        }
        orders.push_back(order);
    }

    // classify the finite abelian group from its order statistics
    std::vector<std::uint64_t> torsion;
    for (auto q : prime_power_factors(m)) {
        std::uint64_t p = q;
        // recover the prime from the prime power
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        // counts[k] = #elements of order dividing p^k
        std::vector<std::uint64_t> counts{1};
        for (std::uint64_t pk = p;; pk *= p) {
            std::uint64_t cnt = 0;
            for (auto o : orders)
                if (pk % o == 0) ++cnt;
            counts.push_back(cnt);
            if (cnt == counts[counts.size() - 2]) break;  // stabilized
            if (pk > m) break;
        }
        std::vector<int> logs;  // n_k = log_p counts[k]
        for (auto cval : counts) {
            int lg = 0;
            while (cval > 1) {
                if (cval % p != 0)
                    throw MisuseError("hom_enumeration: order counts are not p-powers");
                cval /= p;
                ++lg;
            }
            logs.push_back(lg);
        }
        for (std::size_t e = 1; e + 1 <= logs.size(); ++e) {
            const int at_least_e = logs[e] - logs[e - 1];
            const int at_least_e1 =
                e + 1 < logs.size() ? logs[e + 1] - logs[e] : 0;
            std::uint64_t pe = 1;
            for (std::size_t x = 0; x < e; ++x) pe *= p;
            for (int cnt = 0; cnt < at_least_e - at_least_e1; ++cnt) torsion.push_back(pe);
        }
    }
    return FgAbelianGroup(0, std::move(torsion));
}

}  // namespace pincalc::oracle
