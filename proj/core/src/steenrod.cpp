#include "pincalc/steenrod.hpp"

#include <algorithm>
#include <string>

namespace pincalc {

namespace {

Z2Class sq_monomial(const RingPresentation& r, int degree, std::size_t index, int k) {
    if (k == 0) return r.monomial_class(degree, index);
    if (degree == 0) return r.zero(k);
    const auto& m = r.monomial(degree, index);
    const auto g = static_cast<std::size_t>(m.gen);
    const int dg = r.generators()[g].degree;
    const int dc = degree - dg;
    Z2Class out = r.zero(degree + k);
    for (int a = std::max(0, k - dc); a <= std::min(k, dg); ++a) {
        // Sq^{k-a} vanishes on the cofactor when k-a exceeds its degree
        Z2Class left = r.sq_generator(g, a);
        Z2Class right = sq_monomial(r, dc, static_cast<std::size_t>(m.cofactor), k - a);
        out ^= r.cup(left, right);
    }
    return out;
}

}  // namespace

Z2Class sq(const RingPresentation& r, int i, const Z2Class& x) {
    if (i < 0) throw MisuseError("sq: negative operation index");
    if (x.dim() != r.dim(x.degree))
        throw MisuseError("sq: class coordinates do not match this ring's bases");
    const int target = x.degree + i;
    if (!r.degree_known(target))
        throw UnsupportedDegreeError("sq: Sq^" + std::to_string(i) + " lands in degree " +
                                     std::to_string(target) +
                                     ", beyond ring data (complete through degree " +
                                     std::to_string(r.stored_max()) + ")");
    if (i == 0) return x;
    Z2Class out = r.zero(target);
    for (std::size_t idx = 0; idx < x.dim(); ++idx)
        if (x.coords.test(idx)) out ^= sq_monomial(r, x.degree, idx, i);
    return out;
}

std::vector<Z2Class> sq_table_row(const RingPresentation& r, std::size_t gen_index) {
    if (gen_index >= r.generators().size())
        throw MisuseError("sq_table_row: generator index out of range");
    std::vector<Z2Class> row;
    const int dg = r.generators()[gen_index].degree;
    for (int j = 0; j <= dg; ++j) row.push_back(r.sq_generator(gen_index, j));
    return row;
}

bool pair_with_top(const ManifoldDescriptor& m, const Z2Class& x) {
    if (!m.complete())
        throw MisuseError("pair_with_top: descriptor lacks a designated top class");
    if (x.degree != m.dim || x.dim() != m.ring->dim(m.dim))
        throw MisuseError("pair_with_top: class is not in the top degree");
    return x.coords.test(*m.top_index);
}

WuData wu_classes(const ManifoldDescriptor& m) {
    if (!m.complete())
        throw UnsupportedDegreeError(
            "wu_classes: '" + m.name + "' has ring data only through degree " +
            std::to_string(m.ring->stored_max()) + " of dimension " +
            std::to_string(m.dim) + "; Wu classes need the full ring and a top class");
    const RingPresentation& r = *m.ring;
    const int n = m.dim;

    WuData out;
    out.wu.push_back(r.one());
    for (int i = 1; i <= n; ++i) {
        if (2 * i > n) {
            out.wu.push_back(r.zero(i));
            continue;
        }
        const std::size_t p = r.dim(i);
        const std::size_t q = r.dim(n - i);
        if (p != q)
            throw CorruptDataError("wu_classes: dim H^" + std::to_string(i) + " != dim H^" +
                                   std::to_string(n - i) +
                                   "; the cup pairing cannot be nondegenerate");
        // rows: one equation per basis element w of H^{n-i}, augmented column = rhs
        std::vector<Bitvec> rows;
        rows.reserve(q);
        for (std::size_t b = 0; b < q; ++b) {
            Bitvec row(p + 1);
            for (std::size_t c = 0; c < p; ++c) {
                std::int32_t t = r.mul_monomial(i, c, n - i, b);
                if (t >= 0 && static_cast<std::size_t>(t) == *m.top_index) row.set(c);
            }
            Z2Class rhs = sq(r, i, r.monomial_class(n - i, b));
            if (pair_with_top(m, rhs)) row.set(p);
            rows.push_back(std::move(row));
        }
        rref(rows);
        // unique solvability: p pivots, all inside the coefficient block
        if (rows.size() != p)
            throw CorruptDataError(
                "wu_classes: singular cup pairing in degree " + std::to_string(i) +
                " for '" + m.name + "'; the stored ring is not a closed-manifold ring");
        Z2Class v = r.zero(i);
        for (const auto& row : rows) {
            int pivot = row.lowest_set();
            if (pivot < 0 || static_cast<std::size_t>(pivot) >= p)
                throw CorruptDataError("wu_classes: inconsistent Wu system in degree " +
                                       std::to_string(i) + " for '" + m.name + "'");
            if (row.test(p)) v.coords.set(static_cast<std::size_t>(pivot));
        }
        out.wu.push_back(std::move(v));
    }

    for (int k = 0; k <= n; ++k) {
        Z2Class wk = r.zero(k);
        for (int j = (k + 1) / 2; j <= k; ++j)  // Sq^{k-j}(v_j) = 0 unless k-j <= j
            wk ^= sq(r, k - j, out.wu[static_cast<std::size_t>(j)]);
        out.reconstructed_sw.push_back(std::move(wk));
    }
    return out;
}

std::vector<Z2Class> sw_from_wu(const ManifoldDescriptor& m) {
    return wu_classes(m).reconstructed_sw;
}

}  // namespace pincalc
