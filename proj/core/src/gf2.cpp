#include "pincalc/gf2.hpp"

#include <algorithm>
#include <bit>

namespace pincalc {

bool Bitvec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t Bitvec::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

int Bitvec::lowest_set() const {
    for (std::size_t b = 0; b < w_.size(); ++b) {
        if (w_[b]) {
            return static_cast<int>(b * 64 +
                                    static_cast<std::size_t>(std::countr_zero(w_[b])));
        }
    }
    return -1;
}

Bitvec& Bitvec::operator^=(const Bitvec& o) {
    if (n_ != o.n_) throw MisuseError("Bitvec xor: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

int Bitvec::cmp_value(const Bitvec& a, const Bitvec& b) {
    if (a.n_ != b.n_) throw MisuseError("Bitvec compare: length mismatch");
    for (std::size_t i = a.w_.size(); i-- > 0;) {
        if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i] ? -1 : 1;
    }
    return 0;
}

std::size_t rref(std::vector<Bitvec>& rows) {
    // Forward eliminate, pivoting on the lowest set bit, then back-substitute
    // so every pivot column is cleared in all other rows. Sort by pivot.
    std::vector<Bitvec> basis;
    for (auto& r : rows) {
        Bitvec v = r;
        for (const auto& b : basis) {
            int p = b.lowest_set();
            if (p >= 0 && v.size() > static_cast<std::size_t>(p) &&
                v.test(static_cast<std::size_t>(p)))
                v ^= b;
        }
        if (v.any()) basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(), [](const Bitvec& a, const Bitvec& b) {
        return a.lowest_set() < b.lowest_set();
    });
    for (std::size_t i = basis.size(); i-- > 0;) {
        int p = basis[i].lowest_set();
        for (std::size_t j = 0; j < i; ++j) {
            if (basis[j].test(static_cast<std::size_t>(p))) basis[j] ^= basis[i];
        }
    }
    rows = std::move(basis);
    return rows.size();
}

Z2Subspace::Z2Subspace(int degree, std::size_t ambient_dim,
                       std::vector<Bitvec> spanning)
    : degree_(degree), ambient_(ambient_dim) {
    for (const auto& r : spanning) {
        if (r.size() != ambient_)
            throw MisuseError("Z2Subspace: spanning row length != ambient dimension");
    }
    rows_ = std::move(spanning);
    rref(rows_);
}

Z2Subspace Z2Subspace::full(int degree, std::size_t ambient_dim) {
    std::vector<Bitvec> rows;
    rows.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Bitvec r(ambient_dim);
        r.set(i);
        rows.push_back(std::move(r));
    }
    return Z2Subspace(degree, ambient_dim, std::move(rows));
}

void Z2Subspace::check_compatible(const Z2Class& x) const {
    if (x.degree != degree_ || x.coords.size() != ambient_)
        throw MisuseError("Z2Subspace: class degree or basis does not match subspace");
}

bool Z2Subspace::contains(const Z2Class& x) const {
    return reduce(x).is_zero();
}

Z2Class Z2Subspace::reduce(const Z2Class& x) const {
    check_compatible(x);
    Bitvec v = x.coords;
    for (const auto& r : rows_) {
        int p = r.lowest_set();
        if (p >= 0 && v.test(static_cast<std::size_t>(p))) v ^= r;
    }
    return Z2Class(degree_, std::move(v));
}

std::optional<Bitvec> Z2Subspace::coordinates(const Z2Class& x) const {
    check_compatible(x);
    Bitvec v = x.coords;
    Bitvec used(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int p = rows_[i].lowest_set();
        if (p >= 0 && v.test(static_cast<std::size_t>(p))) {
            v ^= rows_[i];
            used.set(i);
        }
    }
    if (v.any()) return std::nullopt;
    return used;
}

Z2Subspace subspace_sum(const Z2Subspace& a, const Z2Subspace& b) {
    if (a.degree_ != b.degree_ || a.ambient_ != b.ambient_)
        throw MisuseError("subspace_sum: degree or ambient dimension mismatch");
    std::vector<Bitvec> rows = a.rows_;
    rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
    return Z2Subspace(a.degree_, a.ambient_, std::move(rows));
}

}  // namespace pincalc
