#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pincalc/error.hpp"

namespace pincalc {

// Dense GF(2) vector, bit packed into 64-bit words.
class Bitvec {
public:
    Bitvec() = default;
    explicit Bitvec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    // Index of the first set bit, or -1 when zero.
    int lowest_set() const;

    Bitvec& operator^=(const Bitvec& o);

    friend Bitvec operator^(Bitvec a, const Bitvec& b) {
        a ^= b;
        return a;
    }

    bool operator==(const Bitvec&) const = default;

    // Total order treating bit 0 as the least significant digit. Drives
    // deterministic "lexicographically smallest witness" selection.
    static int cmp_value(const Bitvec& a, const Bitvec& b);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// An element of a fixed-degree GF(2) cohomology vector space, as coordinates
// in the monomial basis of that degree. The owning ring interprets the bits.
struct Z2Class {
    int degree = 0;
    Bitvec coords;

    Z2Class() = default;
    Z2Class(int deg, Bitvec c) : degree(deg), coords(std::move(c)) {}
    Z2Class(int deg, std::size_t dim) : degree(deg), coords(dim) {}

    bool is_zero() const { return coords.none(); }
    std::size_t dim() const { return coords.size(); }

    Z2Class& operator^=(const Z2Class& o) {
        if (degree != o.degree || coords.size() != o.coords.size())
            throw MisuseError("Z2Class xor: degree or basis mismatch");
        coords ^= o.coords;
        return *this;
    }
    friend Z2Class operator^(Z2Class a, const Z2Class& b) {
        a ^= b;
        return a;
    }
    bool operator==(const Z2Class&) const = default;
};

// A subspace of a fixed-degree GF(2) cohomology space, stored as rows in
// reduced echelon form with strictly increasing pivots. The representation
// is canonical: two subspaces are equal iff their row lists are equal.
class Z2Subspace {
public:
    Z2Subspace() = default;
    Z2Subspace(int degree, std::size_t ambient_dim)
        : degree_(degree), ambient_(ambient_dim) {}
    Z2Subspace(int degree, std::size_t ambient_dim, std::vector<Bitvec> spanning);

    static Z2Subspace full(int degree, std::size_t ambient_dim);

    int degree() const { return degree_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Bitvec>& rows() const { return rows_; }

    bool contains(const Z2Class& x) const;

    // Residue of x after eliminating against the echelon rows; zero iff member.
    Z2Class reduce(const Z2Class& x) const;

    // Coordinates of x in the echelon row basis, when x is a member.
    std::optional<Bitvec> coordinates(const Z2Class& x) const;

    friend Z2Subspace subspace_sum(const Z2Subspace& a, const Z2Subspace& b);

    bool operator==(const Z2Subspace&) const = default;

private:
    void check_compatible(const Z2Class& x) const;

    int degree_ = 0;
    std::size_t ambient_ = 0;
    std::vector<Bitvec> rows_;
};

// In-place reduction of arbitrary rows to canonical reduced echelon form.
// Zero rows are dropped; returns the rank.
std::size_t rref(std::vector<Bitvec>& rows);

}  // namespace pincalc
