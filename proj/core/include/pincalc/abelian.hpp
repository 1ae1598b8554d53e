#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pincalc/error.hpp"
#include "pincalc/snf.hpp"

namespace pincalc {

// Coefficient ring for (co)homology: Z (modulus 0) or Z/m.
struct CoefficientRing {
    std::uint64_t modulus = 0;

    static CoefficientRing integers() { return {0}; }
    static CoefficientRing mod(std::uint64_t m) {
        if (m < 2) throw MisuseError("CoefficientRing::mod: modulus must be >= 2");
        return {m};
    }
    bool is_integers() const { return modulus == 0; }
    bool operator==(const CoefficientRing&) const = default;
};

// A finitely generated abelian group in canonical primary decomposition:
// Z^freeRank plus a sorted multiset of prime-power torsion orders. Two
// values are equal iff the representation is identical.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;  // the zero group
    FgAbelianGroup(int free_rank, std::vector<std::uint64_t> torsion_orders);

    static FgAbelianGroup zero() { return {}; }
    static FgAbelianGroup free_group(int rank) { return FgAbelianGroup(rank, {}); }
    // Z/order, split into its prime-power factors; order 1 gives the zero group.
    static FgAbelianGroup cyclic(std::uint64_t order);

    int free_rank() const { return free_rank_; }
    const std::vector<std::uint64_t>& torsion_orders() const { return torsion_; }

    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }

    FgAbelianGroup two_primary_part() const;
    FgAbelianGroup odd_part() const;

    // Dimension as a Z/2 vector space; only valid when every element has
    // order dividing 2 (used for mod-2 cohomology groups).
    std::size_t z2_dimension() const;

    std::string to_string() const;

    bool operator==(const FgAbelianGroup&) const = default;

private:
    int free_rank_ = 0;
    std::vector<std::uint64_t> torsion_;  // prime powers > 1, sorted ascending
};

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Hom(a, R) and Ext(a, R) for R = Z or Z/m.
FgAbelianGroup hom_to(const FgAbelianGroup& a, CoefficientRing r);
FgAbelianGroup ext_to(const FgAbelianGroup& a, CoefficientRing r);

// H^n(X, R) from integral homology via the universal coefficient theorem:
// Ext(H_{n-1}, R) + Hom(H_n, R) (the sequence splits).
FgAbelianGroup cohomology_via_uct(const FgAbelianGroup& h_n,
                                  const FgAbelianGroup& h_n_minus_1,
                                  CoefficientRing r);

// H_n(M1 x M2, Z) via the integral Kunneth theorem. The spans list
// H_0..H_k of each factor (H_0 = Z for connected spaces); asking past the
// supplied data is an error, not a zero.
FgAbelianGroup product_homology(std::span<const FgAbelianGroup> factor1,
                                std::span<const FgAbelianGroup> factor2, int n);

// Cokernel Z^cols / rowspan(m) in canonical primary decomposition, computed
// by Smith normal form. Test oracle: validates tensor/tor/ext/hom against
// explicit presentations; nothing in the library computes through it.
FgAbelianGroup snf_cokernel(const IntMatrix& m);

// Prime-power factorization helper (ascending prime powers of n > 1).
std::vector<std::uint64_t> prime_power_factors(std::uint64_t n);

}  // namespace pincalc
