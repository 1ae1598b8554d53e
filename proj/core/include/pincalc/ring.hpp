#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pincalc/gf2.hpp"

namespace pincalc {

struct Generator {
    std::string name;
    int degree = 1;
    // Smallest e with g^e = 0, when known within the truncation; absent means
    // no power is known to vanish in the stored range.
    std::optional<int> power_vanishes;
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// A graded-commutative GF(2) cohomology ring with an explicit monomial basis
// per degree and a full multiplication table on basis monomials. Degrees are
// stored through `stored_max`; when `exact_above` is set, higher degrees are
// genuinely zero (a closed n-manifold's ring above degree n), otherwise they
// are unknown and any query touching them is a hard error.
//
// Every catalog ring here has the property that a product of two basis
// monomials is again a basis monomial or zero, so table entries are indices.
class RingPresentation {
public:
    struct Monomial {
        std::vector<std::uint16_t> exponents;  // over the ring's generator list
        std::string name;
        // Bigraded origin for Kunneth product rings: degree contributed by the
        // left factor and the factor basis indices. left_degree is -1 for
        // rings that are not products.
        int left_degree = -1;
        std::int32_t left_index = -1;
        std::int32_t right_index = -1;
        // Factorization m = g * cofactor driving the Cartan recursion;
        // gen is -1 only for the unit monomial.
        std::int32_t gen = -1;
        std::int32_t cofactor = -1;  // index within degree (deg(m) - deg(g))
    };

    // Tensor product of truncated polynomial algebras Z/2[g]/(g^e): the basis
    // is every exponent vector below the vanishing bounds.
    static RingPtr truncated_polynomial(std::vector<Generator> gens, int stored_max,
                                        bool exact_above);

    // Explicit presentation: per-degree bases as exponent vectors plus a
    // generator-times-monomial product table (result index or -1 for zero).
    // Needed for rings with genuine relations, e.g. the Klein bottle's
    // x*x = x*y. The full pair table is closed up through the factorizations.
    struct GenProduct {
        int gen;
        int degree;      // degree of the right-hand monomial
        int index;       // its index
        int result;      // index in degree gens[gen].degree + degree, or -1
    };
    static RingPtr from_tables(std::vector<Generator> gens,
                               std::vector<std::vector<std::vector<std::uint16_t>>> bases,
                               std::vector<GenProduct> gen_products, int stored_max,
                               bool exact_above);

    // Kunneth tensor of two rings through max_degree: the degree-n basis is
    // the union over i+j=n of pairwise tensor monomials, ordered by left
    // degree descending; multiplication is factorwise (no signs over GF(2)).
    static RingPtr kunneth(RingPtr left, RingPtr right, int max_degree);

    int stored_max() const { return stored_max_; }
    bool exact_above() const { return exact_above_; }
    bool degree_known(int d) const { return d >= 0 && (d <= stored_max_ || exact_above_); }
    std::size_t dim(int d) const;

    const std::vector<Generator>& generators() const { return gens_; }
    const Monomial& monomial(int degree, std::size_t index) const;
    std::optional<std::size_t> find_monomial(int degree, std::string_view name) const;

    Z2Class zero(int degree) const;
    Z2Class one() const { return monomial_class(0, 0); }
    Z2Class monomial_class(int degree, std::size_t index) const;
    Z2Class generator_class(std::size_t gen_index) const;
    // Class with the named monomials set; unknown names are errors.
    Z2Class make_class(int degree, std::initializer_list<std::string_view> names) const;

    std::string class_to_string(const Z2Class& x) const;

    // Product of basis monomials: index in degree d1+d2, or -1 for zero.
    std::int32_t mul_monomial(int d1, std::size_t i1, int d2, std::size_t i2) const;
    Z2Class cup(const Z2Class& x, const Z2Class& y) const;

    // Steenrod square of a generator, Sq^j(g) for 0 <= j <= deg g. All
    // catalog generators satisfy Sq^j(g) = 0 for 0 < j < deg g, so the table
    // is determined by the ring: Sq^0(g) = g and Sq^{deg g}(g) = g*g.
    Z2Class sq_generator(std::size_t gen_index, int j) const;

    bool is_product() const { return static_cast<bool>(left_); }
    const RingPtr& left_factor() const;
    const RingPtr& right_factor() const;
    std::size_t left_gen_count() const;

    std::size_t pair_index(int left_degree, std::size_t left_index, int right_degree,
                           std::size_t right_index) const;
    // x in the left factor, y in the right factor -> x (x) y in this ring.
    Z2Class tensor_classes(const Z2Class& x, const Z2Class& y) const;
    Z2Class embed_left(const Z2Class& x) const;
    Z2Class embed_right(const Z2Class& y) const;

    // Split a degree-2 class into its (2,0), (1,1), (0,2) components.
    std::array<Z2Class, 3> decompose_degree2(const Z2Class& x) const;

private:
    RingPresentation() = default;

    void derive_names();
    void derive_factorizations();
    void check_commutative() const;
    const std::int32_t* table_row(int d1, std::size_t i1, int d2) const;

    std::vector<Generator> gens_;
    int stored_max_ = 0;
    bool exact_above_ = false;
    std::vector<std::vector<Monomial>> basis_;  // [degree][index]
    // mult_[d1][d2] is a dim(d1) x dim(d2) table, present iff d1+d2 <= stored_max_
    std::vector<std::vector<std::vector<std::int32_t>>> mult_;
    RingPtr left_, right_;
    // block_start_[n][i]: first index of the bigrade (i, n-i) block, or npos
    std::vector<std::vector<std::size_t>> block_start_;
};

// Span of the pairwise tensors of the two subspaces' basis rows, inside the
// product ring. Over a field this is exactly the tensor of the subspaces.
Z2Subspace subspace_tensor(const RingPresentation& product_ring, const Z2Subspace& left,
                           const Z2Subspace& right);

// Images of a factor subspace inside the product ring.
Z2Subspace subspace_embed_left(const RingPresentation& product_ring, const Z2Subspace& s);
Z2Subspace subspace_embed_right(const RingPresentation& product_ring, const Z2Subspace& s);

}  // namespace pincalc
