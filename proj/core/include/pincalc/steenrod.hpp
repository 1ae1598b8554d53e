#pragma once

#include <vector>

#include "pincalc/catalog.hpp"
#include "pincalc/ring.hpp"

namespace pincalc {

// Sq^i(x), additive in x and computed on monomials by the Cartan formula
// over the stored factorizations: Sq^k(g*m) = sum Sq^a(g) * Sq^{k-a}(m).
// Queries landing beyond the ring's known range raise UnsupportedDegreeError.
Z2Class sq(const RingPresentation& r, int i, const Z2Class& x);

// The Steenrod table row for one generator: Sq^0(g) .. Sq^{deg g}(g).
std::vector<Z2Class> sq_table_row(const RingPresentation& r, std::size_t gen_index);

// Evaluation against the fundamental class: the coefficient of the
// designated top monomial. Requires a complete descriptor.
bool pair_with_top(const ManifoldDescriptor& m, const Z2Class& x);

struct WuData {
    std::vector<Z2Class> wu;                // v_0 .. v_n
    std::vector<Z2Class> reconstructed_sw;  // Sq(v) collected by total degree
};

// Wu classes of a complete closed-manifold descriptor: v_i is the unique
// solution of <v_i . w, [M]> = <Sq^i(w), [M]> over the basis w of H^{n-i};
// uniqueness comes from nondegeneracy of the cup pairing, and a singular
// system means the stored ring is not a valid closed-manifold ring.
WuData wu_classes(const ManifoldDescriptor& m);

// Total Stiefel-Whitney class reconstructed as Sq(v); an independent route
// to the Whitney-derived class stored on the descriptor.
std::vector<Z2Class> sw_from_wu(const ManifoldDescriptor& m);

}  // namespace pincalc
