#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pincalc/abelian.hpp"
#include "pincalc/snf.hpp"

// Independent oracles used by the tests and the self-test suite. Everything
// here goes through Smith normal form on explicit presentations, chain
// complexes, or exhaustive enumeration; none of it calls the group functor
// implementations it validates.
namespace pincalc::oracle {

// A chain complex of free Z-modules. boundary[k] is the matrix of
// C_k -> C_{k-1} acting on column vectors (rows = dim C_{k-1},
// cols = dim C_k); boundary[0] maps C_0 to 0.
struct IntComplex {
    std::vector<IntMatrix> boundary;

    int top_degree() const { return static_cast<int>(boundary.size()) - 1; }
    int dim(int k) const {
        return k >= 0 && k < static_cast<int>(boundary.size()) ? boundary[k].cols : 0;
    }
};

// H_k = ker boundary[k] / im boundary[k+1], by Smith normal form.
FgAbelianGroup homology(const IntComplex& c, int k);

// Total complex of the tensor product (Kunneth); homology of a product space.
IntComplex tensor_complex(const IntComplex& a, const IntComplex& b);

// Minimal cellular chain complexes for the fixtures.
IntComplex rp_complex(int n);
IntComplex sphere_complex(int n);
IntComplex klein_complex();

// Kronecker product, row-major block layout.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

// Presentation of g: rows are relations, columns generators (torsion
// generators first, then free ones).
IntMatrix presentation_of(const FgAbelianGroup& g);

// The same presentation scrambled by random unimodular row and column
// operations; the cokernel is unchanged but nothing is diagonal any more.
IntMatrix mixed_presentation(const FgAbelianGroup& g, std::mt19937& rng);

// Presentation of A (x) B from presentations of A and B.
IntMatrix tensor_presentation(const IntMatrix& a, const IntMatrix& b);

// Tor(A, B) as H_1 of the total complex of the free resolutions read off
// the presentations (rows must be independent, which presentation_of and
// mixed_presentation guarantee).
FgAbelianGroup tor_via_resolution(const IntMatrix& a, const IntMatrix& b);

// Hom(G, Z) = Z^(cols - rank)  and  Ext(G, Z) = invariant-factor torsion.
FgAbelianGroup hom_z_oracle(const IntMatrix& pres);
FgAbelianGroup ext_z_oracle(const IntMatrix& pres);

// Hom(G, Z/m) ~ G/mG and Ext(G, Z/m) ~ T(G)/mT(G), both as SNF cokernels.
FgAbelianGroup hom_mod_oracle(const IntMatrix& pres, std::uint64_t m);
FgAbelianGroup ext_mod_oracle(const IntMatrix& pres, std::uint64_t m);

// Fully independent finite check: enumerate every assignment of generators
// into Z/m satisfying the relations and classify the resulting group by
// element-order counts. Enumerates m^generators points; keep them small.
FgAbelianGroup hom_enumeration(const IntMatrix& pres, std::uint64_t m);

}  // namespace pincalc::oracle
