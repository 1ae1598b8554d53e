#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pincalc/abelian.hpp"
#include "pincalc/ring.hpp"

namespace pincalc {

// Ground data for one closed manifold: its mod-2 cohomology ring through a
// declared degree, low-degree integral homology, total Stiefel-Whitney
// class, and the integral-lift subspaces L1 and L2 (images of reduction from
// integral cohomology). `top_index` designates the fundamental-class-dual
// basis monomial and is present exactly when the ring data is complete.
struct ManifoldDescriptor {
    std::string name;
    int dim = 0;
    RingPtr ring;
    std::vector<FgAbelianGroup> homology_z;  // H_0, H_1, H_2 (more when known)
    bool orientable = false;
    std::vector<Z2Class> sw;  // w_0 .. w_{min(stored degree, dim)}
    Z2Subspace lift_l1;       // degree 1
    Z2Subspace lift_l2;       // degree 2
    std::optional<std::size_t> top_index;
    std::vector<std::string> provenance;  // ground-data notes for the catalog document

    // Full ring data with a designated top class; required for Wu operations.
    bool complete() const;

    // w_i, treating degrees beyond the stored total class as zero when the
    // ring knows them to vanish; unknown degrees are an error.
    Z2Class w(int i) const;
};

// Consistency checks every primitive and every product must pass
// (orientability vs w1, UCT dimension match, lift ranks, w1^2 in L2, ...).
// Throws CorruptDataError with a description of the first violation.
void validate_descriptor(const ManifoldDescriptor& m);

// Catalog primitives. Parameters outside the supported range raise
// UnsupportedParameterError.
ManifoldDescriptor rp(int n);      // real projective space, n >= 1
ManifoldDescriptor sphere(int n);  // n >= 1
ManifoldDescriptor torus(int n);   // n-torus, n >= 1
ManifoldDescriptor mk(int k);      // the glued Mobius-band family, k >= 5
ManifoldDescriptor klein();        // the Klein bottle

// Cartesian product: Kunneth ring, Whitney total class, product homology,
// and lift subspaces propagated by L1+L1 and L2+(L1 (x) L1)+L2. The ring is
// built through everything the factor data supports unless capped (deciders
// need degree 2 only; full builds can be large for big products).
ManifoldDescriptor product(const ManifoldDescriptor& m1, const ManifoldDescriptor& m2,
                           std::optional<int> max_ring_degree = std::nullopt);

// A real vector bundle over a catalog manifold, tracked by w1, w2 and a
// construction trace. Classes live in the *same ring object* as the host.
struct BundleDescriptor {
    int rank = 0;
    Z2Class w1;
    Z2Class w2;
    std::string description;
    RingPtr ring;
};

BundleDescriptor line_bundle(const ManifoldDescriptor& m, const Z2Class& alpha);
BundleDescriptor trivial_bundle(const ManifoldDescriptor& m, int rank);
BundleDescriptor whitney_sum(const BundleDescriptor& a, const BundleDescriptor& b);

}  // namespace pincalc
