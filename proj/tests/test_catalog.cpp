#include <doctest.h>

#include "pincalc/catalog.hpp"
#include "pincalc/oracle.hpp"
#include "pincalc/steenrod.hpp"

using namespace pincalc;

TEST_CASE("projective space ground data") {
    ManifoldDescriptor m = rp(2);
    CHECK(m.ring->class_to_string(m.w(0)) == "1");
    CHECK(m.ring->class_to_string(m.w(1)) == "a");
    CHECK(m.ring->class_to_string(m.w(2)) == "a^2");  // (1+a)^3 truncated
    CHECK_FALSE(m.orientable);
    CHECK(m.lift_l1.dim() == 0);
    CHECK(m.lift_l2.contains(m.ring->make_class(2, {"a^2"})));

    CHECK(rp(3).orientable);
    CHECK(rp(3).w(1).is_zero());
    CHECK(rp(4).w(2).is_zero());  // (1+a)^5 = 1 + a + a^4

    // RP(1) is the circle: parallelizable and fully liftable
    ManifoldDescriptor c = rp(1);
    CHECK(c.orientable);
    CHECK(c.w(1).is_zero());
    CHECK(c.lift_l1.dim() == 1);
}

TEST_CASE("homology of projective spaces against the cellular oracle") {
    for (int n = 1; n <= 5; ++n) {
        ManifoldDescriptor m = rp(n);
        auto complex = oracle::rp_complex(n);
        for (int d = 0; d <= 2 && d <= n; ++d)
            CHECK(m.homology_z[d] == oracle::homology(complex, d));
    }
}

TEST_CASE("sphere and torus ground data") {
    ManifoldDescriptor s = sphere(1);
    CHECK(s.orientable);
    CHECK(s.lift_l1 == Z2Subspace::full(1, 1));

    ManifoldDescriptor t = torus(3);
    CHECK(t.orientable);
    CHECK(t.homology_z[1] == FgAbelianGroup::free_group(3));
    CHECK(t.homology_z[2] == FgAbelianGroup::free_group(3));
    for (int i = 1; i <= 3; ++i) CHECK(t.w(i).is_zero());
    CHECK(t.lift_l2.dim() == 3);
}

TEST_CASE("mk family ground data") {
    ManifoldDescriptor m = mk(5);
    CHECK(m.dim == 5);
    CHECK_FALSE(m.orientable);
    CHECK(m.w(1) == m.ring->make_class(1, {"x"}));
    CHECK(m.w(2).is_zero());
    CHECK(m.lift_l1.dim() == 1);  // the free H^1(Z) = Z reduces onto H^1(Z/2)
    CHECK(m.homology_z == std::vector<FgAbelianGroup>{FgAbelianGroup::free_group(1),
                                                      FgAbelianGroup::free_group(1),
                                                      FgAbelianGroup::zero()});
    CHECK_FALSE(m.complete());
    CHECK_THROWS_AS(mk(4), UnsupportedParameterError);
    CHECK_THROWS_AS(rp(0), UnsupportedParameterError);
    CHECK_THROWS_AS(sphere(0), UnsupportedParameterError);
    CHECK_THROWS_AS(torus(0), UnsupportedParameterError);
}

TEST_CASE("klein bottle ground data re-derived from the cellular oracle") {
    ManifoldDescriptor k = klein();

    // integral homology from the CW chain complex, by Smith normal form
    auto complex = oracle::klein_complex();
    CHECK(oracle::homology(complex, 0) == FgAbelianGroup::free_group(1));
    CHECK(oracle::homology(complex, 1) == FgAbelianGroup(1, {2}));
    CHECK(oracle::homology(complex, 2) == FgAbelianGroup::zero());
    CHECK(k.homology_z[0] == oracle::homology(complex, 0));
    CHECK(k.homology_z[1] == oracle::homology(complex, 1));
    CHECK(k.homology_z[2] == oracle::homology(complex, 2));

    // mod-2 cohomology dimensions via universal coefficients
    CHECK(cohomology_via_uct(k.homology_z[1], k.homology_z[0], CoefficientRing::mod(2))
              .z2_dimension() == k.ring->dim(1));
    CHECK(cohomology_via_uct(k.homology_z[2], k.homology_z[1], CoefficientRing::mod(2))
              .z2_dimension() == k.ring->dim(2));

    // L1 derivation: the image of H^1(K, Z) = Z in H^1(K, Z/2) has dimension
    // equal to the free rank of H_1 and sits inside the kernel of Sq^1; here
    // that kernel is the single line span{y}, so L1 = span{y}.
    CHECK(hom_to(k.homology_z[1], CoefficientRing::integers()) ==
          FgAbelianGroup::free_group(1));
    std::vector<Z2Class> sq1_kernel;
    for (std::size_t v = 0; v < 4; ++v) {
        Z2Class c(1, 2);
        if (v & 1) c.coords.set(0);
        if (v & 2) c.coords.set(1);
        if (sq(*k.ring, 1, c).is_zero() && !c.is_zero()) sq1_kernel.push_back(c);
    }
    REQUIRE(sq1_kernel.size() == 1);  // dim ker Sq^1 = 1 = free rank of H_1
    CHECK(k.lift_l1.contains(sq1_kernel[0]));
    CHECK(k.lift_l1.dim() == 1);
    CHECK(sq1_kernel[0] == k.ring->make_class(1, {"y"}));

    // L2 is everything: H^3 of a 2-complex vanishes, so the Bockstein out of
    // H^2(K, Z/2) is zero and the reduction from H^2(K, Z) is onto.
    CHECK(k.lift_l2 == Z2Subspace::full(2, 1));

    // w1 = v1 (Wu), re-derived by the solver; w2 = 0 since chi(K) = 0 is even
    WuData wu = wu_classes(k);
    CHECK(wu.wu[1] == k.w(1));
    CHECK(k.w(2).is_zero());
    CHECK_FALSE(k.orientable);
}

TEST_CASE("product descriptor follows Whitney, Kunneth and the lift splitting") {
    ManifoldDescriptor p = product(rp(2), rp(2));
    CHECK(p.dim == 4);
    CHECK(p.w(2) == p.ring->make_class(2, {"a1^2", "a1*a2", "a2^2"}));
    CHECK(p.lift_l2 ==
          Z2Subspace(2, 3, {p.ring->make_class(2, {"a1^2"}).coords,
                            p.ring->make_class(2, {"a2^2"}).coords}));
    CHECK_FALSE(p.orientable);

    // high-degree sphere factors contribute nothing below degree 3
    ManifoldDescriptor q = product(rp(2), sphere(3));
    CHECK(q.w(1) == q.ring->embed_left(rp(2).w(1)));
    CHECK(q.w(2) == q.ring->embed_left(rp(2).w(2)));
    CHECK(q.ring->dim(1) == rp(2).ring->dim(1));
    CHECK(q.ring->dim(2) == rp(2).ring->dim(2));

    // M(5) x M(5): every degree-2 class lifts
    ManifoldDescriptor mm = product(mk(5), mk(5));
    CHECK(mm.lift_l2 == Z2Subspace::full(2, mm.ring->dim(2)));
    CHECK(mm.homology_z[2] == FgAbelianGroup::free_group(1));

    // whitney class of a product in every stored degree, not just degree 2
    ManifoldDescriptor rr = product(rp(2), rp(4));
    for (int k = 0; k <= rr.ring->stored_max(); ++k) {
        Z2Class expect = rr.ring->zero(k);
        for (int i = 0; i <= k; ++i)
            expect ^= rr.ring->tensor_classes(rp(2).w(i), rp(4).w(k - i));
        CHECK(rr.w(k) == expect);
    }
}

TEST_CASE("product respects the capped ring degree") {
    ManifoldDescriptor p = product(torus(3), torus(3), 2);
    CHECK(p.ring->stored_max() == 2);
    CHECK_FALSE(p.ring->exact_above());
    CHECK_FALSE(p.complete());
    CHECK(p.lift_l1.dim() == 6);
}

TEST_CASE("descriptor validation catches corrupted data") {
    ManifoldDescriptor m = rp(2);
    m.orientable = true;  // contradicts w1 = a
    CHECK_THROWS_AS(validate_descriptor(m), CorruptDataError);

    ManifoldDescriptor m2 = rp(2);
    m2.lift_l2 = Z2Subspace(2, 1);  // drops w1^2 from L2
    CHECK_THROWS_AS(validate_descriptor(m2), CorruptDataError);

    ManifoldDescriptor m3 = klein();
    m3.homology_z[1] = FgAbelianGroup::cyclic(2);  // wrong UCT dimensions
    CHECK_THROWS_AS(validate_descriptor(m3), CorruptDataError);
}

TEST_CASE("bundle calculus") {
    ManifoldDescriptor n = product(product(rp(2), rp(2)), sphere(1));
    Z2Class a1 = n.ring->make_class(1, {"a1"});
    Z2Class a2 = n.ring->make_class(1, {"a2"});

    BundleDescriptor e = whitney_sum(line_bundle(n, a1), line_bundle(n, a2));
    CHECK(e.rank == 2);
    CHECK(e.w1 == (a1 ^ a2));
    CHECK(e.w2 == n.ring->cup(a1, a2));

    // stability: adding a trivial bundle changes nothing
    BundleDescriptor stabilized = whitney_sum(e, trivial_bundle(n, 7));
    CHECK(stabilized.rank == 9);
    CHECK(stabilized.w1 == e.w1);
    CHECK(stabilized.w2 == e.w2);

    // the witness identity: w2(TN) + w2(E) = w1(TN)^2
    Z2Class w1 = n.w(1);
    CHECK((n.w(2) ^ e.w2) == n.ring->cup(w1, w1));

    // bundles over different rings never mix
    ManifoldDescriptor other = rp(2);
    CHECK_THROWS_AS(whitney_sum(e, trivial_bundle(other, 1)), MisuseError);
    CHECK_THROWS_AS(line_bundle(n, n.ring->zero(2)), MisuseError);
}

TEST_CASE("every catalog primitive validates") {
    for (int n = 1; n <= 6; ++n) {
        validate_descriptor(rp(n));
        validate_descriptor(sphere(n));
        validate_descriptor(torus(n));
    }
    validate_descriptor(klein());
    for (int k = 5; k <= 8; ++k) validate_descriptor(mk(k));
}
