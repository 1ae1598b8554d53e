#include <doctest.h>

#include "pincalc/decide.hpp"

using namespace pincalc;

TEST_CASE("obstruction deciders on primitives") {
    ManifoldDescriptor p = rp(2);
    CHECK_FALSE(decide_pin_plus(p));  // w2 = a^2 != 0
    CHECK(decide_pin_minus(p));       // w2 + w1^2 = 0
    CHECK(decide_pin_c(p).exists);
    CHECK_FALSE(decide_orientable(p));

    ManifoldDescriptor t = torus(4);
    CHECK(decide_orientable(t));
    CHECK(decide_spin(t));
    CHECK(decide_pin_plus(t));
    CHECK(decide_pin_minus(t));
    CHECK(decide_pin_c(t).exists);

    ManifoldDescriptor q = product(rp(2), sphere(1));
    CHECK(decide_pin_minus(q));
    CHECK_FALSE(decide_pin_plus(q));

    // RP(4k) is pin+; RP(4k+2) is pin- only
    CHECK(decide_pin_plus(rp(4)));
    CHECK_FALSE(decide_pin_minus(rp(4)));
    CHECK_FALSE(decide_pin_plus(rp(6)));
    CHECK(decide_pin_minus(rp(6)));
}

TEST_CASE("pin^c verdicts carry witnesses") {
    PinCResult bad = decide_pin_c(product(rp(2), rp(2)));
    CHECK_FALSE(bad.exists);
    REQUIRE(bad.residue.has_value());
    CHECK_FALSE(bad.residue->is_zero());

    PinCResult good = decide_pin_c(product(mk(5), mk(5)));
    CHECK(good.exists);
    REQUIRE(good.certificate.has_value());

    CHECK(decide_pin_c(sphere(4)).exists);  // w2 = 0
}

TEST_CASE("product pin^c fast path cases") {
    ProductPinCVerdict r1 = product_pinc_fast_path(rp(2), rp(2));
    CHECK_FALSE(r1.product_pin_c);
    CHECK(r1.tag == ProductPinCCase::no_condition);

    ProductPinCVerdict r2 = product_pinc_fast_path(mk(5), mk(7));
    CHECK(r2.product_pin_c);
    CHECK(r2.tag == ProductPinCCase::both_w1_lift);

    ProductPinCVerdict r3 = product_pinc_fast_path(rp(2), sphere(3));
    CHECK(r3.product_pin_c);
    CHECK(r3.tag == ProductPinCCase::orientable_second);

    // a factor that is not pin^c poisons every product
    ManifoldDescriptor bad = product(rp(2), rp(2));
    ProductPinCVerdict r4 = product_pinc_fast_path(bad, sphere(3));
    CHECK_FALSE(r4.product_pin_c);
    CHECK(r4.tag == ProductPinCCase::factor1_not_pinc);
}

TEST_CASE("lipschitz deciders") {
    // even dimension: not applicable
    CHECK(decide_lipschitz(product(rp(2), rp(2))).status ==
          LipschitzStatus::not_applicable);

    // odd-dimensional pin^c manifolds take the trivial witness
    LipschitzResult triv = decide_lipschitz(rp(5));
    CHECK(triv.status == LipschitzStatus::yes_with_witness);
    CHECK(triv.witness->w1.is_zero());
    CHECK(triv.witness->w2.is_zero());

    // the 5-dimensional example: lexicographically smallest witness l(a1)+l(a2)
    ManifoldDescriptor n = product(product(rp(2), rp(2)), sphere(1));
    LipschitzResult lip = decide_lipschitz(n);
    REQUIRE(lip.status == LipschitzStatus::yes_with_witness);
    CHECK(lip.witness->description == "l(a1) ⊕ l(a2)");
    CHECK(lip.witness->w2 == n.ring->make_class(2, {"a1*a2"}));

    // search cap produces an explicit resource error, never a partial answer
    CHECK_THROWS_AS(decide_lipschitz(n, 4), ResourceLimitError);
}

TEST_CASE("no decomposable witness exists over four projective planes") {
    // w2 mod L2 is the full quadric sum_{i<j} a_i a_j in four variables; its
    // polar form has rank 4 over GF(2), so no product of two linear forms
    // matches it modulo squares and the search must exhaust.
    ManifoldDescriptor n = product(
        product(product(rp(2), rp(2)), product(rp(2), rp(2))), sphere(1), 2);
    LipschitzResult lip = decide_lipschitz(n);
    CHECK(lip.status == LipschitzStatus::no_witness_found);
    CHECK(lip.note.find("decomposable") != std::string::npos);
}

TEST_CASE("full reports agree across routes and record traces") {
    DecisionReport rep = full_report_product(rp(2), rp(2));
    CHECK_FALSE(rep.pin_c.exists);
    CHECK_FALSE(rep.trace.empty());

    DecisionReport all = full_report(sphere(5));
    CHECK(all.orientable);
    CHECK(all.spin);
    CHECK(all.pin_plus);
    CHECK(all.pin_minus);
    CHECK(all.pin_c.exists);
    CHECK(all.lipschitz.status == LipschitzStatus::yes_with_witness);

    DecisionReport rr = full_report_product(rp(4), rp(2));
    CHECK_FALSE(rr.pin_c.exists);
}

TEST_CASE("verdicts are invariant under factor order and grouping") {
    std::vector<ManifoldDescriptor> ms = {rp(2), rp(3), mk(5), torus(2), klein(),
                                          sphere(2)};
    for (const auto& a : ms)
        for (const auto& b : ms) {
            ManifoldDescriptor ab = product(a, b, 2), ba = product(b, a, 2);
            CHECK(decide_orientable(ab) == decide_orientable(ba));
            CHECK(decide_spin(ab) == decide_spin(ba));
            CHECK(decide_pin_plus(ab) == decide_pin_plus(ba));
            CHECK(decide_pin_minus(ab) == decide_pin_minus(ba));
            CHECK(decide_pin_c(ab).exists == decide_pin_c(ba).exists);
        }
    // associativity of grouping
    ManifoldDescriptor l = product(product(rp(2), torus(2)), klein(), 2);
    ManifoldDescriptor r = product(rp(2), product(torus(2), klein(), 2), 2);
    CHECK(decide_pin_c(l).exists == decide_pin_c(r).exists);
    CHECK(decide_pin_plus(l) == decide_pin_plus(r));
    CHECK(decide_pin_minus(l) == decide_pin_minus(r));
}

TEST_CASE("product pin laws on a catalog sample") {
    std::vector<ManifoldDescriptor> ms = {rp(2), rp(3), rp(4), mk(5), torus(2),
                                          klein(), sphere(2), sphere(3)};
    for (const auto& a : ms)
        for (const auto& b : ms) {
            ManifoldDescriptor ab = product(a, b, 2);
            const bool one_orientable = decide_orientable(a) || decide_orientable(b);
            CHECK(decide_pin_plus(ab) ==
                  (decide_pin_plus(a) && decide_pin_plus(b) && one_orientable));
            CHECK(decide_pin_minus(ab) ==
                  (decide_pin_minus(a) && decide_pin_minus(b) && one_orientable));
        }
}
