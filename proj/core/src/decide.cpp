#include "pincalc/decide.hpp"

#include <sstream>

namespace pincalc {

std::string to_string(ProductPinCCase c) {
    switch (c) {
        case ProductPinCCase::factor1_not_pinc: return "first factor is not pin^c";
        case ProductPinCCase::factor2_not_pinc: return "second factor is not pin^c";
        case ProductPinCCase::orientable_first: return "first factor is orientable";
        case ProductPinCCase::orientable_second: return "second factor is orientable";
        case ProductPinCCase::both_w1_lift: return "both w1 classes lift integrally";
        case ProductPinCCase::no_condition: return "both factors pin^c but neither condition holds";
    }
    return "?";
}

bool decide_orientable(const ManifoldDescriptor& m) { return m.w(1).is_zero(); }

bool decide_spin(const ManifoldDescriptor& m) {
    return m.w(1).is_zero() && m.w(2).is_zero();
}

bool decide_pin_plus(const ManifoldDescriptor& m) { return m.w(2).is_zero(); }

bool decide_pin_minus(const ManifoldDescriptor& m) {
    Z2Class w1 = m.w(1);
    return (m.w(2) ^ m.ring->cup(w1, w1)).is_zero();
}

PinCResult decide_pin_c(const ManifoldDescriptor& m) {
    PinCResult r;
    Z2Class w2 = m.w(2);
    Z2Class residue = m.lift_l2.reduce(w2);
    if (residue.is_zero()) {
        r.exists = true;
        r.certificate = m.lift_l2.coordinates(w2);
    } else {
        r.exists = false;
        r.residue = std::move(residue);
    }
    return r;
}

ProductPinCVerdict product_pinc_fast_path(const ManifoldDescriptor& m1,
                                          const ManifoldDescriptor& m2) {
    if (!decide_pin_c(m1).exists) return {false, ProductPinCCase::factor1_not_pinc};
    if (!decide_pin_c(m2).exists) return {false, ProductPinCCase::factor2_not_pinc};
    if (decide_orientable(m1)) return {true, ProductPinCCase::orientable_first};
    if (decide_orientable(m2)) return {true, ProductPinCCase::orientable_second};
    if (m1.lift_l1.contains(m1.w(1)) && m2.lift_l1.contains(m2.w(1)))
        return {true, ProductPinCCase::both_w1_lift};
    return {false, ProductPinCCase::no_condition};
}

LipschitzResult decide_lipschitz(const ManifoldDescriptor& m, std::size_t pair_cap) {
    if (m.dim % 2 == 0)
        return {LipschitzStatus::not_applicable, std::nullopt,
                "defined for odd dimension only; pin^c is the relevant notion in even "
                "dimension"};

    const std::size_t d = m.ring->dim(1);
    if (d >= 31 || (std::size_t{1} << (2 * d)) > pair_cap)
        throw ResourceLimitError(
            "decide_lipschitz: the witness search over 4^" + std::to_string(d) +
            " bundle pairs exceeds the configured cap of " + std::to_string(pair_cap) +
            " pairs");

    const Z2Class w2 = m.w(2);
    const std::size_t count = std::size_t{1} << d;
    for (std::size_t va = 0; va < count; ++va) {
        Z2Class alpha(1, d);
        for (std::size_t b = 0; b < d; ++b)
            if (va >> b & 1) alpha.coords.set(b);
        for (std::size_t vb = 0; vb < count; ++vb) {
            Z2Class beta(1, d);
            for (std::size_t b = 0; b < d; ++b)
                if (vb >> b & 1) beta.coords.set(b);
            Z2Class target = w2 ^ m.ring->cup(alpha, beta);
            if (m.lift_l2.contains(target)) {
                BundleDescriptor e =
                    whitney_sum(line_bundle(m, alpha), line_bundle(m, beta));
                std::string note = "w2(TM) + w2(E) = " + m.ring->class_to_string(target) +
                                   " has an integral lift";
                return {LipschitzStatus::yes_with_witness, std::move(e), std::move(note)};
            }
        }
    }
    return {LipschitzStatus::no_witness_found, std::nullopt,
            "searched decomposable rank-2 bundles l(a) ⊕ l(b) over all pairs in "
            "H^1 (orientable rank-2 bundles are absorbed into the lift subspace); "
            "nonexistence for arbitrary rank-2 bundles is not asserted"};
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string basis_list(const RingPresentation& r, const Z2Subspace& s) {
    if (s.rows().empty()) return "{}";
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.rows().size(); ++i) {
        if (i) os << ", ";
        os << r.class_to_string(Z2Class(s.degree(), s.rows()[i]));
    }
    os << "}";
    return os.str();
}

}  // namespace

DecisionReport full_report(const ManifoldDescriptor& m, std::size_t lipschitz_cap) {
    const RingPresentation& r = *m.ring;
    DecisionReport rep;
    rep.expression = m.name;
    rep.dimension = m.dim;
    rep.orientable = decide_orientable(m);
    rep.spin = decide_spin(m);
    rep.pin_plus = decide_pin_plus(m);
    rep.pin_minus = decide_pin_minus(m);
    rep.pin_c = decide_pin_c(m);
    rep.lipschitz = decide_lipschitz(m, lipschitz_cap);

    Z2Class w1 = m.w(1), w2 = m.w(2);
    Z2Class pm = w2 ^ r.cup(w1, w1);
    rep.trace.push_back("dim = " + std::to_string(m.dim));
    rep.trace.push_back("w1(TM) = " + r.class_to_string(w1));
    rep.trace.push_back("w2(TM) = " + r.class_to_string(w2));
    rep.trace.push_back("orientable: w1(TM) = 0? " + yes_no(rep.orientable));
    rep.trace.push_back("spin: w1(TM) = 0 and w2(TM) = 0? " + yes_no(rep.spin));
    rep.trace.push_back("pin+: w2(TM) = 0? " + yes_no(rep.pin_plus));
    rep.trace.push_back("pin-: w2(TM) + w1(TM)^2 = " + r.class_to_string(pm) + " -> " +
                        yes_no(rep.pin_minus));
    rep.trace.push_back("integral-lift subspace L1 = " + basis_list(r, m.lift_l1) +
                        ", L2 = " + basis_list(r, m.lift_l2));
    if (rep.pin_c.exists) {
        rep.trace.push_back("pin^c: w2(TM) lies in L2 -> yes");
    } else {
        rep.trace.push_back("pin^c: residue of w2(TM) modulo L2 is " +
                            r.class_to_string(*rep.pin_c.residue) + " -> no");
    }
    switch (rep.lipschitz.status) {
        case LipschitzStatus::yes_with_witness:
            rep.trace.push_back("lipschitz: yes, witness E = " +
                                rep.lipschitz.witness->description + "; " +
                                rep.lipschitz.note);
            break;
        case LipschitzStatus::no_witness_found:
            rep.trace.push_back("lipschitz: no witness found; " + rep.lipschitz.note);
            break;
        case LipschitzStatus::not_applicable:
            rep.trace.push_back("lipschitz: not applicable; " + rep.lipschitz.note);
            break;
    }
    return rep;
}

DecisionReport full_report_product(const ManifoldDescriptor& m1,
                                   const ManifoldDescriptor& m2,
                                   std::optional<int> max_ring_degree,
                                   std::size_t lipschitz_cap) {
    ManifoldDescriptor prod = product(m1, m2, max_ring_degree);
    DecisionReport rep = full_report(prod, lipschitz_cap);
    ProductPinCVerdict fast = product_pinc_fast_path(m1, m2);
    if (fast.product_pin_c != rep.pin_c.exists)
        throw InternalCheckError(
            "pin^c fast path (" + yes_no(fast.product_pin_c) +
            ") disagrees with the general route (" + yes_no(rep.pin_c.exists) + ") on " +
            prod.name);
    rep.trace.push_back("product fast path: " + to_string(fast.tag) + " -> pin^c = " +
                        yes_no(fast.product_pin_c));
    rep.trace.push_back("fast path agrees with the assembled-product route");
    return rep;
}

}  // namespace pincalc
