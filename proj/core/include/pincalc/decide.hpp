#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pincalc/catalog.hpp"

namespace pincalc {

// pin^c verdict with its witness: a membership certificate (coordinates of
// w2 in the lift-subspace row basis) on success, the residue class modulo
// the lift subspace on failure.
struct PinCResult {
    bool exists = false;
    std::optional<Bitvec> certificate;
    std::optional<Z2Class> residue;
};

enum class LipschitzStatus { yes_with_witness, no_witness_found, not_applicable };

struct LipschitzResult {
    LipschitzStatus status = LipschitzStatus::not_applicable;
    std::optional<BundleDescriptor> witness;
    // witness certificate note, search scope, or the not-applicable reason
    std::string note;
};

enum class ProductPinCCase {
    factor1_not_pinc,
    factor2_not_pinc,
    orientable_first,
    orientable_second,
    both_w1_lift,
    no_condition,
};
std::string to_string(ProductPinCCase c);

struct ProductPinCVerdict {
    bool product_pin_c = false;
    ProductPinCCase tag = ProductPinCCase::no_condition;
};

bool decide_orientable(const ManifoldDescriptor& m);  // w1 = 0
bool decide_spin(const ManifoldDescriptor& m);        // w1 = 0 and w2 = 0
bool decide_pin_plus(const ManifoldDescriptor& m);    // w2 = 0
bool decide_pin_minus(const ManifoldDescriptor& m);   // w2 + w1^2 = 0
PinCResult decide_pin_c(const ManifoldDescriptor& m); // w2 lifts integrally

// Product criterion without assembling the product: both factors pin^c and
// (one factor orientable, or both w1 classes have integral lifts).
ProductPinCVerdict product_pinc_fast_path(const ManifoldDescriptor& m1,
                                          const ManifoldDescriptor& m2);

inline constexpr std::size_t kDefaultLipschitzPairCap = std::size_t{1} << 22;

// Three-valued by design: the witness search covers decomposable rank-2
// bundles l(a) + l(b) (orientable rank-2 bundles are absorbed into the lift
// subspace), which is not claimed complete for all rank-2 bundles. Only
// defined for odd dimension; even dimensions report not_applicable.
LipschitzResult decide_lipschitz(const ManifoldDescriptor& m,
                                 std::size_t pair_cap = kDefaultLipschitzPairCap);

struct DecisionReport {
    std::string expression;
    int dimension = 0;
    bool orientable = false;
    bool spin = false;
    bool pin_plus = false;
    bool pin_minus = false;
    PinCResult pin_c;
    LipschitzResult lipschitz;
    std::vector<std::string> trace;
};

DecisionReport full_report(const ManifoldDescriptor& m,
                           std::size_t lipschitz_cap = kDefaultLipschitzPairCap);

// Assembles the product, runs the general route on it and the factorwise
// fast path on the factors, and insists the two agree before reporting.
DecisionReport full_report_product(const ManifoldDescriptor& m1,
                                   const ManifoldDescriptor& m2,
                                   std::optional<int> max_ring_degree = std::nullopt,
                                   std::size_t lipschitz_cap = kDefaultLipschitzPairCap);

}  // namespace pincalc
