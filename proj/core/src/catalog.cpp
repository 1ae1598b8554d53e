#include "pincalc/catalog.hpp"

#include <algorithm>
#include <limits>

namespace pincalc {

namespace {

// C(n, k) mod 2 by Lucas: odd iff k's bits are a subset of n's.
bool binom_odd(int n, int k) {
    return k >= 0 && k <= n && (n & k) == k;
}

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
    return r;
}

std::string wrapped_name(const std::string& n) {
    return n.find('*') == std::string::npos ? n : "(" + n + ")";
}

}  // namespace

bool ManifoldDescriptor::complete() const {
    return ring && ring->exact_above() && ring->stored_max() >= dim && top_index.has_value();
}

Z2Class ManifoldDescriptor::w(int i) const {
    if (i < 0) throw MisuseError("ManifoldDescriptor::w: negative degree");
    if (static_cast<std::size_t>(i) < sw.size()) return sw[static_cast<std::size_t>(i)];
    return ring->zero(i);  // errors when the ring does not know the degree
}

void validate_descriptor(const ManifoldDescriptor& m) {
    auto fail = [&](const std::string& what) {
        throw CorruptDataError("descriptor '" + m.name + "': " + what);
    };
    if (!m.ring || m.dim < 1) fail("missing ring or nonpositive dimension");
    if (!m.ring->degree_known(2)) fail("ring data must reach degree 2");
    if (m.homology_z.size() < 3) fail("integral homology must cover degrees 0..2");
    if (m.homology_z[0] != FgAbelianGroup::free_group(1))
        fail("H_0 must be Z (connected, closed)");
    for (int n = 1; n <= 2; ++n) {
        auto uct = cohomology_via_uct(m.homology_z[n], m.homology_z[n - 1],
                                      CoefficientRing::mod(2));
        if (uct.z2_dimension() != m.ring->dim(n))
            fail("dim H^" + std::to_string(n) + " of the ring (" +
                 std::to_string(m.ring->dim(n)) + ") disagrees with the universal " +
                 "coefficient computation (" + std::to_string(uct.z2_dimension()) + ")");
    }
    if (m.sw.empty() || !(m.sw[0] == m.ring->one())) fail("w_0 must be 1");
    if (m.orientable != m.w(1).is_zero())
        fail("orientability flag disagrees with w1");
    if (m.lift_l1.degree() != 1 || m.lift_l1.ambient_dim() != m.ring->dim(1))
        fail("L1 does not live in H^1");
    if (m.lift_l2.degree() != 2 || m.lift_l2.ambient_dim() != m.ring->dim(2))
        fail("L2 does not live in H^2");
    if (m.lift_l1.dim() != static_cast<std::size_t>(m.homology_z[1].free_rank()))
        fail("dim L1 must equal the free rank of H_1");
    Z2Class w1sq = m.ring->cup(m.w(1), m.w(1));
    if (!m.lift_l2.contains(w1sq)) fail("w1^2 must lie in L2 (it always lifts integrally)");
    if (m.complete()) {
        if (m.ring->dim(m.dim) != 1) fail("top degree of a closed manifold must have rank 1");
        if (*m.top_index != 0) fail("top class index out of range");
    }
}

ManifoldDescriptor rp(int n) {
    if (n < 1) throw UnsupportedParameterError("RP(n): the catalog requires n >= 1");
    if (n > 64)
        throw UnsupportedParameterError("RP(n): parameters above 64 are not supported");
    ManifoldDescriptor m;
    m.name = "RP(" + std::to_string(n) + ")";
    m.dim = n;
    m.ring = RingPresentation::truncated_polynomial({{"a", 1, n + 1}}, n, true);
    for (int i = 0; i <= n; ++i)
        m.sw.push_back(binom_odd(n + 1, i) ? m.ring->monomial_class(i, 0) : m.ring->zero(i));
    m.homology_z = {FgAbelianGroup::free_group(1),
                    n == 1 ? FgAbelianGroup::free_group(1) : FgAbelianGroup::cyclic(2),
                    FgAbelianGroup::zero()};
    m.orientable = (n % 2 == 1);
    m.lift_l1 = n == 1 ? Z2Subspace::full(1, 1) : Z2Subspace(1, 1);
    m.lift_l2 = Z2Subspace::full(2, m.ring->dim(2));
    m.top_index = 0;
    m.provenance = {
        "ring: Z/2[a]/(a^" + std::to_string(n + 1) + "), deg a = 1",
        "total SW class: (1+a)^" + std::to_string(n + 1),
        n == 1 ? std::string("H^1(RP_1, Z) = Z reduces onto H^1(RP_1, Z/2)")
               : std::string("H^1(RP_n, Z) = 0 for n >= 2, so L1 = 0"),
        n >= 2 ? std::string("L2 = span{a^2}: the Bockstein of a is an integral class "
                             "reducing to Sq^1(a) = a^2")
               : std::string("H^2 vanishes in dimension 1"),
    };
    validate_descriptor(m);
    return m;
}

ManifoldDescriptor sphere(int n) {
    if (n < 1) throw UnsupportedParameterError("S(n): the catalog requires n >= 1");
    if (n > 64)
        throw UnsupportedParameterError("S(n): parameters above 64 are not supported");
    ManifoldDescriptor m;
    m.name = "S(" + std::to_string(n) + ")";
    m.dim = n;
    m.ring = RingPresentation::truncated_polynomial({{"s", n, 2}}, n, true);
    m.sw.push_back(m.ring->one());
    for (int i = 1; i <= n; ++i) m.sw.push_back(m.ring->zero(i));
    m.homology_z = {FgAbelianGroup::free_group(1),
                    n == 1 ? FgAbelianGroup::free_group(1) : FgAbelianGroup::zero(),
                    n == 2 ? FgAbelianGroup::free_group(1) : FgAbelianGroup::zero()};
    m.orientable = true;
    m.lift_l1 = Z2Subspace::full(1, m.ring->dim(1));
    m.lift_l2 = Z2Subspace::full(2, m.ring->dim(2));
    m.top_index = 0;
    m.provenance = {"stably parallelizable: total SW class is 1",
                    "free homology, so every mod-2 class lifts integrally"};
    validate_descriptor(m);
    return m;
}

ManifoldDescriptor torus(int n) {
    if (n < 1) throw UnsupportedParameterError("T(n): the catalog requires n >= 1");
    if (n > 12)
        throw UnsupportedParameterError(
            "T(n): parameters above 12 are not supported (ring tables grow as 4^n)");
    ManifoldDescriptor m;
    m.name = "T(" + std::to_string(n) + ")";
    m.dim = n;
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({"t" + std::to_string(i), 1, 2});
    m.ring = RingPresentation::truncated_polynomial(std::move(gens), n, true);
    m.sw.push_back(m.ring->one());
    for (int i = 1; i <= n; ++i) m.sw.push_back(m.ring->zero(i));
    m.homology_z = {FgAbelianGroup::free_group(1), FgAbelianGroup::free_group(n),
                    FgAbelianGroup::free_group(static_cast<int>(binom(n, 2)))};
    m.orientable = true;
    m.lift_l1 = Z2Subspace::full(1, m.ring->dim(1));
    m.lift_l2 = Z2Subspace::full(2, m.ring->dim(2));
    m.top_index = 0;
    m.provenance = {"parallelizable Lie group: total SW class is 1",
                    "exterior ring on n degree-1 generators; free homology, full lifts"};
    validate_descriptor(m);
    return m;
}

ManifoldDescriptor mk(int k) {
    if (k < 5)
        throw UnsupportedParameterError(
            "M(k): the catalog defines M(k) for k >= 5 only (its low-degree homology "
            "H_0 = Z, H_1 = Z, H_2 = 0 is established in that range)");
    ManifoldDescriptor m;
    m.name = "M(" + std::to_string(k) + ")";
    m.dim = k;
    m.ring = RingPresentation::truncated_polynomial({{"x", 1, 2}}, 2, false);
    m.sw = {m.ring->one(), m.ring->generator_class(0), m.ring->zero(2)};
    m.homology_z = {FgAbelianGroup::free_group(1), FgAbelianGroup::free_group(1),
                    FgAbelianGroup::zero()};
    m.orientable = false;
    m.lift_l1 = Z2Subspace::full(1, 1);
    m.lift_l2 = Z2Subspace::full(2, 0);
    m.top_index = std::nullopt;  // ring data stops at degree 2 by design
    m.provenance = {
        "Mobius band times a sphere, glued to a circle times a ball along the boundary",
        "H_0 = Z, H_1 = Z, H_2 = 0; hence H^1(Z/2) = span{x}, H^2(Z/2) = 0 and x^2 = 0",
        "w1 = x (non-orientable, single candidate); w2 = 0 (H^2 vanishes)",
        "L1 = span{x}: reduction of the free H^1(Z) = Z is onto",
        "ring data intentionally stops at degree 2; higher cohomology is not recorded",
    };
    validate_descriptor(m);
    return m;
}

ManifoldDescriptor klein() {
    ManifoldDescriptor m;
    m.name = "K";
    m.dim = 2;
    // H^*(K, Z/2) = <x, y | x^2 = xy, y^2 = 0>, the CW presentation; the
    // tests re-derive every entry here from the cellular chain complex.
    std::vector<Generator> gens = {{"x", 1, std::nullopt}, {"y", 1, 2}};
    std::vector<std::vector<std::vector<std::uint16_t>>> bases = {
        {{0, 0}}, {{1, 0}, {0, 1}}, {{1, 1}}};
    std::vector<RingPresentation::GenProduct> products = {
        {0, 1, 0, 0},   // x * x = xy
        {0, 1, 1, 0},   // x * y = xy
        {1, 1, 0, 0},   // y * x = xy
        {1, 1, 1, -1},  // y * y = 0
    };
    m.ring = RingPresentation::from_tables(std::move(gens), std::move(bases),
                                           std::move(products), 2, true);
    m.sw = {m.ring->one(), m.ring->make_class(1, {"y"}), m.ring->zero(2)};
    m.homology_z = {FgAbelianGroup::free_group(1), FgAbelianGroup(1, {2}),
                    FgAbelianGroup::zero()};
    m.orientable = false;
    {
        Bitvec row(2);
        row.set(1);  // y
        m.lift_l1 = Z2Subspace(1, 2, {row});
    }
    m.lift_l2 = Z2Subspace::full(2, 1);
    m.top_index = 0;
    m.provenance = {
        "CW structure: one 0-cell, loops x~, y~, one 2-cell attached along x~ y~ x~ y~^-1",
        "H_1 = Z + Z/2; ring relations x^2 = xy, y^2 = 0; w1 = y, w2 = 0 (Euler "
        "characteristic 0)",
        "L1 = span{y}: the image of H^1(K, Z) = Z is the Sq^1 kernel line",
        "L2 is everything: H^2(K, Z) = Z/2 reduces onto H^2(K, Z/2)",
    };
    validate_descriptor(m);
    return m;
}

ManifoldDescriptor product(const ManifoldDescriptor& m1, const ManifoldDescriptor& m2,
                           std::optional<int> max_ring_degree) {
    auto limit = [](const ManifoldDescriptor& m) {
        return m.ring->exact_above() ? std::numeric_limits<int>::max()
                                     : m.ring->stored_max();
    };
    int target = std::min(limit(m1), limit(m2));
    if (target == std::numeric_limits<int>::max())
        target = m1.ring->stored_max() + m2.ring->stored_max();
    if (max_ring_degree) target = std::min(target, *max_ring_degree);
    target = std::max(target, 2);

    ManifoldDescriptor m;
    m.name = wrapped_name(m1.name) + "*" + wrapped_name(m2.name);
    m.dim = m1.dim + m2.dim;
    m.ring = RingPresentation::kunneth(m1.ring, m2.ring, target);

    m.homology_z.reserve(3);
    for (int n = 0; n <= 2; ++n)
        m.homology_z.push_back(product_homology(m1.homology_z, m2.homology_z, n));

    const int sw_top = std::min(m.ring->stored_max(), m.dim);
    for (int k = 0; k <= sw_top; ++k) {
        Z2Class wk = m.ring->zero(k);
        for (int i = 0; i <= k; ++i)
            wk ^= m.ring->tensor_classes(m1.w(i), m2.w(k - i));
        m.sw.push_back(std::move(wk));
    }

    m.orientable = m1.orientable && m2.orientable;
    m.lift_l1 = subspace_sum(subspace_embed_left(*m.ring, m1.lift_l1),
                             subspace_embed_right(*m.ring, m2.lift_l1));
    m.lift_l2 = subspace_sum(
        subspace_sum(subspace_embed_left(*m.ring, m1.lift_l2),
                     subspace_tensor(*m.ring, m1.lift_l1, m2.lift_l1)),
        subspace_embed_right(*m.ring, m2.lift_l2));

    if (m1.top_index && m2.top_index && m.ring->exact_above() &&
        m.ring->stored_max() == m.dim) {
        m.top_index = m.ring->pair_index(m1.dim, *m1.top_index, m2.dim, *m2.top_index);
    }
    m.provenance = {
        "product of " + m1.name + " and " + m2.name,
        "ring: Kunneth tensor through degree " + std::to_string(m.ring->stored_max()),
        "SW class: Whitney product of the factor classes",
        "L1 = L1 + L1; L2 = L2 + (L1 (x) L1) + L2 (the Kunneth splitting of the "
        "integral reduction image)",
    };
    validate_descriptor(m);
    return m;
}

BundleDescriptor line_bundle(const ManifoldDescriptor& m, const Z2Class& alpha) {
    if (alpha.degree != 1 || alpha.dim() != m.ring->dim(1))
        throw MisuseError("line_bundle: w1 candidate is not a degree-1 class of this ring");
    return {1, alpha, m.ring->zero(2), "l(" + m.ring->class_to_string(alpha) + ")", m.ring};
}

BundleDescriptor trivial_bundle(const ManifoldDescriptor& m, int rank) {
    if (rank < 0) throw MisuseError("trivial_bundle: negative rank");
    return {rank, m.ring->zero(1), m.ring->zero(2),
            "theta^" + std::to_string(rank), m.ring};
}

BundleDescriptor whitney_sum(const BundleDescriptor& a, const BundleDescriptor& b) {
    if (a.ring != b.ring)
        throw MisuseError("whitney_sum: bundles live over different rings");
    Z2Class w1 = a.w1 ^ b.w1;
    Z2Class w2 = (a.w2 ^ b.w2) ^ a.ring->cup(a.w1, b.w1);
    return {a.rank + b.rank, std::move(w1), std::move(w2),
            a.description + " ⊕ " + b.description, a.ring};
}

}  // namespace pincalc
