#include "pincalc/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pincalc {

namespace {

bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1;
        }
    }
    return true;  // prime
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace

std::vector<std::uint64_t> prime_power_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::uint64_t q = 1;
            while (n % p == 0) {
                n /= p;
                q *= p;
            }
            out.push_back(q);
        }
    }
    if (n > 1) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

FgAbelianGroup::FgAbelianGroup(int free_rank, std::vector<std::uint64_t> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
    if (free_rank_ < 0) throw MisuseError("FgAbelianGroup: negative free rank");
    for (auto q : torsion_) {
        if (!is_prime_power(q))
            throw MisuseError("FgAbelianGroup: torsion order " + std::to_string(q) +
                              " is not a prime power > 1");
    }
    std::sort(torsion_.begin(), torsion_.end());
}

FgAbelianGroup FgAbelianGroup::cyclic(std::uint64_t order) {
    if (order == 0) return free_group(1);  // Z/0 = Z
    return FgAbelianGroup(0, prime_power_factors(order));
}

FgAbelianGroup FgAbelianGroup::two_primary_part() const {
    std::vector<std::uint64_t> t;
    for (auto q : torsion_)
        if (q % 2 == 0) t.push_back(q);
    return FgAbelianGroup(0, std::move(t));
}

FgAbelianGroup FgAbelianGroup::odd_part() const {
    std::vector<std::uint64_t> t;
    for (auto q : torsion_)
        if (q % 2 != 0) t.push_back(q);
    return FgAbelianGroup(0, std::move(t));
}

std::size_t FgAbelianGroup::z2_dimension() const {
    for (auto q : torsion_)
        if (q != 2)
            throw MisuseError("z2_dimension: group has a factor Z/" + std::to_string(q) +
                              ", exponent exceeds 2");
    if (free_rank_ != 0)
        throw MisuseError("z2_dimension: group has a free part, not a Z/2 vector space");
    return torsion_.size();
}

std::string FgAbelianGroup::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank_ == 1) {
        sep();
        os << "Z";
    } else if (free_rank_ > 1) {
        sep();
        os << "Z^" << free_rank_;
    }
    for (auto q : torsion_) {
        sep();
        os << "Z/" << q;
    }
    return os.str();
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<std::uint64_t> t = a.torsion_orders();
    t.insert(t.end(), b.torsion_orders().begin(), b.torsion_orders().end());
    return FgAbelianGroup(a.free_rank() + b.free_rank(), std::move(t));
}

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    // bilinear over direct sums; Z (x) G = G, Z/m (x) Z/n = Z/gcd(m,n)
    int free_rank = a.free_rank() * b.free_rank();
    std::vector<std::uint64_t> t;
    for (int i = 0; i < a.free_rank(); ++i)
        t.insert(t.end(), b.torsion_orders().begin(), b.torsion_orders().end());
    for (int j = 0; j < b.free_rank(); ++j)
        t.insert(t.end(), a.torsion_orders().begin(), a.torsion_orders().end());
    FgAbelianGroup acc(free_rank, std::move(t));
    for (auto m : a.torsion_orders())
        for (auto n : b.torsion_orders()) {
            auto g = gcd64(m, n);
            if (g > 1) acc = direct_sum(acc, FgAbelianGroup::cyclic(g));
        }
    return acc;
}

FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    // Tor(Z, G) = 0; Tor(Z/m, Z/n) = Z/gcd(m,n); free arguments contribute nothing
    FgAbelianGroup acc;
    for (auto m : a.torsion_orders())
        for (auto n : b.torsion_orders()) {
            auto g = gcd64(m, n);
            if (g > 1) acc = direct_sum(acc, FgAbelianGroup::cyclic(g));
        }
    return acc;
}

FgAbelianGroup hom_to(const FgAbelianGroup& a, CoefficientRing r) {
    if (r.is_integers()) {
        // Hom(Z, Z) = Z, Hom(Z/n, Z) = 0
        return FgAbelianGroup::free_group(a.free_rank());
    }
    // Hom(Z, Z/m) = Z/m, Hom(Z/n, Z/m) = Z/gcd(n,m)
    FgAbelianGroup acc;
    for (int i = 0; i < a.free_rank(); ++i)
        acc = direct_sum(acc, FgAbelianGroup::cyclic(r.modulus));
    for (auto n : a.torsion_orders()) {
        auto g = gcd64(n, r.modulus);
        if (g > 1) acc = direct_sum(acc, FgAbelianGroup::cyclic(g));
    }
    return acc;
}

FgAbelianGroup ext_to(const FgAbelianGroup& a, CoefficientRing r) {
    // Ext(Z, R) = 0; Ext(Z/n, Z) = Z/n; Ext(Z/n, Z/m) = Z/gcd(n,m)
    FgAbelianGroup acc;
    for (auto n : a.torsion_orders()) {
        std::uint64_t g = r.is_integers() ? n : gcd64(n, r.modulus);
        if (g > 1) acc = direct_sum(acc, FgAbelianGroup::cyclic(g));
    }
    return acc;
}

FgAbelianGroup cohomology_via_uct(const FgAbelianGroup& h_n,
                                  const FgAbelianGroup& h_n_minus_1,
                                  CoefficientRing r) {
    return direct_sum(ext_to(h_n_minus_1, r), hom_to(h_n, r));
}

FgAbelianGroup product_homology(std::span<const FgAbelianGroup> factor1,
                                std::span<const FgAbelianGroup> factor2, int n) {
    if (n < 0) throw MisuseError("product_homology: negative degree");
    if (static_cast<std::size_t>(n) >= factor1.size() ||
        static_cast<std::size_t>(n) >= factor2.size())
        throw UnsupportedDegreeError(
            "product_homology: degree " + std::to_string(n) +
            " exceeds supplied homology data (factor data reach degrees " +
            std::to_string(factor1.size() ? factor1.size() - 1 : 0) + " and " +
            std::to_string(factor2.size() ? factor2.size() - 1 : 0) + ")");
    FgAbelianGroup acc;
    for (int i = 0; i <= n; ++i)
        acc = direct_sum(acc, tensor(factor1[i], factor2[n - i]));
    for (int i = 0; i <= n - 1; ++i)
        acc = direct_sum(acc, tor(factor1[i], factor2[n - 1 - i]));
    return acc;
}

FgAbelianGroup snf_cokernel(const IntMatrix& m) {
    // Z^cols modulo the row span: invariant factors come off the diagonal.
    SmithForm s = smith_form(m);
    int free_rank = m.cols - s.rank;
    FgAbelianGroup acc = FgAbelianGroup::free_group(free_rank);
    for (int i = 0; i < s.rank; ++i) {
        std::int64_t d = s.d.at(i, i);
        if (d > 1) acc = direct_sum(acc, FgAbelianGroup::cyclic(static_cast<std::uint64_t>(d)));
    }
    return acc;
}

}  // namespace pincalc
