#include "pincalc/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace pincalc {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

int vector_degree(const std::vector<std::uint16_t>& exps, const std::vector<Generator>& gens) {
    int d = 0;
    for (std::size_t g = 0; g < exps.size(); ++g) d += exps[g] * gens[g].degree;
    return d;
}

std::string stem_of(const std::string& name) {
    std::size_t end = name.size();
    while (end > 0 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) --end;
    return end == 0 ? name : name.substr(0, end);
}

using ExpMap = std::map<std::vector<std::uint16_t>, std::pair<int, std::size_t>>;

}  // namespace

std::size_t RingPresentation::dim(int d) const {
    if (d < 0) throw MisuseError("ring: negative degree");
    if (d <= stored_max_) return basis_[static_cast<std::size_t>(d)].size();
    if (exact_above_) return 0;
    throw UnsupportedDegreeError("ring: degree " + std::to_string(d) +
                                 " exceeds ring data (complete through degree " +
                                 std::to_string(stored_max_) + ")");
}

const RingPresentation::Monomial& RingPresentation::monomial(int degree, std::size_t index) const {
    if (degree < 0 || degree > stored_max_ || index >= basis_[degree].size())
        throw MisuseError("ring: monomial index out of range");
    return basis_[degree][index];
}

std::optional<std::size_t> RingPresentation::find_monomial(int degree,
                                                           std::string_view name) const {
    if (!degree_known(degree) || degree > stored_max_) return std::nullopt;
    const auto& b = basis_[static_cast<std::size_t>(degree)];
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].name == name) return i;
    return std::nullopt;
}

Z2Class RingPresentation::zero(int degree) const {
    return Z2Class(degree, dim(degree));
}

Z2Class RingPresentation::monomial_class(int degree, std::size_t index) const {
    Z2Class c = zero(degree);
    if (index >= c.dim()) throw MisuseError("ring: monomial index out of range");
    c.coords.set(index);
    return c;
}

Z2Class RingPresentation::generator_class(std::size_t gen_index) const {
    if (gen_index >= gens_.size()) throw MisuseError("ring: generator index out of range");
    const int d = gens_[gen_index].degree;
    if (d > stored_max_ && !exact_above_)
        throw UnsupportedDegreeError("ring: generator " + gens_[gen_index].name +
                                     " lives beyond the stored degree range");
    std::vector<std::uint16_t> e(gens_.size(), 0);
    e[gen_index] = 1;
    if (d <= stored_max_) {
        for (std::size_t i = 0; i < basis_[d].size(); ++i)
            if (basis_[d][i].exponents == e) return monomial_class(d, i);
        throw CorruptDataError("ring: generator " + gens_[gen_index].name +
                               " is missing from its degree basis");
    }
    return zero(d);  // exact ring, degree beyond stored range is zero
}

Z2Class RingPresentation::make_class(int degree,
                                     std::initializer_list<std::string_view> names) const {
    Z2Class c = zero(degree);
    for (auto n : names) {
        auto idx = find_monomial(degree, n);
        if (!idx)
            throw MisuseError("ring: no monomial named '" + std::string(n) + "' in degree " +
                              std::to_string(degree));
        c.coords.flip(*idx);
    }
    return c;
}

std::string RingPresentation::class_to_string(const Z2Class& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (!x.coords.test(i)) continue;
        if (!first) os << " + ";
        first = false;
        os << monomial(x.degree, i).name;
    }
    return os.str();
}

std::int32_t RingPresentation::mul_monomial(int d1, std::size_t i1, int d2,
                                            std::size_t i2) const {
    const int dd = d1 + d2;
    if (!degree_known(dd))
        throw UnsupportedDegreeError("ring: product lands in degree " + std::to_string(dd) +
                                     ", beyond ring data (complete through degree " +
                                     std::to_string(stored_max_) + ")");
    if (dd > stored_max_) return -1;  // exact ring: zero above the stored range
    return mult_[d1][d2][i1 * basis_[d2].size() + i2];
}

Z2Class RingPresentation::cup(const Z2Class& x, const Z2Class& y) const {
    if (x.dim() != dim(x.degree) || y.dim() != dim(y.degree))
        throw MisuseError("cup: class coordinates do not match this ring's bases");
    const int dd = x.degree + y.degree;
    Z2Class out = zero(dd);
    if (dd > stored_max_) return out;
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (x.coords.test(i)) xs.push_back(i);
    for (std::size_t j = 0; j < y.dim(); ++j)
        if (y.coords.test(j)) ys.push_back(j);
    for (auto i : xs)
        for (auto j : ys) {
            std::int32_t t = mult_[x.degree][y.degree][i * basis_[y.degree].size() + j];
            if (t >= 0) out.coords.flip(static_cast<std::size_t>(t));
        }
    return out;
}

Z2Class RingPresentation::sq_generator(std::size_t gen_index, int j) const {
    if (gen_index >= gens_.size()) throw MisuseError("sq_generator: index out of range");
    const int dg = gens_[gen_index].degree;
    if (j < 0 || j > dg)
        throw MisuseError("sq_generator: Sq^j on a generator needs 0 <= j <= deg");
    if (j == 0) return generator_class(gen_index);
    if (!degree_known(dg + j))
        throw UnsupportedDegreeError("sq_generator: Sq^" + std::to_string(j) + "(" +
                                     gens_[gen_index].name + ") lands beyond ring data");
    if (j == dg) {
        Z2Class g = generator_class(gen_index);
        return cup(g, g);
    }
    return zero(dg + j);
}

const RingPtr& RingPresentation::left_factor() const {
    if (!is_product()) throw MisuseError("ring is not a recorded Kunneth product");
    return left_;
}

const RingPtr& RingPresentation::right_factor() const {
    if (!is_product()) throw MisuseError("ring is not a recorded Kunneth product");
    return right_;
}

std::size_t RingPresentation::left_gen_count() const {
    return left_factor()->generators().size();
}

std::size_t RingPresentation::pair_index(int left_degree, std::size_t left_index,
                                         int right_degree, std::size_t right_index) const {
    if (!is_product()) throw MisuseError("pair_index: ring is not a recorded product");
    const int n = left_degree + right_degree;
    if (n < 0 || n > stored_max_) throw MisuseError("pair_index: degree out of stored range");
    const std::size_t start = block_start_[n][left_degree];
    if (start == npos) throw MisuseError("pair_index: bigrade block absent");
    return start + left_index * right_->dim(right_degree) + right_index;
}

Z2Class RingPresentation::tensor_classes(const Z2Class& x, const Z2Class& y) const {
    if (!is_product()) throw MisuseError("tensor_classes: ring is not a recorded product");
    if (x.dim() != left_->dim(x.degree) || y.dim() != right_->dim(y.degree))
        throw MisuseError("tensor_classes: class coordinates do not match the factor bases");
    const int dd = x.degree + y.degree;
    Z2Class out = zero(dd);
    if (dd > stored_max_) return out;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (!x.coords.test(i)) continue;
        for (std::size_t j = 0; j < y.dim(); ++j) {
            if (!y.coords.test(j)) continue;
            out.coords.flip(pair_index(x.degree, i, y.degree, j));
        }
    }
    return out;
}

Z2Class RingPresentation::embed_left(const Z2Class& x) const {
    return tensor_classes(x, right_factor()->one());
}

Z2Class RingPresentation::embed_right(const Z2Class& y) const {
    return tensor_classes(left_factor()->one(), y);
}

std::array<Z2Class, 3> RingPresentation::decompose_degree2(const Z2Class& x) const {
    if (!is_product()) throw MisuseError("decompose: ring is not a recorded product");
    if (x.degree != 2 || x.dim() != dim(2))
        throw MisuseError("decompose: expected a degree-2 class in this ring");
    std::array<Z2Class, 3> parts{zero(2), zero(2), zero(2)};
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (!x.coords.test(i)) continue;
        const int ld = basis_[2][i].left_degree;  // 2, 1 or 0
        parts[static_cast<std::size_t>(2 - ld)].coords.set(i);
    }
    return parts;
}

// ---------------------------------------------------------------- builders

void RingPresentation::derive_names() {
    for (auto& degree_basis : basis_) {
        for (auto& m : degree_basis) {
            std::ostringstream os;
            bool first = true;
            for (std::size_t g = 0; g < gens_.size(); ++g) {
                if (!m.exponents[g]) continue;
                if (!first) os << "*";
                first = false;
                os << gens_[g].name;
                if (m.exponents[g] > 1) os << "^" << m.exponents[g];
            }
            m.name = first ? "1" : os.str();
        }
    }
}

void RingPresentation::derive_factorizations() {
    ExpMap lookup;
    for (int d = 0; d <= stored_max_; ++d)
        for (std::size_t i = 0; i < basis_[d].size(); ++i)
            lookup[basis_[d][i].exponents] = {d, i};

    for (int d = 1; d <= stored_max_; ++d) {
        for (auto& m : basis_[d]) {
            std::size_t g = 0;
            while (g < gens_.size() && m.exponents[g] == 0) ++g;
            if (g == gens_.size())
                throw CorruptDataError("ring: positive-degree monomial with empty exponents");
            auto cof = m.exponents;
            --cof[g];
            auto it = lookup.find(cof);
            if (it == lookup.end())
                throw CorruptDataError("ring: monomial " + m.name + " has no factorization");
            m.gen = static_cast<std::int32_t>(g);
            m.cofactor = static_cast<std::int32_t>(it->second.second);
        }
    }
}

void RingPresentation::check_commutative() const {
    for (int d1 = 0; d1 <= stored_max_; ++d1)
        for (int d2 = 0; d2 + d1 <= stored_max_; ++d2)
            for (std::size_t i = 0; i < basis_[d1].size(); ++i)
                for (std::size_t j = 0; j < basis_[d2].size(); ++j)
                    if (mult_[d1][d2][i * basis_[d2].size() + j] !=
                        mult_[d2][d1][j * basis_[d1].size() + i])
                        throw InternalCheckError("ring: multiplication table is not commutative");
}

RingPtr RingPresentation::truncated_polynomial(std::vector<Generator> gens, int stored_max,
                                               bool exact_above) {
    if (stored_max < 0) throw MisuseError("ring: negative truncation degree");
    for (const auto& g : gens) {
        if (g.degree < 1) throw MisuseError("ring: generator degree must be >= 1");
        if (g.power_vanishes && *g.power_vanishes < 2)
            throw MisuseError("ring: vanishing exponent must be >= 2");
    }
    auto r = std::shared_ptr<RingPresentation>(new RingPresentation());
    r->gens_ = std::move(gens);
    r->stored_max_ = stored_max;
    r->exact_above_ = exact_above;
    r->basis_.resize(stored_max + 1);

    // enumerate admissible exponent vectors per degree, leading exponent high first
    std::vector<std::uint16_t> cur(r->gens_.size(), 0);
    auto enumerate = [&](auto&& self, int remaining, std::size_t g, int degree) -> void {
        if (g == r->gens_.size()) {
            if (remaining == 0) {
                Monomial m;
                m.exponents = cur;
                r->basis_[degree].push_back(std::move(m));
            }
            return;
        }
        const auto& gen = r->gens_[g];
        int emax = remaining / gen.degree;
        if (gen.power_vanishes) emax = std::min(emax, *gen.power_vanishes - 1);
        for (int e = emax; e >= 0; --e) {
            cur[g] = static_cast<std::uint16_t>(e);
            self(self, remaining - e * gen.degree, g + 1, degree);
        }
        cur[g] = 0;
    };
    for (int d = 0; d <= stored_max; ++d) enumerate(enumerate, d, 0, d);

    ExpMap lookup;
    for (int d = 0; d <= stored_max; ++d)
        for (std::size_t i = 0; i < r->basis_[d].size(); ++i)
            lookup[r->basis_[d][i].exponents] = {d, i};

    r->mult_.resize(stored_max + 1);
    for (int d1 = 0; d1 <= stored_max; ++d1) {
        r->mult_[d1].resize(stored_max - d1 + 1);
        for (int d2 = 0; d2 + d1 <= stored_max; ++d2) {
            auto& table = r->mult_[d1][d2];
            table.assign(r->basis_[d1].size() * r->basis_[d2].size(), -1);
            for (std::size_t i = 0; i < r->basis_[d1].size(); ++i)
                for (std::size_t j = 0; j < r->basis_[d2].size(); ++j) {
                    std::vector<std::uint16_t> sum = r->basis_[d1][i].exponents;
                    bool dead = false;
                    for (std::size_t g = 0; g < sum.size(); ++g) {
                        sum[g] = static_cast<std::uint16_t>(sum[g] +
                                                            r->basis_[d2][j].exponents[g]);
                        if (r->gens_[g].power_vanishes && sum[g] >= *r->gens_[g].power_vanishes)
                            dead = true;
                    }
                    if (dead) continue;
                    auto it = lookup.find(sum);
                    if (it == lookup.end())
                        throw InternalCheckError("ring: monomial enumeration is incomplete");
                    table[i * r->basis_[d2].size() + j] =
                        static_cast<std::int32_t>(it->second.second);
                }
        }
    }

    r->derive_names();
    r->derive_factorizations();
    r->check_commutative();
    return r;
}

RingPtr RingPresentation::from_tables(std::vector<Generator> gens,
                                      std::vector<std::vector<std::vector<std::uint16_t>>> bases,
                                      std::vector<GenProduct> gen_products, int stored_max,
                                      bool exact_above) {
    if (stored_max < 0 || bases.size() != static_cast<std::size_t>(stored_max) + 1)
        throw MisuseError("ring: bases must cover degrees 0..stored_max");
    auto r = std::shared_ptr<RingPresentation>(new RingPresentation());
    r->gens_ = std::move(gens);
    r->stored_max_ = stored_max;
    r->exact_above_ = exact_above;
    r->basis_.resize(stored_max + 1);
    for (int d = 0; d <= stored_max; ++d) {
        for (auto& exps : bases[d]) {
            if (exps.size() != r->gens_.size() || vector_degree(exps, r->gens_) != d)
                throw MisuseError("ring: basis exponent vector has the wrong degree");
            Monomial m;
            m.exponents = std::move(exps);
            r->basis_[d].push_back(std::move(m));
        }
    }
    if (r->basis_[0].size() != 1 || r->basis_[0][0].exponents !=
                                        std::vector<std::uint16_t>(r->gens_.size(), 0))
        throw MisuseError("ring: degree-0 basis must be exactly {1}");

    r->derive_names();
    r->derive_factorizations();

    // generator x monomial products; sentinel -2 marks "not provided"
    std::vector<std::vector<std::vector<std::int32_t>>> gp(r->gens_.size());
    for (std::size_t g = 0; g < r->gens_.size(); ++g) {
        gp[g].resize(stored_max + 1);
        for (int d = 0; d + r->gens_[g].degree <= stored_max; ++d)
            gp[g][d].assign(r->basis_[d].size(), -2);
        if (r->gens_[g].degree <= stored_max) {
            // g * 1 = g
            std::vector<std::uint16_t> e(r->gens_.size(), 0);
            e[g] = 1;
            const auto& db = r->basis_[r->gens_[g].degree];
            auto found = std::find_if(db.begin(), db.end(),
                                      [&](const Monomial& m) { return m.exponents == e; });
            if (found == db.end())
                throw MisuseError("ring: generator missing from its degree basis");
            gp[g][0][0] = static_cast<std::int32_t>(found - db.begin());
        }
    }
    for (const auto& p : gen_products) {
        if (p.gen < 0 || static_cast<std::size_t>(p.gen) >= r->gens_.size())
            throw MisuseError("ring: generator product entry out of range");
        const int dd = r->gens_[p.gen].degree + p.degree;
        if (p.degree < 0 || dd > stored_max ||
            static_cast<std::size_t>(p.index) >= r->basis_[p.degree].size())
            throw MisuseError("ring: generator product entry out of range");
        if (p.result >= 0 && static_cast<std::size_t>(p.result) >= r->basis_[dd].size())
            throw MisuseError("ring: generator product result out of range");
        gp[p.gen][p.degree][p.index] = p.result;
    }
    for (std::size_t g = 0; g < r->gens_.size(); ++g)
        for (int d = 0; d + r->gens_[g].degree <= stored_max; ++d)
            for (auto v : gp[g][d])
                if (v == -2)
                    throw MisuseError("ring: generator product table is incomplete");

    // close the pair table through factorizations: m1*m2 = g*(cof(m1)*m2)
    r->mult_.resize(stored_max + 1);
    for (int d1 = 0; d1 <= stored_max; ++d1) r->mult_[d1].resize(stored_max - d1 + 1);
    for (int d1 = 0; d1 <= stored_max; ++d1) {
        for (int d2 = 0; d2 + d1 <= stored_max; ++d2) {
            auto& table = r->mult_[d1][d2];
            table.assign(r->basis_[d1].size() * r->basis_[d2].size(), -1);
            for (std::size_t i = 0; i < r->basis_[d1].size(); ++i)
                for (std::size_t j = 0; j < r->basis_[d2].size(); ++j) {
                    if (d1 == 0) {
                        table[j] = static_cast<std::int32_t>(j);
                        continue;
                    }
                    const Monomial& m1 = r->basis_[d1][i];
                    const int dg = r->gens_[m1.gen].degree;
                    const int dc = d1 - dg;
                    std::int32_t t =
                        r->mult_[dc][d2][static_cast<std::size_t>(m1.cofactor) *
                                             r->basis_[d2].size() +
                                         j];
                    table[i * r->basis_[d2].size() + j] =
                        t < 0 ? -1 : gp[m1.gen][dc + d2][static_cast<std::size_t>(t)];
                }
        }
    }
    r->check_commutative();
    return r;
}

RingPtr RingPresentation::kunneth(RingPtr left, RingPtr right, int max_degree) {
    if (!left || !right) throw MisuseError("kunneth: null factor");
    if (max_degree < 0) throw MisuseError("kunneth: negative degree");
    auto factor_limit = [&](const RingPtr& f) {
        return f->exact_above() ? std::numeric_limits<int>::max() : f->stored_max();
    };
    const int achievable = std::min(factor_limit(left), factor_limit(right));
    if (max_degree > achievable)
        throw UnsupportedDegreeError(
            "kunneth: requested degree " + std::to_string(max_degree) +
            " but factor ring data is complete only through degree " +
            std::to_string(achievable));
    const bool both_exact = left->exact_above() && right->exact_above();
    const int joint_top = both_exact ? left->stored_max() + right->stored_max()
                                     : std::numeric_limits<int>::max();
    const int stored = std::min(max_degree, joint_top);

    // size the multiplication tables up front; refuse absurd builds honestly
    {
        std::vector<std::size_t> dims(stored + 1, 0);
        for (int n = 0; n <= stored; ++n)
            for (int i = 0; i <= n; ++i) dims[n] += left->dim(i) * right->dim(n - i);
        std::size_t entries = 0;
        for (int d1 = 0; d1 <= stored; ++d1)
            for (int d2 = 0; d1 + d2 <= stored; ++d2) entries += dims[d1] * dims[d2];
        if (entries > (std::size_t{1} << 26))
            throw ResourceLimitError(
                "kunneth: the product ring through degree " + std::to_string(stored) +
                " needs about " + std::to_string(entries) +
                " multiplication-table entries; cap the build degree instead");
    }

    auto r = std::shared_ptr<RingPresentation>(new RingPresentation());
    r->stored_max_ = stored;
    r->exact_above_ = both_exact && max_degree >= joint_top;
    r->left_ = left;
    r->right_ = right;

    // combine generators, renaming stems that collide across factors
    const std::size_t nl = left->generators().size();
    for (const auto& g : left->generators()) r->gens_.push_back(g);
    for (const auto& g : right->generators()) r->gens_.push_back(g);
    {
        std::map<std::string, int> stem_count;
        for (const auto& g : r->gens_) ++stem_count[stem_of(g.name)];
        std::map<std::string, int> next;
        for (auto& g : r->gens_) {
            std::string s = stem_of(g.name);
            if (stem_count[s] > 1) g.name = s + std::to_string(++next[s]);
        }
    }

    const std::size_t ngen = r->gens_.size();
    r->basis_.resize(r->stored_max_ + 1);
    r->block_start_.resize(r->stored_max_ + 1);
    for (int n = 0; n <= r->stored_max_; ++n) {
        r->block_start_[n].assign(static_cast<std::size_t>(n) + 1, npos);
        for (int i = n; i >= 0; --i) {
            r->block_start_[n][i] = r->basis_[n].size();
            const std::size_t ld = left->dim(i), rd = right->dim(n - i);
            for (std::size_t il = 0; il < ld; ++il)
                for (std::size_t ir = 0; ir < rd; ++ir) {
                    Monomial m;
                    m.exponents.assign(ngen, 0);
                    const auto& lm = left->monomial(i, il);
                    const auto& rm = right->monomial(n - i, ir);
                    for (std::size_t g = 0; g < nl; ++g) m.exponents[g] = lm.exponents[g];
                    for (std::size_t g = nl; g < ngen; ++g)
                        m.exponents[g] = rm.exponents[g - nl];
                    m.left_degree = i;
                    m.left_index = static_cast<std::int32_t>(il);
                    m.right_index = static_cast<std::int32_t>(ir);
                    r->basis_[n].push_back(std::move(m));
                }
        }
    }

    r->mult_.resize(r->stored_max_ + 1);
    for (int d1 = 0; d1 <= r->stored_max_; ++d1) {
        r->mult_[d1].resize(r->stored_max_ - d1 + 1);
        for (int d2 = 0; d2 + d1 <= r->stored_max_; ++d2) {
            auto& table = r->mult_[d1][d2];
            table.assign(r->basis_[d1].size() * r->basis_[d2].size(), -1);
            for (std::size_t i = 0; i < r->basis_[d1].size(); ++i) {
                const Monomial& m1 = r->basis_[d1][i];
                for (std::size_t j = 0; j < r->basis_[d2].size(); ++j) {
                    const Monomial& m2 = r->basis_[d2][j];
                    std::int32_t lt = left->mul_monomial(m1.left_degree, m1.left_index,
                                                         m2.left_degree, m2.left_index);
                    if (lt < 0) continue;
                    std::int32_t rt = right->mul_monomial(d1 - m1.left_degree, m1.right_index,
                                                          d2 - m2.left_degree, m2.right_index);
                    if (rt < 0) continue;
                    table[i * r->basis_[d2].size() + j] = static_cast<std::int32_t>(
                        r->pair_index(m1.left_degree + m2.left_degree, lt,
                                      (d1 - m1.left_degree) + (d2 - m2.left_degree), rt));
                }
            }
        }
    }

    r->derive_names();
    r->derive_factorizations();
    r->check_commutative();
    return r;
}

Z2Subspace subspace_tensor(const RingPresentation& product_ring, const Z2Subspace& left,
                           const Z2Subspace& right) {
    const auto& lf = product_ring.left_factor();
    const auto& rf = product_ring.right_factor();
    if (left.ambient_dim() != lf->dim(left.degree()) ||
        right.ambient_dim() != rf->dim(right.degree()))
        throw MisuseError("subspace_tensor: subspaces do not match the factor bases");
    const int dd = left.degree() + right.degree();
    std::vector<Bitvec> rows;
    for (const auto& lr : left.rows())
        for (const auto& rr : right.rows()) {
            Z2Class t = product_ring.tensor_classes(Z2Class(left.degree(), lr),
                                                    Z2Class(right.degree(), rr));
            rows.push_back(std::move(t.coords));
        }
    return Z2Subspace(dd, product_ring.dim(dd), std::move(rows));
}

Z2Subspace subspace_embed_left(const RingPresentation& product_ring, const Z2Subspace& s) {
    std::vector<Bitvec> rows;
    for (const auto& r : s.rows())
        rows.push_back(product_ring.embed_left(Z2Class(s.degree(), r)).coords);
    return Z2Subspace(s.degree(), product_ring.dim(s.degree()), std::move(rows));
}

Z2Subspace subspace_embed_right(const RingPresentation& product_ring, const Z2Subspace& s) {
    std::vector<Bitvec> rows;
    for (const auto& r : s.rows())
        rows.push_back(product_ring.embed_right(Z2Class(s.degree(), r)).coords);
    return Z2Subspace(s.degree(), product_ring.dim(s.degree()), std::move(rows));
}

}  // namespace pincalc
