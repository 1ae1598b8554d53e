#include "pincalc/report.hpp"

#include <json.hpp>
#include <sstream>

#include "pincalc/steenrod.hpp"

namespace pincalc {

namespace {

using nlohmann::json;

const char* status_name(LipschitzStatus s) {
    switch (s) {
        case LipschitzStatus::yes_with_witness: return "yes_with_witness";
        case LipschitzStatus::no_witness_found: return "no_witness_found";
        case LipschitzStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

std::string subspace_rows(const RingPresentation& r, const Z2Subspace& s,
                          std::vector<std::string>* out) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.rows().size(); ++i) {
        std::string cls = r.class_to_string(Z2Class(s.degree(), s.rows()[i]));
        if (out) out->push_back(cls);
        if (i) os << ", ";
        os << cls;
    }
    return os.str();
}

}  // namespace

ReportJson to_report_json(const DecisionReport& r) {
    ReportJson j;
    j.expression = r.expression;
    j.dimension = r.dimension;
    j.orientable = r.orientable;
    j.spin = r.spin;
    j.pin_plus = r.pin_plus;
    j.pin_minus = r.pin_minus;
    j.pin_c = r.pin_c.exists;
    j.lipschitz_status = status_name(r.lipschitz.status);
    if (r.lipschitz.status == LipschitzStatus::yes_with_witness)
        j.lipschitz_witness = r.lipschitz.witness->description;
    if (r.lipschitz.status == LipschitzStatus::no_witness_found)
        j.lipschitz_search_scope = r.lipschitz.note;
    j.trace = r.trace;
    return j;
}

std::string render_json(const ReportJson& r) {
    json lip;
    lip["status"] = r.lipschitz_status;
    if (r.lipschitz_witness) lip["witness"] = *r.lipschitz_witness;
    if (r.lipschitz_search_scope) lip["search_scope"] = *r.lipschitz_search_scope;
    json j;
    j["schema_version"] = r.schema_version;
    j["expression"] = r.expression;
    j["dimension"] = r.dimension;
    j["orientable"] = r.orientable;
    j["spin"] = r.spin;
    j["pin_plus"] = r.pin_plus;
    j["pin_minus"] = r.pin_minus;
    j["pin_c"] = r.pin_c;
    j["lipschitz"] = lip;
    j["trace"] = r.trace;
    return j.dump(2);
}

ReportJson parse_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("report JSON is malformed: ") + e.what());
    }
    try {
        ReportJson r;
        r.schema_version = j.at("schema_version").get<int>();
        r.expression = j.at("expression").get<std::string>();
        r.dimension = j.at("dimension").get<int>();
        r.orientable = j.at("orientable").get<bool>();
        r.spin = j.at("spin").get<bool>();
        r.pin_plus = j.at("pin_plus").get<bool>();
        r.pin_minus = j.at("pin_minus").get<bool>();
        r.pin_c = j.at("pin_c").get<bool>();
        const json& lip = j.at("lipschitz");
        r.lipschitz_status = lip.at("status").get<std::string>();
        if (lip.contains("witness")) r.lipschitz_witness = lip["witness"].get<std::string>();
        if (lip.contains("search_scope"))
            r.lipschitz_search_scope = lip["search_scope"].get<std::string>();
        r.trace = j.at("trace").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw Error(std::string("report JSON misses required fields: ") + e.what());
    }
}

std::string render_text(const DecisionReport& r, bool color) {
    auto mark = [&](bool b) -> std::string {
        if (!color) return b ? "yes" : "no";
        return b ? "\033[32myes\033[0m" : "\033[31mno\033[0m";
    };
    std::ostringstream os;
    os << "expression   " << r.expression << "\n";
    os << "dimension    " << r.dimension << "\n";
    os << "orientable   " << mark(r.orientable) << "\n";
    os << "spin         " << mark(r.spin) << "\n";
    os << "pin+         " << mark(r.pin_plus) << "\n";
    os << "pin-         " << mark(r.pin_minus) << "\n";
    os << "pin^c        " << mark(r.pin_c.exists) << "\n";
    os << "lipschitz    ";
    switch (r.lipschitz.status) {
        case LipschitzStatus::yes_with_witness:
            os << mark(true) << ", witness E = " << r.lipschitz.witness->description;
            break;
        case LipschitzStatus::no_witness_found: os << "no witness found"; break;
        case LipschitzStatus::not_applicable: os << "not applicable"; break;
    }
    os << "\n";
    os << "trace:\n";
    for (const auto& line : r.trace) os << "  " << line << "\n";
    return os.str();
}

std::string classes_text(const ManifoldDescriptor& m, int max_degree) {
    const RingPresentation& r = *m.ring;
    std::ostringstream os;
    os << "manifold     " << m.name << "\n";
    os << "dimension    " << m.dim << "\n";
    for (int i = 0; i <= max_degree; ++i)
        os << "w" << i << "           " << r.class_to_string(m.w(i)) << "\n";
    os << "L1 basis     {" << subspace_rows(r, m.lift_l1, nullptr) << "}\n";
    os << "L2 basis     {" << subspace_rows(r, m.lift_l2, nullptr) << "}\n";
    return os.str();
}

std::string classes_json(const ManifoldDescriptor& m, int max_degree) {
    const RingPresentation& r = *m.ring;
    json j;
    j["schema_version"] = 1;
    j["expression"] = m.name;
    j["dimension"] = m.dim;
    json sw = json::object();
    for (int i = 0; i <= max_degree; ++i)
        sw[std::to_string(i)] = r.class_to_string(m.w(i));
    j["stiefel_whitney"] = sw;
    std::vector<std::string> l1, l2;
    subspace_rows(r, m.lift_l1, &l1);
    subspace_rows(r, m.lift_l2, &l2);
    j["lift_l1"] = l1;
    j["lift_l2"] = l2;
    return j.dump(2);
}

std::string wu_text(const ManifoldDescriptor& m) {
    const RingPresentation& r = *m.ring;
    WuData wu = wu_classes(m);
    std::ostringstream os;
    os << "manifold     " << m.name << "\n";
    os << "dimension    " << m.dim << "\n";
    bool agree = true;
    for (int i = 0; i <= m.dim; ++i)
        os << "v" << i << "           " << r.class_to_string(wu.wu[i]) << "\n";
    for (int i = 0; i <= m.dim; ++i) {
        bool same = wu.reconstructed_sw[i] == m.w(i);
        agree = agree && same;
        os << "Sq(v)[" << i << "]     " << r.class_to_string(wu.reconstructed_sw[i])
           << (same ? "  (= w" : "  (!= w") << i << " from Whitney)\n";
    }
    os << "cross-check  " << (agree ? "Wu reconstruction matches the Whitney classes"
                                    : "MISMATCH between Wu and Whitney classes")
       << "\n";
    if (!agree)
        throw InternalCheckError("wu: reconstructed SW classes disagree with stored ones for " +
                                 m.name);
    return os.str();
}

std::string wu_json(const ManifoldDescriptor& m) {
    const RingPresentation& r = *m.ring;
    WuData wu = wu_classes(m);
    json j;
    j["schema_version"] = 1;
    j["expression"] = m.name;
    j["dimension"] = m.dim;
    std::vector<std::string> v, sq_v, w;
    bool agree = true;
    for (int i = 0; i <= m.dim; ++i) {
        v.push_back(r.class_to_string(wu.wu[i]));
        sq_v.push_back(r.class_to_string(wu.reconstructed_sw[i]));
        w.push_back(r.class_to_string(m.w(i)));
        agree = agree && wu.reconstructed_sw[i] == m.w(i);
    }
    j["wu"] = v;
    j["sw_from_wu"] = sq_v;
    j["sw_whitney"] = w;
    j["agree"] = agree;
    if (!agree)
        throw InternalCheckError("wu: reconstructed SW classes disagree with stored ones for " +
                                 m.name);
    return j.dump(2);
}

std::string catalog_document(const ManifoldDescriptor& m) {
    const RingPresentation& r = *m.ring;
    json j;
    j["catalog_format_version"] = 1;
    j["name"] = m.name;
    j["dim"] = m.dim;
    j["complete_through_degree"] = r.stored_max();
    j["higher_degrees_vanish"] = r.exact_above();
    j["orientable"] = m.orientable;

    json gens = json::array();
    for (const auto& g : r.generators()) {
        json jg;
        jg["name"] = g.name;
        jg["degree"] = g.degree;
        if (g.power_vanishes) jg["power_vanishes"] = *g.power_vanishes;
        gens.push_back(jg);
    }
    j["generators"] = gens;

    json basis = json::object();
    for (int d = 0; d <= r.stored_max(); ++d) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < r.dim(d); ++i) names.push_back(r.monomial(d, i).name);
        basis[std::to_string(d)] = names;
    }
    j["basis"] = basis;

    std::vector<std::string> mult;
    for (int d1 = 1; d1 <= r.stored_max(); ++d1)
        for (int d2 = d1; d1 + d2 <= r.stored_max(); ++d2)
            for (std::size_t i = 0; i < r.dim(d1); ++i)
                for (std::size_t jdx = (d1 == d2 ? i : 0); jdx < r.dim(d2); ++jdx) {
                    std::int32_t t = r.mul_monomial(d1, i, d2, jdx);
                    mult.push_back(r.monomial(d1, i).name + " * " +
                                   r.monomial(d2, jdx).name + " = " +
                                   (t < 0 ? std::string("0")
                                          : r.monomial(d1 + d2, t).name));
                }
    j["multiplication"] = mult;

    json sq_tbl = json::object();
    for (std::size_t g = 0; g < r.generators().size(); ++g) {
        const auto& gen = r.generators()[g];
        if (!r.degree_known(gen.degree) ||
            (gen.degree > r.stored_max() && !r.exact_above()))
            continue;
        std::vector<std::string> row;
        for (int jj = 0; jj <= gen.degree; ++jj) {
            if (!r.degree_known(gen.degree + jj)) break;
            row.push_back(r.class_to_string(r.sq_generator(g, jj)));
        }
        sq_tbl[gen.name] = row;
    }
    j["sq"] = sq_tbl;

    std::vector<std::string> sw;
    for (const auto& c : m.sw) sw.push_back(r.class_to_string(c));
    j["stiefel_whitney"] = sw;

    std::vector<std::string> hz;
    for (const auto& g : m.homology_z) hz.push_back(g.to_string());
    j["homology_z"] = hz;

    std::vector<std::string> l1, l2;
    subspace_rows(r, m.lift_l1, &l1);
    subspace_rows(r, m.lift_l2, &l2);
    j["lift_l1"] = l1;
    j["lift_l2"] = l2;

    if (m.top_index)
        j["top_class"] = r.monomial(m.dim, *m.top_index).name;
    else
        j["top_class"] = nullptr;

    j["provenance"] = m.provenance;
    return j.dump(2);
}

}  // namespace pincalc
