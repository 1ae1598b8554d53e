#include <doctest.h>

#include <json.hpp>

#include "pincalc/expr.hpp"
#include "pincalc/report.hpp"

using namespace pincalc;

namespace {

DecisionReport report_for(const char* expr) {
    ExprPtr e = parse_expression(expr);
    if (e->kind == ManifoldExpr::Kind::product) {
        DecisionReport r = full_report_product(build_descriptor(*e->left, 2),
                                               build_descriptor(*e->right, 2), 2);
        r.expression = to_string(*e);
        return r;
    }
    DecisionReport r = full_report(build_descriptor(*e, 2));
    r.expression = to_string(*e);
    return r;
}

}  // namespace

TEST_CASE("json schema fields") {
    ReportJson j = to_report_json(report_for("RP(2)*RP(2)*S(1)"));
    CHECK(j.schema_version == 1);
    CHECK(j.expression == "RP(2)*RP(2)*S(1)");
    CHECK(j.dimension == 5);
    CHECK_FALSE(j.pin_c);
    CHECK(j.lipschitz_status == "yes_with_witness");
    REQUIRE(j.lipschitz_witness.has_value());
    CHECK(*j.lipschitz_witness == "l(a1) ⊕ l(a2)");
    CHECK_FALSE(j.lipschitz_search_scope.has_value());

    auto parsed = nlohmann::json::parse(render_json(j));
    for (const char* key : {"schema_version", "expression", "dimension", "orientable",
                            "spin", "pin_plus", "pin_minus", "pin_c", "lipschitz",
                            "trace"})
        CHECK(parsed.contains(key));
    CHECK(parsed["lipschitz"].contains("status"));
    CHECK(parsed["lipschitz"].contains("witness"));
}

TEST_CASE("json reports round-trip") {
    for (const char* expr : {"RP(2)*RP(2)", "M(5)*M(5)", "RP(2)*RP(2)*S(1)", "S(5)",
                             "K*K", "T(3)"}) {
        ReportJson original = to_report_json(report_for(expr));
        std::string text = render_json(original);
        ReportJson reparsed = parse_report_json(text);
        CHECK(reparsed == original);
        CHECK(render_json(reparsed) == text);
    }
    CHECK_THROWS_AS(parse_report_json("{"), Error);
    CHECK_THROWS_AS(parse_report_json("{\"schema_version\": 1}"), Error);
}

TEST_CASE("text rendering") {
    std::string text = render_text(report_for("M(5)*M(5)"), false);
    CHECK(text.find("pin^c        yes") != std::string::npos);
    CHECK(text.find("pin+         no") != std::string::npos);
    CHECK(text.find("trace:") != std::string::npos);
    // NO_COLOR path has no escapes
    CHECK(text.find("\033[") == std::string::npos);
}

TEST_CASE("classes and wu documents") {
    ManifoldDescriptor m = rp(2);
    std::string cls = classes_text(m, 2);
    CHECK(cls.find("w2           a^2") != std::string::npos);
    auto cjson = nlohmann::json::parse(classes_json(m, 2));
    CHECK(cjson["stiefel_whitney"]["1"] == "a");
    CHECK(cjson["lift_l1"].empty());
    CHECK(cjson["lift_l2"][0] == "a^2");

    auto wjson = nlohmann::json::parse(wu_json(rp(4)));
    CHECK(wjson["agree"] == true);
    CHECK(wjson["wu"][1] == "a");
    CHECK(wjson["wu"][2] == "a^2");
}

TEST_CASE("catalog document is versioned and self-describing") {
    auto doc = nlohmann::json::parse(catalog_document(klein()));
    CHECK(doc["catalog_format_version"] == 1);
    CHECK(doc["name"] == "K");
    CHECK(doc["dim"] == 2);
    CHECK(doc["orientable"] == false);
    CHECK(doc["basis"]["1"] == nlohmann::json::array({"x", "y"}));
    // the Klein relations are spelled out
    bool has_relation = false;
    for (const auto& line : doc["multiplication"])
        if (line == "x * x = x*y") has_relation = true;
    CHECK(has_relation);
    CHECK(doc["top_class"] == "x*y");
    CHECK(doc["sq"].contains("x"));
    CHECK_FALSE(doc["provenance"].empty());

    // products document their assembled data too
    auto pdoc = nlohmann::json::parse(catalog_document(product(rp(2), rp(2))));
    CHECK(pdoc["higher_degrees_vanish"] == true);
    CHECK(pdoc["homology_z"][1] == "Z/2 + Z/2");
    CHECK(pdoc["homology_z"][2] == "Z/2");
}
