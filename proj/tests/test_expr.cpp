#include <doctest.h>

#include "pincalc/expr.hpp"

using namespace pincalc;

TEST_CASE("grammar examples") {
    ExprPtr e = parse_expression("RP(2) * RP(2) * S(1)");
    REQUIRE(e->kind == ManifoldExpr::Kind::product);
    CHECK(e->right->kind == ManifoldExpr::Kind::sphere);  // left associated
    CHECK(e->left->kind == ManifoldExpr::Kind::product);
    CHECK(e->left->left->kind == ManifoldExpr::Kind::real_projective);
    CHECK(to_string(*e) == "RP(2)*RP(2)*S(1)");

    ExprPtr f = parse_expression("M(5) x M(5)");
    CHECK(f->kind == ManifoldExpr::Kind::product);
    CHECK(f->left->param == 5);

    // case insensitive, whitespace insensitive, parentheses record grouping
    ExprPtr g = parse_expression("rp(2)*(t(2)xk)");
    CHECK(g->right->kind == ManifoldExpr::Kind::product);
    CHECK(g->right->right->kind == ManifoldExpr::Kind::klein);
    CHECK(to_string(*g) == "RP(2)*(T(2)*K)");
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_expression("RP(2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("RP(2))"), ParseError);
    CHECK_THROWS_AS(parse_expression("Q(2)"), ParseError);
    CHECK_THROWS_AS(parse_expression("S(1) *"), ParseError);
    CHECK_THROWS_AS(parse_expression("S(a)"), ParseError);
}

TEST_CASE("parameter violations cite the catalog rule") {
    try {
        parse_expression("M(3)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("k >= 5") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expression("S(0)"), ParseError);
    CHECK_THROWS_AS(parse_expression("RP(0)*S(1)"), ParseError);
}

TEST_CASE("parse of print is the identity") {
    const char* samples[] = {
        "S(3)", "K", "RP(2)*RP(2)", "RP(2)*(T(2)*K)", "M(5)*M(6)*S(1)",
        "T(2)*T(3)*RP(4)", "(S(1)*S(1))*(S(1)*S(1))",
    };
    for (const char* s : samples) {
        ExprPtr e = parse_expression(s);
        ExprPtr round = parse_expression(to_string(*e));
        CHECK(expr_equal(*e, *round));
    }
}

TEST_CASE("build assembles per the recorded grouping") {
    ExprPtr e = parse_expression("RP(2)*RP(2)*S(1)");
    ManifoldDescriptor m = build_descriptor(*e);
    CHECK(m.dim == 5);
    CHECK(m.name == "(RP(2)*RP(2))*S(1)");
    ManifoldDescriptor capped = build_descriptor(*e, 2);
    CHECK(capped.ring->stored_max() == 2);
}
