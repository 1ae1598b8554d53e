#include "pincalc/expr.hpp"

#include <cctype>

namespace pincalc {

namespace {

struct Parser {
    std::string_view in;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= in.size();
    }
    char peek() {
        skip_ws();
        return pos < in.size() ? in[pos] : '\0';
    }
    bool match_ci(char c) {
        skip_ws();
        if (pos < in.size() &&
            std::tolower(static_cast<unsigned char>(in[pos])) ==
                std::tolower(static_cast<unsigned char>(c))) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        skip_ws();
        if (pos >= in.size() || in[pos] != c)
            throw ParseError(pos, "syntax error at offset " + std::to_string(pos) +
                                      ": expected " + what);
        ++pos;
    }

    int parse_uint() {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= in.size() || !std::isdigit(static_cast<unsigned char>(in[pos])))
            throw ParseError(pos, "syntax error at offset " + std::to_string(pos) +
                                      ": expected an unsigned integer");
        long v = 0;
        while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) {
            v = v * 10 + (in[pos] - '0');
            if (v > 1000000)
                throw ParseError(start, "parameter at offset " + std::to_string(start) +
                                            " is out of the supported range");
            ++pos;
        }
        return static_cast<int>(v);
    }

    ExprPtr primitive(ManifoldExpr::Kind kind, bool takes_param) {
        auto e = std::make_shared<ManifoldExpr>();
        e->kind = kind;
        if (takes_param) {
            expect('(', "'('");
            const std::size_t param_at = pos;
            e->param = parse_uint();
            expect(')', "')'");
            check_param(*e, param_at);
        }
        return e;
    }

    void check_param(const ManifoldExpr& e, std::size_t at) {
        auto bad = [&](const std::string& rule) {
            throw ParseError(at, "parameter violation at offset " + std::to_string(at) +
                                     ": " + rule);
        };
        switch (e.kind) {
            case ManifoldExpr::Kind::sphere:
                if (e.param < 1) bad("S(n): the catalog requires n >= 1");
                break;
            case ManifoldExpr::Kind::real_projective:
                if (e.param < 1) bad("RP(n): the catalog requires n >= 1");
                break;
            case ManifoldExpr::Kind::torus:
                if (e.param < 1) bad("T(n): the catalog requires n >= 1");
                break;
            case ManifoldExpr::Kind::mk_family:
                if (e.param < 5)
                    bad("M(k): the catalog defines M(k) for k >= 5 only (its low-degree "
                        "homology is established in that range)");
                break;
            default: break;
        }
    }

    ExprPtr term() {
        skip_ws();
        if (pos >= in.size())
            throw ParseError(pos, "syntax error at offset " + std::to_string(pos) +
                                      ": expected a manifold term");
        if (in[pos] == '(') {
            ++pos;
            ExprPtr e = expr();
            expect(')', "')'");
            return e;
        }
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(in[pos])));
        if (c == 'r') {
            const std::size_t at = pos;
            ++pos;
            if (!match_ci('p'))
                throw ParseError(at, "syntax error at offset " + std::to_string(at) +
                                         ": unknown primitive (did you mean RP?)");
            return primitive(ManifoldExpr::Kind::real_projective, true);
        }
        if (c == 's') {
            ++pos;
            return primitive(ManifoldExpr::Kind::sphere, true);
        }
        if (c == 't') {
            ++pos;
            return primitive(ManifoldExpr::Kind::torus, true);
        }
        if (c == 'm') {
            ++pos;
            return primitive(ManifoldExpr::Kind::mk_family, true);
        }
        if (c == 'k') {
            ++pos;
            return primitive(ManifoldExpr::Kind::klein, false);
        }
        throw ParseError(pos, "syntax error at offset " + std::to_string(pos) +
                                  ": expected S, RP, T, M, K or '('");
    }

    ExprPtr expr() {
        ExprPtr acc = term();
        for (;;) {
            skip_ws();
            if (pos < in.size() && (in[pos] == '*' || in[pos] == 'x' || in[pos] == 'X')) {
                ++pos;
                ExprPtr rhs = term();
                auto prod = std::make_shared<ManifoldExpr>();
                prod->kind = ManifoldExpr::Kind::product;
                prod->left = acc;
                prod->right = rhs;
                acc = prod;
            } else {
                return acc;
            }
        }
    }
};

}  // namespace

ExprPtr parse_expression(std::string_view input) {
    Parser p{input};
    ExprPtr e = p.expr();
    if (!p.eof())
        throw ParseError(p.pos, "syntax error at offset " + std::to_string(p.pos) +
                                    ": unexpected trailing input");
    return e;
}

std::string to_string(const ManifoldExpr& e) {
    switch (e.kind) {
        case ManifoldExpr::Kind::sphere: return "S(" + std::to_string(e.param) + ")";
        case ManifoldExpr::Kind::real_projective:
            return "RP(" + std::to_string(e.param) + ")";
        case ManifoldExpr::Kind::torus: return "T(" + std::to_string(e.param) + ")";
        case ManifoldExpr::Kind::mk_family: return "M(" + std::to_string(e.param) + ")";
        case ManifoldExpr::Kind::klein: return "K";
        case ManifoldExpr::Kind::product: {
            std::string l = to_string(*e.left);
            std::string r = to_string(*e.right);
            if (e.right->kind == ManifoldExpr::Kind::product) r = "(" + r + ")";
            return l + "*" + r;
        }
    }
    return "?";
}

bool expr_equal(const ManifoldExpr& a, const ManifoldExpr& b) {
    if (a.kind != b.kind || a.param != b.param) return false;
    if (a.kind != ManifoldExpr::Kind::product) return true;
    return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
}

ManifoldDescriptor build_descriptor(const ManifoldExpr& e,
                                    std::optional<int> max_ring_degree) {
    switch (e.kind) {
        case ManifoldExpr::Kind::sphere: return sphere(e.param);
        case ManifoldExpr::Kind::real_projective: return rp(e.param);
        case ManifoldExpr::Kind::torus: return torus(e.param);
        case ManifoldExpr::Kind::mk_family: return mk(e.param);
        case ManifoldExpr::Kind::klein: return klein();
        case ManifoldExpr::Kind::product:
            return product(build_descriptor(*e.left, max_ring_degree),
                           build_descriptor(*e.right, max_ring_degree), max_ring_degree);
    }
    throw InternalCheckError("build_descriptor: unhandled expression node");
}

}  // namespace pincalc
