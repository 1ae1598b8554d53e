#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "pincalc/catalog.hpp"

namespace pincalc {

// Manifold expression AST. Products associate left in the grammar but the
// tree records the user's grouping for trace readability.
struct ManifoldExpr {
    enum class Kind { sphere, real_projective, torus, mk_family, klein, product };
    Kind kind;
    int param = 0;
    std::shared_ptr<const ManifoldExpr> left, right;
};
using ExprPtr = std::shared_ptr<const ManifoldExpr>;

// Grammar:
//   expr := term (('*' | 'x') term)*
//   term := 'S' '(' uint ')' | 'RP' '(' uint ')' | 'T' '(' uint ')'
//         | 'K' | 'M' '(' uint ')' | '(' expr ')'
// Whitespace insensitive, primitive names case insensitive. Syntax and
// parameter violations raise ParseError with the byte offset.
ExprPtr parse_expression(std::string_view input);

// Canonical form; parse_expression(to_string(e)) rebuilds the same tree.
std::string to_string(const ManifoldExpr& e);

bool expr_equal(const ManifoldExpr& a, const ManifoldExpr& b);

// Assemble the descriptor, products grouped exactly as the tree says.
ManifoldDescriptor build_descriptor(const ManifoldExpr& e,
                                    std::optional<int> max_ring_degree = std::nullopt);

}  // namespace pincalc
