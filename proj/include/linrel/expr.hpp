/*
   Copyright 2026 the linrel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINREL_EXPR_HPP
#define LINREL_EXPR_HPP

#include <string>

#include "linrel/ast.hpp"
#include "linrel/printing.hpp"
#include "linrel/ratfun.hpp"

namespace linrel {

namespace detail {

inline FieldElement integer_literal(const Field& field, const std::string& digits) {
    if (field->is_rational()) return FieldElement::from_rational(field, mpq_class(mpz_class(digits)));
    std::uint64_t r = 0;
    for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % field->characteristic;
    return FieldElement::from_residues(field, {r});
}

inline RationalFunction eval_expr(const ExprNode& node, const Field& field) {
    switch (node.kind) {
        case ExprNode::Kind::integer:
            return RationalFunction::constant(integer_literal(field, node.literal));
        case ExprNode::Kind::variable:
            return RationalFunction::variable(field);
        case ExprNode::Kind::generator: {
            if (field->extension_degree < 2)
                fail(errc::syntax_error,
                     "'t' is only defined in extension fields (position " + std::to_string(node.pos) + ")");
            return RationalFunction::constant(FieldElement::from_residues(field, {0, 1}));
        }
        case ExprNode::Kind::negate:
            return -eval_expr(*node.lhs, field);
        case ExprNode::Kind::add:
            return eval_expr(*node.lhs, field) + eval_expr(*node.rhs, field);
        case ExprNode::Kind::sub:
            return eval_expr(*node.lhs, field) - eval_expr(*node.rhs, field);
        case ExprNode::Kind::mul:
            return eval_expr(*node.lhs, field) * eval_expr(*node.rhs, field);
        case ExprNode::Kind::div: {
            const RationalFunction den = eval_expr(*node.rhs, field);
            if (den.is_zero())
                fail(errc::division_by_zero_function,
                     "division by the zero function (position " + std::to_string(node.pos) + ")");
            return eval_expr(*node.lhs, field) / den;
        }
        case ExprNode::Kind::pow: {
            const RationalFunction base = eval_expr(*node.lhs, field);
            if (node.exponent < 0 && base.is_zero())
                fail(errc::division_by_zero_function,
                     "negative power of the zero function (position " + std::to_string(node.pos) + ")");
            return base.pow(node.exponent);
        }
        case ExprNode::Kind::group:
            return eval_expr(*node.lhs, field);
    }
    fail(errc::internal_error, "unhandled AST node");
}

}  // namespace detail

/// Parse an expression over the given field into a canonical reduced rational
/// function.
inline RationalFunction parse_expression(const std::string& text, const Field& field) {
    const ExprPtr ast = parse_expression_ast(text);
    return detail::eval_expr(*ast, field);
}

/// As parse_expression, but the result must be a polynomial.
inline Polynomial parse_polynomial(const std::string& text, const Field& field) {
    const RationalFunction f = parse_expression(text, field);
    if (!f.is_polynomial()) fail(errc::invalid_argument, "expected a polynomial, got '" + to_string(f) + "'");
    return f.num();
}

/// As parse_expression, but the result must be a constant.
inline FieldElement parse_scalar(const std::string& text, const Field& field) {
    const RationalFunction f = parse_expression(text, field);
    if (!f.is_constant()) fail(errc::invalid_argument, "expected a constant, got '" + to_string(f) + "'");
    return f.constant_value();
}

}  // namespace linrel

#endif  // LINREL_EXPR_HPP
