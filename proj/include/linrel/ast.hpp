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

#ifndef LINREL_AST_HPP
#define LINREL_AST_HPP

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "linrel/errors.hpp"

namespace linrel {

// Expression syntax shared by the CLI, the field-spec modulus and all scalar
// flags:
//
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary | <adjacent power>)*
//   unary := '-'? power
//   power := atom ('^' '-'? digits)?
//   atom  := digits | 'x' | 't' | '(' expr ')'
//
// Adjacency (an atom directly following a power) multiplies, so canonical
// output like "4x^2+4x+1" or "3/2x" parses back to the value it was printed
// from.

struct ExprNode {
    enum class Kind {
        integer,    // literal holds the digits
        variable,   // 'x'
        generator,  // 't'
        negate,     // lhs
        add,        // lhs, rhs
        sub,        // lhs, rhs
        mul,        // lhs, rhs
        div,        // lhs, rhs
        pow,        // lhs, exponent
        group,      // lhs (parenthesized)
    };

    Kind kind;
    std::size_t pos = 0;  // byte offset in the source text, for diagnostics
    std::string literal;
    long long exponent = 0;
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

namespace detail {

struct Token {
    enum class Kind { integer, variable, generator, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> lex_expression(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::integer, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        switch (c) {
            case 'x': out.push_back({Token::Kind::variable, "x", i}); break;
            case 't': out.push_back({Token::Kind::generator, "t", i}); break;
            case '+': out.push_back({Token::Kind::plus, "+", i}); break;
            case '-': out.push_back({Token::Kind::minus, "-", i}); break;
            case '*': out.push_back({Token::Kind::star, "*", i}); break;
            case '/': out.push_back({Token::Kind::slash, "/", i}); break;
            case '^': out.push_back({Token::Kind::caret, "^", i}); break;
            case '(': out.push_back({Token::Kind::lparen, "(", i}); break;
            case ')': out.push_back({Token::Kind::rparen, ")", i}); break;
            default:
                fail(errc::syntax_error,
                     "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
        }
        ++i;
    }
    out.push_back({Token::Kind::end, "", text.size()});
    return out;
}

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : tokens_(lex_expression(text)) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        if (peek().kind != Token::Kind::end)
            fail(errc::syntax_error, "unexpected trailing input at position " + std::to_string(peek().pos));
        return e;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    Token next() { return tokens_[index_++]; }

    static bool starts_atom(const Token& t) {
        using K = Token::Kind;
        return t.kind == K::integer || t.kind == K::variable || t.kind == K::generator || t.kind == K::lparen;
    }

    ExprPtr make(ExprNode::Kind k, std::size_t pos) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->pos = pos;
        return n;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            Token op = next();
            ExprPtr rhs = parse_term();
            ExprPtr n = make(op.kind == Token::Kind::plus ? ExprNode::Kind::add : ExprNode::Kind::sub, op.pos);
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            if (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
                Token op = next();
                ExprPtr rhs = parse_unary();
                ExprPtr n = make(op.kind == Token::Kind::star ? ExprNode::Kind::mul : ExprNode::Kind::div, op.pos);
                n->lhs = std::move(lhs);
                n->rhs = std::move(rhs);
                lhs = std::move(n);
            } else if (starts_atom(peek())) {
                // adjacency: "4x^2", "(t+1)x", "3/2x"
                std::size_t pos = peek().pos;
                ExprPtr rhs = parse_power();
                ExprPtr n = make(ExprNode::Kind::mul, pos);
                n->lhs = std::move(lhs);
                n->rhs = std::move(rhs);
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        if (peek().kind == Token::Kind::minus) {
            Token op = next();
            ExprPtr n = make(ExprNode::Kind::negate, op.pos);
            n->lhs = parse_power();
            return n;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek().kind != Token::Kind::caret) return base;
        Token caret = next();
        bool negative = false;
        if (peek().kind == Token::Kind::minus) {
            next();
            negative = true;
        }
        if (peek().kind != Token::Kind::integer)
            fail(errc::non_integer_exponent,
                 "exponent must be an integer literal at position " + std::to_string(peek().pos));
        Token digits = next();
        if (digits.text.size() > 5)
            fail(errc::invalid_argument, "exponent too large at position " + std::to_string(digits.pos));
        long long e = std::stoll(digits.text);
        ExprPtr n = make(ExprNode::Kind::pow, caret.pos);
        n->lhs = std::move(base);
        n->exponent = negative ? -e : e;
        return n;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::integer: {
                Token tok = next();
                ExprPtr n = make(ExprNode::Kind::integer, tok.pos);
                n->literal = tok.text;
                return n;
            }
            case Token::Kind::variable: {
                Token tok = next();
                return make(ExprNode::Kind::variable, tok.pos);
            }
            case Token::Kind::generator: {
                Token tok = next();
                return make(ExprNode::Kind::generator, tok.pos);
            }
            case Token::Kind::lparen: {
                Token open = next();
                ExprPtr inner = parse_expr();
                if (peek().kind != Token::Kind::rparen)
                    fail(errc::syntax_error, "missing ')' for '(' at position " + std::to_string(open.pos));
                next();
                ExprPtr n = make(ExprNode::Kind::group, open.pos);
                n->lhs = std::move(inner);
                return n;
            }
            default:
                fail(errc::syntax_error, "expected a value at position " + std::to_string(t.pos));
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace detail

/// Parse the shared expression grammar into a syntax tree. Throws
/// errc::syntax_error / errc::non_integer_exponent with positions.
inline ExprPtr parse_expression_ast(const std::string& text) { return detail::ExprParser(text).parse(); }

}  // namespace linrel

#endif  // LINREL_AST_HPP
