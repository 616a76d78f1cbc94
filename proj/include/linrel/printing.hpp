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

#ifndef LINREL_PRINTING_HPP
#define LINREL_PRINTING_HPP

#include <string>

#include "linrel/ratfun.hpp"

namespace linrel {

// Canonical text forms. Polynomials print with descending powers and no '*'
// before the variable; the expression grammar's adjacency rule makes the
// output re-parse to the same value, which the tests rely on.

inline std::string to_string(const FieldElement& e) {
    if (e.field()->is_rational()) return e.rational().get_str();
    const auto& res = e.residues();
    if (e.field()->extension_degree == 1) return std::to_string(res[0]);
    // residue polynomial in the generator t, descending
    std::string out;
    for (std::size_t i = res.size(); i-- > 0;) {
        if (res[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(res[i]);
        } else {
            if (res[i] != 1) out += std::to_string(res[i]);
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace detail {

inline bool needs_parens_as_coefficient(const std::string& s) {
    // sums and differences must be grouped when multiplying a power of x
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') return true;
    return false;
}

}  // namespace detail

inline std::string to_string(const Polynomial& p, char variable = 'x') {
    if (p.is_zero()) return "0";
    std::string out;
    const Field& field = p.field();
    const bool rational_field = field->is_rational();
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        FieldElement c = p.coefficients()[i];
        if (c.is_zero()) continue;
        std::string sep;
        if (!out.empty()) {
            sep = " + ";
            if (rational_field && c.rational() < 0) {
                sep = " - ";
                c = -c;
            }
        }
        std::string cs = to_string(c);
        std::string term;
        if (i == 0) {
            term = cs;
        } else {
            std::string xs(1, variable);
            if (i > 1) xs += "^" + std::to_string(i);
            if (cs == "1")
                term = xs;
            else if (cs == "-1")
                term = "-" + xs;
            else if (detail::needs_parens_as_coefficient(cs))
                term = "(" + cs + ")" + xs;
            else
                term = cs + xs;
        }
        out += sep + term;
    }
    return out;
}

inline std::string to_string(const RationalFunction& f, char variable = 'x') {
    if (f.is_polynomial()) return to_string(f.num(), variable);
    const std::string num = to_string(f.num(), variable);
    const std::string den = to_string(f.den(), variable);
    auto grouped = [](const std::string& s) {
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] == '+' || s[i] == '-' || s[i] == '/' || s[i] == ' ') return "(" + s + ")";
        if (!s.empty() && (s[0] == '-' || s[0] == '(')) return "(" + s + ")";
        return s;
    };
    return grouped(num) + "/" + grouped(den);
}

inline std::string to_string(const MobiusMap& m) { return to_string(m.to_rational()); }

inline std::string to_string(const Point& p) { return p.is_infinity() ? "oo" : to_string(p.value()); }

/// Canonical field-spec text, re-acceptable by make_field.
inline std::string to_string(const Field& f) {
    if (f->is_rational()) return "Q";
    if (f->extension_degree == 1) return "F" + std::to_string(f->characteristic);
    std::string mod;
    for (std::size_t i = f->modulus.size(); i-- > 0;) {
        if (f->modulus[i] == 0) continue;
        if (!mod.empty()) mod += "+";
        if (i == 0) {
            mod += std::to_string(f->modulus[i]);
        } else {
            if (f->modulus[i] != 1) mod += std::to_string(f->modulus[i]);
            mod += "t";
            if (i > 1) mod += "^" + std::to_string(i);
        }
    }
    return "F" + std::to_string(f->characteristic) + "^" + std::to_string(f->extension_degree) + " mod " + mod;
}

}  // namespace linrel

#endif  // LINREL_PRINTING_HPP
