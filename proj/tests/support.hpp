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

#ifndef LINREL_TESTS_SUPPORT_HPP
#define LINREL_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "linrel/expr.hpp"
#include "linrel/linrel.hpp"

namespace linrel::testsupport {

inline Field q_field() { return make_field("Q"); }
inline Field f2() { return make_field("F2"); }
inline Field f3() { return make_field("F3"); }
inline Field f5() { return make_field("F5"); }
inline Field f7() { return make_field("F7"); }
inline Field f4() { return make_field("F4 mod t^2+t+1"); }
inline Field f9() { return make_field("F9 mod t^2+1"); }

inline std::vector<Field> all_fields() { return {q_field(), f2(), f3(), f5(), f4(), f9()}; }

inline FieldElement el(const Field& f, long long n) { return FieldElement::from_integer(f, n); }

/// Polynomial from small integer coefficients, constant term first.
inline Polynomial poly(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<FieldElement> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs) v.push_back(el(f, c));
    return Polynomial::from_coefficients(f, std::move(v));
}

inline RationalFunction rf(const Field& f, const std::string& text) { return parse_expression(text, f); }

inline FieldElement random_element(std::mt19937_64& rng, const Field& f) {
    if (f->is_finite()) {
        std::uniform_int_distribution<std::uint64_t> d(0, *f->cardinality - 1);
        return FieldElement::from_index(f, d(rng));
    }
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    return FieldElement::from_rational(f, mpq_class(num(rng), den(rng)));
}

inline FieldElement random_nonzero(std::mt19937_64& rng, const Field& f) {
    for (;;) {
        FieldElement e = random_element(rng, f);
        if (!e.is_zero()) return e;
    }
}

/// Random polynomial of degree <= maxdeg (possibly zero).
inline Polynomial random_polynomial(std::mt19937_64& rng, const Field& f, int maxdeg) {
    std::uniform_int_distribution<int> degd(0, maxdeg);
    const int d = degd(rng);
    std::vector<FieldElement> coeffs;
    coeffs.reserve(d + 1);
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_element(rng, f));
    return Polynomial::from_coefficients(f, std::move(coeffs));
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, const Field& f, int maxdeg) {
    for (;;) {
        Polynomial p = random_polynomial(rng, f, maxdeg);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunction random_rational(std::mt19937_64& rng, const Field& f, int num_deg, int den_deg) {
    return RationalFunction(random_polynomial(rng, f, num_deg), random_nonzero_polynomial(rng, f, den_deg));
}

inline RationalFunction random_nonzero_rational(std::mt19937_64& rng, const Field& f, int num_deg, int den_deg) {
    for (;;) {
        RationalFunction r = random_rational(rng, f, num_deg, den_deg);
        if (!r.is_zero()) return r;
    }
}

inline MobiusMap random_mobius(std::mt19937_64& rng, const Field& f) {
    for (;;) {
        const FieldElement a = random_element(rng, f), b = random_element(rng, f);
        const FieldElement c = random_element(rng, f), d = random_element(rng, f);
        if (!(a * d - b * c).is_zero()) return MobiusMap(a, b, c, d);
    }
}

/// All elements of a finite field.
inline std::vector<FieldElement> field_elements(const Field& f) {
    std::vector<FieldElement> out;
    for (std::uint64_t i = 0; i < *f->cardinality; ++i) out.push_back(FieldElement::from_index(f, i));
    return out;
}

/// Returns the error code thrown, or nullopt when no Error was raised.
template <typename Fn>
std::optional<errc> thrown_code(Fn&& fn) {
    try {
        fn();
        return std::nullopt;
    } catch (const Error& e) {
        return e.code();
    }
}

}  // namespace linrel::testsupport

#endif  // LINREL_TESTS_SUPPORT_HPP
