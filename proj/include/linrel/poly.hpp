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

#ifndef LINREL_POLY_HPP
#define LINREL_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "linrel/fields.hpp"

namespace linrel {

/// Dense univariate polynomial over a field. Coefficients are stored low
/// degree first with a nonzero trailing entry; the zero polynomial is the
/// empty sequence and its degree is the distinguished "none" (nullopt), never
/// a sentinel integer.
class Polynomial {
public:
    explicit Polynomial(Field field) : field_(std::move(field)) {}

    static Polynomial zero(const Field& f) { return Polynomial(f); }

    static Polynomial constant(const FieldElement& c) {
        Polynomial p(c.field());
        if (!c.is_zero()) p.coeffs_.push_back(c);
        return p;
    }

    static Polynomial from_coefficients(const Field& f, std::vector<FieldElement> coeffs) {
        Polynomial p(f);
        for (const auto& c : coeffs) detail::require_same_field(f, c.field(), "polynomial literal");
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    /// c * x^k
    static Polynomial monomial(const FieldElement& c, unsigned k) {
        Polynomial p(c.field());
        if (c.is_zero()) return p;
        p.coeffs_.assign(k + 1, FieldElement::zero(c.field()));
        p.coeffs_[k] = c;
        return p;
    }

    static Polynomial variable(const Field& f) { return monomial(FieldElement::one(f), 1); }

    const Field& field() const { return field_; }
    const std::vector<FieldElement>& coefficients() const { return coeffs_; }

    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    FieldElement coeff(std::size_t k) const {
        if (k < coeffs_.size()) return coeffs_[k];
        return FieldElement::zero(field_);
    }

    FieldElement leading_coefficient() const {
        if (is_zero()) fail(errc::zero_function, "leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    FieldElement constant_term() const { return coeff(0); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        detail::require_same_field(a.field_, b.field_, "+");
        Polynomial r(a.field_);
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        r.coeffs_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(a.coeff(i) + b.coeff(i));
        r.trim();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        detail::require_same_field(a.field_, b.field_, "-");
        Polynomial r(a.field_);
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        r.coeffs_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(a.coeff(i) - b.coeff(i));
        r.trim();
        return r;
    }

    Polynomial operator-() const { return zero(field_) - *this; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        detail::require_same_field(a.field_, b.field_, "*");
        Polynomial r(a.field_);
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }

    friend Polynomial operator*(const FieldElement& s, const Polynomial& a) {
        detail::require_same_field(s.field(), a.field_, "scalar *");
        Polynomial r(a.field_);
        if (s.is_zero()) return r;
        r.coeffs_.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) r.coeffs_.push_back(s * c);
        r.trim();
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = constant(FieldElement::one(field_));
        for (unsigned i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) fail(errc::zero_function, "cannot normalize the zero polynomial");
        return leading_coefficient().inverse() * *this;
    }

    FieldElement evaluate(const FieldElement& x) const {
        FieldElement acc = FieldElement::zero(field_);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// Deterministic total order (by degree, then coefficients from the top);
/// only used for canonical sorting and set containers.
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.coefficients().size() != b.coefficients().size()) return a.coefficients().size() < b.coefficients().size();
    for (std::size_t i = a.coefficients().size(); i-- > 0;) {
        const auto &x = a.coefficients()[i], &y = b.coefficients()[i];
        if (x != y) return canonical_less(x, y);
    }
    return false;
}

inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    detail::require_same_field(a.field(), b.field(), "divmod");
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    Polynomial quot = Polynomial::zero(a.field());
    Polynomial rem = a;
    const FieldElement lead_inv = b.leading_coefficient().inverse();
    const int db = *b.degree();
    while (!rem.is_zero() && *rem.degree() >= db) {
        const int shift = *rem.degree() - db;
        const FieldElement c = rem.leading_coefficient() * lead_inv;
        const Polynomial term = Polynomial::monomial(c, static_cast<unsigned>(shift));
        quot = quot + term;
        rem = rem - term * b;
    }
    return {quot, rem};
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd_monic(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/// f(g(x)) by Horner's scheme.
inline Polynomial compose(const Polynomial& f, const Polynomial& g) {
    detail::require_same_field(f.field(), g.field(), "compose");
    Polynomial acc = Polynomial::zero(f.field());
    for (std::size_t i = f.coefficients().size(); i-- > 0;)
        acc = acc * g + Polynomial::constant(f.coefficients()[i]);
    return acc;
}

/// f(alpha*x + beta), expanded with binomial coefficients built in the field
/// (so the characteristic is respected). Agrees with compose(f, alpha*x+beta)
/// by a deliberately different route.
inline Polynomial affine_substitute(const Polynomial& f, const FieldElement& alpha, const FieldElement& beta) {
    detail::require_same_field(f.field(), alpha.field(), "affine_substitute");
    detail::require_same_field(f.field(), beta.field(), "affine_substitute");
    if (alpha.is_zero()) fail(errc::zero_alpha, "affine substitution requires alpha != 0");
    const Field& field = f.field();
    if (f.is_zero()) return f;
    const std::size_t n = f.coefficients().size();  // number of coefficients

    std::vector<FieldElement> alpha_pow, beta_pow;
    alpha_pow.reserve(n);
    beta_pow.reserve(n);
    alpha_pow.push_back(FieldElement::one(field));
    beta_pow.push_back(FieldElement::one(field));
    for (std::size_t i = 1; i < n; ++i) {
        alpha_pow.push_back(alpha_pow.back() * alpha);
        beta_pow.push_back(beta_pow.back() * beta);
    }

    std::vector<FieldElement> result(n, FieldElement::zero(field));
    std::vector<FieldElement> binom{FieldElement::one(field)};  // Pascal row for the current i
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            std::vector<FieldElement> next;
            next.reserve(i + 1);
            next.push_back(FieldElement::one(field));
            for (std::size_t j = 1; j < i; ++j) next.push_back(binom[j - 1] + binom[j]);
            next.push_back(FieldElement::one(field));
            binom = std::move(next);
        }
        const FieldElement& fi = f.coefficients()[i];
        if (fi.is_zero()) continue;
        for (std::size_t j = 0; j <= i; ++j)
            result[j] = result[j] + fi * binom[j] * alpha_pow[j] * beta_pow[i - j];
    }
    return Polynomial::from_coefficients(field, std::move(result));
}

/// Basis {t^j : j*p <= n} of the subalgebra K[t] with t = x^p - beta^{p-1} x,
/// restricted to degree <= n. Every member is fixed by x -> x + beta.
inline std::vector<Polynomial> additive_algebra_basis(const FieldElement& beta, int n) {
    const Field& field = beta.field();
    if (!field->is_finite()) fail(errc::characteristic_zero, "additive algebra requires positive characteristic");
    if (beta.is_zero()) fail(errc::zero_beta, "additive algebra requires beta != 0");
    const auto p = static_cast<unsigned>(field->characteristic);
    const Polynomial t = Polynomial::monomial(FieldElement::one(field), p) -
                         Polynomial::monomial(beta.pow(static_cast<long long>(p) - 1), 1);
    std::vector<Polynomial> basis;
    Polynomial power = Polynomial::constant(FieldElement::one(field));
    for (unsigned j = 0; static_cast<long long>(j) * p <= n; ++j) {
        basis.push_back(power);
        power = power * t;
    }
    return basis;
}

/// Shifted powers {(x-c)^m} for m running through e, e+s, e+2s, ... with
/// 0 < m <= n, plus the constant 1 exactly when e = 0. s = 0 means the single
/// exponent e (the infinite-order convention).
inline std::vector<Polynomial> progression_basis(const FieldElement& c, unsigned e, unsigned s, int n) {
    const Field& field = c.field();
    std::vector<unsigned> exponents;
    if (e == 0) {
        exponents.push_back(0);
        if (s > 0)
            for (unsigned m = s; static_cast<int>(m) <= n; m += s) exponents.push_back(m);
    } else if (s == 0) {
        if (static_cast<int>(e) <= n) exponents.push_back(e);
    } else {
        for (unsigned m = e; static_cast<int>(m) <= n; m += s) exponents.push_back(m);
    }
    const Polynomial shifted = Polynomial::variable(field) - Polynomial::constant(c);
    std::vector<Polynomial> basis;
    basis.reserve(exponents.size());
    for (unsigned m : exponents) basis.push_back(shifted.pow(m));
    return basis;
}

}  // namespace linrel

#endif  // LINREL_POLY_HPP
