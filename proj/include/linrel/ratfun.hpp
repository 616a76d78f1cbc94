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

#ifndef LINREL_RATFUN_HPP
#define LINREL_RATFUN_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "linrel/poly.hpp"

namespace linrel {

/// Rational function in canonical form: coprime numerator/denominator with a
/// monic denominator. The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        detail::require_same_field(num_.field(), den_.field(), "rational function");
        if (den_.is_zero()) fail(errc::division_by_zero, "zero denominator");
        reduce();
    }

    static RationalFunction from_polynomial(Polynomial p) {
        Field f = p.field();
        return RationalFunction(std::move(p), Polynomial::constant(FieldElement::one(f)));
    }

    static RationalFunction constant(const FieldElement& c) {
        return from_polynomial(Polynomial::constant(c));
    }

    static RationalFunction zero(const Field& f) { return from_polynomial(Polynomial::zero(f)); }
    static RationalFunction one(const Field& f) { return constant(FieldElement::one(f)); }
    static RationalFunction variable(const Field& f) { return from_polynomial(Polynomial::variable(f)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const Field& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    FieldElement constant_value() const {
        if (!is_constant()) fail(errc::invalid_argument, "not a constant function");
        return num_.constant_term();  // denominator is monic constant = 1
    }

    /// max(deg num, deg den): the degree of the map.
    std::optional<int> map_degree() const {
        if (is_zero()) return 0;
        return std::max(*num_.degree(), *den_.degree());
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) fail(errc::zero_function, "division by the zero function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction pow(long long e) const {
        if (e < 0) {
            if (is_zero()) fail(errc::zero_function, "negative power of the zero function");
            return RationalFunction(den_, num_).pow(-e);
        }
        RationalFunction acc = one(field());
        for (long long i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    /// Evaluation; nullopt at a pole.
    std::optional<FieldElement> evaluate(const FieldElement& x) const {
        const FieldElement d = den_.evaluate(x);
        if (d.is_zero()) return std::nullopt;
        return num_.evaluate(x) / d;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(FieldElement::one(field()));
            return;
        }
        const Polynomial g = gcd_monic(num_, den_);
        if (!g.is_constant()) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const FieldElement lead = den_.leading_coefficient();
        if (!lead.is_one()) {
            const FieldElement inv = lead.inverse();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Polynomial num_, den_;
};

/// f(g(x)), reduced. When g is constant, f must be defined at that value.
inline RationalFunction rf_compose(const RationalFunction& f, const RationalFunction& g) {
    detail::require_same_field(f.field(), g.field(), "rf_compose");
    const Field& field = f.field();
    if (g.is_constant()) {
        const auto value = f.evaluate(g.constant_value());
        if (!value) fail(errc::constant_pole_collision, "inner function is constant at a pole of the outer one");
        return RationalFunction::constant(*value);
    }
    const int n = std::max(f.num().degree().value_or(0), *f.den().degree());
    auto homogenize = [&](const Polynomial& a) {
        Polynomial acc = Polynomial::zero(field);
        Polynomial qpow = Polynomial::constant(FieldElement::one(field));  // den(g)^(n-i), built downward
        std::vector<Polynomial> qpows;
        qpows.reserve(n + 1);
        for (int i = 0; i <= n; ++i) {
            qpows.push_back(qpow);
            qpow = qpow * g.den();
        }
        Polynomial ppow = Polynomial::constant(FieldElement::one(field));
        for (int i = 0; i <= n; ++i) {
            const FieldElement c = a.coeff(static_cast<std::size_t>(i));
            if (!c.is_zero()) acc = acc + c * (ppow * qpows[static_cast<std::size_t>(n - i)]);
            ppow = ppow * g.num();
        }
        return acc;
    };
    return RationalFunction(homogenize(f.num()), homogenize(f.den()));
}

/// Order of vanishing at 0: multiplicity of x in the numerator minus the
/// multiplicity in the denominator.
inline long valuation_at_zero(const RationalFunction& f) {
    if (f.is_zero()) fail(errc::zero_function, "valuation of the zero function");
    auto mult = [](const Polynomial& p) {
        long m = 0;
        while (p.coeff(static_cast<std::size_t>(m)).is_zero()) ++m;
        return m;
    };
    return mult(f.num()) - mult(f.den());
}

// ---------------------------------------------------------------------------
// The projective line K u {oo}
// ---------------------------------------------------------------------------

/// A point of K u {oo}; infinity is a distinguished value, not a field
/// element.
class Point {
public:
    static Point infinity(const Field& f) { return Point(f, std::nullopt); }
    static Point finite(FieldElement v) {
        Field f = v.field();
        return Point(f, std::move(v));
    }

    bool is_infinity() const { return !value_.has_value(); }
    const FieldElement& value() const {
        if (is_infinity()) fail(errc::invalid_argument, "infinity has no field value");
        return *value_;
    }
    const Field& field() const { return field_; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return *a.value_ == *b.value_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    /// Canonical order with infinity last.
    friend bool canonical_less(const Point& a, const Point& b) {
        if (a.is_infinity()) return false;
        if (b.is_infinity()) return true;
        return canonical_less(*a.value_, *b.value_);
    }

private:
    Point(Field f, std::optional<FieldElement> v) : field_(std::move(f)), value_(std::move(v)) {}
    Field field_;
    std::optional<FieldElement> value_;
};

// ---------------------------------------------------------------------------
// Moebius maps
// ---------------------------------------------------------------------------

/// Invertible degree-one map (a x + b) / (c x + d), ad - bc != 0, stored with
/// the first nonzero entry of (a, b, c, d) normalized to 1.
class MobiusMap {
public:
    MobiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        detail::require_same_field(a_.field(), b_.field(), "mobius");
        detail::require_same_field(a_.field(), c_.field(), "mobius");
        detail::require_same_field(a_.field(), d_.field(), "mobius");
        if ((a_ * d_ - b_ * c_).is_zero()) fail(errc::degenerate_mobius, "determinant ad - bc vanishes");
        normalize();
    }

    static MobiusMap identity(const Field& f) {
        return MobiusMap(FieldElement::one(f), FieldElement::zero(f), FieldElement::zero(f), FieldElement::one(f));
    }
    static MobiusMap translation(const FieldElement& beta) {  // x + beta
        const Field& f = beta.field();
        return MobiusMap(FieldElement::one(f), beta, FieldElement::zero(f), FieldElement::one(f));
    }
    static MobiusMap scaling(const FieldElement& alpha) {  // alpha x
        if (alpha.is_zero()) fail(errc::degenerate_mobius, "scaling by zero");
        const Field& f = alpha.field();
        return MobiusMap(alpha, FieldElement::zero(f), FieldElement::zero(f), FieldElement::one(f));
    }

    static MobiusMap from_rational(const RationalFunction& r) {
        if (r.map_degree().value_or(0) != 1) fail(errc::degenerate_mobius, "not a degree-one map");
        return MobiusMap(r.num().coeff(1), r.num().coeff(0), r.den().coeff(1), r.den().coeff(0));
    }

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }
    const Field& field() const { return a_.field(); }

    bool is_identity() const { return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one(); }

    RationalFunction to_rational() const {
        const Field& f = field();
        Polynomial num = Polynomial::monomial(a_, 1) + Polynomial::constant(b_);
        Polynomial den = Polynomial::monomial(c_, 1) + Polynomial::constant(d_);
        return RationalFunction(std::move(num), std::move(den));
    }

    /// Composition (this after other): (this o other)(x) = this(other(x)).
    friend MobiusMap operator*(const MobiusMap& m, const MobiusMap& n) {
        return MobiusMap(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                         m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
    }

    MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

    Point apply(const Point& p) const {
        if (p.is_infinity()) {
            if (c_.is_zero()) return Point::infinity(field());
            return Point::finite(a_ / c_);
        }
        const FieldElement den = c_ * p.value() + d_;
        if (den.is_zero()) return Point::infinity(field());
        return Point::finite((a_ * p.value() + b_) / den);
    }

    /// m o f for a rational function f: (a f + b) / (c f + d).
    RationalFunction apply_to_function(const RationalFunction& f) const {
        const RationalFunction num = RationalFunction::constant(a_) * f + RationalFunction::constant(b_);
        const RationalFunction den = RationalFunction::constant(c_) * f + RationalFunction::constant(d_);
        if (den.is_zero()) fail(errc::zero_function, "image denominator vanishes identically");
        return num / den;
    }

    /// All fixed points lying in K u {oo}, sorted canonically (infinity
    /// last). May be empty: both fixed points then live in a quadratic
    /// extension. The identity is rejected (every point is fixed).
    std::vector<Point> fixed_points() const {
        if (is_identity()) fail(errc::identity_map, "every point is fixed");
        const Field& f = field();
        std::vector<Point> pts;
        // finite fixed points: roots of c x^2 + (d - a) x - b
        const FieldElement qa = c_, qb = d_ - a_, qc = -b_;
        if (qa.is_zero()) {
            if (!qb.is_zero()) pts.push_back(Point::finite(-qc / qb));
        } else if (f->is_finite()) {
            // exhaustive: the fields here are desk-scale
            for (std::uint64_t i = 0; i < *f->cardinality; ++i) {
                const FieldElement x = FieldElement::from_index(f, i);
                if ((qa * x * x + qb * x + qc).is_zero()) pts.push_back(Point::finite(x));
            }
        } else {
            // exact square root of the discriminant in Q, if it exists
            const FieldElement disc = qb * qb - FieldElement::from_integer(f, 4) * qa * qc;
            const mpq_class& dq = disc.rational();
            if (dq >= 0) {
                mpz_class num = dq.get_num(), den = dq.get_den();
                if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
                    mpz_class rn, rd;
                    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
                    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
                    const FieldElement root = FieldElement::from_rational(f, mpq_class(rn) / mpq_class(rd));
                    const FieldElement two_a = FieldElement::from_integer(f, 2) * qa;
                    const FieldElement r1 = (-qb + root) / two_a;
                    const FieldElement r2 = (-qb - root) / two_a;
                    pts.push_back(Point::finite(r1));
                    if (r1 != r2) pts.push_back(Point::finite(r2));
                }
            }
        }
        if (c_.is_zero()) pts.push_back(Point::infinity(f));
        std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) { return canonical_less(x, y); });
        return pts;
    }

    friend bool operator==(const MobiusMap& m, const MobiusMap& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }
    friend bool operator!=(const MobiusMap& m, const MobiusMap& n) { return !(m == n); }

private:
    void normalize() {
        for (const FieldElement* e : {&a_, &b_, &c_, &d_}) {
            if (!e->is_zero()) {
                const FieldElement inv = e->inverse();
                a_ = inv * a_;
                b_ = inv * b_;
                c_ = inv * c_;
                d_ = inv * d_;
                return;
            }
        }
    }

    FieldElement a_, b_, c_, d_;
};

inline MobiusMap mobius_inverse(const MobiusMap& m) { return m.inverse(); }
inline std::vector<Point> mobius_fixed_points(const MobiusMap& m) { return m.fixed_points(); }

/// v^-1 o m o v.
inline MobiusMap conjugate(const MobiusMap& m, const MobiusMap& v) { return v.inverse() * m * v; }

}  // namespace linrel

#endif  // LINREL_RATFUN_HPP
