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

#ifndef LINREL_NORMALFORM_HPP
#define LINREL_NORMALFORM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linrel/linalg.hpp"
#include "linrel/ratfun.hpp"

namespace linrel {

// ---------------------------------------------------------------------------
// Canonical forms of degree-one maps
// ---------------------------------------------------------------------------

enum class LinearKind { identity, translation, scaling };

inline const char* linear_kind_name(LinearKind k) {
    switch (k) {
        case LinearKind::identity: return "identity";
        case LinearKind::translation: return "translation";
        case LinearKind::scaling: return "scaling";
    }
    return "?";
}

/// A degree-one map in canonical position: x, x + 1, or alpha x with
/// alpha not 0 or 1.
struct CanonicalLinear {
    LinearKind kind;
    std::optional<FieldElement> alpha;  // present iff scaling

    MobiusMap to_mobius(const Field& f) const {
        switch (kind) {
            case LinearKind::identity: return MobiusMap::identity(f);
            case LinearKind::translation: return MobiusMap::translation(FieldElement::one(f));
            case LinearKind::scaling: return MobiusMap::scaling(*alpha);
        }
        fail(errc::internal_error, "bad canonical kind");
    }
};

struct Normalization {
    MobiusMap v;
    CanonicalLinear canonical;
};

namespace detail {

// translation amount of a parabolic polynomial map x + beta
inline FieldElement translation_amount(const MobiusMap& m) {
    if (!m.c().is_zero() || m.a() != m.d()) fail(errc::internal_error, "not a polynomial translation");
    return m.b() / m.a();
}

// move a finite point to infinity: w = rho + 1/x
inline MobiusMap to_infinity_chart(const FieldElement& rho) {
    const Field& f = rho.field();
    return MobiusMap(rho, FieldElement::one(f), FieldElement::one(f), FieldElement::zero(f));
}

}  // namespace detail

/// Conjugating map v with v^-1 o g o v equal to exactly x, x + 1, or
/// alpha x. Fixed points are sorted canonically (infinity last); v anchors
/// the first of them at 0 (scaling) while the last goes to infinity, which
/// makes the reported multiplier deterministic. Fails with
/// NoFixedPointInField when both fixed points lie in a quadratic extension.
inline Normalization normalize_linear(const MobiusMap& g) {
    const Field& field = g.field();
    const FieldElement one = FieldElement::one(field);
    if (g.is_identity()) return {MobiusMap::identity(field), {LinearKind::identity, std::nullopt}};

    const std::vector<Point> fixed = g.fixed_points();
    if (fixed.empty())
        fail(errc::no_fixed_point_in_field, "both fixed points lie in a quadratic extension of the field");

    MobiusMap chart = MobiusMap::identity(field);  // sends the working polynomial picture back to g's
    MobiusMap poly = g;
    if (!fixed.back().is_infinity()) {
        chart = detail::to_infinity_chart(fixed.back().value());
        poly = conjugate(g, chart);  // fixes infinity, so a polynomial a x + b
    }
    if (!poly.c().is_zero()) fail(errc::internal_error, "conjugate is not polynomial");
    const FieldElement alpha = poly.a() / poly.d();
    const FieldElement beta = poly.b() / poly.d();

    if (fixed.size() == 1) {
        // parabolic: alpha = 1, beta != 0, and v = beta x scales the step to 1
        if (alpha != one || beta.is_zero()) fail(errc::internal_error, "parabolic map expected");
        const MobiusMap v = chart * MobiusMap::scaling(beta);
        return {v, {LinearKind::translation, std::nullopt}};
    }

    // two fixed points: alpha != 1, and v = x + beta/(1-alpha) centers the
    // finite one at 0
    if (alpha == one) fail(errc::internal_error, "scaling map expected");
    const MobiusMap v = chart * MobiusMap::translation(beta / (one - alpha));
    return {v, {LinearKind::scaling, alpha}};
}

/// Position-only normalization of a translation-type map: u with
/// u o h o u^-1 = x + delta, keeping h's step delta instead of scaling it
/// to 1 (the conjugator absorbs position, not scale). Identity gives
/// delta = 0.
struct TranslationPosition {
    MobiusMap u;
    FieldElement delta;
};

inline TranslationPosition normalize_translation_position(const MobiusMap& h) {
    const Field& field = h.field();
    if (h.is_identity()) return {MobiusMap::identity(field), FieldElement::zero(field)};
    const std::vector<Point> fixed = h.fixed_points();
    if (fixed.size() != 1) fail(errc::internal_error, "not a translation-type map");
    if (fixed.front().is_infinity()) return {MobiusMap::identity(field), detail::translation_amount(h)};
    const MobiusMap w = detail::to_infinity_chart(fixed.front().value());
    const MobiusMap moved = conjugate(h, w);
    return {w.inverse(), detail::translation_amount(moved)};
}

// ---------------------------------------------------------------------------
// Invariant rewriting
// ---------------------------------------------------------------------------

/// For f with f(x+1) = f(x) over characteristic p > 0, produce psi with
/// psi(x^p - x) = f. Solves the cleared identity
/// B(x) C(x^p - x) = A(x) D(x^p - x) for the unknown coefficients of C and D
/// by an exact nullspace computation, then reduces C/D.
inline RationalFunction rewrite_translation_invariant(const RationalFunction& f) {
    const Field& field = f.field();
    if (!field->is_finite()) fail(errc::characteristic_zero, "invariant rewriting needs characteristic p > 0");
    const FieldElement one = FieldElement::one(field);
    const RationalFunction shift =
        RationalFunction::from_polynomial(Polynomial::variable(field) + Polynomial::constant(one));
    if (rf_compose(f, shift) != f) fail(errc::not_invariant, "f(x+1) != f(x)");
    if (f.is_zero()) return f;

    const auto p = static_cast<unsigned>(field->characteristic);
    const Polynomial t = Polynomial::monomial(one, p) - Polynomial::variable(field);
    const Polynomial& a = f.num();
    const Polynomial& b = f.den();
    const int deg_c = *a.degree() / static_cast<int>(p);
    const int deg_d = *b.degree() / static_cast<int>(p);

    // unknowns: C_0..C_{deg_c} (columns +B t^j), then D_0..D_{deg_d} (-A t^j)
    std::vector<Polynomial> tpows;
    Polynomial tpow = Polynomial::constant(one);
    for (int j = 0; j <= std::max(deg_c, deg_d); ++j) {
        tpows.push_back(tpow);
        tpow = tpow * t;
    }
    std::vector<Polynomial> columns;
    for (int j = 0; j <= deg_c; ++j) columns.push_back(b * tpows[static_cast<std::size_t>(j)]);
    for (int j = 0; j <= deg_d; ++j) columns.push_back(-(a * tpows[static_cast<std::size_t>(j)]));

    std::size_t rows = 1;
    for (const auto& col : columns) rows = std::max(rows, col.coefficients().size());
    Matrix m(rows, Row(columns.size(), FieldElement::zero(field)));
    for (std::size_t cidx = 0; cidx < columns.size(); ++cidx)
        for (std::size_t r = 0; r < rows; ++r) m[r][cidx] = columns[cidx].coeff(r);

    const auto basis = nullspace(std::move(m), field);
    if (basis.empty()) fail(errc::internal_error, "invariant function without a t-expression");
    const Row& sol = basis.front();
    std::vector<FieldElement> c_coeffs(sol.begin(), sol.begin() + deg_c + 1);
    std::vector<FieldElement> d_coeffs(sol.begin() + deg_c + 1, sol.end());
    const Polynomial c_poly = Polynomial::from_coefficients(field, std::move(c_coeffs));
    const Polynomial d_poly = Polynomial::from_coefficients(field, std::move(d_coeffs));
    if (d_poly.is_zero()) fail(errc::internal_error, "degenerate rewrite denominator");
    const RationalFunction psi(c_poly, d_poly);

    const RationalFunction t_rf = RationalFunction::from_polynomial(t);
    if (rf_compose(psi, t_rf) != f) fail(errc::internal_error, "rewrite verification failed");
    return psi;
}

/// For nonzero f with f(alpha x) = gamma f(x) for some gamma (computed here,
/// not supplied), return (e, s, psi) with f = x^e psi(x^s): e is the order of
/// vanishing at 0, s the multiplicative order of alpha (0 when infinite), and
/// psi is read off the x^s-supported numerator and denominator of f / x^e.
struct ScalingForm {
    long e = 0;
    std::uint64_t s = 0;
    RationalFunction psi;
    FieldElement gamma;
};

inline ScalingForm extract_scaling_form(const RationalFunction& f, const FieldElement& alpha) {
    const Field& field = f.field();
    if (f.is_zero()) fail(errc::zero_function, "cannot extract from the zero function");
    if (alpha.is_zero()) fail(errc::zero_alpha, "alpha must be nonzero");

    const RationalFunction scaled = rf_compose(f, RationalFunction::from_polynomial(
                                                      Polynomial::monomial(alpha, 1)));
    const RationalFunction ratio = scaled / f;
    if (!ratio.is_constant()) fail(errc::not_scaling_related, "f(alpha x) / f(x) is not constant");
    const FieldElement gamma = ratio.constant_value();

    const long e = valuation_at_zero(f);
    const auto order = multiplicative_order(alpha);
    const std::uint64_t s = order.value_or(0);
    if (alpha.pow(e) != gamma) fail(errc::internal_error, "multiplier is not alpha^e");

    const RationalFunction u = f / RationalFunction::variable(field).pow(e);

    RationalFunction psi = u;
    if (s == 0) {
        if (!u.is_constant()) fail(errc::internal_error, "infinite order with nonconstant invariant part");
    } else if (s > 1) {
        auto contract = [&](const Polynomial& poly) {
            std::vector<FieldElement> coeffs;
            for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
                const FieldElement& c = poly.coefficients()[i];
                if (i % s == 0) {
                    coeffs.push_back(c);
                } else if (!c.is_zero()) {
                    fail(errc::internal_error, "support not contained in multiples of s");
                }
            }
            return Polynomial::from_coefficients(field, std::move(coeffs));
        };
        psi = RationalFunction(contract(u.num()), contract(u.den()));
    }

    // reconstruction must be literal
    RationalFunction rebuilt = s > 0 ? rf_compose(psi, RationalFunction::variable(field).pow(static_cast<long long>(s)))
                                     : psi;
    rebuilt = rebuilt * RationalFunction::variable(field).pow(e);
    if (rebuilt != f) fail(errc::internal_error, "scaling form does not rebuild f");
    return {e, s, psi, gamma};
}

// ---------------------------------------------------------------------------
// Normal forms for f o g = h o f
// ---------------------------------------------------------------------------

namespace detail {

/// delta x + psi(x^p - x); in characteristic 0 psi must be constant.
inline RationalFunction translation_core(const FieldElement& delta, const RationalFunction& psi) {
    const Field& field = psi.field();
    const RationalFunction slope =
        RationalFunction::from_polynomial(Polynomial::monomial(delta, 1));
    if (!field->is_finite()) {
        if (!psi.is_constant())
            fail(errc::invalid_argument, "psi must be constant in characteristic 0");
        return slope + psi;
    }
    const Polynomial t = Polynomial::monomial(FieldElement::one(field), static_cast<unsigned>(field->characteristic)) -
                         Polynomial::variable(field);
    return slope + rf_compose(psi, RationalFunction::from_polynomial(t));
}

/// x^e psi(x^s); s = 0 reads psi(x^0) as the constant psi(1).
inline RationalFunction scaling_core(long e, std::uint64_t s, const RationalFunction& psi) {
    const Field& field = psi.field();
    const RationalFunction xe = RationalFunction::variable(field).pow(e);
    if (s == 0) {
        const auto at_one = psi.evaluate(FieldElement::one(field));
        if (!at_one) fail(errc::invalid_argument, "psi has a pole at 1, so psi(x^0) is undefined");
        return RationalFunction::constant(*at_one) * xe;
    }
    return rf_compose(psi, RationalFunction::variable(field).pow(static_cast<long long>(s))) * xe;
}

}  // namespace detail

enum class NormalFormKind { trans_trans, scale_scale };

/// Witness for a semiconjugacy f o g = h o f: conjugators u, v and the core
/// so that f = u^-1 o core o v^-1 with core either delta x + psi(x^p - x) or
/// x^e psi(x^s). Reconstruction is exact by construction.
struct NormalForm {
    NormalFormKind kind;
    MobiusMap u, v;
    std::optional<FieldElement> delta;  // translation case
    std::optional<FieldElement> alpha;  // scaling case
    long e = 0;
    std::uint64_t s = 0;
    RationalFunction psi;

    const Field& field() const { return u.field(); }

    RationalFunction core() const {
        return kind == NormalFormKind::trans_trans ? detail::translation_core(*delta, psi)
                                                   : detail::scaling_core(e, s, psi);
    }

    RationalFunction reconstruct_f() const {
        const RationalFunction inner = rf_compose(core(), v.inverse().to_rational());
        return u.inverse().apply_to_function(inner);
    }

    MobiusMap reconstruct_g() const {
        const MobiusMap canonical = kind == NormalFormKind::trans_trans
                                        ? MobiusMap::translation(FieldElement::one(field()))
                                        : MobiusMap::scaling(*alpha);
        return v * canonical * v.inverse();
    }

    MobiusMap reconstruct_h() const {
        const MobiusMap canonical = kind == NormalFormKind::trans_trans
                                        ? (delta->is_zero() ? MobiusMap::identity(field())
                                                            : MobiusMap::translation(*delta))
                                        : (alpha->pow(e).is_one() ? MobiusMap::identity(field())
                                                                  : MobiusMap::scaling(alpha->pow(e)));
        return u.inverse() * canonical * u;
    }
};

/// Check f o g = h o f, normalize g and h, and express f through the
/// canonical core. Throws NotSemiconjugate when the equation fails and
/// NoFixedPointInField when a normalization needs a quadratic extension.
inline NormalForm decompose_semiconjugate(const RationalFunction& f, const MobiusMap& g, const MobiusMap& h) {
    const Field& field = f.field();
    detail::require_same_field(field, g.field(), "decompose");
    detail::require_same_field(field, h.field(), "decompose");
    if (f.is_constant()) fail(errc::invalid_argument, "f must be nonconstant");

    const RationalFunction lhs = rf_compose(f, g.to_rational());
    const RationalFunction rhs = h.apply_to_function(f);
    if (lhs != rhs) fail(errc::not_semiconjugate, "f o g != h o f");

    NormalForm nf{NormalFormKind::scale_scale,
                  MobiusMap::identity(field),
                  MobiusMap::identity(field),
                  std::nullopt,
                  std::nullopt,
                  0,
                  0,
                  RationalFunction::one(field)};

    if (g.is_identity()) {
        // h o f = f with f nonconstant forces h = x; treat as scaling by 1
        if (!h.is_identity()) fail(errc::internal_error, "h o f = f with h != x");
        const FieldElement one = FieldElement::one(field);
        const ScalingForm sf = extract_scaling_form(f, one);
        nf.kind = NormalFormKind::scale_scale;
        nf.alpha = one;
        nf.e = sf.e;
        nf.s = sf.s;
        nf.psi = sf.psi;
    } else {
        const Normalization ng = normalize_linear(g);
        const bool h_identity = h.is_identity();
        std::optional<Normalization> nh;
        if (!h_identity) nh = normalize_linear(h);

        const LinearKind hkind = h_identity ? LinearKind::identity : nh->canonical.kind;
        if (ng.canonical.kind == LinearKind::translation &&
            (hkind == LinearKind::identity || hkind == LinearKind::translation)) {
            const TranslationPosition tp = normalize_translation_position(h);
            nf.kind = NormalFormKind::trans_trans;
            nf.u = tp.u;
            nf.v = ng.v;
            nf.delta = tp.delta;
            const RationalFunction big_f = tp.u.apply_to_function(rf_compose(f, ng.v.to_rational()));
            const RationalFunction r =
                big_f - RationalFunction::from_polynomial(Polynomial::monomial(tp.delta, 1));
            if (field->is_finite()) {
                nf.psi = rewrite_translation_invariant(r);
            } else {
                if (!r.is_constant()) fail(errc::internal_error, "invariant part not constant in characteristic 0");
                nf.psi = r;
            }
        } else if (ng.canonical.kind == LinearKind::scaling &&
                   (hkind == LinearKind::identity || hkind == LinearKind::scaling)) {
            const MobiusMap u = h_identity ? MobiusMap::identity(field) : nh->v.inverse();
            const FieldElement gamma = h_identity ? FieldElement::one(field) : *nh->canonical.alpha;
            nf.kind = NormalFormKind::scale_scale;
            nf.u = u;
            nf.v = ng.v;
            nf.alpha = ng.canonical.alpha;
            const RationalFunction big_f = u.apply_to_function(rf_compose(f, ng.v.to_rational()));
            const ScalingForm sf = extract_scaling_form(big_f, *ng.canonical.alpha);
            if (sf.gamma != gamma) fail(errc::internal_error, "multiplier mismatch between h and F");
            nf.e = sf.e;
            nf.s = sf.s;
            nf.psi = sf.psi;
        } else {
            // a verified equation cannot mix a translation with a scaling
            fail(errc::internal_error, "mixed translation/scaling semiconjugacy slipped through");
        }
    }

    if (nf.reconstruct_f() != f) fail(errc::internal_error, "witness does not rebuild f");
    if (nf.reconstruct_g() != g) fail(errc::internal_error, "witness does not rebuild g");
    if (nf.reconstruct_h() != h) fail(errc::internal_error, "witness does not rebuild h");
    return nf;
}

// ---------------------------------------------------------------------------
// Solution families for given g, h
// ---------------------------------------------------------------------------

enum class FamilyKind { empty, all, trans_trans, scale_scale };

inline const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::empty: return "Empty";
        case FamilyKind::all: return "All";
        case FamilyKind::trans_trans: return "TransTrans";
        case FamilyKind::scale_scale: return "ScaleScale";
    }
    return "?";
}

/// The set of f with f o g = h o f, described by conjugators plus a free
/// parameter psi (and an exponent family in the scaling case).
class SolutionFamily {
public:
    FamilyKind kind() const { return kind_; }
    bool is_empty() const { return kind_ == FamilyKind::empty; }
    const std::string& reason() const { return reason_; }

    const MobiusMap& u() const { return require(u_); }
    const MobiusMap& v() const { return require(v_); }
    const FieldElement& delta() const { return require(delta_); }
    const FieldElement& alpha() const { return require(alpha_); }
    const FieldElement& gamma() const { return require(gamma_); }
    long exponent() const { return e_; }
    std::uint64_t order() const { return s_; }
    const MobiusMap& g() const { return g_; }
    const MobiusMap& h() const { return h_; }

    /// Concrete member from the free parameter; for the scaling case an
    /// alternative exponent with alpha^e = gamma may be supplied.
    RationalFunction sample(const RationalFunction& psi, std::optional<long> e = std::nullopt) const {
        switch (kind_) {
            case FamilyKind::empty:
                fail(errc::invalid_argument, "the family is empty");
            case FamilyKind::all:
                return psi;  // any f works when g = h = x
            case FamilyKind::trans_trans: {
                const RationalFunction core = detail::translation_core(*delta_, psi);
                return conjugated(core);
            }
            case FamilyKind::scale_scale: {
                const long ee = e.value_or(e_);
                if (alpha_->pow(ee) != *gamma_)
                    fail(errc::invalid_argument, "alpha^e does not match h's multiplier");
                const RationalFunction core = detail::scaling_core(ee, s_, psi);
                return conjugated(core);
            }
        }
        fail(errc::internal_error, "bad family kind");
    }

    /// Membership via decomposition against the original g, h.
    bool contains(const RationalFunction& f) const {
        if (f.is_constant()) return false;
        if (kind_ == FamilyKind::empty) return false;
        try {
            decompose_semiconjugate(f, g_, h_);
            return true;
        } catch (const Error&) {
            return false;
        }
    }

private:
    friend SolutionFamily solve_semiconjugacy(const MobiusMap&, const MobiusMap&, long);

    SolutionFamily(MobiusMap g, MobiusMap h) : g_(std::move(g)), h_(std::move(h)) {}

    RationalFunction conjugated(const RationalFunction& core) const {
        return u_->inverse().apply_to_function(rf_compose(core, v_->inverse().to_rational()));
    }

    template <typename T>
    static const T& require(const std::optional<T>& o) {
        if (!o) fail(errc::invalid_argument, "field not present for this family kind");
        return *o;
    }

    FamilyKind kind_ = FamilyKind::empty;
    MobiusMap g_, h_;
    std::optional<MobiusMap> u_, v_;
    std::optional<FieldElement> delta_, alpha_, gamma_;
    long e_ = 0;
    std::uint64_t s_ = 0;
    std::string reason_;
};

/// Classify the solution set of f o g = h o f for degree-one g, h. The bound
/// limits the exponent search when alpha has infinite order.
inline SolutionFamily solve_semiconjugacy(const MobiusMap& g, const MobiusMap& h, long bound = 8) {
    detail::require_same_field(g.field(), h.field(), "solve_semiconjugacy");
    const Field& field = g.field();
    const FieldElement one = FieldElement::one(field);
    SolutionFamily family(g, h);

    const Normalization ng = normalize_linear(g);
    const Normalization nh = normalize_linear(h);
    const LinearKind gk = ng.canonical.kind;
    const LinearKind hk = nh.canonical.kind;

    if (gk == LinearKind::identity) {
        if (hk == LinearKind::identity) {
            family.kind_ = FamilyKind::all;
            family.u_ = MobiusMap::identity(field);
            family.v_ = MobiusMap::identity(field);
        } else {
            family.kind_ = FamilyKind::empty;
            family.reason_ = "g is the identity, so h o f = f forces h = x";
        }
        return family;
    }

    if (gk == LinearKind::translation) {
        if (hk == LinearKind::scaling) {
            family.kind_ = FamilyKind::empty;
            family.reason_ = "f(x+1) = gamma f(x) forces gamma = 1, but h scales by gamma != 1";
            return family;
        }
        // h is a translation or the identity
        if (hk == LinearKind::identity && !field->is_finite()) {
            family.kind_ = FamilyKind::empty;
            family.reason_ = "in characteristic 0 only constants are translation invariant";
            return family;
        }
        const TranslationPosition tp = normalize_translation_position(h);
        family.kind_ = FamilyKind::trans_trans;
        family.v_ = ng.v;
        family.u_ = tp.u;
        family.delta_ = tp.delta;
        return family;
    }

    // g is a scaling
    if (hk == LinearKind::translation) {
        family.kind_ = FamilyKind::empty;
        family.reason_ = "f(alpha x) = f(x) + delta has no rational solution";
        return family;
    }
    const FieldElement alpha = *ng.canonical.alpha;
    const FieldElement gamma = hk == LinearKind::identity ? one : *nh.canonical.alpha;
    const auto order = multiplicative_order(alpha);
    const std::uint64_t s = order.value_or(0);

    std::optional<long> exponent;
    if (s > 0) {
        FieldElement power = one;
        for (std::uint64_t e = 0; e < s; ++e) {
            if (power == gamma) {
                exponent = static_cast<long>(e);
                break;
            }
            power = power * alpha;
        }
    } else {
        for (long e = 0; e <= bound && !exponent; ++e) {
            if (alpha.pow(e) == gamma) exponent = e;
            else if (e > 0 && alpha.pow(-e) == gamma) exponent = -e;
        }
    }
    if (!exponent) {
        family.kind_ = FamilyKind::empty;
        family.reason_ = s > 0 ? "gamma is not a power of alpha"
                               : "gamma is not a power of alpha within the exponent bound";
        return family;
    }
    if (s == 0 && *exponent == 0) {
        // alpha of infinite order and gamma = 1: psi(x^0) is constant
        family.kind_ = FamilyKind::empty;
        family.reason_ = "alpha has infinite order and gamma = 1, so only constants commute";
        return family;
    }
    family.kind_ = FamilyKind::scale_scale;
    family.v_ = ng.v;
    family.u_ = hk == LinearKind::identity ? MobiusMap::identity(field) : nh.v.inverse();
    family.alpha_ = alpha;
    family.gamma_ = gamma;
    family.e_ = *exponent;
    family.s_ = s;
    return family;
}

}  // namespace linrel

#endif  // LINREL_NORMALFORM_HPP
