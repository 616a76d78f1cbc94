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

#ifndef LINREL_SOLVER_HPP
#define LINREL_SOLVER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "linrel/poly.hpp"

namespace linrel {

/// The affine space of polynomial solutions of f(ax+b) = c f(x) + d up to a
/// degree bound: an optional particular solution plus a homogeneous basis of
/// pairwise distinct leading degrees, listed ascending. Empty space == no
/// particular solution (then the basis is empty too).
struct SolutionSpace {
    Field field;
    int degree_bound = 0;
    std::optional<Polynomial> particular;
    std::vector<Polynomial> basis;

    bool is_empty() const { return !particular.has_value(); }
    int dimension() const { return static_cast<int>(basis.size()); }

    /// True when some member is nonconstant (the classification lists only
    /// those; the space itself keeps the constants for oracle comparison).
    bool has_nonconstant() const {
        if (is_empty()) return false;
        if (!particular->is_constant()) return true;
        for (const auto& b : basis)
            if (!b.is_constant()) return true;
        return false;
    }

    friend bool operator==(const SolutionSpace& a, const SolutionSpace& b) {
        return same_field(a.field, b.field) && a.degree_bound == b.degree_bound && a.particular == b.particular &&
               a.basis == b.basis;
    }
};

/// Exact test of the defining identity f(alpha x + beta) = gamma f(x) + delta.
inline bool verify_affine(const Polynomial& f, const FieldElement& alpha, const FieldElement& beta,
                          const FieldElement& gamma, const FieldElement& delta) {
    if (alpha.is_zero()) fail(errc::zero_alpha, "alpha must be nonzero");
    if (gamma.is_zero()) fail(errc::zero_gamma, "gamma must be nonzero");
    const Polynomial lhs = affine_substitute(f, alpha, beta);
    const Polynomial rhs = gamma * f + Polynomial::constant(delta);
    return lhs == rhs;
}

namespace detail {

inline void check_affine_args(const FieldElement& alpha, const FieldElement& gamma, int n) {
    if (alpha.is_zero()) fail(errc::zero_alpha, "alpha must be nonzero");
    if (gamma.is_zero()) fail(errc::zero_gamma, "gamma must be nonzero");
    if (n < 0) fail(errc::invalid_argument, "degree bound must be nonnegative");
    require_same_field(alpha.field(), gamma.field(), "solve_affine");
}

inline SolutionSpace empty_space(const Field& field, int n) { return SolutionSpace{field, n, std::nullopt, {}}; }

}  // namespace detail

/// Complete solution space of f(alpha x + beta) = gamma f(x) + delta with
/// deg f <= n, by the structural case analysis: the identity case, the
/// translation case with its x^p - beta^{p-1} x invariant algebra, and the
/// scaling-conjugate case with exponents read off a discrete logarithm.
inline SolutionSpace solve_affine(const FieldElement& alpha, const FieldElement& beta, const FieldElement& gamma,
                                  const FieldElement& delta, int n) {
    detail::check_affine_args(alpha, gamma, n);
    const Field& field = alpha.field();
    const FieldElement one = FieldElement::one(field);
    SolutionSpace space{field, n, std::nullopt, {}};

    if (alpha == one && beta.is_zero()) {
        if (gamma == one) {
            if (!delta.is_zero()) return detail::empty_space(field, n);  // f = f + delta
            space.particular = Polynomial::zero(field);
            for (int m = 0; m <= n; ++m) space.basis.push_back(Polynomial::monomial(one, static_cast<unsigned>(m)));
            return space;
        }
        // coefficients of degree >= 1 are killed by gamma != 1
        space.particular = Polynomial::constant(delta / (one - gamma));
        return space;
    }

    if (alpha == one) {  // beta != 0: translation by beta
        if (gamma != one) {
            // a nonconstant solution would need matching leading coefficients
            space.particular = Polynomial::constant(delta / (one - gamma));
            return space;
        }
        if (!delta.is_zero() && n < 1) return detail::empty_space(field, n);  // the slope term needs degree 1
        space.particular = Polynomial::monomial(delta / beta, 1);
        if (field->is_finite())
            space.basis = additive_algebra_basis(beta, n);
        else
            space.basis = {Polynomial::constant(one)};
        return space;
    }

    // alpha != 1: conjugating by x + c moves the fixed point c to 0
    const FieldElement c = beta / (one - alpha);
    std::optional<Polynomial> particular;
    if (gamma != one) {
        particular = Polynomial::constant(delta / (one - gamma));
    } else if (delta.is_zero()) {
        particular = Polynomial::zero(field);
    } else {
        return detail::empty_space(field, n);  // evaluate at the fixed point: delta must vanish
    }
    space.particular = std::move(particular);

    const auto exponents = discrete_log(alpha, gamma, static_cast<std::uint64_t>(n));
    if (!exponents.empty()) {
        const auto order = multiplicative_order(alpha);
        const unsigned s = order ? static_cast<unsigned>(*order) : 0u;
        space.basis = progression_basis(c, static_cast<unsigned>(exponents.front()), s, n);
        if (space.basis.size() != exponents.size())
            fail(errc::internal_error, "progression does not match the discrete-log set");
    }
    return space;
}

/// Same space as solve_affine, built the other way round: walk the degrees
/// from the bound downward, match each admissible leading term with the
/// case's generator, and keep only generators that satisfy the homogeneous
/// identity exactly. Shares no basis construction with solve_affine.
inline SolutionSpace solve_affine_by_peeling(const FieldElement& alpha, const FieldElement& beta,
                                             const FieldElement& gamma, const FieldElement& delta, int n) {
    detail::check_affine_args(alpha, gamma, n);
    const Field& field = alpha.field();
    const FieldElement one = FieldElement::one(field);
    const FieldElement zero = FieldElement::zero(field);
    SolutionSpace space{field, n, std::nullopt, {}};

    auto homogeneous_ok = [&](const Polynomial& g) {
        return affine_substitute(g, alpha, beta) == gamma * g;
    };

    std::vector<Polynomial> found;  // descending degree
    if (alpha == one && beta.is_zero()) {
        if (gamma == one) {
            if (!delta.is_zero()) return detail::empty_space(field, n);
            space.particular = Polynomial::zero(field);
            for (int m = n; m >= 0; --m) found.push_back(Polynomial::monomial(one, static_cast<unsigned>(m)));
        } else {
            space.particular = Polynomial::constant(delta / (one - gamma));
        }
    } else if (alpha == one) {
        if (gamma != one) {
            space.particular = Polynomial::constant(delta / (one - gamma));
        } else {
            if (!delta.is_zero() && n < 1) return detail::empty_space(field, n);
            // peel the inhomogeneity with the slope k solving k*beta = delta
            space.particular = Polynomial::monomial(delta / beta, 1);
            const std::uint64_t p = field->characteristic;
            for (int m = n; m >= 1; --m) {
                if (p == 0 || static_cast<std::uint64_t>(m) % p != 0) continue;
                // leading-term generator: t^(m/p) with t = x^p - beta^(p-1) x
                const Polynomial t = Polynomial::monomial(one, static_cast<unsigned>(p)) -
                                     Polynomial::monomial(beta.pow(static_cast<long long>(p) - 1), 1);
                const Polynomial g = t.pow(static_cast<unsigned>(static_cast<std::uint64_t>(m) / p));
                if (!homogeneous_ok(g)) fail(errc::internal_error, "translation generator failed its identity");
                found.push_back(g);
            }
            found.push_back(Polynomial::constant(one));
        }
    } else {
        if (gamma != one) {
            space.particular = Polynomial::constant(delta / (one - gamma));
        } else if (delta.is_zero()) {
            space.particular = Polynomial::zero(field);
        } else {
            return detail::empty_space(field, n);
        }
        const FieldElement c = beta / (one - alpha);
        const Polynomial shifted = Polynomial::variable(field) - Polynomial::constant(c);
        std::vector<FieldElement> alpha_pow{one};
        for (int m = 1; m <= n; ++m) alpha_pow.push_back(alpha_pow.back() * alpha);
        for (int m = n; m >= 0; --m) {
            if (alpha_pow[static_cast<std::size_t>(m)] != gamma) continue;  // leading coefficients cannot match
            const Polynomial g = shifted.pow(static_cast<unsigned>(m));
            if (!homogeneous_ok(g)) fail(errc::internal_error, "scaling generator failed its identity");
            found.push_back(g);
        }
    }
    std::reverse(found.begin(), found.end());
    space.basis = std::move(found);
    return space;
}

/// Membership of f in the span of a basis with pairwise distinct leading
/// degrees, by leading-term elimination.
inline bool in_span(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial r = f;
    while (!r.is_zero()) {
        const int d = *r.degree();
        const Polynomial* match = nullptr;
        for (const auto& b : basis)
            if (!b.is_zero() && *b.degree() == d) {
                match = &b;
                break;
            }
        if (!match) return false;
        r = r - (r.leading_coefficient() / match->leading_coefficient()) * *match;
    }
    return true;
}

/// Equality of the two affine spaces as point sets (basis-independent).
inline bool same_space(const SolutionSpace& a, const SolutionSpace& b) {
    if (!same_field(a.field, b.field)) return false;
    if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
    if (a.dimension() != b.dimension()) return false;
    for (const auto& v : a.basis)
        if (!in_span(v, b.basis)) return false;
    for (const auto& v : b.basis)
        if (!in_span(v, a.basis)) return false;
    return in_span(*a.particular - *b.particular, b.basis);
}

/// All members of a space over a finite field (the affine span, enumerated).
inline std::vector<Polynomial> enumerate_members(const SolutionSpace& space, std::uint64_t budget = 1000000) {
    if (space.is_empty()) return {};
    if (!space.field->is_finite()) fail(errc::infinite_field, "cannot enumerate members over an infinite field");
    const std::uint64_t q = *space.field->cardinality;
    std::uint64_t total = 1;
    for (int i = 0; i < space.dimension(); ++i) {
        if (total > budget / q) fail(errc::budget_exceeded, "member enumeration exceeds the budget");
        total *= q;
    }
    std::vector<Polynomial> members;
    members.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Polynomial f = *space.particular;
        std::uint64_t rest = idx;
        for (const auto& b : space.basis) {
            const std::uint64_t digit = rest % q;
            rest /= q;
            if (digit != 0) f = f + FieldElement::from_index(space.field, digit) * b;
        }
        members.push_back(std::move(f));
    }
    return members;
}

}  // namespace linrel

#endif  // LINREL_SOLVER_HPP
