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

#ifndef LINREL_ORACLE_HPP
#define LINREL_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "linrel/linalg.hpp"
#include "linrel/ratfun.hpp"
#include "linrel/solver.hpp"

namespace linrel {

inline constexpr std::uint64_t default_budget = 10000000;  // candidate evaluations

namespace detail {

inline std::uint64_t candidate_count(std::uint64_t q, int slots, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < slots; ++i) {
        if (total > budget / q)
            fail(errc::budget_exceeded, "search space larger than the budget of " + std::to_string(budget));
        total *= q;
    }
    return total;
}

}  // namespace detail

/// Ground truth by brute force: every coefficient vector of degree <= n over
/// a finite field, tested against the identity directly. Candidates are
/// visited in base-q odometer order of (f_0, ..., f_n), which fixes the
/// output order.
inline std::vector<Polynomial> enumerate_solutions(const Field& field, const FieldElement& alpha,
                                                   const FieldElement& beta, const FieldElement& gamma,
                                                   const FieldElement& delta, int n,
                                                   std::uint64_t budget = default_budget) {
    if (!field->is_finite()) fail(errc::infinite_field, "enumeration needs a finite field");
    if (alpha.is_zero()) fail(errc::zero_alpha, "alpha must be nonzero");
    if (gamma.is_zero()) fail(errc::zero_gamma, "gamma must be nonzero");
    if (n < 0) fail(errc::invalid_argument, "degree bound must be nonnegative");
    const std::uint64_t q = *field->cardinality;
    const std::uint64_t total = detail::candidate_count(q, n + 1, budget);

    std::vector<Polynomial> hits;

    if (field->extension_degree == 1) {
        // prime-field fast path on raw residues
        const std::uint64_t p = field->characteristic;
        const std::uint64_t a = alpha.residues()[0], b = beta.residues()[0];
        const std::uint64_t g = gamma.residues()[0], d = delta.residues()[0];
        // rows of (a x + b)^i, built by repeated multiplication
        std::vector<std::vector<std::uint64_t>> gpow(static_cast<std::size_t>(n) + 1);
        gpow[0] = {1};
        for (int i = 1; i <= n; ++i) {
            const auto& prev = gpow[static_cast<std::size_t>(i - 1)];
            std::vector<std::uint64_t> cur(prev.size() + 1, 0);
            for (std::size_t j = 0; j < prev.size(); ++j) {
                cur[j] = (cur[j] + prev[j] * b) % p;
                cur[j + 1] = (cur[j + 1] + prev[j] * a) % p;
            }
            gpow[static_cast<std::size_t>(i)] = std::move(cur);
        }
        // column-major: sub[j][i] = coefficient of x^j in (a x + b)^i
        std::vector<std::vector<std::uint64_t>> sub(static_cast<std::size_t>(n) + 1,
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= i; ++j) sub[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                gpow[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

        std::vector<std::uint64_t> f(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            bool ok = true;
            for (int j = 0; j <= n && ok; ++j) {
                std::uint64_t lhs = 0;
                const auto& col = sub[static_cast<std::size_t>(j)];
                for (int i = j; i <= n; ++i) lhs += col[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)] % p;
                lhs %= p;
                const std::uint64_t rhs = (g * f[static_cast<std::size_t>(j)] + (j == 0 ? d : 0)) % p;
                ok = lhs == rhs;
            }
            if (ok) {
                std::vector<FieldElement> coeffs;
                coeffs.reserve(f.size());
                for (auto r : f) coeffs.push_back(FieldElement::from_residues(field, {r}));
                hits.push_back(Polynomial::from_coefficients(field, std::move(coeffs)));
            }
            // odometer step
            for (std::size_t k = 0; k < f.size(); ++k) {
                if (++f[k] < p) break;
                f[k] = 0;
            }
        }
        return hits;
    }

    // generic path for extension fields
    const Polynomial gp =
        Polynomial::monomial(alpha, 1) + Polynomial::constant(beta);
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(digits.size());
        for (auto dgt : digits) coeffs.push_back(FieldElement::from_index(field, dgt));
        const Polynomial f = Polynomial::from_coefficients(field, std::move(coeffs));
        if (compose(f, gp) == gamma * f + Polynomial::constant(delta)) hits.push_back(f);
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (++digits[k] < q) break;
            digits[k] = 0;
        }
    }
    return hits;
}

/// Ground truth by exact linear algebra: the identity is linear in the n+1
/// coefficients of f, so solve the (n+1) x (n+1) system over the field. The
/// nullspace comes back in reduced echelon form (monic, distinct leading
/// degrees, ascending).
inline SolutionSpace linear_system_solutions(const Field& field, const FieldElement& alpha, const FieldElement& beta,
                                             const FieldElement& gamma, const FieldElement& delta, int n) {
    if (alpha.is_zero()) fail(errc::zero_alpha, "alpha must be nonzero");
    if (gamma.is_zero()) fail(errc::zero_gamma, "gamma must be nonzero");
    if (n < 0) fail(errc::invalid_argument, "degree bound must be nonnegative");
    const FieldElement zero = FieldElement::zero(field);
    const std::size_t dim = static_cast<std::size_t>(n) + 1;

    // column i = coefficients of (alpha x + beta)^i, via repeated multiplication
    const Polynomial g = Polynomial::monomial(alpha, 1) + Polynomial::constant(beta);
    Matrix m(dim, Row(dim, zero));
    Polynomial power = Polynomial::constant(FieldElement::one(field));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m[j][i] = power.coeff(j);
        m[i][i] = m[i][i] - gamma;
        power = power * g;
    }
    Row rhs(dim, zero);
    rhs[0] = delta;

    const AffineSolution sol = solve_linear(std::move(m), std::move(rhs), field);
    SolutionSpace space{field, n, std::nullopt, {}};
    if (!sol.particular) return space;
    space.particular = Polynomial::from_coefficients(field, *sol.particular);
    for (const auto& v : sol.nullspace_basis) space.basis.push_back(Polynomial::from_coefficients(field, v));
    return space;
}

/// How a count was obtained.
struct CountResult {
    std::uint64_t count = 0;
    bool by_enumeration = false;  // false: dimension formula via the solver
};

/// Exact number of solutions of degree <= n: enumerated within the budget,
/// otherwise q^dim from the solver's space.
inline CountResult count_solutions(const Field& field, const FieldElement& alpha, const FieldElement& beta,
                                   const FieldElement& gamma, const FieldElement& delta, int n,
                                   std::uint64_t budget = default_budget) {
    if (!field->is_finite()) fail(errc::infinite_field, "counting needs a finite field");
    const std::uint64_t q = *field->cardinality;
    bool within_budget = true;
    std::uint64_t total = 1;
    for (int i = 0; i <= n && within_budget; ++i) {
        if (total > budget / q)
            within_budget = false;
        else
            total *= q;
    }
    if (within_budget) {
        const auto hits = enumerate_solutions(field, alpha, beta, gamma, delta, n, budget);
        return {static_cast<std::uint64_t>(hits.size()), true};
    }
    const SolutionSpace space = solve_affine(alpha, beta, gamma, delta, n);
    if (space.is_empty()) return {0, false};
    std::uint64_t count = 1;
    for (int i = 0; i < space.dimension(); ++i) {
        if (count > (std::uint64_t{1} << 62) / q) fail(errc::invalid_argument, "count overflows");
        count *= q;
    }
    return {count, false};
}

/// Number of f with deg f < q commuting with x + beta, i.e. solving
/// f(x + beta) = f(x) + beta. Equals q^(q/p).
inline CountResult count_commuting_translation(const Field& field, const FieldElement& beta,
                                               std::uint64_t budget = default_budget) {
    if (!field->is_finite()) fail(errc::infinite_field, "counting needs a finite field");
    if (beta.is_zero()) fail(errc::zero_beta, "beta must be nonzero");
    const FieldElement one = FieldElement::one(field);
    const int n = static_cast<int>(*field->cardinality) - 1;
    return count_solutions(field, one, beta, one, beta, n, budget);
}

/// Number of f with deg f < q commuting with alpha x + beta (alpha of
/// multiplicative order s, alpha != 0, 1), i.e. solving
/// f(alpha x + beta) = alpha f(x) + beta. Equals q^((q-1)/s).
inline CountResult count_commuting_scaling(const Field& field, const FieldElement& alpha, const FieldElement& beta,
                                           std::uint64_t budget = default_budget) {
    if (!field->is_finite()) fail(errc::infinite_field, "counting needs a finite field");
    if (alpha.is_zero()) fail(errc::zero_alpha, "alpha must be nonzero");
    if (alpha.is_one()) fail(errc::invalid_argument, "alpha must differ from 1");
    const int n = static_cast<int>(*field->cardinality) - 1;
    return count_solutions(field, alpha, beta, alpha, beta, n, budget);
}

/// Exhaustive search for rational f with f(alpha x) = f(x) + 1 for some
/// alpha in K^*, over all reduced f with numerator degree <= max_num_deg and
/// monic denominator degree <= max_den_deg. The classification predicts the
/// empty list; anything found would be a counterexample.
inline std::vector<RationalFunction> search_mixed_counterexamples(const Field& field, int max_num_deg,
                                                                  int max_den_deg,
                                                                  std::uint64_t budget = default_budget) {
    if (!field->is_finite()) fail(errc::infinite_field, "the search needs a finite field");
    if (max_num_deg < 0 || max_den_deg < 0) fail(errc::invalid_argument, "degree bounds must be nonnegative");
    const std::uint64_t q = *field->cardinality;

    // budget: numerators * monic denominators * nonzero alphas
    std::uint64_t num_total = detail::candidate_count(q, max_num_deg + 1, budget);
    std::uint64_t den_total = 0;
    std::uint64_t den_pow = 1;
    for (int d = 0; d <= max_den_deg; ++d) {
        den_total += den_pow;
        den_pow *= q;
    }
    if (num_total > budget / (den_total * (q - 1)))
        fail(errc::budget_exceeded, "search space larger than the budget");

    const FieldElement zero = FieldElement::zero(field);
    const FieldElement one_elem = FieldElement::one(field);
    std::vector<RationalFunction> hits;

    std::vector<std::uint64_t> num_digits(static_cast<std::size_t>(max_num_deg) + 1, 0);
    for (std::uint64_t ni = 0; ni < num_total; ++ni) {
        std::vector<FieldElement> ncoeffs;
        ncoeffs.reserve(num_digits.size());
        for (auto dgt : num_digits) ncoeffs.push_back(FieldElement::from_index(field, dgt));
        const Polynomial num = Polynomial::from_coefficients(field, std::move(ncoeffs));
        for (std::size_t k = 0; k < num_digits.size(); ++k) {
            if (++num_digits[k] < q) break;
            num_digits[k] = 0;
        }
        if (num.is_zero()) continue;  // f = 0 cannot satisfy f(alpha x) = f(x) + 1

        for (int dd = 0; dd <= max_den_deg; ++dd) {
            std::uint64_t free_total = 1;
            for (int i = 0; i < dd; ++i) free_total *= q;
            std::vector<std::uint64_t> den_digits(static_cast<std::size_t>(dd), 0);
            for (std::uint64_t di = 0; di < free_total; ++di) {
                std::vector<FieldElement> dcoeffs;
                dcoeffs.reserve(den_digits.size() + 1);
                for (auto dgt : den_digits) dcoeffs.push_back(FieldElement::from_index(field, dgt));
                dcoeffs.push_back(one_elem);  // monic
                const Polynomial den = Polynomial::from_coefficients(field, std::move(dcoeffs));
                for (std::size_t k = 0; k < den_digits.size(); ++k) {
                    if (++den_digits[k] < q) break;
                    den_digits[k] = 0;
                }
                if (!gcd_monic(num, den).is_constant()) continue;  // visit each reduced f once

                for (std::uint64_t ai = 1; ai < q; ++ai) {
                    const FieldElement alpha = FieldElement::from_index(field, ai);
                    // f(alpha x) = f(x) + 1 cleared: A(ax) B(x) = (A(x) + B(x)) B(ax)
                    const Polynomial num_scaled = affine_substitute(num, alpha, zero);
                    const Polynomial den_scaled = affine_substitute(den, alpha, zero);
                    if (num_scaled * den == (num + den) * den_scaled)
                        hits.push_back(RationalFunction(num, den));
                }
            }
        }
    }
    return hits;
}

}  // namespace linrel

#endif  // LINREL_ORACLE_HPP
