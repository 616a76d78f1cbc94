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

#include <gtest/gtest.h>

#include "support.hpp"

using namespace linrel;
using namespace linrel::testsupport;

namespace {

SolutionSpace solve(const Field& f, long long a, long long b, long long c, long long d, int n) {
    return solve_affine(el(f, a), el(f, b), el(f, c), el(f, d), n);
}

SolutionSpace peel(const Field& f, long long a, long long b, long long c, long long d, int n) {
    return solve_affine_by_peeling(el(f, a), el(f, b), el(f, c), el(f, d), n);
}

TEST(SolveAffine, IdentityParametersGiveEverything) {
    const SolutionSpace s = solve(q_field(), 1, 0, 1, 0, 2);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(*s.particular, Polynomial::zero(q_field()));
    EXPECT_EQ(s.basis, (std::vector<Polynomial>{poly(q_field(), {1}), poly(q_field(), {0, 1}),
                                                poly(q_field(), {0, 0, 1})}));
}

TEST(SolveAffine, TranslationOverF3) {
    const SolutionSpace s = solve(f3(), 1, 1, 1, 1, 3);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(*s.particular, poly(f3(), {0, 1}));
    EXPECT_EQ(s.basis, (std::vector<Polynomial>{poly(f3(), {1}), poly(f3(), {0, -1, 0, 1})}));
    // x^3 = x + (x^3 - x) is a member
    EXPECT_TRUE(verify_affine(poly(f3(), {0, 0, 0, 1}), el(f3(), 1), el(f3(), 1), el(f3(), 1), el(f3(), 1)));
}

TEST(SolveAffine, ScalingOverF5) {
    const SolutionSpace s = solve(f5(), 2, 0, 2, 0, 5);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(*s.particular, Polynomial::zero(f5()));
    EXPECT_EQ(s.basis, (std::vector<Polynomial>{poly(f5(), {0, 1}), poly(f5(), {0, 0, 0, 0, 0, 1})}));
}

TEST(SolveAffine, ShiftedScalingOverQ) {
    const SolutionSpace s = solve(q_field(), 2, 1, 4, 0, 3);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(*s.particular, Polynomial::zero(q_field()));
    EXPECT_EQ(s.basis, (std::vector<Polynomial>{poly(q_field(), {1, 2, 1})}));  // (x+1)^2
    EXPECT_TRUE(verify_affine(s.basis[0], el(q_field(), 2), el(q_field(), 1), el(q_field(), 4), el(q_field(), 0)));
}

TEST(SolveAffine, InconsistentShift) {
    EXPECT_TRUE(solve(q_field(), 1, 0, 1, 5, 9).is_empty());
    EXPECT_TRUE(solve(f3(), 2, 0, 1, 2, 4).is_empty());  // gamma = 1 via 2^0? no: 1 != 2^m... delta != 0 case below
}

TEST(SolveAffine, FixedPointForcesDeltaZero) {
    // alpha != 1, gamma = 1: evaluate at the fixed point
    EXPECT_TRUE(solve(q_field(), 2, 0, 1, 3, 4).is_empty());
    const SolutionSpace s = solve(q_field(), 2, 0, 1, 0, 4);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(*s.particular, Polynomial::zero(q_field()));
    EXPECT_EQ(s.basis, (std::vector<Polynomial>{poly(q_field(), {1})}));  // only constants
}

TEST(SolveAffine, GammaNotAPowerOfAlpha) {
    const SolutionSpace s = solve(q_field(), 2, 0, 3, 0, 6);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(s.dimension(), 0);
    EXPECT_EQ(*s.particular, Polynomial::zero(q_field()));
    EXPECT_FALSE(s.has_nonconstant());
}

TEST(SolveAffine, TranslationWithGammaNotOne) {
    const SolutionSpace s = solve(q_field(), 1, 1, 2, 5, 6);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(s.dimension(), 0);
    EXPECT_EQ(*s.particular, Polynomial::constant(el(q_field(), -5)));  // delta/(1-gamma)
}

TEST(SolveAffine, ArgumentChecks) {
    EXPECT_EQ(thrown_code([] { solve(f3(), 0, 1, 1, 1, 2); }), errc::zero_alpha);
    EXPECT_EQ(thrown_code([] { solve(f3(), 1, 1, 0, 1, 2); }), errc::zero_gamma);
    EXPECT_EQ(thrown_code([] { solve(f3(), 1, 1, 1, 1, -1); }), errc::invalid_argument);
}

TEST(Peeling, MatchesClosedFormOnSpecCases) {
    EXPECT_EQ(peel(f3(), 1, 1, 1, 1, 3), solve(f3(), 1, 1, 1, 1, 3));
    EXPECT_EQ(peel(f5(), 2, 0, 2, 0, 5), solve(f5(), 2, 0, 2, 0, 5));
    EXPECT_EQ(peel(q_field(), 2, 1, 4, 0, 3), solve(q_field(), 2, 1, 4, 0, 3));
}

TEST(Peeling, TranslationBasisOverF2) {
    const SolutionSpace s = peel(f2(), 1, 1, 1, 0, 4);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(*s.particular, Polynomial::zero(f2()));
    EXPECT_EQ(s.basis,
              (std::vector<Polynomial>{poly(f2(), {1}), poly(f2(), {0, 1, 1}), poly(f2(), {0, 0, 1, 0, 1})}));
}

TEST(Peeling, SingleExponent) {
    const SolutionSpace s = peel(q_field(), 3, 0, 9, 0, 2);
    ASSERT_FALSE(s.is_empty());
    EXPECT_EQ(s.basis, (std::vector<Polynomial>{poly(q_field(), {0, 0, 1})}));
}

TEST(Peeling, AgreesWithSolveOnRandomInstances) {
    std::mt19937_64 rng(90);
    for (const Field& f : all_fields()) {
        for (int i = 0; i < 40; ++i) {
            const FieldElement alpha = random_nonzero(rng, f);
            const FieldElement beta = random_element(rng, f);
            const FieldElement gamma = random_nonzero(rng, f);
            const FieldElement delta = random_element(rng, f);
            const int n = static_cast<int>(rng() % 7);
            EXPECT_EQ(solve_affine(alpha, beta, gamma, delta, n),
                      solve_affine_by_peeling(alpha, beta, gamma, delta, n));
        }
    }
}

TEST(VerifyAffine, Examples) {
    EXPECT_TRUE(verify_affine(poly(f3(), {0, 0, 0, 1}), el(f3(), 1), el(f3(), 1), el(f3(), 1), el(f3(), 1)));
    EXPECT_TRUE(verify_affine(poly(q_field(), {0, 1}), el(q_field(), 1), el(q_field(), 1), el(q_field(), 1),
                              el(q_field(), 1)));
    EXPECT_FALSE(verify_affine(poly(q_field(), {0, 0, 1}), el(q_field(), 1), el(q_field(), 1), el(q_field(), 1),
                               el(q_field(), 1)));
}

TEST(Soundness, EveryReportedMemberSolves) {
    std::mt19937_64 rng(91);
    for (const Field& f : all_fields()) {
        for (int i = 0; i < 25; ++i) {
            const FieldElement alpha = random_nonzero(rng, f);
            const FieldElement beta = random_element(rng, f);
            const FieldElement gamma = random_nonzero(rng, f);
            const FieldElement delta = random_element(rng, f);
            const int n = static_cast<int>(rng() % 7);
            const SolutionSpace s = solve_affine(alpha, beta, gamma, delta, n);
            if (s.is_empty()) continue;
            EXPECT_TRUE(verify_affine(*s.particular, alpha, beta, gamma, delta));
            // a random combination is again a solution: the equation is affine in f
            Polynomial member = *s.particular;
            for (const auto& b : s.basis) {
                EXPECT_TRUE(verify_affine(*s.particular + b, alpha, beta, gamma, delta));
                member = member + random_element(rng, f) * b;
            }
            EXPECT_TRUE(verify_affine(member, alpha, beta, gamma, delta));
            if (!s.basis.empty()) EXPECT_LE(*s.basis.back().degree(), n);
        }
    }
}

TEST(Completeness, MatchesLinearSystemOverQAndF5) {
    std::mt19937_64 rng(92);
    for (const Field& f : {q_field(), f5()}) {
        for (int i = 0; i < 30; ++i) {
            const FieldElement alpha = random_nonzero(rng, f);
            const FieldElement beta = random_element(rng, f);
            const FieldElement gamma = random_nonzero(rng, f);
            const FieldElement delta = random_element(rng, f);
            const int n = static_cast<int>(rng() % 9);
            const SolutionSpace by_cases = solve_affine(alpha, beta, gamma, delta, n);
            const SolutionSpace by_rank = linear_system_solutions(f, alpha, beta, gamma, delta, n);
            EXPECT_TRUE(same_space(by_cases, by_rank))
                << to_string(alpha) << "," << to_string(beta) << "," << to_string(gamma) << ","
                << to_string(delta) << " n=" << n;
        }
    }
}

TEST(DimensionFormulas, TranslationCase) {
    // gamma = 1, beta != 0: dim = 1 + floor(n/p) in characteristic p, 1 over Q
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(solve(f3(), 1, 1, 1, 0, n).dimension(), 1 + n / 3);
        EXPECT_EQ(solve(f2(), 1, 1, 1, 0, n).dimension(), 1 + n / 2);
        EXPECT_EQ(solve(q_field(), 1, 1, 1, 0, n).dimension(), 1);
    }
}

TEST(DimensionFormulas, ScalingCase) {
    for (int n = 0; n <= 8; ++n) {
        const auto expected = discrete_log(el(f5(), 2), el(f5(), 4), static_cast<std::uint64_t>(n)).size();
        EXPECT_EQ(solve(f5(), 2, 3, 4, 1, n).dimension(), static_cast<int>(expected));
    }
}

TEST(SolutionSpace, MemberEnumeration) {
    const SolutionSpace s = solve(f3(), 1, 1, 1, 1, 2);
    const auto members = enumerate_members(s);
    ASSERT_EQ(members.size(), 3u);  // q^dim = 3^1
    EXPECT_TRUE(enumerate_members(solve(q_field(), 1, 0, 1, 5, 2)).empty());
}

TEST(SolutionSpace, SpanMembership) {
    const Field q = q_field();
    const std::vector<Polynomial> basis{poly(q, {1}), poly(q, {1, 2, 1})};
    EXPECT_TRUE(in_span(poly(q, {5, 4, 2}), basis));   // 2(x+1)^2 + 3
    EXPECT_FALSE(in_span(poly(q, {0, 1}), basis));
    EXPECT_TRUE(in_span(Polynomial::zero(q), basis));
}

}  // namespace
