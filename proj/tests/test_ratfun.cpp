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

TEST(RationalFunction, CanonicalReduction) {
    const Field q = q_field();
    EXPECT_EQ(rf(q, "(x^2-1)/(x-1)"), rf(q, "x+1"));
    const RationalFunction half = rf(q, "x/(2x+2)");
    EXPECT_TRUE(half.den().is_monic());
    EXPECT_EQ(half.num(), FieldElement::from_rational(q, mpq_class(1, 2)) * poly(q, {0, 1}));
    EXPECT_EQ(half.den(), poly(q, {1, 1}));
}

TEST(RationalFunction, ReductionInvariantUnderArithmetic) {
    std::mt19937_64 rng(11);
    for (const Field& f : all_fields()) {
        for (int i = 0; i < 30; ++i) {
            const RationalFunction a = random_rational(rng, f, 3, 2);
            const RationalFunction b = random_rational(rng, f, 2, 3);
            for (const RationalFunction& r : {a + b, a - b, a * b}) {
                EXPECT_TRUE(r.den().is_monic());
                EXPECT_TRUE(gcd_monic(r.num(), r.den()).is_constant());
            }
        }
    }
}

TEST(RfCompose, Examples) {
    const Field q = q_field();
    const RationalFunction inv = rf(q, "1/x");
    EXPECT_EQ(rf_compose(inv, inv), RationalFunction::variable(q));
    const RationalFunction r = rf_compose(inv, rf(q, "2x"));
    EXPECT_EQ(r, rf(q, "1/(2x)"));
    EXPECT_EQ(r.num(), Polynomial::constant(FieldElement::from_rational(q, mpq_class(1, 2))));
    EXPECT_EQ(r.den(), poly(q, {0, 1}));
    const RationalFunction p = rf(q, "(x^2+1)/x");
    EXPECT_EQ(rf_compose(p, RationalFunction::variable(q)), p);
}

TEST(RfCompose, ConstantInner) {
    const Field q = q_field();
    const RationalFunction inv = rf(q, "1/x");
    EXPECT_EQ(rf_compose(inv, rf(q, "2")), rf(q, "1/2"));
    EXPECT_EQ(thrown_code([&] { rf_compose(inv, RationalFunction::zero(q)); }), errc::constant_pole_collision);
}

TEST(RfCompose, DegreesMultiply) {
    std::mt19937_64 rng(21);
    for (const Field& f : {q_field(), f5()}) {
        for (int i = 0; i < 20; ++i) {
            const RationalFunction a = random_nonzero_rational(rng, f, 2, 2);
            const RationalFunction b = random_nonzero_rational(rng, f, 2, 1);
            if (a.is_constant() || b.is_constant()) continue;
            EXPECT_EQ(*rf_compose(a, b).map_degree(), *a.map_degree() * *b.map_degree());
        }
    }
}

TEST(Mobius, InverseExamples) {
    const Field q = q_field();
    const MobiusMap shift = MobiusMap::translation(el(q, 1));
    EXPECT_EQ(to_string(shift.inverse()), "x - 1");
    EXPECT_EQ(to_string(MobiusMap::scaling(el(q, 2)).inverse()), "1/2x");
    const MobiusMap m = MobiusMap::from_rational(rf(q, "(x-1)/(x+1)"));
    EXPECT_TRUE((m * m.inverse()).is_identity());
    EXPECT_TRUE((m.inverse() * m).is_identity());
}

TEST(Mobius, NormalizationInvariant) {
    std::mt19937_64 rng(31);
    for (const Field& f : all_fields()) {
        for (int i = 0; i < 30; ++i) {
            const MobiusMap m = random_mobius(rng, f);
            // first nonzero of (a, b, c, d) is one
            for (const FieldElement* e : {&m.a(), &m.b(), &m.c(), &m.d()}) {
                if (!e->is_zero()) {
                    EXPECT_TRUE(e->is_one());
                    break;
                }
            }
            EXPECT_TRUE((m * m.inverse()).is_identity());
        }
    }
}

TEST(Mobius, FixedPointExamples) {
    const Field q = q_field();
    const auto only_inf = MobiusMap::translation(el(q, 1)).fixed_points();
    ASSERT_EQ(only_inf.size(), 1u);
    EXPECT_TRUE(only_inf[0].is_infinity());

    const auto zero_inf = MobiusMap::scaling(el(q, 2)).fixed_points();
    ASSERT_EQ(zero_inf.size(), 2u);
    EXPECT_EQ(zero_inf[0], Point::finite(el(q, 0)));
    EXPECT_TRUE(zero_inf[1].is_infinity());

    const auto pm1 = MobiusMap::from_rational(rf(q, "1/x")).fixed_points();
    ASSERT_EQ(pm1.size(), 2u);
    EXPECT_EQ(pm1[0], Point::finite(el(q, -1)));  // canonical order: -1 before 1
    EXPECT_EQ(pm1[1], Point::finite(el(q, 1)));

    EXPECT_TRUE(MobiusMap::from_rational(rf(q, "(x-1)/(x+1)")).fixed_points().empty());
    const auto f5_pts = MobiusMap::from_rational(rf(f5(), "(x-1)/(x+1)")).fixed_points();
    ASSERT_EQ(f5_pts.size(), 2u);
    EXPECT_EQ(f5_pts[0], Point::finite(el(f5(), 2)));
    EXPECT_EQ(f5_pts[1], Point::finite(el(f5(), 3)));

    EXPECT_EQ(thrown_code([&] { MobiusMap::identity(q).fixed_points(); }), errc::identity_map);
}

TEST(Mobius, FixedPointsAreFixed) {
    std::mt19937_64 rng(41);
    for (const Field& f : all_fields()) {
        for (int i = 0; i < 40; ++i) {
            const MobiusMap m = random_mobius(rng, f);
            if (m.is_identity()) continue;
            for (const Point& p : m.fixed_points()) EXPECT_EQ(m.apply(p), p);
        }
    }
}

TEST(Mobius, ConjugationMovesFixedPoints) {
    std::mt19937_64 rng(43);
    for (const Field& f : {q_field(), f5(), f4()}) {
        for (int i = 0; i < 30; ++i) {
            const MobiusMap m = random_mobius(rng, f);
            const MobiusMap v = random_mobius(rng, f);
            if (m.is_identity()) continue;
            const MobiusMap moved = conjugate(m, v);
            auto expected = m.fixed_points();
            for (auto& p : expected) p = v.inverse().apply(p);
            std::sort(expected.begin(), expected.end(),
                      [](const Point& a, const Point& b) { return canonical_less(a, b); });
            EXPECT_EQ(moved.fixed_points(), expected);
        }
    }
}

TEST(ValuationAtZero, Examples) {
    const Field q = q_field();
    EXPECT_EQ(valuation_at_zero(rf(q, "x^3")), 3);
    EXPECT_EQ(valuation_at_zero(rf(q, "1/x")), -1);
    EXPECT_EQ(valuation_at_zero(rf(q, "(x^6+1)/x^2")), -2);
    EXPECT_EQ(thrown_code([&] { valuation_at_zero(RationalFunction::zero(q)); }), errc::zero_function);
}

TEST(Mobius, ApplyToFunction) {
    const Field q = q_field();
    const MobiusMap twice = MobiusMap::scaling(el(q, 2));
    EXPECT_EQ(twice.apply_to_function(rf(q, "x^2")), rf(q, "2x^2"));
    const MobiusMap m = MobiusMap::from_rational(rf(q, "(x-1)/(x+1)"));
    EXPECT_EQ(m.apply_to_function(rf(q, "x^2")), rf(q, "(x^2-1)/(x^2+1)"));
}

TEST(Mobius, RejectsDegenerate) {
    const Field q = q_field();
    EXPECT_EQ(thrown_code([&] { MobiusMap(el(q, 1), el(q, 2), el(q, 2), el(q, 4)); }), errc::degenerate_mobius);
    EXPECT_EQ(thrown_code([&] { MobiusMap::from_rational(rf(q, "x^2")); }), errc::degenerate_mobius);
}

}  // namespace
