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

template <typename Fn>
void expect_error(errc code, Fn&& fn) {
    EXPECT_EQ(thrown_code(std::forward<Fn>(fn)), code) << "expected " << errc_name(code);
}

TEST(MakeField, Rationals) {
    const Field q = make_field("Q");
    EXPECT_EQ(q->characteristic, 0u);
    EXPECT_EQ(q->extension_degree, 1u);
    EXPECT_FALSE(q->cardinality.has_value());
}

TEST(MakeField, PrimeField) {
    const Field f = make_field("F5");
    EXPECT_EQ(f->characteristic, 5u);
    EXPECT_EQ(f->extension_degree, 1u);
    EXPECT_EQ(f->cardinality, 5u);
}

TEST(MakeField, ExtensionByCardinality) {
    const Field f = make_field("F4 mod t^2+t+1");
    EXPECT_EQ(f->characteristic, 2u);
    EXPECT_EQ(f->extension_degree, 2u);
    EXPECT_EQ(f->cardinality, 4u);
    EXPECT_TRUE(same_field(f, make_field("F2^2 mod t^2+t+1")));
}

TEST(MakeField, Errors) {
    expect_error(errc::non_prime_characteristic, [] { make_field("F6"); });
    expect_error(errc::syntax_error, [] { make_field("F4"); });  // missing modulus
    expect_error(errc::reducible_modulus, [] { make_field("F4 mod t^2+1"); });
    expect_error(errc::modulus_degree_mismatch, [] { make_field("F2^2 mod t^3+t+1"); });
    expect_error(errc::modulus_degree_mismatch, [] { make_field("F5 mod t^2+2"); });
}

TEST(FieldElement, CanonicalForms) {
    const Field q = q_field();
    EXPECT_EQ(FieldElement::from_rational(q, mpq_class(2, 4)), FieldElement::from_rational(q, mpq_class(1, 2)));
    EXPECT_EQ(el(f5(), 7), el(f5(), 2));
    EXPECT_EQ(el(f5(), -1), el(f5(), 4));
}

TEST(FieldElement, ExtensionArithmetic) {
    const Field f = f4();
    const FieldElement t = FieldElement::from_residues(f, {0, 1});
    const FieldElement t1 = FieldElement::from_residues(f, {1, 1});
    EXPECT_EQ(t * t, t1);                       // t^2 = t + 1
    EXPECT_EQ(t * t * t, el(f, 1));             // t^3 = 1
    EXPECT_EQ(t * t.inverse(), el(f, 1));
    EXPECT_EQ(t.inverse(), t1);                 // 1/t = t + 1 = t^2
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(el(q_field(), 1)), 1u);
    EXPECT_EQ(multiplicative_order(el(f5(), 1)), 1u);
    EXPECT_EQ(multiplicative_order(el(f5(), 2)), 4u);
    EXPECT_EQ(multiplicative_order(el(q_field(), 2)), std::nullopt);
    EXPECT_EQ(multiplicative_order(el(q_field(), -1)), 2u);
    EXPECT_EQ(multiplicative_order(FieldElement::from_residues(f4(), {0, 1})), 3u);
    expect_error(errc::zero_element, [] { multiplicative_order(el(f5(), 0)); });
}

TEST(MultiplicativeOrder, DividesGroupOrder) {
    for (const Field& f : {f5(), f4(), f9()}) {
        const std::uint64_t q = *f->cardinality;
        for (const auto& a : field_elements(f)) {
            if (a.is_zero()) continue;
            EXPECT_TRUE(a.pow(static_cast<long long>(q) - 1).is_one());
            const auto ord = multiplicative_order(a);
            ASSERT_TRUE(ord.has_value());
            EXPECT_EQ((q - 1) % *ord, 0u);
        }
    }
}

TEST(DiscreteLog, Examples) {
    EXPECT_EQ(discrete_log(el(f5(), 2), el(f5(), 2), 5), (std::vector<std::uint64_t>{1, 5}));
    EXPECT_EQ(discrete_log(el(q_field(), 2), el(q_field(), 4), 3), (std::vector<std::uint64_t>{2}));
    EXPECT_TRUE(discrete_log(el(q_field(), 2), el(q_field(), 3), 6).empty());
}

TEST(DiscreteLog, ArithmeticProgression) {
    // finite order: the hits are e0, e0+s, ...
    const auto hits = discrete_log(el(f7(), 2), el(f7(), 4), 20);  // 2 has order 3 mod 7
    ASSERT_FALSE(hits.empty());
    for (std::size_t i = 1; i < hits.size(); ++i) EXPECT_EQ(hits[i] - hits[i - 1], 3u);
}

TEST(FieldAxioms, RandomTriples) {
    std::mt19937_64 rng(20260810);
    for (const Field& f : all_fields()) {
        for (int i = 0; i < 200; ++i) {
            const FieldElement a = random_element(rng, f);
            const FieldElement b = random_element(rng, f);
            const FieldElement c = random_element(rng, f);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_TRUE((a + (-a)).is_zero());
            if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
            EXPECT_EQ(a == b, (a - b).is_zero());
        }
    }
}

TEST(CanonicalOrder, Deterministic) {
    std::mt19937_64 rng(7);
    for (const Field& f : all_fields()) {
        for (int i = 0; i < 100; ++i) {
            const FieldElement a = random_element(rng, f);
            const FieldElement b = random_element(rng, f);
            EXPECT_FALSE(canonical_less(a, a));
            if (a != b) EXPECT_NE(canonical_less(a, b), canonical_less(b, a));
        }
    }
}

TEST(Powers, NegativeExponents) {
    EXPECT_EQ(el(f5(), 2).pow(-1), el(f5(), 3));
    const Field q = q_field();
    EXPECT_EQ(el(q, 2).pow(-2), FieldElement::from_rational(q, mpq_class(1, 4)));
    EXPECT_TRUE(el(q, 7).pow(0).is_one());
}

}  // namespace
