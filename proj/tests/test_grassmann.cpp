#include "chessboard/grassmann.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "chessboard/json_io.hpp"
#include "support/sampler.hpp"

namespace chessboard {
namespace {

GrassmannElement monomial(const GrassmannAlgebra& alg, const GrassmannWord& w,
                          const ExactScalar& c = ExactScalar::one()) {
    return c * alg.reduce(w);
}

GrassmannElement random_element(testsupport::Sampler& s, const GrassmannAlgebra& alg,
                                int terms) {
    const auto basis = alg.canonical_basis();
    GrassmannElement x = alg.zero();
    for (int t = 0; t < terms; ++t) {
        const auto& w = basis[static_cast<std::size_t>(
            s.range(0, static_cast<long long>(basis.size()) - 1))];
        x += monomial(alg, w, ExactScalar(s.rational()));
    }
    x += ExactScalar(s.rational()) * alg.unit();
    return x;
}

TEST(GrassmannBasis, ClosedFormCountMatchesEnumeration) {
    EXPECT_EQ(grassmann_dimension(1, false), 2);
    EXPECT_EQ(grassmann_dimension(2, false), 8);
    EXPECT_EQ(grassmann_dimension(3, false), 20);
    EXPECT_EQ(grassmann_dimension(1, true), 5);
    EXPECT_EQ(grassmann_dimension(2, true), 20);

    for (int n = 1; n <= 3; ++n) {
        for (bool conj : {false, true}) {
            const GrassmannAlgebra alg(n, conj);
            EXPECT_EQ(alg.dimension(), grassmann_dimension(n, conj));

            // Every listed word is a fixed point of the rewriting system and
            // no word appears twice; the unit has its own accessor.
            std::set<GrassmannWord> seen;
            for (const auto& w : alg.canonical_basis()) {
                EXPECT_FALSE(w.empty());
                EXPECT_TRUE(seen.insert(w).second);
                const GrassmannElement r = alg.reduce(w);
                ASSERT_EQ(r.terms().size(), 1u);
                EXPECT_EQ(r.coeff(w), ExactScalar::one());
            }
        }
    }
    EXPECT_THROW(grassmann_dimension(0, false), std::invalid_argument);
}

TEST(GrassmannReduce, TripleRotationsCarryCubeRootFactors) {
    const GrassmannAlgebra alg(3, true);

    // θ²θ³θ¹ needs two left rotations to reach θ¹θ²θ³.
    EXPECT_EQ(alg.reduce({2, 3, 1}), monomial(alg, {1, 2, 3}, ExactScalar::j2()));
    EXPECT_EQ(alg.reduce({3, 1, 2}), monomial(alg, {1, 2, 3}, ExactScalar::j()));
    EXPECT_EQ(alg.reduce({1, 2, 1}), monomial(alg, {1, 1, 2}, ExactScalar::j2()));

    // Conjugate triples rotate with the opposite root: j^{2k}.
    EXPECT_EQ(alg.reduce({-2, -3, -1}), monomial(alg, {-1, -2, -3}, ExactScalar::j()));
    EXPECT_EQ(alg.reduce({-3, -1, -2}), monomial(alg, {-1, -2, -3}, ExactScalar::j2()));

    // One left rotation always costs j (θ) respectively j² (θ̄).
    testsupport::Sampler s(0xC4B1C);
    for (int trial = 0; trial < 50; ++trial) {
        const int a = static_cast<int>(s.range(1, 3));
        const int b = static_cast<int>(s.range(1, 3));
        const int c = static_cast<int>(s.range(1, 3));
        EXPECT_EQ(alg.reduce({a, b, c}), ExactScalar::j() * alg.reduce({b, c, a}));
        EXPECT_EQ(alg.reduce({-a, -b, -c}),
                  ExactScalar::j2() * alg.reduce({-b, -c, -a}));
    }
}

TEST(GrassmannReduce, CubesQuarticsAndMixedTriplesVanish) {
    const GrassmannAlgebra alg(2, true);
    EXPECT_TRUE(alg.reduce({1, 1, 1}).is_zero());
    EXPECT_TRUE(alg.reduce({-2, -2, -2}).is_zero());
    EXPECT_TRUE(alg.reduce({1, 2, 1, 2}).is_zero());
    EXPECT_TRUE(alg.reduce({1, 1, 2, 2}).is_zero());
    EXPECT_TRUE(alg.reduce({1, -2, 1}).is_zero());
    EXPECT_TRUE(alg.reduce({1, 2, -1}).is_zero());
    EXPECT_TRUE(alg.reduce({-1, -2, 2}).is_zero());

    // Binary words survive untouched, squares included.
    EXPECT_EQ(alg.reduce({1, 1}), monomial(alg, {1, 1}));
    EXPECT_EQ(alg.reduce({2, 1}), monomial(alg, {2, 1}));
    EXPECT_EQ(alg.reduce({-1, -1}), monomial(alg, {-1, -1}));
}

TEST(GrassmannReduce, ConjugatePairsCanonicalizeThetaFirst) {
    const GrassmannAlgebra alg(2, true);
    EXPECT_EQ(alg.reduce({-2, 1}), monomial(alg, {1, -2}, ExactScalar::j2()));
    EXPECT_EQ(alg.reduce({1, -2}), monomial(alg, {1, -2}));

    // The commutation relation itself, stated as products: θ¹θ̄² = j·θ̄²θ¹.
    const auto lhs = alg.multiply(alg.theta(1), alg.theta_bar(2));
    const auto rhs = ExactScalar::j() * alg.multiply(alg.theta_bar(2), alg.theta(1));
    EXPECT_EQ(lhs, rhs);

    const GrassmannAlgebra plain(2, false);
    EXPECT_THROW(plain.reduce({-1}), std::invalid_argument);
    EXPECT_THROW(plain.theta_bar(1), std::invalid_argument);
    EXPECT_THROW(alg.reduce({0}), std::invalid_argument);
    EXPECT_THROW(alg.reduce({3}), std::invalid_argument);
}

TEST(GrassmannProduct, AssociativeWithUnitOnRandomElements) {
    testsupport::Sampler s(0xC4B1C);
    for (const GrassmannAlgebra alg : {GrassmannAlgebra(2, true), GrassmannAlgebra(3, false)}) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto x = random_element(s, alg, 4);
            const auto y = random_element(s, alg, 4);
            const auto z = random_element(s, alg, 4);
            EXPECT_EQ(alg.multiply(alg.multiply(x, y), z),
                      alg.multiply(x, alg.multiply(y, z)));
            EXPECT_EQ(alg.multiply(alg.unit(), x), x);
            EXPECT_EQ(alg.multiply(x, alg.unit()), x);
        }
    }
}

TEST(GrassmannProduct, ShapeMismatchesThrow) {
    const GrassmannAlgebra two(2, false);
    const GrassmannAlgebra three(3, false);
    const GrassmannAlgebra two_conj(2, true);

    EXPECT_THROW(two.multiply(two.theta(1), three.theta(1)), std::invalid_argument);
    EXPECT_THROW(two.multiply(two_conj.theta(1), two.theta(1)), std::invalid_argument);
    GrassmannElement x = two.theta(1);
    EXPECT_THROW(x += three.theta(1), std::invalid_argument);
    EXPECT_THROW(x -= two_conj.theta(1), std::invalid_argument);
}

TEST(GrassmannGrade, GradesAddModThreeAcrossProducts) {
    const GrassmannAlgebra alg(2, true);
    const auto basis = alg.canonical_basis();
    for (const auto& u : basis) {
        for (const auto& v : basis) {
            const auto prod = alg.multiply(monomial(alg, u), monomial(alg, v));
            if (prod.is_zero()) continue;
            ASSERT_TRUE(prod.grade().has_value());
            EXPECT_EQ(prod.grade().value(), (word_grade(u) + word_grade(v)) % 3);
        }
    }

    EXPECT_FALSE(alg.zero().grade().has_value());
    EXPECT_EQ(alg.unit().grade().value_or(-1), 0);
    EXPECT_EQ(alg.theta(1).grade().value_or(-1), 1);
    EXPECT_EQ(alg.theta_bar(1).grade().value_or(-1), 2);
    EXPECT_FALSE((alg.theta(1) + alg.theta_bar(1)).grade().has_value());
}

TEST(GrassmannGrade, ExtendedAlgebraSplitsSixSixEight) {
    const GrassmannAlgebra alg(2, true);
    std::map<int, int> count;
    for (const auto& w : alg.canonical_basis()) ++count[word_grade(w)];
    EXPECT_EQ(count[1], 6);  // θ^a and the four θ̄θ̄ words
    EXPECT_EQ(count[2], 6);  // θ̄^a and the four θθ words
    EXPECT_EQ(count[0], 8);  // four θθ̄ words plus two cyclic classes per sign
}

TEST(GrassmannPartial, TableOnTheThreeElementBasis) {
    const GrassmannAlgebra alg(1, false);
    const auto one = alg.unit();
    const auto X = alg.theta(1);
    const auto X2 = alg.multiply(X, X);
    const ExactScalar mj2 = -ExactScalar::j2();

    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(partial(k, one).is_zero());

    EXPECT_EQ(partial(1, X), one);
    EXPECT_EQ(partial(1, X2), mj2 * X);
    EXPECT_EQ(partial(2, X), X2);
    EXPECT_TRUE(partial(2, X2).is_zero());
    EXPECT_EQ(partial(3, X), X);
    EXPECT_EQ(partial(3, X2), mj2 * X2);

    EXPECT_THROW(partial(0, X), std::invalid_argument);
    EXPECT_THROW(partial(4, X), std::invalid_argument);
    const GrassmannAlgebra wide(2, false);
    EXPECT_THROW(partial(1, wide.theta(1)), std::invalid_argument);
    const GrassmannAlgebra conj(1, true);
    EXPECT_THROW(partial(1, conj.theta(1)), std::invalid_argument);
}

TEST(GrassmannPartial, GradedLeibnizHoldsUniformTwistDoesNot) {
    const GrassmannAlgebra alg(1, false);
    const std::vector<GrassmannElement> basis = {alg.unit(), alg.theta(1),
                                                 alg.multiply(alg.theta(1), alg.theta(1))};
    const ExactScalar jpow[3] = {ExactScalar::one(), ExactScalar::j(), ExactScalar::j2()};

    for (int k = 1; k <= 3; ++k) {
        for (const auto& x : basis) {
            for (const auto& y : basis) {
                const auto lhs = partial(k, alg.multiply(x, y));
                const auto rhs = alg.multiply(partial(k, x), y) +
                                 jpow[x.grade().value()] * alg.multiply(x, partial(k, y));
                EXPECT_EQ(lhs, rhs);
            }
        }
    }

    // Twisting by a flat j regardless of the left grade breaks already on
    // X²·X: the true rule gives 0, the flat one (j − j²)·X².
    const auto& X = basis[1];
    const auto& X2 = basis[2];
    const auto flat = alg.multiply(partial(1, X2), X) +
                      ExactScalar::j() * alg.multiply(X2, partial(1, X));
    EXPECT_TRUE(partial(1, alg.multiply(X2, X)).is_zero());
    EXPECT_EQ(flat, (ExactScalar::j() - ExactScalar::j2()) * X2);
}

TEST(GrassmannClosure, TernaryCombinationsFoldBackOntoTheGenerators) {
    const GrassmannAlgebra alg(1, false);
    const auto X = alg.theta(1);
    const auto X2 = alg.multiply(X, X);
    const ExactScalar mj2 = -ExactScalar::j2();

    auto d = [](int k, const GrassmannElement& e) { return partial(k, e); };
    for (const auto& x : {X, X2}) {
        EXPECT_EQ(d(1, d(2, d(2, x))) + d(2, d(1, d(2, x))) + d(2, d(2, d(1, x))),
                  mj2 * d(2, x));
        EXPECT_EQ(d(2, d(1, d(1, x))) + d(1, d(2, d(1, x))) + d(1, d(1, d(2, x))),
                  mj2 * d(1, x));
        // The third operator is already a binary composite.
        EXPECT_EQ(d(2, d(1, x)) - ExactScalar::j() * d(1, d(2, x)), d(3, x));
    }

    const DerivationClosureReport report = derivation_ternary_closure();
    EXPECT_TRUE(report.first_identity);
    EXPECT_TRUE(report.second_identity);
    EXPECT_TRUE(report.binary_escape);
    EXPECT_TRUE(report.third_from_binary);
    EXPECT_TRUE(report.ok());
}

TEST(GrassmannSerialization, WordStringsAndElementJsonRoundTrip) {
    EXPECT_EQ(word_str({}), "1");
    EXPECT_EQ(word_str({1, 2}), "t1.t2");
    EXPECT_EQ(word_str({1, -2}), "t1.tb2");
    EXPECT_EQ(word_str({-3}), "tb3");

    const GrassmannAlgebra alg(2, true);
    testsupport::Sampler s(0xC4B1C);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_element(s, alg, 5);
        const nlohmann::json encoded = x;
        EXPECT_EQ(encoded.at("n").get<int>(), 2);
        EXPECT_TRUE(encoded.at("conjugates").get<bool>());
        EXPECT_EQ(grassmann_from_json(encoded), x);
    }

    const nlohmann::json zero_json = alg.zero();
    EXPECT_TRUE(zero_json.at("terms").empty());
    EXPECT_EQ(grassmann_from_json(zero_json), alg.zero());
}

}  // namespace
}  // namespace chessboard
