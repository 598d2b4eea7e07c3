// The mixing matrices Λ that preserve the two-generator ternary bracket
// algebra: the quartic solution equations, the two group components, the
// boost/rotation angle parametrization, and the reality-preserving subfamily.
#include <gtest/gtest.h>

#include <chessboard/automorphism.hpp>
#include <chessboard/cubic.hpp>
#include <cmath>
#include <complex>
#include <random>

using namespace chessboard;

namespace {

const ExactScalar kZero = ExactScalar::zero();
const ExactScalar kOne = ExactScalar::one();
const ExactScalar kI = ExactScalar::i();

SquareMatrix lam(const ExactScalar& l11, const ExactScalar& l12, const ExactScalar& l21,
                 const ExactScalar& l22) {
    SquareMatrix m(2);
    m(0, 0) = l11;
    m(0, 1) = l12;
    m(1, 0) = l21;
    m(1, 1) = l22;
    return m;
}

// det_plus family [[a,b],[−b,a]] and det_minus family [[a,b],[b,−a]],
// both on the circle a² + b² = 1.
SquareMatrix det_plus_member(const ExactScalar& a, const ExactScalar& b) {
    return lam(a, b, -b, a);
}
SquareMatrix det_minus_member(const ExactScalar& a, const ExactScalar& b) {
    return lam(a, b, b, -a);
}

ExactScalar frac(int num, int den) { return ExactScalar{Rational(num, den)}; }

// Exact circle points: (1,0), (0,1), the 3-4-5 rotation, and the hyperbolic
// point (5/4, 3i/4) with (5/4)² + (3i/4)² = 1.
struct CirclePoint {
    ExactScalar a, b;
};
std::vector<CirclePoint> circle_points() {
    return {{kOne, kZero},
            {kZero, kOne},
            {frac(3, 5), frac(4, 5)},
            {frac(5, 4), frac(3, 4) * kI}};
}

}  // namespace

TEST(LambdaEquations, IdentityHoldsScalingFails) {
    EXPECT_TRUE(check_lambda_equations(SquareMatrix::identity(2)));
    EXPECT_FALSE(check_lambda_equations(ExactScalar(2) * SquareMatrix::identity(2)));
    // The zero matrix solves the equations trivially; classification rejects
    // it separately.
    EXPECT_TRUE(check_lambda_equations(SquareMatrix::zero(2)));
    EXPECT_THROW(check_lambda_equations(SquareMatrix::identity(3)), std::invalid_argument);
}

TEST(LambdaEquations, BothCircleFamiliesSolveExactly) {
    for (const auto& p : circle_points()) {
        const SquareMatrix plus = det_plus_member(p.a, p.b);
        const SquareMatrix minus = det_minus_member(p.a, p.b);
        EXPECT_TRUE(check_lambda_equations(plus));
        EXPECT_TRUE(check_lambda_equations(minus));
        // [det Λ]² = 1 exactly on both branches.
        const ExactScalar dp = plus(0, 0) * plus(1, 1) - plus(0, 1) * plus(1, 0);
        const ExactScalar dm = minus(0, 0) * minus(1, 1) - minus(0, 1) * minus(1, 0);
        EXPECT_EQ(dp * dp, kOne);
        EXPECT_EQ(dm * dm, kOne);
        EXPECT_EQ(dp, kOne);
        EXPECT_EQ(dm, -kOne);
    }
    // An off-circle rotation-shaped matrix fails.
    EXPECT_FALSE(check_lambda_equations(det_plus_member(frac(1, 2), frac(1, 2))));
    // Unit determinant alone is not enough: shears break the equations.
    EXPECT_FALSE(check_lambda_equations(lam(kOne, kOne, kZero, kOne)));
}

TEST(Component, ClassifiesBothFamilies) {
    const auto plus = component_of(SquareMatrix::identity(2));
    EXPECT_EQ(plus.tag, AutomorphismComponent::Tag::det_plus);
    EXPECT_EQ(plus.det, kOne);
    EXPECT_TRUE(plus.diagonal_linked);
    EXPECT_TRUE(plus.off_diagonal_linked);

    const auto minus = component_of(det_minus_member(kOne, kZero));  // diag(1,−1)
    EXPECT_EQ(minus.tag, AutomorphismComponent::Tag::det_minus);
    EXPECT_EQ(minus.det, -kOne);
    EXPECT_TRUE(minus.diagonal_linked);
    EXPECT_TRUE(minus.off_diagonal_linked);

    // The quarter rotation [[0,1],[−1,0]] sits in the unit component.
    EXPECT_EQ(component_of(det_plus_member(kZero, kOne)).tag,
              AutomorphismComponent::Tag::det_plus);

    for (const auto& p : circle_points()) {
        EXPECT_EQ(component_of(det_plus_member(p.a, p.b)).tag,
                  AutomorphismComponent::Tag::det_plus);
        EXPECT_EQ(component_of(det_minus_member(p.a, p.b)).tag,
                  AutomorphismComponent::Tag::det_minus);
    }

    EXPECT_THROW(component_of(ExactScalar(2) * SquareMatrix::identity(2)),
                 std::invalid_argument);
    EXPECT_THROW(component_of(SquareMatrix::zero(2)), std::invalid_argument);
}

TEST(Component, UnitComponentClosedUnderProductAndInverse) {
    std::vector<SquareMatrix> members;
    for (const auto& p : circle_points()) members.push_back(det_plus_member(p.a, p.b));

    for (const auto& x : members) {
        for (const auto& y : members) {
            const SquareMatrix xy = x * y;
            EXPECT_TRUE(check_lambda_equations(xy));
            EXPECT_EQ(component_of(xy).tag, AutomorphismComponent::Tag::det_plus);
        }
        // det 1 makes the inverse the adjugate: [[a,−b],[b,a]].
        const SquareMatrix inv = det_plus_member(x(0, 0), -x(0, 1));
        EXPECT_EQ(x * inv, SquareMatrix::identity(2));
        EXPECT_EQ(component_of(inv).tag, AutomorphismComponent::Tag::det_plus);
    }

    // Products of two reflected-component members land back in the unit
    // component: diag(1,−1) · [[0,1],[1,0]] = [[0,1],[−1,0]].
    const SquareMatrix prod = det_minus_member(kOne, kZero) * det_minus_member(kZero, kOne);
    EXPECT_EQ(prod, det_plus_member(kZero, kOne));
    EXPECT_EQ(component_of(prod).tag, AutomorphismComponent::Tag::det_plus);
}

TEST(TransformRho, IdentityFixesGeneratorsAndUActsOnAllSlots) {
    const SquareMatrix id = SquareMatrix::identity(2);
    const auto rho = rho_basis();
    const auto fixed = transform_rho(id, id, rho);
    EXPECT_EQ(fixed[0], rho[0]);
    EXPECT_EQ(fixed[1], rho[1]);

    // U = index swap relabels every slot value 1 ↔ 2.
    const SquareMatrix swap = lam(kZero, kOne, kOne, kZero);
    const std::array<CubicMatrix, 2> units{basis_unit(1, 2, 1, 2), basis_unit(2, 1, 1, 2)};
    const auto swapped = transform_rho(id, swap, units);
    EXPECT_EQ(swapped[0], basis_unit(2, 1, 2, 2));
    EXPECT_EQ(swapped[1], basis_unit(1, 2, 2, 2));

    // Λ mixes the two generators linearly.
    const SquareMatrix mix = lam(kOne, ExactScalar(3), kZero, kOne);
    const auto mixed = transform_rho(mix, id, units);
    EXPECT_EQ(mixed[0], units[0] + ExactScalar(3) * units[1]);
    EXPECT_EQ(mixed[1], units[1]);

    const SquareMatrix singular = lam(kOne, kOne, kOne, kOne);
    EXPECT_THROW(transform_rho(singular, id, rho), std::invalid_argument);
    EXPECT_THROW(transform_rho(id, singular, rho), std::invalid_argument);
    const std::array<CubicMatrix, 2> wrong{basis_unit(1, 1, 1, 3), basis_unit(1, 1, 2, 3)};
    EXPECT_THROW(transform_rho(id, id, wrong), std::invalid_argument);
}

TEST(NormalizedPair, BracketConstantsAreMinusOne) {
    const auto p = normalized_pair();
    EXPECT_EQ(j_bracket(p[0], p[1], p[0]), -p[1]);
    EXPECT_EQ(j_bracket(p[1], p[0], p[1]), -p[0]);
    EXPECT_TRUE(pair_relations_hold(p));
    // The raw generators carry constant 2j instead, so they fail the
    // normalized check.
    EXPECT_FALSE(pair_relations_hold(rho_basis()));
}

TEST(TransformRho, SolutionsPreserveBracketConstants) {
    const SquareMatrix id = SquareMatrix::identity(2);
    const auto pair = normalized_pair();
    for (const auto& p : circle_points()) {
        EXPECT_TRUE(pair_relations_hold(transform_rho(det_plus_member(p.a, p.b), id, pair)));
        EXPECT_TRUE(pair_relations_hold(transform_rho(det_minus_member(p.a, p.b), id, pair)));
    }
}

TEST(TransformRho, NonSolutionsBreakBracketConstants) {
    const SquareMatrix id = SquareMatrix::identity(2);
    const auto pair = normalized_pair();

    const SquareMatrix doubled = ExactScalar(2) * id;
    EXPECT_FALSE(check_lambda_equations(doubled));
    EXPECT_FALSE(pair_relations_hold(transform_rho(doubled, id, pair)));

    const SquareMatrix shear = lam(kOne, kOne, kZero, kOne);  // det 1, still no solution
    EXPECT_FALSE(check_lambda_equations(shear));
    EXPECT_FALSE(pair_relations_hold(transform_rho(shear, id, pair)));
}

TEST(Reality, NormalizedGeneratorsReflectToMinusThemselves) {
    const auto p = normalized_pair();
    EXPECT_EQ(conjugate(transpose_T(p[0])), -p[0]);
    EXPECT_EQ(conjugate(transpose_T(p[1])), -p[1]);
    EXPECT_FALSE(reality_satisfied(p[0]));

    // i·(t₁p¹ + t₂p²) with real rational t is exactly the real slice.
    const CubicMatrix x = kI * (p[0] + ExactScalar(2) * p[1]);
    EXPECT_TRUE(reality_satisfied(x));
    EXPECT_FALSE(reality_satisfied(kI * (p[0] + kI * p[1])));
}

TEST(Reality, RotationsPreserveTheRealSliceBoostsDoNot) {
    const SquareMatrix id = SquareMatrix::identity(2);
    const auto pair = normalized_pair();
    const auto real_combination = [&](const std::array<CubicMatrix, 2>& p) {
        return kI * (p[0] + ExactScalar(2) * p[1]);
    };
    EXPECT_TRUE(reality_satisfied(real_combination(pair)));

    // Real-entry rotation: stays real.
    const auto rotated = transform_rho(det_plus_member(frac(3, 5), frac(4, 5)), id, pair);
    EXPECT_TRUE(reality_satisfied(real_combination(rotated)));
    // diag(1,−1) also has real entries and preserves the slice.
    const auto reflected = transform_rho(det_minus_member(kOne, kZero), id, pair);
    EXPECT_TRUE(reality_satisfied(real_combination(reflected)));

    // The hyperbolic member has imaginary off-diagonal entries and leaves
    // the slice, even though it preserves the bracket constants.
    const auto boosted = transform_rho(det_plus_member(frac(5, 4), frac(3, 4) * kI), id, pair);
    EXPECT_TRUE(pair_relations_hold(boosted));
    EXPECT_FALSE(reality_satisfied(real_combination(boosted)));
}

TEST(Angles, SpecialValuesAndDeterminant) {
    const double tight = 1e-12;
    const auto at = [](const ComplexMatrix2& m, int r, int c) { return m[r][c]; };

    const ComplexMatrix2 id = lambda_from_angles(0.0, 0.0);
    EXPECT_NEAR(std::abs(at(id, 0, 0) - 1.0), 0.0, tight);
    EXPECT_NEAR(std::abs(at(id, 0, 1)), 0.0, tight);
    EXPECT_NEAR(std::abs(at(id, 1, 0)), 0.0, tight);
    EXPECT_NEAR(std::abs(at(id, 1, 1) - 1.0), 0.0, tight);

    const ComplexMatrix2 quarter = lambda_from_angles(0.0, std::acos(-1.0) / 2.0);
    EXPECT_NEAR(std::abs(at(quarter, 0, 0)), 0.0, tight);
    EXPECT_NEAR(std::abs(at(quarter, 0, 1) - 1.0), 0.0, tight);
    EXPECT_NEAR(std::abs(at(quarter, 1, 0) + 1.0), 0.0, tight);

    const std::complex<double> im(0.0, 1.0);
    const ComplexMatrix2 unitBoost = lambda_from_angles(1.0, 0.0);
    EXPECT_NEAR(std::abs(at(unitBoost, 0, 0) - std::cosh(1.0)), 0.0, tight);
    EXPECT_NEAR(std::abs(at(unitBoost, 0, 1) - im * std::sinh(1.0)), 0.0, tight);
    EXPECT_NEAR(std::abs(at(unitBoost, 1, 0) + im * std::sinh(1.0)), 0.0, tight);
    const std::complex<double> det = at(unitBoost, 0, 0) * at(unitBoost, 1, 1) -
                                     at(unitBoost, 0, 1) * at(unitBoost, 1, 0);
    EXPECT_NEAR(std::abs(det - 1.0), 0.0, tight);
}

TEST(Angles, TenSampledPairsSolveTheEquationsNumerically) {
    std::mt19937_64 gen(0xC4B1C);
    std::uniform_real_distribution<double> psi_dist(-2.0, 2.0);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::acos(-1.0));
    for (int trial = 0; trial < 10; ++trial) {
        const double psi = psi_dist(gen);
        const double phi = phi_dist(gen);
        const ComplexMatrix2 m = lambda_from_angles(psi, phi);
        EXPECT_TRUE(check_lambda_equations_numeric(m, 1e-9)) << "psi=" << psi << " phi=" << phi;
        // Unit-component shape, numerically: Λ¹₁ = Λ²₂ and Λ¹₂ = −Λ²₁.
        EXPECT_LT(std::abs(m[0][0] - m[1][1]), 1e-9);
        EXPECT_LT(std::abs(m[0][1] + m[1][0]), 1e-9);
        const std::complex<double> det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        EXPECT_LT(std::abs(det - 1.0), 1e-9);
    }
    EXPECT_FALSE(check_lambda_equations_numeric(
        ComplexMatrix2{{{2.0, 0.0}, {0.0, 2.0}}}, 1e-9));
}
