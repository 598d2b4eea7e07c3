#include "chessboard/automorphism.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chessboard {

namespace {

ExactScalar det2(const SquareMatrix& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

void require_2x2(const SquareMatrix& m, const char* what) {
    if (m.n() != 2)
        throw std::invalid_argument(std::string(what) + ": expected a 2x2 matrix");
}

}  // namespace

bool check_lambda_equations(const SquareMatrix& lambda) {
    require_2x2(lambda, "check_lambda_equations");
    const ExactScalar& l11 = lambda(0, 0);
    const ExactScalar& l12 = lambda(0, 1);
    const ExactScalar& l21 = lambda(1, 0);
    const ExactScalar& l22 = lambda(1, 1);
    return l11 * (l22 * l11 - l12 * l21) == l22 &&
           l12 * (l21 * l12 - l11 * l22) == l21 &&
           l22 * (l11 * l22 - l21 * l12) == l11 &&
           l21 * (l12 * l21 - l22 * l11) == l12;
}

AutomorphismComponent component_of(const SquareMatrix& lambda) {
    if (!check_lambda_equations(lambda))
        throw std::invalid_argument("component_of: lambda equations not satisfied");
    const ExactScalar d = det2(lambda);
    AutomorphismComponent c;
    c.det = d;
    if (d == ExactScalar::one()) {
        c.tag = AutomorphismComponent::Tag::det_plus;
        c.diagonal_linked = lambda(0, 0) == lambda(1, 1);
        c.off_diagonal_linked = lambda(0, 1) == -lambda(1, 0);
    } else if (d == -ExactScalar::one()) {
        c.tag = AutomorphismComponent::Tag::det_minus;
        c.diagonal_linked = lambda(0, 0) == -lambda(1, 1);
        c.off_diagonal_linked = lambda(0, 1) == lambda(1, 0);
    } else {
        // Only the zero matrix passes the equations without det² = 1.
        throw std::invalid_argument("component_of: singular solution");
    }
    return c;
}

std::array<CubicMatrix, 2> transform_rho(const SquareMatrix& lambda,
                                         const SquareMatrix& u,
                                         const std::array<CubicMatrix, 2>& rho) {
    require_2x2(lambda, "transform_rho");
    require_2x2(u, "transform_rho");
    if (rho[0].n() != 2 || rho[1].n() != 2)
        throw std::invalid_argument("transform_rho: generators must be 2x2x2");
    if (det2(lambda) == ExactScalar::zero())
        throw std::invalid_argument("transform_rho: singular lambda");
    if (det2(u) == ExactScalar::zero())
        throw std::invalid_argument("transform_rho: singular u");

    // Push each generator through U on all three lower indices, then mix the
    // results with Λ.  U's summed index is its row index.
    std::array<CubicMatrix, 2> pushed{CubicMatrix(2), CubicMatrix(2)};
    for (int b = 0; b < 2; ++b)
        for (int p = 1; p <= 2; ++p)
            for (int r = 1; r <= 2; ++r)
                for (int s = 1; s <= 2; ++s) {
                    const ExactScalar& v = rho[b].at(p, r, s);
                    if (v == ExactScalar::zero()) continue;
                    for (int i = 1; i <= 2; ++i) {
                        const ExactScalar upi = u(p - 1, i - 1);
                        if (upi == ExactScalar::zero()) continue;
                        for (int k = 1; k <= 2; ++k) {
                            const ExactScalar urk = u(r - 1, k - 1);
                            if (urk == ExactScalar::zero()) continue;
                            for (int m = 1; m <= 2; ++m)
                                pushed[b].at(i, k, m) += upi * urk * u(s - 1, m - 1) * v;
                        }
                    }
                }

    std::array<CubicMatrix, 2> out{CubicMatrix(2), CubicMatrix(2)};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const ExactScalar& mix = lambda(a, b);
            if (mix == ExactScalar::zero()) continue;
            out[a] += mix * pushed[b];
        }
    return out;
}

std::array<CubicMatrix, 2> normalized_pair() {
    auto rho = rho_basis();
    // ζ²/√2 and ζ¹⁰/√2; 1/√2 written as √2/2 to stay in the rational basis.
    const ExactScalar half{Rational(1, 2)};
    const ExactScalar s1 = ExactScalar::zeta(2) * ExactScalar::sqrt2() * half;
    const ExactScalar s2 = ExactScalar::zeta(10) * ExactScalar::sqrt2() * half;
    return {s1 * rho[0], s2 * rho[1]};
}

bool pair_relations_hold(const std::array<CubicMatrix, 2>& pair) {
    const CubicMatrix& p1 = pair[0];
    const CubicMatrix& p2 = pair[1];
    const ExactScalar mj = -ExactScalar::j();
    const ExactScalar mj2 = -ExactScalar::j2();
    return j_bracket(p1, p2, p1) == -p2 && j_bracket(p2, p1, p2) == -p1 &&
           j_bracket(p1, p1, p2) == mj2 * p2 && j_bracket(p2, p2, p1) == mj2 * p1 &&
           j_bracket(p2, p1, p1) == mj * p2 && j_bracket(p1, p2, p2) == mj * p1;
}

bool reality_satisfied(const CubicMatrix& x) {
    // (T x)_{ikl} = x_{lki}, so conj ∘ T is exactly the reflection in play.
    return x == conjugate(transpose_T(x));
}

ComplexMatrix2 lambda_from_angles(double psi, double phi) {
    using C = std::complex<double>;
    const C im(0.0, 1.0);
    const ComplexMatrix2 hyper{{{C(std::cosh(psi)), im * std::sinh(psi)},
                                {-im * std::sinh(psi), C(std::cosh(psi))}}};
    const ComplexMatrix2 circ{{{C(std::cos(phi)), C(std::sin(phi))},
                               {C(-std::sin(phi)), C(std::cos(phi))}}};
    ComplexMatrix2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int k = 0; k < 2; ++k) out[r][c] += hyper[r][k] * circ[k][c];
    return out;
}

bool check_lambda_equations_numeric(const ComplexMatrix2& lambda, double tol) {
    const std::complex<double> l11 = lambda[0][0], l12 = lambda[0][1];
    const std::complex<double> l21 = lambda[1][0], l22 = lambda[1][1];
    return std::abs(l11 * (l22 * l11 - l12 * l21) - l22) <= tol &&
           std::abs(l12 * (l21 * l12 - l11 * l22) - l21) <= tol &&
           std::abs(l22 * (l11 * l22 - l21 * l12) - l11) <= tol &&
           std::abs(l21 * (l12 * l21 - l22 * l11) - l12) <= tol;
}

}  // namespace chessboard
