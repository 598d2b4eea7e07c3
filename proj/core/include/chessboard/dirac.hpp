#pragma once

#include <array>
#include <complex>
#include <vector>

#include "chessboard/detail/matrix.hpp"
#include "chessboard/forms.hpp"
#include "chessboard/scalar.hpp"

namespace chessboard {

/// The 3x3 generator triple of the ternary Clifford relation together with
/// the grading matrix B = diag(1, j, j²).  All three generators live in the
/// grade-1 block pattern (entries only at (1,2), (2,3), (3,1)); they are
/// related through B by Q² = BQ¹ and Q³ = B²Q¹.
class TernaryCliffordRep {
public:
    TernaryCliffordRep();

    /// a in 1..3.
    const Matrix<ExactScalar>& q(int a) const;
    const Matrix<ExactScalar>& b() const { return b_; }

private:
    std::array<Matrix<ExactScalar>, 3> q_;
    Matrix<ExactScalar> b_;
};

/// 27 structure constants; at(a,b,c) with 1-based indices.
struct EtaTensor {
    std::array<ExactScalar, 27> values{};

    ExactScalar& at(int a, int b, int c) {
        return values[static_cast<size_t>(((a - 1) * 3 + (b - 1)) * 3 + (c - 1))];
    }
    const ExactScalar& at(int a, int b, int c) const {
        return values[static_cast<size_t>(((a - 1) * 3 + (b - 1)) * 3 + (c - 1))];
    }
    /// at(a,b,c) == at(b,c,a) == at(c,a,b) for every triple.
    bool is_cyclic() const;
};

/// Outcome of testing the two candidate symmetrizations of Q^a Q^b Q^c
/// against "= 3 eta^{abc} Id" over all 27 triples.
///
/// The "literal" sum ends with the reversed product Q^c Q^b Q^a; the
/// "cyclic" sum ends with Q^c Q^a Q^b.  Only the cyclic one is a scalar
/// multiple of the identity on every triple, and eta is extracted from it.
struct SymmetrizationReport {
    bool literal_scalar_on_all = false;
    /// First triple where the literal sum fails to be scalar, and its value.
    std::array<int, 3> literal_witness{0, 0, 0};
    Matrix<ExactScalar> literal_witness_value{3};

    bool cyclic_scalar_on_all = false;
    EtaTensor eta;
    bool eta_cyclic = false;
    /// The two three-cycle orbits carry distinct constants (j² on (1,2,3),
    /// j on (3,2,1)); any table assigning one reversed triple to both orbits
    /// is internally inconsistent, which this flag lets callers detect.
    bool orbit_values_distinct = false;
};

SymmetrizationReport symmetrization_check();

/// (Q¹∂₁ + Q²∂₂ + Q³∂₃ + mass·B)³ over commuting symbols — the variables of
/// the polynomial entries stand for ∂x, ∂y, ∂z.  Pass an ExactScalar for a
/// fixed mass or PolyFunction::variable(4) to keep it symbolic.
struct OperatorCube {
    Matrix<PolyFunction> matrix{3};
    /// Off-diagonal entries vanish identically and the diagonal entries agree.
    bool diagonal_scalar = false;
    /// The shared diagonal entry: ∂x³ + ∂y³ + ∂z³ − 3 ∂x∂y∂z + mass³.
    PolyFunction symbol;
    /// Coefficient of ∂x∂y∂z in the symbol.
    ExactScalar mixed_coefficient;
};

OperatorCube operator_cube(const PolyFunction& mass);

/// A point of (omega, k, m) space carrying the cylindrical coordinates
/// adapted to the [1,1,1] axis.  The derived quantities are recomputed from
/// k on every call so they can never go stale.
struct DispersionPoint {
    double omega = 0;
    double kx = 0, ky = 0, kz = 0;
    double m = 0;

    double zeta() const { return kx + ky + kz; }
    /// Real part of j·kx + j²·ky + kz.
    double chi() const { return kz - 0.5 * (kx + ky); }
    /// Imaginary part of j·kx + j²·ky + kz.
    double cyl_eta() const;
    double r2() const { return chi() * chi() + cyl_eta() * cyl_eta(); }
    double r() const;
    double phi() const;  // atan2(cyl_eta, chi)
};

/// Rebuilds k from cylindrical data: kz = (zeta + 2 chi)/3 with
/// chi = r cos(phi), cyl_eta = r sin(phi).
DispersionPoint from_cylinder(double omega, double zeta, double r, double phi,
                              double m);

/// kx³ + ky³ + kz³ − 3 kx ky kz + m³.
double dispersion_rhs(double kx, double ky, double kz, double m);

/// omega³ − dispersion_rhs.
double dispersion_residual(const DispersionPoint& p);

struct DispersionRoots {
    double real_root = 0;  // principal real cube root of the right-hand side
    std::complex<double> rotated_1, rotated_2;  // j and j² times the real root
};

DispersionRoots solve_omega(const std::array<double, 3>& k, double m);

/// Checks at the point that zeta·r² equals the cubic form
/// kx³+ky³+kz³−3kxkykz and that
/// (omega+zeta)(omega²−r²) + (omega−zeta)(omega²+r²) = 2(omega³ − zeta r²).
bool cylindrical_identity_check(const DispersionPoint& p, double tol = 1e-9);

enum class WaveSign { direct, conjugate };

/// One member of the nine-fold separated solution family
///
///   psi(t, r) = sum_{a,b} A_{ab} · T_a(t) · X_b(r),
///
/// T = (e^{wt}, e^{-wt/2} cos tau, e^{-wt/2} sin tau) with tau = (√3/2) w t,
/// X = (e^{k·r}, e^{-k·r/2} cos xi, e^{-k·r/2} sin xi) with xi = (√3/2) k·r.
/// Every product T_a X_b solves the third-order equation
/// ∂t³psi = (∂x³+∂y³+∂z³−3∂x∂y∂z)psi + m³psi exactly when (omega, k, m)
/// sits on the cubic dispersion surface, which the constructor enforces.
/// The conjugate family flips the sign of omega, k and m together (the
/// relation is odd, so it stays on the surface).
class PlaneWaveSolution {
public:
    PlaneWaveSolution(double omega, const std::array<double, 3>& k, double m,
                      const std::array<std::array<double, 3>, 3>& amplitudes,
                      WaveSign sign);

    double omega() const { return omega_; }
    const std::array<double, 3>& k() const { return k_; }
    double m() const { return m_; }
    WaveSign sign() const { return sign_; }
    double amplitude(int a, int b) const;  // 1-based

    /// Sign-adjusted values actually used in the exponentials.
    double effective_omega() const;
    std::array<double, 3> effective_k() const;
    double effective_m() const;

    /// T_a(t) · X_b(r) without the amplitude factor; a, b in 1..3.
    double basis(int a, int b, double t, const std::array<double, 3>& r) const;

    double operator()(double t, const std::array<double, 3>& r) const;

private:
    double omega_, m_;
    std::array<double, 3> k_;
    std::array<std::array<double, 3>, 3> amplitudes_;
    WaveSign sign_;
};

/// Max over the sample points (t, x, y, z) of
/// |∂t³psi − ∂x³psi − ∂y³psi − ∂z³psi + 3 ∂x∂y∂z psi − m³ psi|, third
/// derivatives by the five-point central stencil, the mixed term by products
/// of central first differences, both Richardson-refined
/// (4 D(h/2) − D(h))/3.
double residual_pde(const PlaneWaveSolution& sol,
                    const std::vector<std::array<double, 4>>& points,
                    double h = 1e-2);

/// Exponential-exponent bookkeeping over the 3x3 solution matrix, in exact
/// rationals: entry (a,b) carries e^{w_a·(wt) + w_b·(k·r)} with row and
/// column weights (1, −1/2, −1/2).  rows/cols select which solution rows and
/// columns enter (duplicates allowed, to build deliberately mismatched
/// products).
struct BoundednessReport {
    /// Every determinant term's exponents sum to zero (trig factors only).
    bool determinant_trig_only = false;
    /// Every 2x2 minor times its complementary entry is exponent-free
    /// (each Laplace-expansion term cancels).
    bool laplace_pairs_trig_only = false;
    /// A 2x2 minor on its own keeps the factor e^{−E} of its complementary
    /// entry; false for the standard matrix.
    bool minors_alone_trig_only = false;
    /// Minor exponents coincide with the sign-flipped (conjugate) entry at
    /// the complementary position — minors are conjugate-family objects.
    bool minor_matches_conjugate_entry = false;
    bool ok = false;  // determinant_trig_only && laplace_pairs_trig_only
};

BoundednessReport boundedness_check(const std::array<int, 3>& rows = {1, 2, 3},
                                    const std::array<int, 3>& cols = {1, 2, 3});

/// Per-point check of omega_a² − r_a² = M² and, once all three hold, of the
/// combined quadric Omega² − r₁² − r₂² − r₃² = 3M² with
/// Omega² = omega₁² + omega₂² + omega₃².
struct MassShellReport {
    bool all_points_on_shell = false;
    int failing_index = 0;  // 1-based index of the first violated point, 0 if none
    bool combined_holds = false;
    double max_defect = 0;
};

MassShellReport mass_shell_reduce(const std::array<DispersionPoint, 3>& points,
                                  double big_m, double tol = 1e-9);

}  // namespace chessboard
