#include "chessboard/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace chessboard {

namespace {

constexpr double kSqrt3Half = 0.8660254037844386467637231707529362;  // sqrt(3)/2

Matrix<ExactScalar> grade_one(const ExactScalar& top, const ExactScalar& mid,
                              const ExactScalar& low) {
    Matrix<ExactScalar> q(3);
    q(0, 1) = top;
    q(1, 2) = mid;
    q(2, 0) = low;
    return q;
}

/// m = s·Id for some scalar s?  Returns the scalar through `out`.
bool scalar_multiple_of_identity(const Matrix<ExactScalar>& m, ExactScalar& out) {
    for (int r = 0; r < m.n(); ++r)
        for (int c = 0; c < m.n(); ++c)
            if (r != c && !m(r, c).is_zero()) return false;
    for (int r = 1; r < m.n(); ++r)
        if (m(r, r) != m(0, 0)) return false;
    out = m(0, 0);
    return true;
}

}  // namespace

TernaryCliffordRep::TernaryCliffordRep()
    : q_{grade_one(ExactScalar(1), ExactScalar::j(), ExactScalar::j2()),
         grade_one(ExactScalar(1), ExactScalar::j2(), ExactScalar::j()),
         grade_one(ExactScalar(1), ExactScalar(1), ExactScalar(1))},
      b_(3) {
    b_(0, 0) = ExactScalar(1);
    b_(1, 1) = ExactScalar::j();
    b_(2, 2) = ExactScalar::j2();
}

const Matrix<ExactScalar>& TernaryCliffordRep::q(int a) const {
    if (a < 1 || a > 3) throw std::out_of_range("generator index must be 1..3");
    return q_[static_cast<size_t>(a - 1)];
}

bool EtaTensor::is_cyclic() const {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                if (at(a, b, c) != at(b, c, a) || at(a, b, c) != at(c, a, b))
                    return false;
    return true;
}

SymmetrizationReport symmetrization_check() {
    const TernaryCliffordRep rep;
    SymmetrizationReport report;
    report.literal_scalar_on_all = true;
    report.cyclic_scalar_on_all = true;

    const ExactScalar third(Rational(1, 3));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                const Matrix<ExactScalar> abc = rep.q(a) * rep.q(b) * rep.q(c);
                const Matrix<ExactScalar> bca = rep.q(b) * rep.q(c) * rep.q(a);
                const Matrix<ExactScalar> literal =
                    abc + bca + rep.q(c) * rep.q(b) * rep.q(a);
                const Matrix<ExactScalar> cyclic =
                    abc + bca + rep.q(c) * rep.q(a) * rep.q(b);

                ExactScalar s;
                if (!scalar_multiple_of_identity(literal, s) &&
                    report.literal_scalar_on_all) {
                    report.literal_scalar_on_all = false;
                    report.literal_witness = {a, b, c};
                    report.literal_witness_value = literal;
                }
                if (scalar_multiple_of_identity(cyclic, s)) {
                    report.eta.at(a, b, c) = third * s;
                } else {
                    report.cyclic_scalar_on_all = false;
                }
            }

    report.eta_cyclic = report.eta.is_cyclic();
    report.orbit_values_distinct =
        report.eta.at(1, 2, 3) != report.eta.at(3, 2, 1);
    return report;
}

OperatorCube operator_cube(const PolyFunction& mass) {
    const TernaryCliffordRep rep;
    Matrix<PolyFunction> op(3);
    for (int a = 1; a <= 3; ++a)
        op += rep.q(a).map([&](const ExactScalar& e) {
            return e * PolyFunction::variable(a);
        });
    op += rep.b().map([&](const ExactScalar& e) { return e * mass; });

    OperatorCube result;
    result.matrix = op * op * op;
    result.diagonal_scalar = true;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (r != c && !result.matrix(r, c).is_zero())
                result.diagonal_scalar = false;
    for (int r = 1; r < 3; ++r)
        if (!(result.matrix(r, r) == result.matrix(0, 0)))
            result.diagonal_scalar = false;
    result.symbol = result.matrix(0, 0);
    result.mixed_coefficient = result.symbol.coeff(Monomial{1, 2, 3});
    return result;
}

double DispersionPoint::cyl_eta() const { return kSqrt3Half * (kx - ky); }
double DispersionPoint::r() const { return std::sqrt(r2()); }
double DispersionPoint::phi() const { return std::atan2(cyl_eta(), chi()); }

DispersionPoint from_cylinder(double omega, double zeta, double r, double phi,
                              double m) {
    const double chi = r * std::cos(phi);
    const double eta = r * std::sin(phi);
    DispersionPoint p;
    p.omega = omega;
    p.m = m;
    p.kz = (zeta + 2.0 * chi) / 3.0;
    const double sum_xy = zeta - p.kz;       // kx + ky
    const double diff_xy = eta / kSqrt3Half;  // kx - ky
    p.kx = 0.5 * (sum_xy + diff_xy);
    p.ky = 0.5 * (sum_xy - diff_xy);
    return p;
}

double dispersion_rhs(double kx, double ky, double kz, double m) {
    return kx * kx * kx + ky * ky * ky + kz * kz * kz - 3.0 * kx * ky * kz +
           m * m * m;
}

double dispersion_residual(const DispersionPoint& p) {
    return p.omega * p.omega * p.omega - dispersion_rhs(p.kx, p.ky, p.kz, p.m);
}

DispersionRoots solve_omega(const std::array<double, 3>& k, double m) {
    const double rhs = dispersion_rhs(k[0], k[1], k[2], m);
    double root = std::cbrt(rhs);
    // snap to the nearest integer when that integer is an exact cube of rhs,
    // so perfect cubes come back with zero residual
    const double snapped = std::round(root);
    if (snapped * snapped * snapped == rhs) root = snapped;

    DispersionRoots roots;
    roots.real_root = root;
    const std::complex<double> j(-0.5, kSqrt3Half);
    roots.rotated_1 = j * root;
    roots.rotated_2 = std::conj(j) * root;
    return roots;
}

bool cylindrical_identity_check(const DispersionPoint& p, double tol) {
    const double cubic = dispersion_rhs(p.kx, p.ky, p.kz, 0.0);
    const double cylinder = p.zeta() * p.r2();
    const double scale = 1.0 + std::abs(cubic) + std::abs(cylinder);
    if (std::abs(cubic - cylinder) > tol * scale) return false;

    const double w = p.omega, z = p.zeta(), rr = p.r2();
    const double factored = (w + z) * (w * w - rr) + (w - z) * (w * w + rr);
    const double direct = 2.0 * (w * w * w - z * rr);
    return std::abs(factored - direct) <= tol * (1.0 + std::abs(direct));
}

PlaneWaveSolution::PlaneWaveSolution(
    double omega, const std::array<double, 3>& k, double m,
    const std::array<std::array<double, 3>, 3>& amplitudes, WaveSign sign)
    : omega_(omega), m_(m), k_(k), amplitudes_(amplitudes), sign_(sign) {
    DispersionPoint p;
    p.omega = omega;
    p.kx = k[0];
    p.ky = k[1];
    p.kz = k[2];
    p.m = m;
    if (std::abs(dispersion_residual(p)) > 1e-9)
        throw std::invalid_argument(
            "plane wave: (omega, k, m) violates the cubic dispersion relation");
}

double PlaneWaveSolution::amplitude(int a, int b) const {
    return amplitudes_[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)];
}

double PlaneWaveSolution::effective_omega() const {
    return sign_ == WaveSign::direct ? omega_ : -omega_;
}

std::array<double, 3> PlaneWaveSolution::effective_k() const {
    if (sign_ == WaveSign::direct) return k_;
    return {-k_[0], -k_[1], -k_[2]};
}

double PlaneWaveSolution::effective_m() const {
    return sign_ == WaveSign::direct ? m_ : -m_;
}

double PlaneWaveSolution::basis(int a, int b, double t,
                                const std::array<double, 3>& r) const {
    const double w = effective_omega();
    const std::array<double, 3> k = effective_k();
    const double kr = k[0] * r[0] + k[1] * r[1] + k[2] * r[2];
    const double tau = kSqrt3Half * w * t;
    const double xi = kSqrt3Half * kr;

    double time_part = 0;
    switch (a) {
        case 1: time_part = std::exp(w * t); break;
        case 2: time_part = std::exp(-0.5 * w * t) * std::cos(tau); break;
        case 3: time_part = std::exp(-0.5 * w * t) * std::sin(tau); break;
        default: throw std::out_of_range("basis row must be 1..3");
    }
    double space_part = 0;
    switch (b) {
        case 1: space_part = std::exp(kr); break;
        case 2: space_part = std::exp(-0.5 * kr) * std::cos(xi); break;
        case 3: space_part = std::exp(-0.5 * kr) * std::sin(xi); break;
        default: throw std::out_of_range("basis column must be 1..3");
    }
    return time_part * space_part;
}

double PlaneWaveSolution::operator()(double t,
                                     const std::array<double, 3>& r) const {
    double sum = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const double amp = amplitude(a, b);
            if (amp != 0) sum += amp * basis(a, b, t, r);
        }
    return sum;
}

namespace {

// five-point central stencil for the third derivative along axis `axis`
// (0 = t, 1..3 = x,y,z), O(h²)
double third_derivative(const PlaneWaveSolution& sol,
                        const std::array<double, 4>& at, int axis, double h) {
    const auto eval = [&](double offset) {
        std::array<double, 4> p = at;
        p[static_cast<size_t>(axis)] += offset;
        return sol(p[0], {p[1], p[2], p[3]});
    };
    return (eval(2 * h) - 2 * eval(h) + 2 * eval(-h) - eval(-2 * h)) /
           (2 * h * h * h);
}

// ∂x∂y∂z by the product of central first differences, O(h²)
double mixed_derivative(const PlaneWaveSolution& sol,
                        const std::array<double, 4>& at, double h) {
    double sum = 0;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1})
                sum += sx * sy * sz *
                       sol(at[0], {at[1] + sx * h, at[2] + sy * h, at[3] + sz * h});
    return sum / (8 * h * h * h);
}

double apply_operator(const PlaneWaveSolution& sol,
                      const std::array<double, 4>& at, double h) {
    const double m = sol.effective_m();
    return third_derivative(sol, at, 0, h) - third_derivative(sol, at, 1, h) -
           third_derivative(sol, at, 2, h) - third_derivative(sol, at, 3, h) +
           3.0 * mixed_derivative(sol, at, h) -
           m * m * m * sol(at[0], {at[1], at[2], at[3]});
}

}  // namespace

double residual_pde(const PlaneWaveSolution& sol,
                    const std::vector<std::array<double, 4>>& points, double h) {
    double worst = 0;
    for (const auto& at : points) {
        const double coarse = apply_operator(sol, at, h);
        const double fine = apply_operator(sol, at, h / 2);
        const double refined = (4.0 * fine - coarse) / 3.0;
        worst = std::max(worst, std::abs(refined));
    }
    return worst;
}

BoundednessReport boundedness_check(const std::array<int, 3>& rows,
                                    const std::array<int, 3>& cols) {
    const auto weight = [](int index) {
        if (index < 1 || index > 3)
            throw std::out_of_range("solution row/column index must be 1..3");
        return index == 1 ? Rational(1) : Rational(-1, 2);
    };
    // exponent of entry (a,b) as coefficients of (omega t, k·r)
    const auto entry = [&](int a, int b) {
        return std::array<Rational, 2>{weight(rows[static_cast<size_t>(a)]),
                                       weight(cols[static_cast<size_t>(b)])};
    };

    BoundednessReport report;
    report.determinant_trig_only = true;
    report.laplace_pairs_trig_only = true;
    report.minors_alone_trig_only = true;
    report.minor_matches_conjugate_entry = true;

    // every determinant term picks one entry per row and per column
    constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : kPerm) {
        Rational t_exp(0), r_exp(0);
        for (int a = 0; a < 3; ++a) {
            const auto e = entry(a, perm[a]);
            t_exp += e[0];
            r_exp += e[1];
        }
        if (t_exp != 0 || r_exp != 0) report.determinant_trig_only = false;
    }

    // minor at (i,j): rows != i, cols != j; its two products share one
    // exponent pair
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational minor_t(0), minor_r(0);
            for (int a = 0; a < 3; ++a) {
                if (a != i) minor_t += weight(rows[static_cast<size_t>(a)]);
                if (a != j) minor_r += weight(cols[static_cast<size_t>(a)]);
            }
            if (minor_t != 0 || minor_r != 0) report.minors_alone_trig_only = false;

            const auto complement = entry(i, j);
            if (minor_t + complement[0] != 0 || minor_r + complement[1] != 0)
                report.laplace_pairs_trig_only = false;
            // the conjugate family flips every exponent sign, so its (i,j)
            // entry carries exactly the minor's exponent
            if (minor_t != -complement[0] || minor_r != -complement[1])
                report.minor_matches_conjugate_entry = false;
        }

    report.ok = report.determinant_trig_only && report.laplace_pairs_trig_only;
    return report;
}

MassShellReport mass_shell_reduce(const std::array<DispersionPoint, 3>& points,
                                  double big_m, double tol) {
    MassShellReport report;
    report.all_points_on_shell = true;
    const double target = big_m * big_m;

    double omega2_sum = 0, r2_sum = 0;
    for (int a = 0; a < 3; ++a) {
        const DispersionPoint& p = points[static_cast<size_t>(a)];
        const double value = p.omega * p.omega - p.r2();
        const double defect = std::abs(value - target);
        report.max_defect = std::max(report.max_defect, defect);
        if (defect > tol * (1.0 + std::abs(target)) &&
            report.all_points_on_shell) {
            report.all_points_on_shell = false;
            report.failing_index = a + 1;
        }
        omega2_sum += p.omega * p.omega;
        r2_sum += p.r2();
    }

    if (report.all_points_on_shell) {
        const double combined = omega2_sum - r2_sum;
        report.combined_holds =
            std::abs(combined - 3.0 * target) <= tol * (1.0 + 3.0 * std::abs(target));
    }
    return report;
}

}  // namespace chessboard
