#include "chessboard/graded.hpp"

#include <stdexcept>
#include <utility>

namespace chessboard {

namespace {

const ExactScalar& j_pow(int e) {
    static const ExactScalar table[3] = {ExactScalar::one(), ExactScalar::j(),
                                         ExactScalar::j2()};
    return table[((e % 3) + 3) % 3];
}

void require_grade(int grade) {
    if (grade < 0 || grade > 2)
        throw std::invalid_argument("GradedMatrix: grade must be 0, 1 or 2");
}

// Pattern slot k of grade g lives at row k, column (k+g) mod 3.
int slot_col(int slot, int grade) { return (slot + grade) % 3; }

}  // namespace

GradedMatrix::GradedMatrix(int grade, std::array<ExactScalar, 3> entries)
    : grade_(grade), m_(3) {
    require_grade(grade);
    for (int k = 0; k < 3; ++k) m_(k, slot_col(k, grade)) = std::move(entries[k]);
}

GradedMatrix::GradedMatrix(int grade, const Matrix<ExactScalar>& m) : grade_(grade), m_(m) {
    require_grade(grade);
    if (m.n() != 3) throw std::invalid_argument("GradedMatrix: expected a 3x3 matrix");
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (((c - r) % 3 + 3) % 3 != grade && !(m(r, c) == ExactScalar::zero()))
                throw std::invalid_argument(
                    "GradedMatrix: nonzero entry off the declared grade pattern");
}

GradedMatrix GradedMatrix::zero(int grade) { return {grade, std::array<ExactScalar, 3>{}}; }

GradedMatrix GradedMatrix::identity() {
    return {0, {ExactScalar::one(), ExactScalar::one(), ExactScalar::one()}};
}

GradedMatrix GradedMatrix::unit(int grade, int slot) {
    if (slot < 1 || slot > 3) throw std::invalid_argument("GradedMatrix: slot must be 1..3");
    std::array<ExactScalar, 3> e{};
    e[slot - 1] = ExactScalar::one();
    return {grade, e};
}

std::array<ExactScalar, 3> GradedMatrix::entries() const {
    return {m_(0, slot_col(0, grade_)), m_(1, slot_col(1, grade_)),
            m_(2, slot_col(2, grade_))};
}

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& o) {
    if (grade_ != o.grade_)
        throw std::invalid_argument("GradedMatrix: cannot add different grades");
    m_ += o.m_;
    return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& o) {
    if (grade_ != o.grade_)
        throw std::invalid_argument("GradedMatrix: cannot subtract different grades");
    m_ -= o.m_;
    return *this;
}

GradedMatrix GradedMatrix::operator-() const { return {grade_, -m_}; }

GradedMatrix operator*(const ExactScalar& s, GradedMatrix a) {
    a.m_ = s * a.m_;
    return a;
}

GradedMatrix eta() {
    return {1, {ExactScalar::one(), ExactScalar::one(), ExactScalar::one()}};
}

GradedMatrix graded_product(const GradedMatrix& a, const GradedMatrix& b) {
    // The validating constructor doubles as a cheap invariant check: a
    // product escaping the (a+b) mod 3 pattern would throw here.
    return {(a.grade() + b.grade()) % 3, a.matrix() * b.matrix()};
}

GradedMatrix graded_commutator(const GradedMatrix& a, const GradedMatrix& b) {
    GradedMatrix left = graded_product(a, b);
    return left -= j_pow(a.grade() * b.grade()) * graded_product(b, a);
}

GradedMatrix derivation(const GradedMatrix& a, const GradedMatrix& b) {
    return graded_commutator(a, b);
}

GradedMatrix jacobi_defect(const GradedMatrix& x, const GradedMatrix& y,
                           const GradedMatrix& z) {
    return graded_commutator(graded_commutator(x, y), z) +
           graded_commutator(graded_commutator(y, z), x) +
           graded_commutator(graded_commutator(z, x), y);
}

GradedMatrix matrix_d(const GradedMatrix& b) { return matrix_d_fixed_twist(b, b.grade()); }

GradedMatrix matrix_d_fixed_twist(const GradedMatrix& b, int e) {
    const GradedMatrix h = eta();
    GradedMatrix out = graded_product(h, b);
    return out -= j_pow(e) * graded_product(b, h);
}

GradedMatrix curvature_omega(const GradedMatrix& a) {
    if (a.grade() != 1)
        throw std::invalid_argument("curvature_omega: connection must have grade 1");
    const GradedMatrix a2 = graded_product(a, a);
    return matrix_d(matrix_d(a)) + matrix_d(a2) + graded_product(a, matrix_d(a)) +
           graded_product(a2, a);
}

bool flat_condition(const ExactScalar& alpha, const ExactScalar& beta,
                    const ExactScalar& gamma) {
    const ExactScalar lhs = (alpha + beta + gamma) +
                            (alpha * beta + beta * gamma + gamma * alpha) +
                            alpha * beta * gamma;
    return lhs == ExactScalar::zero();
}

bool flat_condition_product_form(const ExactScalar& alpha, const ExactScalar& beta,
                                 const ExactScalar& gamma) {
    const ExactScalar one = ExactScalar::one();
    return (alpha + one) * (beta + one) * (gamma + one) == one;
}

std::vector<std::array<ExactScalar, 3>> enumerate_symmetric_flat() {
    const ExactScalar z = ExactScalar::zero();
    const ExactScalar a = ExactScalar::j() - ExactScalar::one();
    const ExactScalar b = ExactScalar::j2() - ExactScalar::one();
    return {
        {z, z, z}, {a, a, a}, {b, b, b},  // fully symmetric
        {z, a, b}, {z, b, a}, {a, z, b}, {a, b, z}, {b, z, a}, {b, a, z},
    };
}

GradedMatrix graded_inverse(const GradedMatrix& u) {
    const auto e = u.entries();
    const ExactScalar prod = e[0] * e[1] * e[2];
    if (prod == ExactScalar::zero())
        throw std::invalid_argument("graded_inverse: singular matrix");
    if (u.grade() == 0)
        return {0, {e[0].inverse(), e[1].inverse(), e[2].inverse()}};
    // U³ = (αβγ)·identity for the off-diagonal grades.
    return prod.inverse() * graded_product(u, u);
}

GradedMatrix gauge_transform(const GradedMatrix& a, const GradedMatrix& u) {
    if (a.grade() != 1)
        throw std::invalid_argument("gauge_transform: connection must have grade 1");
    const GradedMatrix uinv = graded_inverse(u);
    return graded_product(graded_product(uinv, a), u) + graded_product(uinv, matrix_d(u));
}

ConjugationReport gauge_conjugation_check(const GradedMatrix& a, const GradedMatrix& u) {
    const GradedMatrix uinv = graded_inverse(u);
    const GradedMatrix prime = gauge_transform(a, u);
    const ExactScalar& ju = j_pow(u.grade());

    ConjugationReport report{true, true};
    for (int grade = 0; grade < 3; ++grade)
        for (int slot = 1; slot <= 3; ++slot) {
            const GradedMatrix b = GradedMatrix::unit(grade, slot);
            const GradedMatrix ub = graded_product(u, b);
            const GradedMatrix lhs =
                graded_product(uinv, matrix_d(ub) + graded_product(a, ub));
            if (!(lhs == ju * matrix_d(b) + graded_product(prime, b)))
                report.exact_identity = false;
            if (!(lhs == matrix_d(b) + ju * graded_product(prime, b)))
                report.displayed_identity = false;
        }
    return report;
}

}  // namespace chessboard
