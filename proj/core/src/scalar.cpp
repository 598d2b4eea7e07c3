#include "chessboard/scalar.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chessboard {

namespace {

// Reduce a coefficient vector on powers zeta^0..zeta^{len-1} into the basis
// {zeta^0..zeta^7} using zeta^t = zeta^{t-4} - zeta^{t-8} for t >= 8.
template <std::size_t Len>
ExactScalar::Coeffs fold(std::array<Rational, Len> c) {
    static_assert(Len >= 8);
    for (std::size_t t = Len - 1; t >= 8; --t) {
        if (c[t] == 0) continue;
        c[t - 4] += c[t];
        c[t - 8] -= c[t];
        c[t] = 0;
    }
    ExactScalar::Coeffs out;
    for (std::size_t t = 0; t < 8; ++t) out[t] = std::move(c[t]);
    return out;
}

}  // namespace

ExactScalar ExactScalar::zeta(int k) {
    int r = k % 24;
    if (r < 0) r += 24;
    std::array<Rational, 24> c{};
    c[static_cast<std::size_t>(r)] = 1;
    return ExactScalar(fold(std::move(c)));
}

ExactScalar ExactScalar::j() { return zeta(8); }
ExactScalar ExactScalar::j2() { return zeta(16); }
ExactScalar ExactScalar::i() { return zeta(6); }
ExactScalar ExactScalar::sqrt2() { return zeta(3) + zeta(-3); }
ExactScalar ExactScalar::sqrt3() { return zeta(2) + zeta(-2); }

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    for (std::size_t t = 0; t < 8; ++t) c_[t] += o.c_[t];
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    for (std::size_t t = 0; t < 8; ++t) c_[t] -= o.c_[t];
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    // rational×rational needs no convolution or fold — and it is by far the
    // hottest case in matrix products over rational samples
    if (is_rational() && o.is_rational()) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::array<Rational, 15> conv{};
    for (std::size_t s = 0; s < 8; ++s) {
        if (c_[s] == 0) continue;
        for (std::size_t t = 0; t < 8; ++t) {
            if (o.c_[t] == 0) continue;
            conv[s + t] += c_[s] * o.c_[t];
        }
    }
    c_ = fold(std::move(conv));
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    return *this *= o.inverse();
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw std::domain_error("ExactScalar: division by zero");

    // Solve M x = e0 where column t of M holds the coordinates of
    // (*this) * zeta^t.  M is invertible for any nonzero field element.
    std::array<std::array<Rational, 9>, 8> m;  // augmented 8x9
    Coeffs col = c_;
    for (std::size_t t = 0; t < 8; ++t) {
        for (std::size_t r = 0; r < 8; ++r) m[r][t] = col[r];
        if (t + 1 < 8) {
            // multiply col by zeta: shift up, fold zeta^8 = zeta^4 - 1
            Rational top = col[7];
            for (std::size_t r = 7; r >= 1; --r) col[r] = col[r - 1];
            col[0] = 0;
            if (top != 0) {
                col[4] += top;
                col[0] -= top;
            }
        }
    }
    for (std::size_t r = 0; r < 8; ++r) m[r][8] = (r == 0) ? 1 : 0;

    // Gaussian elimination with exact pivoting.
    std::size_t row = 0;
    for (std::size_t colj = 0; colj < 8 && row < 8; ++colj) {
        std::size_t piv = row;
        while (piv < 8 && m[piv][colj] == 0) ++piv;
        if (piv == 8) continue;
        std::swap(m[piv], m[row]);
        Rational inv_p = m[row][colj];
        for (std::size_t cc = colj; cc < 9; ++cc) m[row][cc] /= inv_p;
        for (std::size_t rr = 0; rr < 8; ++rr) {
            if (rr == row || m[rr][colj] == 0) continue;
            Rational f = m[rr][colj];
            for (std::size_t cc = colj; cc < 9; ++cc) m[rr][cc] -= f * m[row][cc];
        }
        ++row;
    }
    if (row != 8) throw std::domain_error("ExactScalar: inverse of singular element");

    Coeffs x;
    for (std::size_t r = 0; r < 8; ++r) x[r] = m[r][8];
    return ExactScalar(std::move(x));
}

ExactScalar ExactScalar::conjugate() const {
    // zeta^t -> zeta^{24-t}; precompute the images of the eight basis powers.
    static const std::array<ExactScalar, 8> image = [] {
        std::array<ExactScalar, 8> im;
        for (int t = 0; t < 8; ++t) im[static_cast<std::size_t>(t)] = zeta((24 - t) % 24);
        return im;
    }();
    ExactScalar out;
    for (std::size_t t = 0; t < 8; ++t) {
        if (c_[t] == 0) continue;
        out += ExactScalar(c_[t]) * image[t];
    }
    return out;
}

ExactScalar ExactScalar::real_part() const {
    return (*this + conjugate()) * ExactScalar(Rational(1, 2));
}

ExactScalar ExactScalar::imag_part() const {
    return (*this - conjugate()) / (ExactScalar(2) * i());
}

bool ExactScalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool ExactScalar::is_rational() const {
    for (std::size_t t = 1; t < 8; ++t)
        if (c_[t] != 0) return false;
    return true;
}

std::optional<Rational> ExactScalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

ApproxComplex ExactScalar::to_complex() const {
    constexpr long double tau = 2.0L * std::numbers::pi_v<long double>;
    long double re = 0, im = 0;
    for (std::size_t t = 0; t < 8; ++t) {
        if (c_[t] == 0) continue;
        long double x = c_[t].convert_to<long double>();
        long double ang = tau * static_cast<long double>(t) / 24.0L;
        re += x * std::cos(ang);
        im += x * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string ExactScalar::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << c_[0];
    } else {
        for (std::size_t t = 0; t < 8; ++t) {
            if (t) os << '|';
            os << c_[t];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
    return os << s.str();
}

ExactScalar scalar_arith(const ExactScalar& a, const ExactScalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return a + b;
        case ScalarOp::sub: return a - b;
        case ScalarOp::mul: return a * b;
        case ScalarOp::div: return a / b;
    }
    throw std::invalid_argument("scalar_arith: unknown op");
}

}  // namespace chessboard
