#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chessboard {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Double-precision complex value used by the numeric backends.
struct ApproxComplex {
    double re = 0.0;
    double im = 0.0;

    std::complex<double> std() const { return {re, im}; }
    friend bool operator==(const ApproxComplex&, const ApproxComplex&) = default;
};

// Element of Q(zeta) with zeta = exp(2*pi*i/24), written in the power basis
// {1, zeta, ..., zeta^7} and reduced modulo the minimal polynomial
//
//     zeta^8 = zeta^4 - 1.
//
// phi(24) = 8, so this really is the 24th cyclotomic field.  It is the
// smallest field that simultaneously contains every constant the library
// needs:
//
//     j       = zeta^8        (primitive cube root of unity, 1 + j + j^2 = 0)
//     i       = zeta^6
//     sqrt(2) = zeta^3 + zeta^{-3}
//     sqrt(3) = zeta^2 + zeta^{-2}
//
// Coefficients are exact rationals, so every identity checked by the library
// is decidable: two scalars are equal iff their eight coordinates coincide.
class ExactScalar {
  public:
    using Coeffs = std::array<Rational, 8>;

    /// Zero.
    ExactScalar() = default;

    ExactScalar(int v) : ExactScalar(Rational(v)) {}
    ExactScalar(long long v) : ExactScalar(Rational(v)) {}
    ExactScalar(const Rational& v) { c_[0] = v; }

    explicit ExactScalar(Coeffs c) : c_(std::move(c)) {}

    // -- named constants ------------------------------------------------

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }

    /// zeta^k for any integer k (reduced mod 24 and then into the basis).
    static ExactScalar zeta(int k);

    /// Primitive cube root of unity, j = zeta^8.
    static ExactScalar j();
    /// j^2 = conjugate(j).
    static ExactScalar j2();
    /// Imaginary unit, i = zeta^6.
    static ExactScalar i();
    /// sqrt(2) = zeta^3 + zeta^{-3}.
    static ExactScalar sqrt2();
    /// sqrt(3) = zeta^2 + zeta^{-2}.
    static ExactScalar sqrt3();

    // -- ring / field operations -----------------------------------------

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    /// Throws std::domain_error on division by zero.
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

    /// Multiplicative inverse; throws std::domain_error on zero.
    ExactScalar inverse() const;

    /// Complex conjugation, the field automorphism zeta -> zeta^{-1}.
    ExactScalar conjugate() const;

    /// Exact real part, (x + conj(x))/2.
    ExactScalar real_part() const;
    /// Exact imaginary part, (x - conj(x))/(2i).  Still an ExactScalar.
    ExactScalar imag_part() const;

    // -- queries ----------------------------------------------------------

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a rational if all zeta coordinates above degree 0 vanish.
    std::optional<Rational> as_rational() const;

    const Coeffs& coeffs() const { return c_; }
    const Rational& coeff(int t) const { return c_.at(static_cast<std::size_t>(t)); }

    // -- numeric embedding -------------------------------------------------

    /// Embeds into C with zeta = exp(2*pi*i/24).
    ApproxComplex to_complex() const;

    /// Canonical text form: "p" or "p/q" for rationals, otherwise the eight
    /// coordinates joined with '|'.
    std::string str() const;

  private:
    Coeffs c_{};  // value-initialized: all zero
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

enum class ScalarOp { add, sub, mul, div };

/// Four-function arithmetic entry point; division by zero throws
/// std::domain_error.
ExactScalar scalar_arith(const ExactScalar& a, const ExactScalar& b, ScalarOp op);

inline ExactScalar conjugate(const ExactScalar& a) { return a.conjugate(); }
inline ApproxComplex to_complex(const ExactScalar& a) { return a.to_complex(); }

}  // namespace chessboard
