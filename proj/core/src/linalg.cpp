#include "chessboard/detail/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace chessboard::detail {

std::optional<std::vector<ExactScalar>> solve_in_span(
    const std::vector<std::vector<ExactScalar>>& basis,
    const std::vector<ExactScalar>& target) {
    const std::size_t cols = basis.size();
    const std::size_t rows = target.size();
    for (const auto& b : basis)
        if (b.size() != rows) throw std::invalid_argument("solve_in_span: length mismatch");

    // Augmented system [basis | target], eliminated column by column.
    std::vector<std::vector<ExactScalar>> m(rows, std::vector<ExactScalar>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c][r];
        m[r][cols] = target[r];
    }

    std::vector<std::optional<std::size_t>> pivot_row(cols);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        const ExactScalar inv = m[row][col].inverse();
        for (std::size_t c = col; c <= cols; ++c) m[row][c] = m[row][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const ExactScalar f = m[r][col];
            for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_row[col] = row;
        ++row;
    }

    // Inconsistent if any zero-row has nonzero augmented entry.
    for (std::size_t r = row; r < rows; ++r)
        if (!m[r][cols].is_zero()) return std::nullopt;

    std::vector<ExactScalar> x(cols, ExactScalar::zero());
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row[c]) x[c] = m[*pivot_row[c]][cols];

    // With free columns forced to zero the candidate may still miss; verify.
    for (std::size_t r = 0; r < rows; ++r) {
        ExactScalar acc;
        for (std::size_t c = 0; c < cols; ++c) acc += x[c] * basis[c][r];
        if (!(acc == target[r])) return std::nullopt;
    }
    return x;
}

namespace {

// Rescales the vector to primitive integer coordinates (all cyclotomic
// coefficients integral with overall content 1).  Rescaling never changes
// rank or nullity, and it is what keeps repeated elimination from drowning
// in giant denominators.
void primitivize(std::vector<ExactScalar>& v) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;

    Integer g = 0, l = 1;
    for (const auto& x : v)
        for (int t = 0; t < 8; ++t) {
            const Rational& r = x.coeff(t);
            if (r == 0) continue;
            g = gcd(g, numerator(r));
            l = lcm(l, denominator(r));
        }
    if (g == 0 || (g == 1 && l == 1)) return;

    const ExactScalar scale{Rational(l, g)};
    for (auto& x : v) x = scale * x;
}

}  // namespace

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) { return a * b % ModRank::kPrime; }

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    for (; exp; exp >>= 1) {
        if (exp & 1) acc = mod_mul(acc, base);
        base = mod_mul(base, base);
    }
    return acc;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, ModRank::kPrime - 2); }

std::uint64_t rational_mod(const Rational& r) {
    static const Integer p = ModRank::kPrime;
    const Integer num = numerator(r) % p;
    const Integer den = denominator(r) % p;
    if (den == 0) throw std::domain_error("ModRank: denominator divisible by the modulus");
    const auto n = static_cast<std::uint64_t>(num < 0 ? num + p : num);
    return mod_mul(n, mod_inv(static_cast<std::uint64_t>(den)));
}

}  // namespace

ModRank::ModRank() {
    // 31 generates F_p*; its (p−1)/24-th power is a primitive 24th root of
    // unity, i.e. a legitimate image for ζ.
    const std::uint64_t zeta = mod_pow(31, (kPrime - 1) / 24);
    std::uint64_t w = 1;
    for (auto& z : zeta_pow_) {
        z = w;
        w = mod_mul(w, zeta);
    }
}

std::uint64_t ModRank::to_mod(const ExactScalar& x) const {
    std::uint64_t acc = 0;
    for (int t = 0; t < 8; ++t) {
        const Rational& c = x.coeff(t);
        if (c == 0) continue;
        acc = (acc + mod_mul(rational_mod(c), zeta_pow_[static_cast<std::size_t>(t)])) % kPrime;
    }
    return acc;
}

bool ModRank::add(const std::vector<ExactScalar>& v) {
    if (rows_.size() >= v.size()) return false;

    std::vector<std::uint64_t> row(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) row[c] = to_mod(v[c]);

    for (const auto& [piv, stored] : rows_) {
        if (row[piv] == 0) continue;
        const std::uint64_t f = row[piv];
        for (std::size_t c = 0; c < row.size(); ++c)
            row[c] = (row[c] + kPrime - mod_mul(f, stored[c])) % kPrime;
    }
    std::size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (piv == row.size()) return false;

    const std::uint64_t inv = mod_inv(row[piv]);
    for (auto& x : row) x = mod_mul(x, inv);
    rows_.emplace_back(piv, std::move(row));
    return true;
}

bool IncrementalRank::add(std::vector<ExactScalar> v) {
    // rank is capped by the vector dimension — once saturated nothing new
    // can be independent
    if (rows_.size() >= v.size()) return false;

    primitivize(v);
    for (const auto& [piv, row] : rows_) {
        if (v[piv].is_zero()) continue;
        const ExactScalar f = v[piv];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * row[c];
        primitivize(v);
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv].is_zero()) ++piv;
    if (piv == v.size()) return false;

    const ExactScalar inv = v[piv].inverse();
    for (auto& x : v) x = x * inv;
    rows_.emplace_back(piv, std::move(v));
    return true;
}

}  // namespace chessboard::detail
