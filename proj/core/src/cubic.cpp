#include "chessboard/cubic.hpp"

#include <stdexcept>

#include "chessboard/detail/linalg.hpp"
#include "chessboard/detail/parallel.hpp"

namespace chessboard {

namespace {

struct Entry {
    int a, b, c;  // 1-based index triple
    const ExactScalar* v;
};

std::vector<Entry> nonzero_entries(const CubicMatrix& m) {
    std::vector<Entry> out;
    const int n = m.n();
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
                const ExactScalar& v = m.at(i, k, l);
                if (!v.is_zero()) out.push_back({i, k, l, &v});
            }
    return out;
}

void check_same_dim(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c) {
    if (a.n() != b.n() || a.n() != c.n())
        throw std::invalid_argument("ternary product: dimension mismatch");
}

/// x with value 1 at (i,k,m), w at one cyclic rotation, w² at the other.
CubicMatrix orbit_pattern(int i, int k, int m, int n, const ExactScalar& w) {
    CubicMatrix x(n);
    x.at(i, k, m) = ExactScalar::one();
    x.at(k, m, i) = w;
    x.at(m, i, k) = w * w;
    return x;
}

}  // namespace

CubicMatrix::CubicMatrix(int n)
    : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                static_cast<std::size_t>(n)) {
    if (n <= 0) throw std::invalid_argument("CubicMatrix: dimension must be positive");
}

std::size_t CubicMatrix::idx(int i, int k, int m) const {
    if (i < 1 || i > n_ || k < 1 || k > n_ || m < 1 || m > n_)
        throw std::out_of_range("CubicMatrix: index out of range");
    const auto ii = static_cast<std::size_t>(i - 1);
    const auto kk = static_cast<std::size_t>(k - 1);
    const auto mm = static_cast<std::size_t>(m - 1);
    const auto nn = static_cast<std::size_t>(n_);
    return (ii * nn + kk) * nn + mm;
}

void CubicMatrix::check_dim(const CubicMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CubicMatrix: dimension mismatch");
}

bool CubicMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

CubicMatrix& CubicMatrix::operator+=(const CubicMatrix& o) {
    check_dim(o);
    for (std::size_t t = 0; t < e_.size(); ++t) e_[t] += o.e_[t];
    return *this;
}

CubicMatrix& CubicMatrix::operator-=(const CubicMatrix& o) {
    check_dim(o);
    for (std::size_t t = 0; t < e_.size(); ++t) e_[t] -= o.e_[t];
    return *this;
}

CubicMatrix CubicMatrix::operator-() const {
    CubicMatrix r(n_);
    for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = -e_[t];
    return r;
}

CubicMatrix operator*(const ExactScalar& s, CubicMatrix a) {
    for (auto& x : a.e_) x = s * x;
    return a;
}

CubicMatrix basis_unit(int i, int k, int m, int n) {
    CubicMatrix u(n);
    u.at(i, k, m) = ExactScalar::one();
    return u;
}

CubicMatrix star(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c) {
    check_same_dim(a, b, c);
    CubicMatrix r(a.n());
    // (a*b*c)_{ikm} = Σ_{pqr} a_{piq} b_{qkr} c_{rmp}
    for (const Entry& ea : nonzero_entries(a))          // (p, i, q)
        for (const Entry& eb : nonzero_entries(b)) {    // (q, k, r)
            if (eb.a != ea.c) continue;
            for (const Entry& ec : nonzero_entries(c))  // (r, m, p)
                if (ec.a == eb.c && ec.c == ea.a)
                    r.at(ea.b, eb.b, ec.b) += *ea.v * *eb.v * *ec.v;
        }
    return r;
}

CubicMatrix oslash(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c) {
    check_same_dim(a, b, c);
    CubicMatrix r(a.n());
    // (a ⊘ b ⊘ c)_{ikm} = Σ_{pqr} a_{ipq} b_{pkr} c_{qrm}
    for (const Entry& ea : nonzero_entries(a))          // (i, p, q)
        for (const Entry& eb : nonzero_entries(b)) {    // (p, k, r)
            if (eb.a != ea.b) continue;
            for (const Entry& ec : nonzero_entries(c))  // (q, r, m)
                if (ec.a == ea.c && ec.b == eb.c)
                    r.at(ea.a, eb.b, ec.c) += *ea.v * *eb.v * *ec.v;
        }
    return r;
}

CubicMatrix cyclic_J(const CubicMatrix& a) {
    const int n = a.n();
    CubicMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= n; ++m) r.at(i, k, m) = a.at(k, m, i);
    return r;
}

CubicMatrix transpose_T(const CubicMatrix& a) {
    const int n = a.n();
    CubicMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= n; ++m) r.at(i, k, m) = a.at(m, k, i);
    return r;
}

CubicMatrix conjugate(const CubicMatrix& a) {
    const int n = a.n();
    CubicMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= n; ++m) r.at(i, k, m) = a.at(i, k, m).conjugate();
    return r;
}

Matrix<ExactScalar> n_fold_product(const std::vector<Matrix<ExactScalar>>& ops) {
    if (ops.size() != 2)
        throw std::invalid_argument("n_fold_product: order-2 tensors need exactly 2 operands");
    return ops[0] * ops[1];
}

CubicMatrix n_fold_product(const std::vector<CubicMatrix>& ops) {
    if (ops.size() != 3)
        throw std::invalid_argument("n_fold_product: order-3 tensors need exactly 3 operands");
    // General contraction: factor k carries the chain indices
    // (j_{1k},...,j_{k-1,k}, i_k, j_{k,k+1},...,j_{kn}).  For n = 3:
    //   m_{i1 i2 i3} = Σ_{j12 j13 j23} a_{i1 j12 j13} b_{j12 i2 j23} c_{j13 j23 i3},
    // which after renaming (j12,j13,j23) -> (p,q,r) is exactly the ⊘ law.
    return oslash(ops[0], ops[1], ops[2]);
}

Decomposition decompose(const CubicMatrix& a) {
    const int n = a.n();
    CubicMatrix diag(n);
    for (int k = 1; k <= n; ++k) diag.at(k, k, k) = a.at(k, k, k);

    const CubicMatrix off = a - diag;
    const CubicMatrix r1 = cyclic_J(off);
    const CubicMatrix r2 = cyclic_J(r1);

    const ExactScalar third(Rational(1, 3));
    const ExactScalar j = ExactScalar::j();
    const ExactScalar j2 = ExactScalar::j2();

    Decomposition d{
        diag,
        third * (off + r1 + r2),            // J x = x
        third * (off + j * r1 + j2 * r2),   // J x = j² x (ρ pattern)
        third * (off + j2 * r1 + j * r2),   // J x = j x  (κ pattern)
    };
    return d;
}

std::string to_string(SymmetryClass::Label label) {
    switch (label) {
        case SymmetryClass::Label::diagonal: return "diagonal";
        case SymmetryClass::Label::symmetric: return "symmetric";
        case SymmetryClass::Label::j_skew: return "j_skew";
        case SymmetryClass::Label::j2_skew: return "j2_skew";
        case SymmetryClass::Label::mixed: return "mixed";
    }
    return "?";
}

SymmetryClass classify(const CubicMatrix& a) {
    SymmetryClass out;

    bool diagonal_support = true;
    const int n = a.n();
    for (int i = 1; i <= n && diagonal_support; ++i)
        for (int k = 1; k <= n && diagonal_support; ++k)
            for (int m = 1; m <= n; ++m)
                if (!(i == k && k == m) && !a.at(i, k, m).is_zero()) {
                    diagonal_support = false;
                    break;
                }

    const CubicMatrix ja = cyclic_J(a);
    if (diagonal_support) {
        out.label = SymmetryClass::Label::diagonal;
    } else if (ja == a) {
        out.label = SymmetryClass::Label::symmetric;
    } else if (ja == ExactScalar::j2() * a) {
        out.label = SymmetryClass::Label::j_skew;
    } else if (ja == ExactScalar::j() * a) {
        out.label = SymmetryClass::Label::j2_skew;
    } else {
        out.label = SymmetryClass::Label::mixed;
    }

    const CubicMatrix ta = transpose_T(a);
    out.t_fixed = (ta == a);
    out.t_conj_fixed = (ta == conjugate(a));
    return out;
}

std::array<CubicMatrix, 2> rho_basis() {
    const ExactScalar j2 = ExactScalar::j2();
    return {orbit_pattern(1, 1, 2, 2, j2), orbit_pattern(1, 2, 2, 2, j2)};
}

NamedBases named_bases() {
    // The eight non-diagonal J-orbits of {1,2,3}³, written by their
    // lexicographically smallest member.
    static const std::vector<std::pair<std::string, std::array<int, 3>>> orbits = {
        {"1+", {2, 2, 3}}, {"1-", {2, 3, 3}}, {"2+", {1, 3, 3}}, {"2-", {1, 1, 3}},
        {"3+", {1, 1, 2}}, {"3-", {1, 2, 2}}, {"7", {1, 2, 3}},  {"8", {1, 3, 2}},
    };

    NamedBases nb;
    for (int k = 1; k <= 3; ++k)
        nb.O.push_back({std::to_string(k), basis_unit(k, k, k, 3)});

    const ExactScalar one = ExactScalar::one();
    const ExactScalar j = ExactScalar::j();
    const ExactScalar j2 = ExactScalar::j2();
    for (const auto& [label, t] : orbits) {
        nb.P.push_back({label, orbit_pattern(t[0], t[1], t[2], 3, one)});
        nb.R.push_back({label, orbit_pattern(t[0], t[1], t[2], 3, j2)});
        nb.K.push_back({label, orbit_pattern(t[0], t[1], t[2], 3, j)});
    }
    return nb;
}

CubicMatrix j_bracket(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c) {
    return star(a, b, c) + ExactScalar::j2() * star(b, c, a) +
           ExactScalar::j() * star(c, a, b);
}

std::string to_string(TernaryLaw law) {
    switch (law) {
        case TernaryLaw::star: return "star";
        case TernaryLaw::oslash: return "oslash";
        case TernaryLaw::j_bracket: return "j_bracket";
    }
    return "?";
}

namespace {

CubicMatrix apply_law(TernaryLaw law, const CubicMatrix& a, const CubicMatrix& b,
                      const CubicMatrix& c) {
    switch (law) {
        case TernaryLaw::star: return star(a, b, c);
        case TernaryLaw::oslash: return oslash(a, b, c);
        case TernaryLaw::j_bracket: return j_bracket(a, b, c);
    }
    throw std::invalid_argument("unknown ternary law");
}

}  // namespace

ClosureReport check_subalgebra(const std::vector<CubicMatrix>& basis, TernaryLaw law) {
    if (basis.empty()) throw std::invalid_argument("check_subalgebra: empty basis");

    std::vector<std::vector<ExactScalar>> span;
    span.reserve(basis.size());
    for (const auto& b : basis) span.push_back(b.flatten());

    ClosureReport report;
    const int sz = static_cast<int>(basis.size());
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y)
            for (int z = 0; z < sz; ++z) {
                const CubicMatrix prod = apply_law(law, basis[static_cast<std::size_t>(x)],
                                                   basis[static_cast<std::size_t>(y)],
                                                   basis[static_cast<std::size_t>(z)]);
                TripleExpansion te;
                te.a = x;
                te.b = y;
                te.c = z;
                te.zero = prod.is_zero();
                if (!te.zero) report.all_zero = false;

                auto coeffs = detail::solve_in_span(span, prod.flatten());
                te.in_span = coeffs.has_value();
                if (coeffs) te.coeffs = std::move(*coeffs);
                if (!te.in_span && report.closed) {
                    report.closed = false;
                    report.first_failure = report.triples.size();
                }
                report.triples.push_back(std::move(te));
            }
    return report;
}

TernaryTable mult_table(int n, TernaryLaw law) {
    if (n != 2 && n != 3) throw std::invalid_argument("mult_table: n must be 2 or 3");
    if (law != TernaryLaw::star && law != TernaryLaw::oslash)
        throw std::invalid_argument("mult_table: law must be star or oslash");

    const int basis_count = n * n * n;
    const auto b = static_cast<std::size_t>(basis_count);
    const std::size_t total = b * b * b;

    TernaryTable table;
    table.n = n;
    table.law = law;
    table.rows.resize(total);

    auto unit_of = [n](int flat /*1-based*/) {
        const int z = flat - 1;
        return basis_unit(z / (n * n) + 1, (z / n) % n + 1, z % n + 1, n);
    };

    detail::parallel_chunks(total, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const int lhs = static_cast<int>(t / (b * b)) + 1;
            const int mid = static_cast<int>((t / b) % b) + 1;
            const int rhs = static_cast<int>(t % b) + 1;

            const CubicMatrix prod = apply_law(law, unit_of(lhs), unit_of(mid), unit_of(rhs));

            TableRow row;
            row.lhs = lhs;
            row.mid = mid;
            row.rhs = rhs;
            for (int i = 1; i <= n; ++i)
                for (int k = 1; k <= n; ++k)
                    for (int m = 1; m <= n; ++m)
                        if (!prod.at(i, k, m).is_zero())
                            row.result.push_back({i, k, m, prod.at(i, k, m)});
            table.rows[t] = std::move(row);
        }
    });
    return table;
}

}  // namespace chessboard
