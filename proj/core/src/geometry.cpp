#include "chessboard/geometry.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "chessboard/detail/linalg.hpp"

namespace chessboard {

namespace {

Matrix<PolyFunction> mat_partial(int i, const Matrix<PolyFunction>& m) {
    return m.map([i](const PolyFunction& f) { return partial(i, f); });
}

Matrix<FormElement> mat_d(const Matrix<FormElement>& m) {
    return m.map([](const FormElement& x) { return d(x); });
}

Matrix<FormElement> mat_term(const Matrix<PolyFunction>& c, const FormWord& w) {
    return c.map([&w](const PolyFunction& f) { return reduce_form(w, f); });
}

Matrix<PolyFunction> mat_block(const Matrix<FormElement>& m, const FormWord& w) {
    return m.map([&w](const FormElement& x) { return x.coeff(w); });
}

Matrix<ExactScalar> mat_at_origin(const Matrix<PolyFunction>& m) {
    return m.map([](const PolyFunction& f) { return f.coeff(Monomial{}); });
}

void check_coordinate(int i, int n) {
    if (i < 1 || i > n) throw std::out_of_range("coordinate index out of range");
}

PolyFunction truncate(const PolyFunction& f, int max_degree) {
    PolyFunction out;
    for (const auto& [mono, c] : f.terms()) {
        if (static_cast<int>(mono.size()) <= max_degree)
            out += c * PolyFunction::monomial(mono);
    }
    return out;
}

// f with ξ^i ↦ images[i-1], every intermediate product truncated; exact for
// the kept degrees because low-degree coefficients of a product never depend
// on the discarded high-degree parts.
PolyFunction substitute(const PolyFunction& f, const std::vector<PolyFunction>& images,
                        int max_degree) {
    PolyFunction out;
    for (const auto& [mono, c] : f.terms()) {
        PolyFunction prod(c);
        for (int v : mono) prod = truncate(prod * images[static_cast<size_t>(v - 1)], max_degree);
        out += prod;
    }
    return out;
}

Matrix<ExactScalar> invert(const Matrix<ExactScalar>& m) {
    const int n = m.n();
    Matrix<ExactScalar> a = m;
    Matrix<ExactScalar> inv = Matrix<ExactScalar>::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("matrix is singular");
        for (int c = 0; c < n; ++c) {
            std::swap(a(col, c), a(pivot, c));
            std::swap(inv(col, c), inv(pivot, c));
        }
        const ExactScalar scale = ExactScalar::one() / a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) = scale * a(col, c);
            inv(col, c) = scale * inv(col, c);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const ExactScalar f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

}  // namespace

// --------------------------------------------------------------------------
// Gauge potentials.
// --------------------------------------------------------------------------

GaugePotential::GaugePotential(int n, int m) : n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one coordinate");
    if (m < 1) throw std::invalid_argument("need a positive fiber dimension");
    a_.assign(static_cast<size_t>(n), Matrix<PolyFunction>(m));
}

Matrix<PolyFunction>& GaugePotential::component(int i) {
    check_coordinate(i, n_);
    return a_[static_cast<size_t>(i - 1)];
}

const Matrix<PolyFunction>& GaugePotential::component(int i) const {
    check_coordinate(i, n_);
    return a_[static_cast<size_t>(i - 1)];
}

Matrix<PolyFunction> field_strength(const GaugePotential& a, int i, int k) {
    const auto& ai = a.component(i);
    const auto& ak = a.component(k);
    return mat_partial(i, ak) - mat_partial(k, ai) + ai * ak - ak * ai;
}

Matrix<PolyFunction> omega_components(const GaugePotential& a, int i, int k, int m) {
    const auto& ai = a.component(i);
    const Matrix<PolyFunction> dk_am = mat_partial(k, a.component(m));
    return mat_partial(i, dk_am) + ai * dk_am - dk_am * ai +
           ai * a.component(k) * a.component(m);
}

Matrix<PolyFunction> omega_from_cube_expansion(const GaugePotential& a, int i, int k,
                                               int m) {
    const auto& ai = a.component(i);
    const auto& ak = a.component(k);
    const auto& am = a.component(m);
    const Matrix<PolyFunction> dk_am = mat_partial(k, am);
    return mat_partial(i, dk_am) + mat_partial(i, ak) * am + ak * mat_partial(i, am) +
           ai * dk_am + ai * ak * am;
}

Matrix<FormElement> potential_oneform(const GaugePotential& a) {
    Matrix<FormElement> out(a.m());
    for (int i = 1; i <= a.n(); ++i) out += mat_term(a.component(i), {dxi(i)});
    return out;
}

Matrix<FormElement> assemble_curvature_threeform(const GaugePotential& a) {
    const Matrix<FormElement> one_form = potential_oneform(a);
    const Matrix<FormElement> da = mat_d(one_form);
    return mat_d(da) + mat_d(one_form * one_form) + one_form * da +
           one_form * one_form * one_form;
}

Matrix<FormElement> curvature_from_components(const GaugePotential& a) {
    Matrix<FormElement> out(a.m());
    for (int i = 1; i <= a.n(); ++i)
        for (int k = 1; k <= a.n(); ++k) {
            for (int m = 1; m <= a.n(); ++m)
                out += mat_term(omega_from_cube_expansion(a, i, k, m),
                                {dxi(i), dxi(k), dxi(m)});
            out += mat_term(field_strength(a, i, k), {d2xi(i), dxi(k)});
        }
    return out;
}

Matrix<PolyFunction> covariant_derivative(const GaugePotential& a, int i,
                                          const Matrix<PolyFunction>& x) {
    const auto& ai = a.component(i);
    return mat_partial(i, x) + ai * x - x * ai;
}

Matrix<PolyFunction> covariant_derivative_twisted(const GaugePotential& a, int i,
                                                  const Matrix<PolyFunction>& x) {
    const auto& ai = a.component(i);
    return mat_partial(i, x) + ai * x - PolyFunction(ExactScalar::j()) * (x * ai);
}

bool covariant_identity_check(const GaugePotential& a) {
    const ExactScalar j_third = ExactScalar(Rational(1, 3)) * ExactScalar::j();
    const ExactScalar j2_third = ExactScalar(Rational(1, 3)) * ExactScalar::j2();
    Matrix<FormElement> engine(a.m());
    Matrix<FormElement> covariant(a.m());
    for (int i = 1; i <= a.n(); ++i)
        for (int k = 1; k <= a.n(); ++k)
            for (int m = 1; m <= a.n(); ++m) {
                const FormWord w = {dxi(i), dxi(k), dxi(m)};
                engine += mat_term(omega_from_cube_expansion(a, i, k, m), w);
                const Matrix<PolyFunction> c =
                    PolyFunction(j_third) *
                        covariant_derivative_twisted(a, i, field_strength(a, m, k)) +
                    PolyFunction(j2_third) *
                        covariant_derivative_twisted(a, k, field_strength(a, m, i));
                covariant += mat_term(c, w);
            }
    return engine == covariant;
}

// --------------------------------------------------------------------------
// Connection jets.
// --------------------------------------------------------------------------

namespace {

// storage slot of the unordered derivative pair {a, b}, 1-based a ≤ b
int pair_index(int a, int b) {
    if (a > b) std::swap(a, b);
    return (b - 1) * b / 2 + (a - 1);
}

}  // namespace

ConnectionJet::ConnectionJet(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one coordinate");
    const size_t cube = static_cast<size_t>(n) * static_cast<size_t>(n) *
                        static_cast<size_t>(n);
    g_.assign(cube, ExactScalar::zero());
    dg_.assign(cube * static_cast<size_t>(n), ExactScalar::zero());
    d2g_.assign(cube * static_cast<size_t>(n * (n + 1) / 2), ExactScalar::zero());
}

int ConnectionJet::idx3(int l, int i, int k) const {
    check_coordinate(l, n_);
    check_coordinate(i, n_);
    check_coordinate(k, n_);
    return ((l - 1) * n_ + (i - 1)) * n_ + (k - 1);
}

ExactScalar& ConnectionJet::gamma(int l, int i, int k) {
    return g_[static_cast<size_t>(idx3(l, i, k))];
}
const ExactScalar& ConnectionJet::gamma(int l, int i, int k) const {
    return g_[static_cast<size_t>(idx3(l, i, k))];
}

ExactScalar& ConnectionJet::dgamma(int m, int l, int i, int k) {
    check_coordinate(m, n_);
    return dg_[static_cast<size_t>((m - 1) * n_ * n_ * n_ + idx3(l, i, k))];
}
const ExactScalar& ConnectionJet::dgamma(int m, int l, int i, int k) const {
    check_coordinate(m, n_);
    return dg_[static_cast<size_t>((m - 1) * n_ * n_ * n_ + idx3(l, i, k))];
}

ExactScalar& ConnectionJet::d2gamma(int a, int b, int l, int i, int k) {
    check_coordinate(a, n_);
    check_coordinate(b, n_);
    return d2g_[static_cast<size_t>(pair_index(a, b) * n_ * n_ * n_ + idx3(l, i, k))];
}
const ExactScalar& ConnectionJet::d2gamma(int a, int b, int l, int i, int k) const {
    check_coordinate(a, n_);
    check_coordinate(b, n_);
    return d2g_[static_cast<size_t>(pair_index(a, b) * n_ * n_ * n_ + idx3(l, i, k))];
}

PointTensor4::PointTensor4(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one coordinate");
    v_.assign(static_cast<size_t>(n) * n * n * n, ExactScalar::zero());
}

ExactScalar& PointTensor4::at(int l, int m, int i, int k) {
    check_coordinate(l, n_);
    check_coordinate(m, n_);
    check_coordinate(i, n_);
    check_coordinate(k, n_);
    return v_[static_cast<size_t>((((l - 1) * n_ + (m - 1)) * n_ + (i - 1)) * n_ +
                                  (k - 1))];
}
const ExactScalar& PointTensor4::at(int l, int m, int i, int k) const {
    return const_cast<PointTensor4*>(this)->at(l, m, i, k);
}

bool PointTensor4::is_zero() const {
    for (const auto& x : v_)
        if (!x.is_zero()) return false;
    return true;
}

PointTensor5::PointTensor5(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one coordinate");
    v_.assign(static_cast<size_t>(n) * n * n * n * n, ExactScalar::zero());
}

ExactScalar& PointTensor5::at(int d, int l, int m, int i, int k) {
    check_coordinate(d, n_);
    check_coordinate(l, n_);
    check_coordinate(m, n_);
    check_coordinate(i, n_);
    check_coordinate(k, n_);
    return v_[static_cast<size_t>(
        ((((d - 1) * n_ + (l - 1)) * n_ + (m - 1)) * n_ + (i - 1)) * n_ + (k - 1))];
}
const ExactScalar& PointTensor5::at(int d, int l, int m, int i, int k) const {
    return const_cast<PointTensor5*>(this)->at(d, l, m, i, k);
}

bool PointTensor5::is_zero() const {
    for (const auto& x : v_)
        if (!x.is_zero()) return false;
    return true;
}

PointTensor4 riemann(const ConnectionJet& jet) {
    const int n = jet.n();
    PointTensor4 r(n);
    for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m)
            for (int i = 1; i <= n; ++i)
                for (int k = 1; k <= n; ++k) {
                    ExactScalar v = jet.dgamma(m, l, i, k);
                    v -= jet.dgamma(i, l, m, k);
                    for (int jj = 1; jj <= n; ++jj) {
                        v += jet.gamma(l, m, jj) * jet.gamma(jj, i, k);
                        v -= jet.gamma(l, i, jj) * jet.gamma(jj, m, k);
                    }
                    r.at(l, m, i, k) = v;
                }
    return r;
}

PointTensor4 p_tensor(const ConnectionJet& jet) {
    const int n = jet.n();
    PointTensor4 p(n);
    for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m)
            for (int i = 1; i <= n; ++i)
                for (int k = 1; k <= n; ++k) {
                    ExactScalar v = jet.dgamma(m, l, i, k);
                    v += jet.dgamma(i, l, m, k);
                    for (int jj = 1; jj <= n; ++jj) {
                        v += jet.gamma(l, m, jj) * jet.gamma(jj, i, k);
                        v += jet.gamma(l, i, jj) * jet.gamma(jj, m, k);
                    }
                    p.at(l, m, i, k) = v;
                }
    return p;
}

PointTensor5 nabla_riemann(const ConnectionJet& jet) {
    const int n = jet.n();
    const PointTensor4 r = riemann(jet);
    PointTensor5 nr(n);
    for (int dd = 1; dd <= n; ++dd)
        for (int l = 1; l <= n; ++l)
            for (int m = 1; m <= n; ++m)
                for (int i = 1; i <= n; ++i)
                    for (int k = 1; k <= n; ++k) {
                        // ∂_d of the curvature display, term by term
                        ExactScalar v = jet.d2gamma(dd, m, l, i, k);
                        v -= jet.d2gamma(dd, i, l, m, k);
                        for (int jj = 1; jj <= n; ++jj) {
                            v += jet.dgamma(dd, l, m, jj) * jet.gamma(jj, i, k);
                            v += jet.gamma(l, m, jj) * jet.dgamma(dd, jj, i, k);
                            v -= jet.dgamma(dd, l, i, jj) * jet.gamma(jj, m, k);
                            v -= jet.gamma(l, i, jj) * jet.dgamma(dd, jj, m, k);
                        }
                        // connection terms, one per tensor slot
                        for (int jj = 1; jj <= n; ++jj) {
                            v += jet.gamma(l, dd, jj) * r.at(jj, m, i, k);
                            v -= jet.gamma(jj, dd, m) * r.at(l, jj, i, k);
                            v -= jet.gamma(jj, dd, i) * r.at(l, m, jj, k);
                            v -= jet.gamma(jj, dd, k) * r.at(l, m, i, jj);
                        }
                        nr.at(dd, l, m, i, k) = v;
                    }
    return nr;
}

PointTensor5 twisted_riemann_derivative(const ConnectionJet& jet) {
    const int n = jet.n();
    const PointTensor4 r = riemann(jet);
    const ExactScalar j = ExactScalar::j();
    PointTensor5 out(n);
    for (int dd = 1; dd <= n; ++dd)
        for (int l = 1; l <= n; ++l)
            for (int m = 1; m <= n; ++m)
                for (int i = 1; i <= n; ++i)
                    for (int k = 1; k <= n; ++k) {
                        ExactScalar v = jet.d2gamma(dd, m, l, i, k);
                        v -= jet.d2gamma(dd, i, l, m, k);
                        for (int jj = 1; jj <= n; ++jj) {
                            v += jet.dgamma(dd, l, m, jj) * jet.gamma(jj, i, k);
                            v += jet.gamma(l, m, jj) * jet.dgamma(dd, jj, i, k);
                            v -= jet.dgamma(dd, l, i, jj) * jet.gamma(jj, m, k);
                            v -= jet.gamma(l, i, jj) * jet.dgamma(dd, jj, m, k);
                            v += jet.gamma(l, dd, jj) * r.at(jj, m, i, k);
                            v -= j * (r.at(l, m, i, jj) * jet.gamma(jj, dd, k));
                        }
                        out.at(dd, l, m, i, k) = v;
                    }
    return out;
}

std::vector<Matrix<PolyFunction>> connection_polynomials(const ConnectionJet& jet) {
    const int n = jet.n();
    const ExactScalar half = ExactScalar(Rational(1, 2));
    std::vector<Matrix<PolyFunction>> out(static_cast<size_t>(n),
                                          Matrix<PolyFunction>(n));
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= n; ++l)
            for (int k = 1; k <= n; ++k) {
                PolyFunction p(jet.gamma(l, i, k));
                for (int m = 1; m <= n; ++m)
                    p += jet.dgamma(m, l, i, k) * PolyFunction::variable(m);
                for (int a = 1; a <= n; ++a)
                    for (int b = a; b <= n; ++b) {
                        const ExactScalar c = jet.d2gamma(a, b, l, i, k);
                        p += (a == b ? half * c : c) * PolyFunction::monomial({a, b});
                    }
                out[static_cast<size_t>(i - 1)](l - 1, k - 1) = p;
            }
    return out;
}

Matrix<FormElement> connection_oneform(const ConnectionJet& jet) {
    const auto polys = connection_polynomials(jet);
    Matrix<FormElement> out(jet.n());
    for (int i = 1; i <= jet.n(); ++i)
        out += mat_term(polys[static_cast<size_t>(i - 1)], {dxi(i)});
    return out;
}

Matrix<FormElement> nabla_step(const Matrix<FormElement>& omega,
                               const Matrix<FormElement>& v) {
    return mat_d(v) + omega * v;
}

Nabla3Report nabla3(const ConnectionJet& jet) {
    const int n = jet.n();
    const Matrix<FormElement> omega = connection_oneform(jet);
    const Matrix<FormElement> v2 = nabla_step(omega, omega);
    Nabla3Report report{nabla_step(omega, v2),
                        false,
                        false,
                        ExactScalar::zero(),
                        ExactScalar::zero(),
                        false};

    // d²ξ^m dξ^i block at the origin against the curvature display.
    const PointTensor4 r = riemann(jet);
    report.second_block_is_riemann = true;
    for (int m = 1; m <= n; ++m)
        for (int i = 1; i <= n; ++i) {
            const Matrix<ExactScalar> block =
                mat_at_origin(mat_block(report.value, {d2xi(m), dxi(i)}));
            for (int l = 1; l <= n; ++l)
                for (int k = 1; k <= n; ++k)
                    if (block(l - 1, k - 1) != r.at(l, m, i, k))
                        report.second_block_is_riemann = false;
        }

    // dξ³ block: flatten the canonical-word coefficients at the origin and
    // solve for weights on the two twisted-derivative arrangements.
    const PointTensor5 nr = twisted_riemann_derivative(jet);
    std::map<FormWord, Matrix<ExactScalar>> cand_n, cand_m;
    std::set<FormWord> canonical;
    for (int nn = 1; nn <= n; ++nn)
        for (int i = 1; i <= n; ++i)
            for (int m = 1; m <= n; ++m) {
                const FormElement reduced = reduce_form({dxi(nn), dxi(i), dxi(m)});
                if (reduced.is_zero()) continue;
                const auto& [word, cpoly] = *reduced.terms().begin();
                const ExactScalar scale = cpoly.coeff(Monomial{});
                canonical.insert(word);
                Matrix<ExactScalar> x1(n), x2(n);
                for (int l = 1; l <= n; ++l)
                    for (int k = 1; k <= n; ++k) {
                        x1(l - 1, k - 1) = nr.at(nn, l, i, m, k);
                        x2(l - 1, k - 1) = nr.at(m, l, i, nn, k);
                    }
                const auto add = [&](std::map<FormWord, Matrix<ExactScalar>>& acc,
                                     const Matrix<ExactScalar>& x) {
                    auto [it, fresh] = acc.try_emplace(word, scale * x);
                    if (!fresh) it->second += scale * x;
                };
                add(cand_n, x1);
                add(cand_m, x2);
            }

    std::vector<ExactScalar> target, b1, b2;
    bool target_zero = true;
    for (const auto& word : canonical) {
        const Matrix<ExactScalar> engine =
            mat_at_origin(mat_block(report.value, word));
        const Matrix<ExactScalar>& c1 = cand_n.at(word);
        const Matrix<ExactScalar>& c2 = cand_m.at(word);
        for (int l = 0; l < n; ++l)
            for (int k = 0; k < n; ++k) {
                target.push_back(engine(l, k));
                if (!engine(l, k).is_zero()) target_zero = false;
                b1.push_back(c1(l, k));
                b2.push_back(c2(l, k));
            }
    }
    report.third_block_vanishes = target_zero;
    if (const auto weights = detail::solve_in_span({b1, b2}, target)) {
        report.weights_found = true;
        report.weight_n = (*weights)[0];
        report.weight_m = (*weights)[1];
    }
    return report;
}

// --------------------------------------------------------------------------
// Coordinate changes.
// --------------------------------------------------------------------------

QuadraticChart::QuadraticChart(Matrix<ExactScalar> m, std::vector<Matrix<ExactScalar>> q)
    : linear(std::move(m)), quadratic(std::move(q)) {
    const int n = linear.n();
    if (static_cast<int>(quadratic.size()) != n)
        throw std::invalid_argument("need one quadratic block per coordinate");
    for (const auto& block : quadratic) {
        if (block.n() != n) throw std::invalid_argument("quadratic block size mismatch");
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (block(b, c) != block(c, b))
                    throw std::invalid_argument("quadratic part must be symmetric");
    }
}

ConnectionJet transform_jet(const ConnectionJet& jet, const QuadraticChart& chart) {
    const int n = jet.n();
    if (chart.linear.n() != n) throw std::invalid_argument("chart dimension mismatch");
    const ExactScalar half = ExactScalar(Rational(1, 2));

    // Old coordinates and the Jacobian as polynomials in the new ones.
    std::vector<PolyFunction> phi(static_cast<size_t>(n));
    Matrix<PolyFunction> jac(n);
    for (int a = 1; a <= n; ++a) {
        PolyFunction p;
        const auto& q = chart.quadratic[static_cast<size_t>(a - 1)];
        for (int b = 1; b <= n; ++b) {
            p += chart.linear(a - 1, b - 1) * PolyFunction::variable(b);
            for (int c = b; c <= n; ++c) {
                const ExactScalar qv = q(b - 1, c - 1);
                p += (b == c ? half * qv : qv) * PolyFunction::monomial({b, c});
            }
            PolyFunction entry(chart.linear(a - 1, b - 1));
            for (int c = 1; c <= n; ++c)
                entry += q(b - 1, c - 1) * PolyFunction::variable(c);
            jac(a - 1, b - 1) = entry;
        }
        phi[static_cast<size_t>(a - 1)] = p;
    }

    // Inverse Jacobian through degree 2: K = M⁻¹ − M⁻¹N M⁻¹ + M⁻¹N M⁻¹N M⁻¹
    // with N the linear-in-ξ̃ part; the next Neumann term has degree ≥ 3.
    const Matrix<ExactScalar> minv = invert(chart.linear);
    Matrix<PolyFunction> minv_p(n), nlin(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            minv_p(r, c) = PolyFunction(minv(r, c));
            nlin(r, c) = jac(r, c) - PolyFunction(chart.linear(r, c));
        }
    const Matrix<PolyFunction> correction = minv_p * nlin * minv_p;
    Matrix<PolyFunction> k_inv = minv_p - correction + correction * nlin * minv_p;
    k_inv = k_inv.map([](const PolyFunction& f) { return truncate(f, 2); });

    const auto old_polys = connection_polynomials(jet);
    ConnectionJet out(n);
    for (int c = 1; c <= n; ++c)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                PolyFunction acc;
                for (int g = 1; g <= n; ++g) {
                    PolyFunction inner(
                        chart.quadratic[static_cast<size_t>(g - 1)](a - 1, b - 1));
                    for (int al = 1; al <= n; ++al)
                        for (int be = 1; be <= n; ++be) {
                            const PolyFunction pulled = substitute(
                                old_polys[static_cast<size_t>(al - 1)](g - 1, be - 1),
                                phi, 2);
                            inner += truncate(
                                pulled * jac(al - 1, a - 1) * jac(be - 1, b - 1), 2);
                        }
                    acc += truncate(k_inv(c - 1, g - 1) * inner, 2);
                }
                out.gamma(c, a, b) = acc.coeff(Monomial{});
                for (int m = 1; m <= n; ++m) out.dgamma(m, c, a, b) = acc.coeff({m});
                for (int p = 1; p <= n; ++p)
                    for (int q = p; q <= n; ++q)
                        out.d2gamma(p, q, c, a, b) =
                            (p == q ? ExactScalar(2) * acc.coeff({p, p})
                                    : acc.coeff({p, q}));
            }
    return out;
}

PointTensor4 tensor_transform(const PointTensor4& t, const Matrix<ExactScalar>& m) {
    const int n = t.n();
    if (m.n() != n) throw std::invalid_argument("chart dimension mismatch");
    const Matrix<ExactScalar> minv = invert(m);
    PointTensor4 out(n);
    for (int l = 1; l <= n; ++l)
        for (int mm = 1; mm <= n; ++mm)
            for (int i = 1; i <= n; ++i)
                for (int k = 1; k <= n; ++k) {
                    ExactScalar v = ExactScalar::zero();
                    for (int la = 1; la <= n; ++la)
                        for (int mu = 1; mu <= n; ++mu)
                            for (int nu = 1; nu <= n; ++nu)
                                for (int ka = 1; ka <= n; ++ka)
                                    v += minv(l - 1, la - 1) * t.at(la, mu, nu, ka) *
                                         m(mu - 1, mm - 1) * m(nu - 1, i - 1) *
                                         m(ka - 1, k - 1);
                    out.at(l, mm, i, k) = v;
                }
    return out;
}

}  // namespace chessboard
