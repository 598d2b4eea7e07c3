#include "chessboard/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

#include "chessboard/detail/linalg.hpp"
#include "chessboard/detail/matrix.hpp"

namespace chessboard {

namespace {

const ExactScalar& j_pow(int e) {
    static const ExactScalar table[3] = {ExactScalar::one(), ExactScalar::j(),
                                         ExactScalar::j2()};
    return table[((e % 3) + 3) % 3];
}

bool abs_lex_less(const GrassmannWord& a, const GrassmannWord& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](int x, int y) { return std::abs(x) < std::abs(y); });
}

GrassmannWord rotate_left(GrassmannWord w) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    return w;
}

}  // namespace

std::string word_str(const GrassmannWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int e : w) {
        if (!out.empty()) out += '.';
        out += e > 0 ? "t" + std::to_string(e) : "tb" + std::to_string(-e);
    }
    return out;
}

int word_grade(const GrassmannWord& w) {
    int g = 0;
    for (int e : w) g += e > 0 ? 1 : -1;
    return ((g % 3) + 3) % 3;
}

GrassmannElement::GrassmannElement(int n, bool with_conjugates)
    : n_(n), conj_(with_conjugates) {
    if (n < 1) throw std::invalid_argument("GrassmannElement: need n >= 1");
}

ExactScalar GrassmannElement::coeff(const GrassmannWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ExactScalar::zero() : it->second;
}

std::optional<int> GrassmannElement::grade() const {
    if (terms_.empty()) return std::nullopt;
    const int g = word_grade(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (word_grade(w) != g) return std::nullopt;
    return g;
}

void GrassmannElement::check_shape(const GrassmannElement& o) const {
    if (n_ != o.n_ || conj_ != o.conj_)
        throw std::invalid_argument("GrassmannElement: algebra shapes differ");
}

void GrassmannElement::add_term(const GrassmannWord& w, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
    check_shape(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
    check_shape(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement out(n_, conj_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

GrassmannElement operator*(const ExactScalar& s, GrassmannElement x) {
    if (s.is_zero()) {
        x.terms_.clear();
        return x;
    }
    for (auto& [w, c] : x.terms_) c = s * c;
    return x;
}

GrassmannAlgebra::GrassmannAlgebra(int n, bool with_conjugates)
    : n_(n), conj_(with_conjugates) {
    if (n < 1) throw std::invalid_argument("GrassmannAlgebra: need n >= 1");
}

GrassmannElement GrassmannAlgebra::unit() const {
    GrassmannElement out = zero();
    out.add_term({}, ExactScalar::one());
    return out;
}

GrassmannElement GrassmannAlgebra::theta(int a) const {
    if (a < 1 || a > n_) throw std::invalid_argument("theta: index out of range");
    GrassmannElement out = zero();
    out.add_term({a}, ExactScalar::one());
    return out;
}

GrassmannElement GrassmannAlgebra::theta_bar(int a) const {
    if (!conj_)
        throw std::invalid_argument("theta_bar: algebra has no conjugate generators");
    if (a < 1 || a > n_)
        throw std::invalid_argument("theta_bar: index out of range");
    GrassmannElement out = zero();
    out.add_term({-a}, ExactScalar::one());
    return out;
}

void GrassmannAlgebra::check_word(const GrassmannWord& w) const {
    for (int e : w) {
        if (e == 0 || std::abs(e) > n_)
            throw std::invalid_argument("GrassmannWord: generator index out of range");
        if (e < 0 && !conj_)
            throw std::invalid_argument(
                "GrassmannWord: conjugate generator in a conjugate-free algebra");
    }
}

GrassmannElement GrassmannAlgebra::reduce(const GrassmannWord& w) const {
    check_word(w);
    GrassmannElement out = zero();
    if (w.size() >= 4) return out;

    if (w.size() <= 1) {
        out.add_term(w, ExactScalar::one());
        return out;
    }

    const int positives =
        static_cast<int>(std::count_if(w.begin(), w.end(), [](int e) { return e > 0; }));
    const bool mixed = positives != 0 && positives != static_cast<int>(w.size());

    if (w.size() == 2) {
        if (mixed && w[0] < 0) {
            // θ̄^B θ^A = j²·θ^A θ̄^B; the θ generator moves to the front.
            out.add_term({w[1], w[0]}, ExactScalar::j2());
        } else {
            out.add_term(w, ExactScalar::one());
        }
        return out;
    }

    // Length 3.
    if (mixed) return out;
    if (w[0] == w[1] && w[1] == w[2]) return out;  // generator cubes vanish

    // Rotate to the lex-least cyclic representative; each left rotation costs
    // a factor j for θ-words and j² for θ̄-words.
    GrassmannWord best = w;
    int best_k = 0;
    GrassmannWord rot = w;
    for (int k = 1; k <= 2; ++k) {
        rot = rotate_left(std::move(rot));
        if (abs_lex_less(rot, best)) {
            best = rot;
            best_k = k;
        }
    }
    out.add_term(best, j_pow(positives > 0 ? best_k : 2 * best_k));
    return out;
}

GrassmannElement GrassmannAlgebra::multiply(const GrassmannElement& x,
                                            const GrassmannElement& y) const {
    if (x.n() != n_ || x.with_conjugates() != conj_ || y.n() != n_ ||
        y.with_conjugates() != conj_)
        throw std::invalid_argument("multiply: element does not belong to this algebra");
    GrassmannElement out = zero();
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) {
            GrassmannWord cat = wx;
            cat.insert(cat.end(), wy.begin(), wy.end());
            out += (cx * cy) * reduce(cat);
        }
    }
    return out;
}

std::vector<GrassmannWord> GrassmannAlgebra::canonical_basis() const {
    std::vector<GrassmannWord> basis;

    for (int a = 1; a <= n_; ++a) basis.push_back({a});
    if (conj_)
        for (int a = 1; a <= n_; ++a) basis.push_back({-a});

    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b) basis.push_back({a, b});
    if (conj_) {
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b) basis.push_back({a, -b});
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b) basis.push_back({-a, -b});
    }

    // Cyclic-orbit representatives: lex-least rotations, cubes excluded.
    auto push_triples = [&](int sign) {
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b)
                for (int c = 1; c <= n_; ++c) {
                    if (a == b && b == c) continue;
                    const GrassmannWord w = {sign * a, sign * b, sign * c};
                    if (!abs_lex_less(rotate_left(w), w) &&
                        !abs_lex_less(rotate_left(rotate_left(w)), w))
                        basis.push_back(w);
                }
    };
    push_triples(+1);
    if (conj_) push_triples(-1);
    return basis;
}

int GrassmannAlgebra::dimension() const {
    return static_cast<int>(canonical_basis().size());
}

int grassmann_dimension(int n, bool with_conjugates) {
    if (n < 1) throw std::invalid_argument("grassmann_dimension: need n >= 1");
    const int orbits = (n * n * n - n) / 3;
    if (!with_conjugates) return n + n * n + orbits;
    return 2 * n + 3 * n * n + 2 * orbits;
}

GrassmannElement partial(int k, const GrassmannElement& x) {
    if (k < 1 || k > 3) throw std::invalid_argument("partial: k must be 1, 2 or 3");
    if (x.n() != 1 || x.with_conjugates())
        throw std::invalid_argument(
            "partial: only defined on the one-generator conjugate-free algebra");

    const GrassmannAlgebra alg(1, false);
    const GrassmannElement X = alg.theta(1);
    const GrassmannElement X2 = alg.multiply(X, X);
    const ExactScalar minus_j2 = -ExactScalar::j2();

    GrassmannElement out = alg.zero();
    for (const auto& [w, c] : x.terms()) {
        if (w.empty()) continue;  // constants die under every ∂
        if (w.size() == 1) {
            switch (k) {
                case 1: out += c * alg.unit(); break;
                case 2: out += c * X2; break;
                default: out += c * X; break;
            }
        } else {  // X²
            switch (k) {
                case 1: out += (minus_j2 * c) * X; break;
                case 2: break;
                default: out += (minus_j2 * c) * X2; break;
            }
        }
    }
    return out;
}

namespace {

// Matrix of an operator over the ordered basis (1, X, X²); column c holds the
// image of the c-th basis element.
Matrix<ExactScalar> op_matrix(int k) {
    const GrassmannAlgebra alg(1, false);
    const std::vector<GrassmannElement> basis = {
        alg.unit(), alg.theta(1), alg.multiply(alg.theta(1), alg.theta(1))};
    const std::vector<GrassmannWord> words = {{}, {1}, {1, 1}};
    Matrix<ExactScalar> m(3);
    for (int c = 0; c < 3; ++c) {
        const GrassmannElement y = partial(k, basis[c]);
        for (int r = 0; r < 3; ++r) m(r, c) = y.coeff(words[r]);
    }
    return m;
}

std::vector<ExactScalar> flatten3(const Matrix<ExactScalar>& m) {
    std::vector<ExactScalar> out;
    out.reserve(9);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.push_back(m(r, c));
    return out;
}

}  // namespace

DerivationClosureReport derivation_ternary_closure() {
    const auto d1 = op_matrix(1);
    const auto d2 = op_matrix(2);
    const auto d3 = op_matrix(3);
    const ExactScalar minus_j2 = -ExactScalar::j2();

    DerivationClosureReport report;
    report.first_identity =
        d1 * d2 * d2 + d2 * d1 * d2 + d2 * d2 * d1 == minus_j2 * d2;
    report.second_identity =
        d2 * d1 * d1 + d1 * d2 * d1 + d1 * d1 * d2 == minus_j2 * d1;

    const std::vector<std::vector<ExactScalar>> span = {flatten3(d1 * d2),
                                                        flatten3(d2 * d1)};
    report.binary_escape =
        !detail::solve_in_span(span, flatten3(d1)).has_value() &&
        !detail::solve_in_span(span, flatten3(d2)).has_value() &&
        !detail::solve_in_span(span, flatten3(Matrix<ExactScalar>::identity(3)))
             .has_value();

    const auto combo = detail::solve_in_span(span, flatten3(d3));
    report.third_from_binary =
        combo.has_value() && d2 * d1 - ExactScalar::j() * (d1 * d2) == d3;
    return report;
}

}  // namespace chessboard
