#include "chessboard/forms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace chessboard {

namespace {

const ExactScalar& j_pow(int e) {
    static const ExactScalar table[3] = {ExactScalar::one(), ExactScalar::j(),
                                         ExactScalar::j2()};
    return table[((e % 3) + 3) % 3];
}

PolyFunction conjugate_poly(const PolyFunction& f) {
    PolyFunction out;
    for (const auto& [m, c] : f.terms()) out += conjugate(c) * PolyFunction::monomial(m);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyFunction
// ---------------------------------------------------------------------------

PolyFunction::PolyFunction(const ExactScalar& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

PolyFunction PolyFunction::variable(int i) {
    if (i < 1) throw std::invalid_argument("variable: index must be positive");
    PolyFunction out;
    out.terms_.emplace(Monomial{i}, ExactScalar::one());
    return out;
}

PolyFunction PolyFunction::monomial(Monomial m) {
    if (!std::is_sorted(m.begin(), m.end()))
        throw std::invalid_argument("monomial: indices must be ascending");
    PolyFunction out;
    out.terms_.emplace(std::move(m), ExactScalar::one());
    return out;
}

ExactScalar PolyFunction::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar::zero() : it->second;
}

int PolyFunction::degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m.size()));
    return deg;
}

void PolyFunction::add_term(const Monomial& m, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyFunction& PolyFunction::operator+=(const PolyFunction& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolyFunction& PolyFunction::operator-=(const PolyFunction& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PolyFunction PolyFunction::operator-() const {
    PolyFunction out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

PolyFunction operator*(const ExactScalar& s, PolyFunction f) {
    if (s.is_zero()) {
        f.terms_.clear();
        return f;
    }
    for (auto& [m, c] : f.terms_) c = s * c;
    return f;
}

PolyFunction operator*(const PolyFunction& a, const PolyFunction& b) {
    PolyFunction out;
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) {
            Monomial m;
            m.reserve(u.size() + v.size());
            std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(m));
            out.add_term(m, cu * cv);
        }
    }
    return out;
}

PolyFunction partial(int i, const PolyFunction& f) {
    if (i < 1) throw std::invalid_argument("partial: index must be positive");
    PolyFunction out;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t t = 0; t < m.size(); ++t) {
            if (m[t] != i) continue;
            Monomial rest = m;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
            out += c * PolyFunction::monomial(std::move(rest));
        }
    }
    return out;
}

std::string poly_str(const PolyFunction& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (int i : m) out += " x" + std::to_string(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Form words
// ---------------------------------------------------------------------------

FormSymbol dxi(int i) { return {i, 1, FormSector::d}; }
FormSymbol d2xi(int i) { return {i, 2, FormSector::d}; }
FormSymbol delta_xi(int i) { return {i, 1, FormSector::delta}; }
FormSymbol delta2_xi(int i) { return {i, 2, FormSector::delta}; }

int form_degree(const FormWord& w) {
    int deg = 0;
    for (const auto& s : w) deg += s.power;
    return deg;
}

int form_grade(const FormWord& w) { return form_degree(w) % 3; }

std::string form_word_str(const FormWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& s : w) {
        if (!out.empty()) out += ' ';
        const bool dsec = s.sector == FormSector::d;
        out += s.power == 1 ? (dsec ? "d" : "b") : (dsec ? "D" : "B");
        out += std::to_string(s.index);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FormElement
// ---------------------------------------------------------------------------

FormElement::FormElement(const PolyFunction& f) {
    if (!f.is_zero()) terms_.emplace(FormWord{}, f);
}

PolyFunction FormElement::coeff(const FormWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? PolyFunction() : it->second;
}

std::optional<int> FormElement::grade() const {
    if (terms_.empty()) return std::nullopt;
    const int g = form_grade(terms_.begin()->first);
    for (const auto& [w, f] : terms_)
        if (form_grade(w) != g) return std::nullopt;
    return g;
}

std::optional<int> FormElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    const int deg = form_degree(terms_.begin()->first);
    for (const auto& [w, f] : terms_)
        if (form_degree(w) != deg) return std::nullopt;
    return deg;
}

void FormElement::add_term(const FormWord& w, const PolyFunction& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormElement& FormElement::operator+=(const FormElement& o) {
    for (const auto& [w, f] : o.terms_) add_term(w, f);
    return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) {
    for (const auto& [w, f] : o.terms_) add_term(w, -f);
    return *this;
}

FormElement FormElement::operator-() const {
    FormElement out;
    for (const auto& [w, f] : terms_) out.terms_.emplace(w, -f);
    return out;
}

FormElement operator*(const ExactScalar& s, FormElement x) {
    if (s.is_zero()) {
        x.terms_.clear();
        return x;
    }
    for (auto& [w, f] : x.terms_) f = s * f;
    return x;
}

FormElement operator*(const PolyFunction& f, FormElement x) {
    if (f.is_zero()) {
        x.terms_.clear();
        return x;
    }
    FormElement out;
    for (const auto& [w, g] : x.terms_) out.add_term(w, f * g);
    return out;
}

namespace {

struct ReducedWord {
    bool zero = true;
    int jexp = 0;
    FormWord word;
};

ReducedWord reduce_raw(const FormWord& w) {
    for (const auto& s : w) {
        if (s.index < 1)
            throw std::invalid_argument("FormWord: index must be positive");
        if (s.power != 1 && s.power != 2)
            throw std::invalid_argument("FormWord: power must be 1 or 2");
    }
    if (form_degree(w) >= 4) return {};
    for (const auto& s : w)
        if (s.sector != w.front().sector) return {};  // mixed sectors vanish

    ReducedWord out;
    out.zero = false;
    // Rotation / swap factors are j in the d sector, j² in the δ sector.
    const int twist = (w.empty() || w.front().sector == FormSector::d) ? 1 : 2;

    if (w.size() <= 1) {
        out.word = w;
        return out;
    }
    if (w.size() == 2) {
        out.word = w;
        if (w[0].power == 1 && w[1].power == 2) {  // dξ^i d²ξ^k = j d²ξ^k dξ^i
            std::swap(out.word[0], out.word[1]);
            out.jexp = twist;
        }
        return out;
    }
    // Degree < 4 and three symbols forces three first differentials.
    if (w[0].index == w[1].index && w[1].index == w[2].index) return {};
    out.word = w;
    FormWord rot = w;
    for (int k = 1; k <= 2; ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < out.word) {
            out.word = rot;
            out.jexp = twist * k;
        }
    }
    return out;
}

}  // namespace

FormElement FormElement::term(const PolyFunction& f, const FormWord& w) {
    return reduce_form(w, f);
}

FormElement reduce_form(const FormWord& w) { return reduce_form(w, PolyFunction(1)); }

FormElement reduce_form(const FormWord& w, const PolyFunction& coefficient) {
    const ReducedWord r = reduce_raw(w);
    FormElement out;
    if (!r.zero) out.add_term(r.word, j_pow(r.jexp) * coefficient);
    return out;
}

FormElement operator*(const FormElement& a, const FormElement& b) {
    FormElement out;
    for (const auto& [u, fu] : a.terms()) {
        for (const auto& [v, fv] : b.terms()) {
            FormWord cat = u;
            cat.insert(cat.end(), v.begin(), v.end());
            out += reduce_form(cat, fu * fv);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Differentials
// ---------------------------------------------------------------------------

FormElement d(const FormElement& x) {
    FormElement out;
    for (const auto& [w, f] : x.terms()) {
        std::set<int> indices;
        for (const auto& [m, c] : f.terms()) indices.insert(m.begin(), m.end());
        for (int i : indices) {
            const PolyFunction pf = partial(i, f);
            if (pf.is_zero()) continue;
            FormWord pre{dxi(i)};
            pre.insert(pre.end(), w.begin(), w.end());
            out += reduce_form(pre, pf);
        }
        int prefix_grade = 0;
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t].sector == FormSector::d && w[t].power == 1) {
                FormWord w2 = w;
                w2[t].power = 2;
                out += reduce_form(w2, j_pow(prefix_grade) * f);
            }
            prefix_grade += w[t].power;
        }
    }
    return out;
}

FormElement d2_oneform(const FormElement& omega) {
    for (const auto& [w, f] : omega.terms())
        if (w.size() != 1 || w[0].power != 1 || w[0].sector != FormSector::d)
            throw std::invalid_argument("d2_oneform: expected a pure dξ 1-form");
    return d(d(omega));
}

FormElement conjugate(const FormElement& x) {
    FormElement out;
    for (const auto& [w, f] : x.terms()) {
        FormWord flipped = w;
        for (auto& s : flipped)
            s.sector = s.sector == FormSector::d ? FormSector::delta : FormSector::d;
        out.add_term(flipped, conjugate_poly(f));
    }
    return out;
}

FormElement delta(const FormElement& x) { return conjugate(d(conjugate(x))); }

std::string form_str(const FormElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [w, f] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += "[" + poly_str(f) + "] " + form_word_str(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// CoordinateAlgebra
// ---------------------------------------------------------------------------

CoordinateAlgebra::CoordinateAlgebra(int n)
    : CoordinateAlgebra(n, Matrix<ExactScalar>::zero(n)) {}

CoordinateAlgebra::CoordinateAlgebra(int n, Matrix<ExactScalar> epsilon)
    : n_(n), epsilon_(std::move(epsilon)) {
    if (n < 1) throw std::invalid_argument("CoordinateAlgebra: need n >= 1");
    if (epsilon_.n() != n)
        throw std::invalid_argument("CoordinateAlgebra: epsilon must be n x n");
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!(epsilon_(r, c) == -epsilon_(c, r)))
                throw std::invalid_argument("CoordinateAlgebra: epsilon must be antisymmetric");
}

void CoordinateAlgebra::check_index(int i) const {
    if (i < 1 || i > n_)
        throw std::invalid_argument("CoordinateAlgebra: coordinate index out of range");
}

PolyFunction CoordinateAlgebra::normal_order(const std::vector<int>& xi_word) const {
    for (int i : xi_word) check_index(i);
    PolyFunction out;
    std::vector<std::pair<Monomial, ExactScalar>> work;
    work.emplace_back(xi_word, ExactScalar::one());
    while (!work.empty()) {
        auto [cur, c] = std::move(work.back());
        work.pop_back();
        std::size_t t = 0;
        while (t + 1 < cur.size() && cur[t] <= cur[t + 1]) ++t;
        if (t + 1 >= cur.size()) {
            out += c * PolyFunction::monomial(std::move(cur));
            continue;
        }
        // First descent: ξ^a ξ^b = ξ^b ξ^a + ε^{ab} with a > b.
        const ExactScalar& eps = epsilon_(cur[t] - 1, cur[t + 1] - 1);
        if (!eps.is_zero()) {
            Monomial dropped = cur;
            dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(t),
                          dropped.begin() + static_cast<std::ptrdiff_t>(t) + 2);
            work.emplace_back(std::move(dropped), c * eps);
        }
        std::swap(cur[t], cur[t + 1]);
        work.emplace_back(std::move(cur), c);
    }
    return out;
}

PolyFunction CoordinateAlgebra::multiply(const PolyFunction& a,
                                         const PolyFunction& b) const {
    PolyFunction out;
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            Monomial cat = u;
            cat.insert(cat.end(), v.begin(), v.end());
            out += (cu * cv) * normal_order(cat);
        }
    }
    return out;
}

FormElement CoordinateAlgebra::multiply(const FormElement& a, const FormElement& b) const {
    FormElement out;
    for (const auto& [u, fu] : a.terms()) {
        for (const auto& [v, fv] : b.terms()) {
            FormWord cat = u;
            cat.insert(cat.end(), v.begin(), v.end());
            out += reduce_form(cat, multiply(fu, fv));
        }
    }
    return out;
}

}  // namespace chessboard
