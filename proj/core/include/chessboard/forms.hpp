#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chessboard/detail/matrix.hpp"
#include "chessboard/scalar.hpp"

namespace chessboard {

// ---------------------------------------------------------------------------
// Polynomial coefficients.
// ---------------------------------------------------------------------------

// Normally ordered coordinate monomial: ascending generator indices, e.g.
// {1, 2, 2} = ξ¹ξ²ξ².  The empty monomial is the constant 1.
using Monomial = std::vector<int>;

// Finitely supported map monomial → scalar.  The plain ring operators here
// treat the coordinates as commuting (the ε = 0 calculus and the whole
// coordinate-space geometry); products in an algebra with ε ≠ 0 go through
// CoordinateAlgebra::multiply.
class PolyFunction {
  public:
    PolyFunction() = default;
    PolyFunction(int v) : PolyFunction(ExactScalar(v)) {}
    PolyFunction(const ExactScalar& c);
    static PolyFunction variable(int i);  // ξ^i
    /// The monomial itself with coefficient 1 (assumed already ascending).
    static PolyFunction monomial(Monomial m);

    const std::map<Monomial, ExactScalar>& terms() const { return terms_; }
    ExactScalar coeff(const Monomial& m) const;
    bool is_zero() const { return terms_.empty(); }
    /// Largest monomial length (0 for constants and for zero).
    int degree() const;

    PolyFunction& operator+=(const PolyFunction& o);
    PolyFunction& operator-=(const PolyFunction& o);
    friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { return a += b; }
    friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { return a -= b; }
    PolyFunction operator-() const;
    friend PolyFunction operator*(const ExactScalar& s, PolyFunction f);
    /// Commutative product (sorted-merge of monomials; ε plays no part).
    friend PolyFunction operator*(const PolyFunction& a, const PolyFunction& b);

    friend bool operator==(const PolyFunction&, const PolyFunction&) = default;

  private:
    friend class CoordinateAlgebra;
    void add_term(const Monomial& m, const ExactScalar& c);

    std::map<Monomial, ExactScalar> terms_;
};

/// ∂_i: the derivation with ∂_iξ^k = δ^k_i and ∂_i(ε^{km}) = 0, acting on the
/// stored normal form.  Partials commute with one another.
PolyFunction partial(int i, const PolyFunction& f);

/// Debug / report rendering, e.g. "(3/2) x1 x2 + (-1)".
std::string poly_str(const PolyFunction& f);

// ---------------------------------------------------------------------------
// Form words.
// ---------------------------------------------------------------------------

// Two parallel differential sectors: the d-calculus on dξ / d²ξ and its
// conjugate δ-calculus.  Words mixing the sectors are set to zero (the
// source only suggests the extension, so the mixed space is defined away).
enum class FormSector { d, delta };

struct FormSymbol {
    int index = 1;
    int power = 1;  // 1 = first differential (grade 1), 2 = second (grade 2)
    FormSector sector = FormSector::d;
    friend auto operator<=>(const FormSymbol&, const FormSymbol&) = default;
};

FormSymbol dxi(int i);        // dξ^i
FormSymbol d2xi(int i);       // d²ξ^i
FormSymbol delta_xi(int i);   // δx^i
FormSymbol delta2_xi(int i);  // δ²x^i

using FormWord = std::vector<FormSymbol>;

/// Total differential count (dξ = 1, d²ξ = 2); the Z3-grade is this mod 3.
int form_degree(const FormWord& w);
int form_grade(const FormWord& w);

/// "d1 d2 D3" (D = d²ξ); conjugate-sector symbols print as b1 / B3.
std::string form_word_str(const FormWord& w);

// ---------------------------------------------------------------------------
// Form elements: left polynomial coefficients on canonical words.
// ---------------------------------------------------------------------------

class FormElement {
  public:
    FormElement() = default;
    FormElement(int v) : FormElement(PolyFunction(v)) {}
    explicit FormElement(const PolyFunction& f);  // f ⊗ (empty word)

    const std::map<FormWord, PolyFunction>& terms() const { return terms_; }
    PolyFunction coeff(const FormWord& w) const;
    bool is_zero() const { return terms_.empty(); }

    /// Common Z3-grade of the words (coefficients are grade 0), or nullopt
    /// when inhomogeneous or zero.
    std::optional<int> grade() const;
    /// Common form-degree, same convention.
    std::optional<int> degree() const;

    FormElement& operator+=(const FormElement& o);
    FormElement& operator-=(const FormElement& o);
    friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
    friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
    FormElement operator-() const;
    friend FormElement operator*(const ExactScalar& s, FormElement x);
    friend FormElement operator*(const PolyFunction& f, FormElement x);  // left module
    /// Coefficients collect on the left (functions pass across the form
    /// generators); word concatenation is reduced to canonical shape.
    friend FormElement operator*(const FormElement& a, const FormElement& b);

    friend bool operator==(const FormElement&, const FormElement&) = default;

    /// f ⊗ reduce(w); the workhorse for assembling elements.
    static FormElement term(const PolyFunction& f, const FormWord& w);

  private:
    friend FormElement reduce_form(const FormWord& w, const PolyFunction& coefficient);
    friend FormElement conjugate(const FormElement& x);
    void add_term(const FormWord& w, const PolyFunction& f);  // w canonical

    std::map<FormWord, PolyFunction> terms_;
};

// Canonical image of a raw word.  Rules: |dξ| triples rotate to the
// lexicographically least cyclic representative at cost j per left rotation
// (j² in the δ sector); dξ^i d²ξ^k = j·d²ξ^k dξ^i moves the d²ξ leftmost;
// equal-index dξ triples, any word of differential count ≥ 4 and any word
// mixing the two sectors vanish.  Binary dξ^i dξ^k words are all independent.
FormElement reduce_form(const FormWord& w);
FormElement reduce_form(const FormWord& w, const PolyFunction& coefficient);

// The differential: d(f ⊗ w) = Σ_i (∂_i f) ⊗ dξ^i w + f ⊗ d(w), where a word
// differentiates symbol-by-symbol with the twist j^{grade of the prefix},
// d(dξ^i) = d²ξ^i and d(d²ξ^i) = 0.  Conjugate-sector terms die under d
// (mixed words are zero).  d³ = 0 on every element.
FormElement d(const FormElement& x);

/// d(d(ω)) for a pure dξ-coefficient 1-form; the d²ξ-block coefficient is the
/// antisymmetrized derivative (∂_i ω_k − ∂_k ω_i).  Throws std::invalid_argument
/// unless every word of ω is a single dξ^k.
FormElement d2_oneform(const FormElement& omega);

/// Sector flip plus scalar conjugation on every coefficient (word order and
/// indices are untouched).
FormElement conjugate(const FormElement& x);

/// The conjugate differential, realized as conjugate ∘ d ∘ conjugate: grade-2
/// symbols δx^i with δ-words twisting by j² where d twists by j.  δ³ = 0, and
/// d·δ = δ·d = 0 because the mixed sector is zero.
FormElement delta(const FormElement& x);

std::string form_str(const FormElement& x);

// ---------------------------------------------------------------------------
// The coordinate algebra: ξ^i ξ^k = ξ^k ξ^i + ε^{ik}.
// ---------------------------------------------------------------------------

class CoordinateAlgebra {
  public:
    /// ε = 0: plain commuting coordinates.
    explicit CoordinateAlgebra(int n);
    /// Throws std::invalid_argument unless ε is n×n and antisymmetric.
    CoordinateAlgebra(int n, Matrix<ExactScalar> epsilon);

    int n() const { return n_; }
    const Matrix<ExactScalar>& epsilon() const { return epsilon_; }

    /// Bubble-reorders a raw ξ word to ascending indices, emitting ε terms:
    /// ξ²ξ¹ → ξ¹ξ² + ε²¹.  With ε = 0 this is a plain sort.
    PolyFunction normal_order(const std::vector<int>& xi_word) const;

    /// ε-aware product (concatenate monomials, then normal-order).
    PolyFunction multiply(const PolyFunction& a, const PolyFunction& b) const;

    /// Form product whose coefficients multiply through normal ordering; the
    /// right factor's coefficient still collects on the left, in a·b order.
    FormElement multiply(const FormElement& a, const FormElement& b) const;

  private:
    void check_index(int i) const;

    int n_;
    Matrix<ExactScalar> epsilon_;
};

}  // namespace chessboard
