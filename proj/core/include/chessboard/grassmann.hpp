#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chessboard/scalar.hpp"

namespace chessboard {

// A word in the θ generators: entry k > 0 is θ^k, entry −k is the conjugate
// θ̄^k.  Raw words are arbitrary; the algebra's reduce() rewrites them onto
// the canonical basis.
using GrassmannWord = std::vector<int>;

/// "t1.t2.tb3" style display (tb = θ̄); the empty word prints as "1".
std::string word_str(const GrassmannWord& w);

/// Z3-grade of a word: (#θ − #θ̄) mod 3.
int word_grade(const GrassmannWord& w);

class GrassmannAlgebra;

// Finitely supported coefficient map over the canonical monomials.  Elements
// remember the shape (n, conjugate flag) of the algebra they belong to;
// mixing shapes is an error.
class GrassmannElement {
  public:
    GrassmannElement(int n, bool with_conjugates);  // zero

    int n() const { return n_; }
    bool with_conjugates() const { return conj_; }

    const std::map<GrassmannWord, ExactScalar>& terms() const { return terms_; }
    ExactScalar coeff(const GrassmannWord& w) const;
    bool is_zero() const { return terms_.empty(); }

    /// Common grade of all monomials, or nullopt when inhomogeneous (or
    /// zero, which carries no grade information).
    std::optional<int> grade() const;

    GrassmannElement& operator+=(const GrassmannElement& o);
    GrassmannElement& operator-=(const GrassmannElement& o);
    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
        return a += b;
    }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
        return a -= b;
    }
    GrassmannElement operator-() const;
    friend GrassmannElement operator*(const ExactScalar& s, GrassmannElement x);

    friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

  private:
    friend class GrassmannAlgebra;
    void add_term(const GrassmannWord& w, const ExactScalar& c);  // w canonical
    void check_shape(const GrassmannElement& o) const;

    int n_;
    bool conj_;
    std::map<GrassmannWord, ExactScalar> terms_;
};

// The rewriting system itself.  Relations:
//   θ^Aθ^Bθ^C = j·θ^Bθ^Cθ^A                 (θ̄ triples rotate with j²)
//   (θ^A)³ = 0, every word of length ≥ 4 = 0
//   binary words: all N² products independent, kept as written
// and, with conjugates enabled,
//   θ^Aθ̄^B = j·θ̄^Bθ^A   (canonical order is the θ-block first)
//   every mixed word of length ≥ 3 = 0.
class GrassmannAlgebra {
  public:
    explicit GrassmannAlgebra(int n, bool with_conjugates = false);

    int n() const { return n_; }
    bool with_conjugates() const { return conj_; }
    friend bool operator==(const GrassmannAlgebra&, const GrassmannAlgebra&) = default;

    GrassmannElement zero() const { return {n_, conj_}; }
    GrassmannElement unit() const;
    GrassmannElement theta(int a) const;
    GrassmannElement theta_bar(int a) const;

    /// Canonical image of a raw word (coefficient j^r or 0).
    GrassmannElement reduce(const GrassmannWord& w) const;

    /// Bilinear extension of word concatenation followed by reduce.
    GrassmannElement multiply(const GrassmannElement& x, const GrassmannElement& y) const;

    /// The canonical monomials, unit excluded, ordered by length then
    /// content (θ-only words first within each length).
    std::vector<GrassmannWord> canonical_basis() const;

    /// canonical_basis().size(); agrees with the closed-form count.
    int dimension() const;

  private:
    void check_word(const GrassmannWord& w) const;

    int n_;
    bool conj_;
};

/// Closed-form basis count (unit excluded): N + N² + (N³−N)/3 for the θ-only
/// algebra, 2N + 3N² + 2(N³−N)/3 with conjugates.
int grassmann_dimension(int n, bool with_conjugates);

/// ∂_k (k = 1,2,3) on the one-generator algebra {1, X, X²}:
///   ∂₁: X ↦ 1,  X² ↦ −j²X        (lowers the grade)
///   ∂₂: X ↦ X², X² ↦ 0           (raises the grade)
///   ∂₃: X ↦ X,  X² ↦ −j²X²       (grade 0)
/// All three satisfy ∂(xy) = (∂x)y + j^{grade x}·x(∂y).  Only defined on
/// elements of the n = 1, θ-only algebra.
GrassmannElement partial(int k, const GrassmannElement& x);

// The composition algebra of ∂₁, ∂₂ over {1, X, X²}: the cyclic ternary
// combinations close back onto ∂₁ and ∂₂, no binary combination a·∂₁∂₂ +
// b·∂₂∂₁ reproduces ∂₁, ∂₂ or the identity — but ∂₃ itself is binary:
// ∂₃ = ∂₂∂₁ − j·∂₁∂₂, so the no-closure statement holds only for those
// three targets.
struct DerivationClosureReport {
    bool first_identity = false;   // ∂₁∂₂∂₂ + ∂₂∂₁∂₂ + ∂₂∂₂∂₁ = −j²∂₂
    bool second_identity = false;  // ∂₂∂₁∂₁ + ∂₁∂₂∂₁ + ∂₁∂₁∂₂ = −j²∂₁
    bool binary_escape = false;    // span{∂₁∂₂, ∂₂∂₁} misses ∂₁, ∂₂ and Id
    bool third_from_binary = false;  // ∂₂∂₁ − j·∂₁∂₂ = ∂₃ exactly
    bool ok() const {
        return first_identity && second_identity && binary_escape && third_from_binary;
    }
};
DerivationClosureReport derivation_ternary_closure();

}  // namespace chessboard
