#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chessboard/detail/matrix.hpp"
#include "chessboard/scalar.hpp"

namespace chessboard {

using SquareMatrix = Matrix<ExactScalar>;

/// Pauli matrices σ¹, σ², σ³ over the exact field (i = ζ⁶).
SquareMatrix pauli_sigma(int alpha);

/// [A,B,C] := ABC + j·BCA + j²·CAB in an associative matrix algebra.
/// Cyclic covariance [A,B,C] = j·[B,C,A] and trace 0 hold identically.
SquareMatrix j_commutator(const SquareMatrix& a, const SquareMatrix& b,
                          const SquareMatrix& c);

struct PauliReport {
    bool unnormalized_identity = false;  // [σ¹,σ²,σ¹] = −2σ²
    bool normalized_constants = false;   // X^α = σ^α/√2: [X¹,X²,X¹] = −X², [X²,X¹,X²] = −X¹
    bool binary_recovery = false;        // [A,1,C] = AC − CA on random exact samples
    bool traceless = false;              // trace σ¹ = trace σ² = 0
    bool ok() const {
        return unnormalized_identity && normalized_constants && binary_recovery && traceless;
    }
};

/// Checks that two Pauli matrices scaled by 1/√2 realize the two-generator
/// ternary bracket algebra with constants −1.  Deterministic (fixed seed for
/// the random binary-recovery samples).
PauliReport verify_pauli_representation();

// A double bracket in 5 distinct symbols: the inner bracket sits in outer
// slot `shape`, its arguments are perm[0..2], and the remaining outer slots
// take perm[3], perm[4] in slot order.
struct BracketWord {
    int shape = 1;  // 1..3
    std::array<int, 5> perm{0, 1, 2, 3, 4};

    friend bool operator==(const BracketWord&, const BracketWord&) = default;
    friend auto operator<=>(const BracketWord&, const BracketWord&) = default;
};

/// Display form, e.g. "[[A,B,C],D,E]" for shape 1, identity permutation.
std::string word_str(const BracketWord& w);

/// Lexicographically smallest of the 9 cyclic variants (3 inner × 3 outer
/// rotations) — the class representative under [X,Y,Z] = j[Y,Z,X].
BracketWord orbit_canonical(const BracketWord& w);

/// All 3·5! = 360 raw words reduced modulo both cyclic equivalences; the
/// result has exactly 40 representatives, sorted.
std::vector<BracketWord> enumerate_double_brackets();

/// Evaluates the word on five matrices.
SquareMatrix eval_bracket_word(const BracketWord& w,
                               const std::array<SquareMatrix, 5>& args);

struct SearchResult {
    int n = 0;
    std::vector<BracketWord> words;
    std::vector<std::array<SquareMatrix, 5>> tuples;  // certificate samples
    int rank = 0;
    int nullity = 0;
    bool rank_stable = false;  // a fresh batch did not grow the rank
};

/// Looks for vanishing linear combinations Σ c_w·w(A..E) ≡ 0 of the 40
/// canonical double brackets by exact evaluation on random small-rational
/// tuples (at least 2×40, then a stability batch).  nullity 0 means no
/// nontrivial identity survives.
SearchResult double_bracket_identity_search(int n, std::uint64_t seed = 0xC4B1C);

struct JacobiSanity {
    int classes = 0;  // double-commutator words modulo sign equivalences
    int nullity = 0;  // dimension of the identity space (Jacobi ⇒ ≥ 1)
};

/// Binary-bracket control experiment: same search with [x,y] = xy − yx over
/// three symbols recovers the Jacobi identity as a one-dimensional null
/// space.
JacobiSanity jacobi_sanity(int n, std::uint64_t seed = 0xC4B1C);

}  // namespace chessboard
