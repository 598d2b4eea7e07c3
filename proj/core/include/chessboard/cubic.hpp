#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chessboard/detail/matrix.hpp"
#include "chessboard/scalar.hpp"

namespace chessboard {

// Order-3 tensor ("cubic matrix") over the exact field.  Public indexing is
// 1-based, matching the classical a_{ikm} notation everywhere in this
// library; storage is dense row-major since n <= 3 in every use we care
// about.
class CubicMatrix {
  public:
    explicit CubicMatrix(int n);

    static CubicMatrix zero(int n) { return CubicMatrix(n); }

    int n() const { return n_; }

    ExactScalar& at(int i, int k, int m) { return e_[idx(i, k, m)]; }
    const ExactScalar& at(int i, int k, int m) const { return e_[idx(i, k, m)]; }

    bool is_zero() const;

    CubicMatrix& operator+=(const CubicMatrix& o);
    CubicMatrix& operator-=(const CubicMatrix& o);
    friend CubicMatrix operator+(CubicMatrix a, const CubicMatrix& b) { return a += b; }
    friend CubicMatrix operator-(CubicMatrix a, const CubicMatrix& b) { return a -= b; }
    CubicMatrix operator-() const;
    friend CubicMatrix operator*(const ExactScalar& s, CubicMatrix a);

    friend bool operator==(const CubicMatrix&, const CubicMatrix&) = default;

    /// Entries flattened row-major over (i,k,m); used by the span solvers.
    std::vector<ExactScalar> flatten() const { return e_; }

  private:
    std::size_t idx(int i, int k, int m) const;
    void check_dim(const CubicMatrix& o) const;

    int n_;
    std::vector<ExactScalar> e_;
};

/// Matrix unit e_{ikm}: 1 at (i,k,m), zero elsewhere.  1 <= i,k,m <= n.
CubicMatrix basis_unit(int i, int k, int m, int n);

/// (a ⊘ b ⊘ c)_{ikm} = Σ_{pqr} a_{ipq} b_{pkr} c_{qrm} — the law that
/// generalizes ordinary matrix multiplication to three indices.
CubicMatrix oslash(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c);

/// (a * b * c)_{ikm} = Σ_{pqr} a_{piq} b_{qkr} c_{rmp} — the cyclic law.
CubicMatrix star(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c);

/// Cyclic index rotation (J a)_{ikm} = a_{kmi}; J³ = Id.
CubicMatrix cyclic_J(const CubicMatrix& a);

/// Transposition (T a)_{ikm} = a_{mki}; T² = Id.
CubicMatrix transpose_T(const CubicMatrix& a);

/// Entry-wise complex conjugation.
CubicMatrix conjugate(const CubicMatrix& a);

/// n-fold product on order-2 tensors: ordinary matrix multiplication.
Matrix<ExactScalar> n_fold_product(const std::vector<Matrix<ExactScalar>>& ops);

/// n-fold product on order-3 tensors; the index pattern of the general
/// contraction specializes to the ⊘ law for three arguments.
CubicMatrix n_fold_product(const std::vector<CubicMatrix>& ops);

// -- symmetry decomposition ---------------------------------------------------

struct Decomposition {
    CubicMatrix diag;    // entries (k,k,k)
    CubicMatrix sym;     // off-diagonal, J x = x
    CubicMatrix jskew;   // off-diagonal, J x = j² x  (x_{ikm} = j x_{kmi}, the ρ pattern)
    CubicMatrix j2skew;  // off-diagonal, J x = j x   (the κ pattern)
};

/// Splits a into diagonal + the three J-eigencomponents of its off-diagonal
/// part.  The four parts always sum back to a.
Decomposition decompose(const CubicMatrix& a);

struct SymmetryClass {
    enum class Label { diagonal, symmetric, j_skew, j2_skew, mixed };

    Label label = Label::mixed;
    bool t_fixed = false;       // T a == a
    bool t_conj_fixed = false;  // T a == conjugate(a)

    friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

std::string to_string(SymmetryClass::Label label);

/// J/T representation type of a: diagonal, J-fixed, one of the two skew
/// classes (j_skew is the ρ relation x_{ikm} = j x_{kmi}, i.e. J x = j² x),
/// or mixed.
SymmetryClass classify(const CubicMatrix& a);

/// The two n=2 j-skew generators: orbit of (1,1,2) and orbit of (1,2,2),
/// leading coefficient 1 at the lexicographically smallest orbit index.
std::array<CubicMatrix, 2> rho_basis();

struct NamedCubic {
    std::string label;
    CubicMatrix value;
};

// The four n=3 families: O (diagonal units), and one member per non-diagonal
// J-orbit for each symmetry type: P symmetric (orbit values 1,1,1), R j-skew
// (1, j², j), K j²-skew (1, j, j²).  Orbit labels follow the "a±" scheme:
// a± are the two orbits avoiding index a, + doubling a+1, − doubling a+2
// (cyclically), plus "7"/"8" for the two all-distinct orbits.
struct NamedBases {
    std::vector<NamedCubic> O;
    std::vector<NamedCubic> P;
    std::vector<NamedCubic> R;
    std::vector<NamedCubic> K;
};

NamedBases named_bases();

/// {a,b,c} = a*b*c + j²·(b*c*a) + j·(c*a*b).  The weights are fixed by the
/// requirements that the bracket of ρ-matrices stays in the ρ family and that
/// the value always satisfies {a,b,c}_{ikm} = j·{a,b,c}_{kmi}; see the tests.
CubicMatrix j_bracket(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c);

// -- subalgebra closure -------------------------------------------------------

enum class TernaryLaw { star, oslash, j_bracket };

std::string to_string(TernaryLaw law);

struct TripleExpansion {
    int a = 0, b = 0, c = 0;  // 0-based indices into the basis list
    bool in_span = false;
    bool zero = false;
    std::vector<ExactScalar> coeffs;  // expansion when in_span
};

struct ClosureReport {
    bool closed = true;
    bool all_zero = true;  // every product vanished identically
    std::vector<TripleExpansion> triples;
    std::optional<std::size_t> first_failure;
};

/// Evaluates law(x,y,z) for every triple from `basis` and expands the result
/// back in `basis` (exact span solve).
ClosureReport check_subalgebra(const std::vector<CubicMatrix>& basis, TernaryLaw law);

// -- the chessboard -----------------------------------------------------------

struct SparseEntry {
    int i = 0, k = 0, m = 0;
    ExactScalar v;
};

struct TableRow {
    int lhs = 0, mid = 0, rhs = 0;  // 1-based basis indices, row-major over (i,k,m)
    std::vector<SparseEntry> result;
};

struct TernaryTable {
    int n = 0;
    TernaryLaw law = TernaryLaw::star;
    std::vector<TableRow> rows;  // exactly n⁹, row-major over (lhs, mid, rhs)
};

/// Full multiplication table over the basis units; n ∈ {2,3}, law ∈
/// {star, oslash}.  Rows may be computed in parallel (CHESSBOARD_THREADS)
/// but are always emitted in canonical order.
TernaryTable mult_table(int n, TernaryLaw law);

}  // namespace chessboard
