#pragma once

#include <array>
#include <complex>

#include "chessboard/cubic.hpp"
#include "chessboard/detail/matrix.hpp"
#include "chessboard/scalar.hpp"

namespace chessboard {

using SquareMatrix = Matrix<ExactScalar>;

/// The four polynomial equations a 2×2 mixing matrix Λ must satisfy so that
/// ρ̃^α = Λ^α_β ρ^β preserves the ternary bracket relations:
///   Λ¹₁(Λ²₂Λ¹₁ − Λ¹₂Λ²₁) = Λ²₂      Λ¹₂(Λ²₁Λ¹₂ − Λ¹₁Λ²₂) = Λ²₁
///   Λ²₂(Λ¹₁Λ²₂ − Λ²₁Λ¹₂) = Λ¹₁      Λ²₁(Λ¹₂Λ²₁ − Λ²₂Λ¹₁) = Λ¹₂
/// Evaluated exactly, verbatim.
bool check_lambda_equations(const SquareMatrix& lambda);

// Every nonzero solution has [det Λ]² = 1, splitting the solution set into
// two disjoint families distinguished by the sign of the determinant.
struct AutomorphismComponent {
    enum class Tag { det_plus, det_minus };
    Tag tag{};
    ExactScalar det;                   // +1 or −1
    bool diagonal_linked = false;      // det_plus: Λ¹₁ = Λ²₂;   det_minus: Λ¹₁ = −Λ²₂
    bool off_diagonal_linked = false;  // det_plus: Λ¹₂ = −Λ²₁;  det_minus: Λ¹₂ = Λ²₁
};

/// Classifies a solution of the Λ equations.  Throws std::invalid_argument
/// if the equations fail or Λ is singular (det ∉ {1, −1}).
AutomorphismComponent component_of(const SquareMatrix& lambda);

/// ρ̃^α_{ikm} = Λ^α_β U^p_i U^r_k U^s_m ρ^β_{prs}.  Λ mixes the two
/// generators, U acts on all three cubic indices.  Throws on dimension
/// mismatch or singular Λ/U.
std::array<CubicMatrix, 2> transform_rho(const SquareMatrix& lambda,
                                         const SquareMatrix& u,
                                         const std::array<CubicMatrix, 2>& rho);

/// Generator pair rescaled so the leading bracket constants are −1:
///   {p¹,p²,p¹} = −p²,  {p²,p¹,p²} = −p¹.
std::array<CubicMatrix, 2> normalized_pair();

/// All six bracket relations of the normalized pair, evaluated on an
/// arbitrary candidate pair (typically a transformed one).  The remaining
/// four constants are forced by {a,b,c} = j²{b,c,a}:
///   {p¹,p¹,p²} = −j²p²,  {p²,p²,p¹} = −j²p¹,
///   {p²,p¹,p¹} = −j p²,  {p¹,p²,p²} = −j p¹.
bool pair_relations_hold(const std::array<CubicMatrix, 2>& pair);

/// x_{ikl} == conj(x_{lki}) — the element-level reality condition.  The
/// elements i·(t₁p¹ + t₂p²) with real rational t satisfy it.
bool reality_satisfied(const CubicMatrix& x);

using ComplexMatrix2 = std::array<std::array<std::complex<double>, 2>, 2>;

/// Boost × rotation parametrization of the det_plus component:
///   [[cosh ψ, i sinh ψ], [−i sinh ψ, cosh ψ]] · [[cos φ, sin φ], [−sin φ, cos φ]].
ComplexMatrix2 lambda_from_angles(double psi, double phi);

/// The same four equations in floating point; true when every residual is
/// within tol.
bool check_lambda_equations_numeric(const ComplexMatrix2& lambda, double tol = 1e-9);

}  // namespace chessboard
