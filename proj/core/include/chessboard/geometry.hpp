#pragma once

#include <vector>

#include "chessboard/detail/matrix.hpp"
#include "chessboard/forms.hpp"
#include "chessboard/scalar.hpp"

namespace chessboard {

// ---------------------------------------------------------------------------
// Gauge side: matrix-valued potentials over commuting coordinates.
// ---------------------------------------------------------------------------

// A = A_i dξ^i with square-matrix polynomial components (m = 1 is the abelian
// case).  The coordinate algebra here is the ε = 0 one.
class GaugePotential {
  public:
    GaugePotential(int n, int m);  // all components zero

    int n() const { return n_; }
    int m() const { return static_cast<int>(a_.front().n()); }
    Matrix<PolyFunction>& component(int i);
    const Matrix<PolyFunction>& component(int i) const;

  private:
    int n_;
    std::vector<Matrix<PolyFunction>> a_;
};

/// F_{ik} = ∂_i A_k − ∂_k A_i + A_i A_k − A_k A_i.
Matrix<PolyFunction> field_strength(const GaugePotential& a, int i, int k);

/// The closed-form component display,
///   Ω_{ikm} = ∂_i∂_k A_m + A_i ∂_k A_m − (∂_k A_m) A_i + A_i A_k A_m.
Matrix<PolyFunction> omega_components(const GaugePotential& a, int i, int k, int m);

// What expanding (d + A)³ actually leaves on the raw word dξ^i dξ^k dξ^m:
//   ∂_i∂_k A_m + (∂_i A_k)A_m + A_k ∂_i A_m + A_i ∂_k A_m + A_i A_k A_m.
// The two coefficient sets induce different 3-forms: already for an abelian
// A = ξ² dξ¹ the expansion block is (j−1)ξ²·dξ¹dξ¹dξ², where the display
// gives zero.  curvature_from_components therefore uses this set.
Matrix<PolyFunction> omega_from_cube_expansion(const GaugePotential& a, int i, int k,
                                               int m);

/// Σ_i A_i ⊗ dξ^i as a matrix of forms.
Matrix<FormElement> potential_oneform(const GaugePotential& a);

/// d²A + d(A²) + A·dA + A³, fully inside the exterior calculus.
Matrix<FormElement> assemble_curvature_threeform(const GaugePotential& a);

/// Σ (expansion Ω)_{ikm} dξ^idξ^kdξ^m + Σ F_{ik} d²ξ^idξ^k; must reproduce
/// assemble_curvature_threeform exactly (the module's master test).
Matrix<FormElement> curvature_from_components(const GaugePotential& a);

/// D_i X = ∂_i X + A_i X − X A_i.
Matrix<PolyFunction> covariant_derivative(const GaugePotential& a, int i,
                                          const Matrix<PolyFunction>& x);

/// D_i X = ∂_i X + A_i X − j·X A_i: the derivative the cube expansion
/// actually produces.  The plain-commutator version satisfies the curvature
/// identity only for commuting components.
Matrix<PolyFunction> covariant_derivative_twisted(const GaugePotential& a, int i,
                                                  const Matrix<PolyFunction>& x);

// Checks, at the reduced-3-form level, that the assembled curvature's dξ³
// part equals the induced form of (1/3)[j·D_i F_{mk} + j²·D_k F_{mi}] with
// the twisted D.  (Raw coefficient sets are only meaningful up to the cyclic
// j-symmetrization kernel; the induced forms are what's compared.)
bool covariant_identity_check(const GaugePotential& a);

// ---------------------------------------------------------------------------
// Linear connections as second-order jets at a point.
// ---------------------------------------------------------------------------

// Γ^l_{ik} together with its first and second derivatives at one point; all
// indices run 1..n.  The two derivative slots of the second jet are stored
// symmetrically, so ∂_a∂_b = ∂_b∂_a holds by construction.
class ConnectionJet {
  public:
    explicit ConnectionJet(int n);

    int n() const { return n_; }
    ExactScalar& gamma(int l, int i, int k);
    const ExactScalar& gamma(int l, int i, int k) const;
    ExactScalar& dgamma(int m, int l, int i, int k);  // ∂_m Γ^l_{ik}
    const ExactScalar& dgamma(int m, int l, int i, int k) const;
    ExactScalar& d2gamma(int a, int b, int l, int i, int k);  // ∂_a ∂_b Γ^l_{ik}
    const ExactScalar& d2gamma(int a, int b, int l, int i, int k) const;

    friend bool operator==(const ConnectionJet&, const ConnectionJet&) = default;

  private:
    int idx3(int l, int i, int k) const;
    int n_;
    std::vector<ExactScalar> g_, dg_, d2g_;
};

// Rank-4 point tensor T^l_{mik}, all indices 1..n.
class PointTensor4 {
  public:
    explicit PointTensor4(int n);
    int n() const { return n_; }
    ExactScalar& at(int l, int m, int i, int k);
    const ExactScalar& at(int l, int m, int i, int k) const;
    bool is_zero() const;
    friend bool operator==(const PointTensor4&, const PointTensor4&) = default;

  private:
    int n_;
    std::vector<ExactScalar> v_;
};

// Rank-5: a derivative slot in front of the rank-4 layout.
class PointTensor5 {
  public:
    explicit PointTensor5(int n);
    int n() const { return n_; }
    ExactScalar& at(int d, int l, int m, int i, int k);
    const ExactScalar& at(int d, int l, int m, int i, int k) const;
    bool is_zero() const;
    friend bool operator==(const PointTensor5&, const PointTensor5&) = default;

  private:
    int n_;
    std::vector<ExactScalar> v_;
};

/// R^l_{mik} = ∂_m Γ^l_{ik} − ∂_i Γ^l_{mk} + Γ^l_{mj}Γ^j_{ik} − Γ^l_{ij}Γ^j_{mk}.
PointTensor4 riemann(const ConnectionJet& jet);

/// The same expression with every minus turned plus; symmetric in (m,i) and
/// not a tensor (see transform_jet).
PointTensor4 p_tensor(const ConnectionJet& jet);

/// ∇_d R^l_{mik}: the full covariant derivative, with connection terms on
/// all four tensor slots.  Satisfies the cyclic second identity for
/// torsion-free jets.
PointTensor5 nabla_riemann(const ConnectionJet& jet);

/// ∂_d R^l_{mik} + Γ^l_{dj} R^j_{mik} − j·R^l_{mij} Γ^j_{dk}: the twisted
/// matrix-slot derivative; this, not the full ∇, is what ∇³'s dξ³ block is
/// made of.
PointTensor5 twisted_riemann_derivative(const ConnectionJet& jet);

/// Degree-2 Taylor polynomials Γ^l_{ik}(ξ) of the jet; [i-1] is the matrix
/// (l,k) ↦ Γ^l_{ik}.
std::vector<Matrix<PolyFunction>> connection_polynomials(const ConnectionJet& jet);

/// ω^l_k = Γ^l_{ik} dξ^i as a matrix of 1-forms.
Matrix<FormElement> connection_oneform(const ConnectionJet& jet);

/// One covariant step on matrix-valued forms: d(V) + ω·V (entrywise d).
Matrix<FormElement> nabla_step(const Matrix<FormElement>& omega,
                               const Matrix<FormElement>& v);

// ∇³ applied to the coordinate frame, evaluated at the jet point.  The
// d²ξ^m dξ^i block reproduces R^l_{mik} exactly; the dξ³ block is matched
// against c₁·D_n R^l_{imk} + c₂·D_m R^l_{ink} on the raw word dξ^n dξ^i dξ^m
// by an exact linear solve, D the twisted matrix derivative (the text's
// normalization is recovered, not trusted; generically c₁ = (1−j)/3, c₂ = 0).
struct Nabla3Report {
    Matrix<FormElement> value;       // the full ∇³ matrix (polynomial forms)
    bool second_block_is_riemann = false;
    bool weights_found = false;      // dξ³ block lies in the two-term span
    ExactScalar weight_n, weight_m;  // the solved (c₁, c₂) when found
    bool third_block_vanishes = false;  // dξ³ block identically zero at the point
};
Nabla3Report nabla3(const ConnectionJet& jet);

// ---------------------------------------------------------------------------
// Coordinate changes (the P-is-not-a-tensor witness).
// ---------------------------------------------------------------------------

// Old coordinates in terms of new: ξ^a = Σ M^a_b ξ̃^b + ½ Σ Q^a_{bc} ξ̃^bξ̃^c,
// with Q symmetric in (b,c).  M must be invertible.
struct QuadraticChart {
    Matrix<ExactScalar> linear;
    std::vector<Matrix<ExactScalar>> quadratic;  // [a-1](b,c) = Q^a_{bc}, 0-based

    QuadraticChart(Matrix<ExactScalar> m, std::vector<Matrix<ExactScalar>> q);
};

/// The jet of the transformed connection at the same point (exact: degree-2
/// data only ever depends on degree-2 data).
ConnectionJet transform_jet(const ConnectionJet& jet, const QuadraticChart& chart);

/// (M⁻¹)^l_λ T^λ_{μνκ} M^μ_m M^ν_i M^κ_k — how a genuine tensor's point
/// values move under the chart's linear part.
PointTensor4 tensor_transform(const PointTensor4& t, const Matrix<ExactScalar>& m);

}  // namespace chessboard
