#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

#include "hpq/characters.hpp"
#include "hpq/groups.hpp"

namespace hpq {

enum class AlgebraKind { abelian, symmetric };

/// Element of one of the two Kac algebras of a finite group.
/// abelian: pointwise function algebra, coeffs are the values f(x).
/// symmetric: coeffs are the coordinates of f_hat = sum f(x) L(x) in the
/// left-regular generator basis (the generators are linearly independent, so
/// the coordinates are exact: column of the identity element).
struct AlgebraElement {
    AlgebraKind kind = AlgebraKind::abelian;
    Eigen::VectorXcd coeffs;
};

/// Operator on functions F(x,y), index convention F[x * |G| + y].
struct TensorOperator {
    int g_order = 1;
    Eigen::MatrixXcd m;
};

namespace kac {

/// Left-regular permutation matrix [L(x)f](y) = f(x^{-1} y).
Eigen::MatrixXcd regular_rep(const FiniteGroup& G, int x);

/// lambda(f) = sum_x f(x) L(x) as a symmetric-kind element.
AlgebraElement fourier_rep(const FiniteGroup& G, const Eigen::VectorXcd& f);

/// Dense matrix realization: abelian elements act on l2(G) by pointwise
/// multiplication (diagonal), symmetric elements as sum f(x) L(x).
Eigen::MatrixXcd realize(const FiniteGroup& G, const AlgebraElement& a);

/// Inverse of `realize` for the symmetric kind; throws if the matrix is not
/// in the span of the generators (reconstruction residual > 1e-12).
AlgebraElement symmetric_from_matrix(const FiniteGroup& G, const Eigen::MatrixXcd& m);

AlgebraElement multiply(const FiniteGroup& G, const AlgebraElement& a,
                        const AlgebraElement& b);
/// The *-involution of the underlying algebra (conjugation for abelian,
/// adjoint for symmetric).
AlgebraElement star(const FiniteGroup& G, const AlgebraElement& a);

/// Fundamental operators: W F(x,y) = F(x, xy) for the abelian algebra and
/// its dual W_hat = sigma W* sigma, W_hat F(x,y) = F(y^{-1} x, y).
TensorOperator fundamental_w(const FiniteGroup& G);
TensorOperator fundamental_w_hat(const FiniteGroup& G);
TensorOperator swap_sigma(const FiniteGroup& G);

/// Max-norm residual of the pentagonal relation
/// (1(x)W)(sigma(x)1)(1(x)W)(sigma(x)1)(W(x)1) = (W(x)1)(1(x)W),
/// evaluated exactly through permutation composition on |G|^3 basis states.
/// Throws DimensionCap when |G|^3 exceeds the cap (default 4096).
double pentagonal_residual(const FiniteGroup& G, bool dual = false,
                           int dimension_cap = 4096);

/// Coproduct of an element: abelian D(f)(x,y) = f(xy) (diagonal operator),
/// symmetric D(L(x)) = L(x) (x) L(x) extended linearly.
TensorOperator coproduct(const FiniteGroup& G, const AlgebraElement& a);
/// The diagonal of the abelian coproduct as a function on G x G.
Eigen::VectorXcd coproduct_values(const FiniteGroup& G, const Eigen::VectorXcd& f);

/// kappa: abelian f(x) -> f(x^{-1}); symmetric L(x) -> L(x^{-1}).
AlgebraElement antipode(const FiniteGroup& G, const AlgebraElement& a);

/// phi_a(f) = sum_x f(x); phi_s(f_hat) = f(e).
cplx haar_weight(const FiniteGroup& G, const AlgebraElement& a);

/// sigma_t(L(x)) = Delta(x)^{it} L(x); finite groups are unimodular so this
/// is the identity map, kept for the shared modular-phase law.
AlgebraElement modular_automorphism(const FiniteGroup& G, double t,
                                    const AlgebraElement& a);
/// Delta^{it} for a given modular-function value (used on the affine lattice).
cplx modular_phase(double delta_value, double t);

/// Residuals of the full axiom suite for both Kac algebras of G.
struct KacReport {
    std::string group;
    std::map<std::string, double> residuals;
    double max_residual = 0.0;
};
KacReport kac_axiom_report(const FiniteGroup& G);

/// Exact Pontryagin duality data for a finite abelian group.
struct PontryaginReport {
    double character_homomorphism_residual = 0.0; // chi(xy) = chi(x)chi(y)
    double dual_group_residual = 0.0;             // closure under pointwise product
    double diagonalization_residual = 0.0;        // lambda(f) chi = dft(f) chi
    double max_residual = 0.0;
};
PontryaginReport pontryagin_check(const FiniteGroup& G);

} // namespace kac

} // namespace hpq
