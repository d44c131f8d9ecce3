#pragma once

#include <array>
#include <utility>

#include "hpq/groups.hpp"

namespace hpq {

/// Dimensionless coefficients of the observable h_{l,a}(x,p) = a x + l x p,
/// the half-plane Hamiltonians closed under the Poisson bracket.
struct PreferredObservable {
    double l = 0.0;
    double a = 0.0;

    double eval(double x, double p) const { return a * x + l * x * p; }
};

/// Algebra pair (l,a) stands for l*L + a*A with [A,L] = A.
using AlgebraPair = std::array<double, 2>; // {l, a}

/// [(l,a),(r,b)] = (0, a r - l b)
AlgebraPair lie_bracket(const AlgebraPair& X, const AlgebraPair& Y);

/// {h_{l,a}, h_{r,b}} = h_{0, a r - l b}
PreferredObservable poisson_bracket(const PreferredObservable& h1,
                                    const PreferredObservable& h2);

/// X_{l,a}(x,p) = (l x, -(l p + a)); requires x > 0.
std::pair<double, double> hamiltonian_field(const PreferredObservable& h, double x,
                                            double p);

/// Ad_{(l,a0)}(l,a) = (l, a0 l + a / lambda).
AlgebraPair adjoint_action(const AffineElement& g, const AlgebraPair& X);

struct CoadjointPoint {
    double eta_A = 0.0;
    double eta_L = 0.0;
};

/// Ad*_{(l,a)} eta = (l eta_A, eta_L - a l eta_A) in (eta_A, eta_L) coordinates.
CoadjointPoint coadjoint_action(const AffineElement& g, const CoadjointPoint& eta);

enum class OrbitFamily { plus_halfplane, minus_halfplane, point };

struct OrbitClass {
    OrbitFamily family = OrbitFamily::point;
    double eta_L = 0.0; // the fixed point when family == point
};

OrbitClass classify_orbit(const CoadjointPoint& eta);

/// Coefficient of theta^A wedge theta^L in the Kirillov form at eta;
/// nondegenerate iff eta_A != 0.  In orbit coordinates (eta_A, eta_L) the
/// same form reads (1/eta_A) d eta_A wedge d eta_L.
double kirillov_form(const CoadjointPoint& eta);

/// For eta, eta2 on the same half-plane orbit, returns g with
/// coadjoint_action(g, eta) = eta2. Throws Error when the orbits differ.
AffineElement solve_orbit_transport(const CoadjointPoint& eta,
                                    const CoadjointPoint& eta2);

// 2x2 matrix realization, used as an independent oracle for Ad / Ad*.
namespace matrix_realization {

using Mat2 = std::array<std::array<double, 2>, 2>;

Mat2 group(const AffineElement& g);          // [[l^-1/2, a l^1/2],[0, l^1/2]]
Mat2 algebra(const AlgebraPair& X);          // X = l*L + a*A
AlgebraPair algebra_coeffs(const Mat2& m);   // inverse of `algebra`
Mat2 dual(const CoadjointPoint& eta);        // eta_L theta^L + eta_A theta^A

/// Ad via matrix conjugation g X g^{-1}.
AlgebraPair adjoint_by_conjugation(const AffineElement& g, const AlgebraPair& X);
/// Ad* via eta' = <g eta g^{-1}, .>, components read off with the trace pairing.
CoadjointPoint coadjoint_by_conjugation(const AffineElement& g,
                                        const CoadjointPoint& eta);

} // namespace matrix_realization

} // namespace hpq
