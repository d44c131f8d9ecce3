#pragma once

#include <Eigen/Dense>

#include "hpq/grid.hpp"
#include "hpq/groups.hpp"

namespace hpq {

// ---------------------------------------------------------------------------
// Finite instance: exact counting-measure convolution algebra.
// ---------------------------------------------------------------------------

/// (f*g)(x) = sum_y f(y) g(y^{-1} x)
Eigen::VectorXcd convolve(const FiniteGroup& G, const Eigen::VectorXcd& f,
                          const Eigen::VectorXcd& g);
/// Same product written against the right-invariant measure:
/// (f*g)(x) = sum_y f(x y^{-1}) g(y).
Eigen::VectorXcd convolve_right_form(const FiniteGroup& G, const Eigen::VectorXcd& f,
                                     const Eigen::VectorXcd& g);
/// f^*(x) = conj(f(x^{-1})) (Delta == 1 on finite groups)
Eigen::VectorXcd involution(const FiniteGroup& G, const Eigen::VectorXcd& f);
double l1_norm(const FiniteGroup& G, const Eigen::VectorXcd& f);
cplx l2_inner(const FiniteGroup& G, const Eigen::VectorXcd& f,
              const Eigen::VectorXcd& g);

// ---------------------------------------------------------------------------
// Affine instance: left-Haar quadrature on the phase grid. The lambda part of
// y^{-1}x lands on the log lattice exactly; the a part is resolved by cubic
// interpolation (zero outside the grid).
// ---------------------------------------------------------------------------

/// Full-grid convolution, FFT-accelerated along a. Requires both functions on
/// the same lattice-anchored grid.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

/// Direct-quadrature evaluation of (f*g)(x) at a single point; x.lambda must
/// be on the lattice e^{k du}.
cplx convolve_at(const GridFunction& f, const GridFunction& g, const AffineElement& x);

/// Right-invariant-measure form of the same product, direct quadrature.
cplx convolve_at_right_form(const GridFunction& f, const GridFunction& g,
                            const AffineElement& x);

/// f^*(l,a) = (1/l) conj(f(1/l, -a l)); inverse samples interpolated with a
/// 10-point rule in a. Rows of f^* at large l have a-width ~ sigma/l and
/// stop being resolvable on the fixed a-grid, so downstream consumers that
/// need f^* between samples should prefer involution_at.
GridFunction involution(const GridFunction& f);

/// Point evaluation of f^* from the samples of f (no intermediate grid);
/// x.lambda must be on the lattice.
cplx involution_at(const GridFunction& f, const AffineElement& x);

double l1_norm(const GridFunction& f);
double l2_norm_sq(const GridFunction& f);
cplx l2_inner(const GridFunction& f, const GridFunction& g);

/// Left translation f(g^{-1} x) on the grid (g.lambda on the lattice, a shift
/// arbitrary); reports the L2 mass moved off the grid.
struct TranslateResult {
    GridFunction f;
    double truncated_mass; // L2 mass lost at the boundary
};
TranslateResult left_translate(const GridFunction& f, const AffineElement& g);

} // namespace hpq
