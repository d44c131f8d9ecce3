#pragma once

#include <Eigen/Dense>

#include "hpq/grid.hpp"
#include "hpq/groups.hpp"

namespace hpq {

/// Operator on L^2(R+, drho/rho) held as a kernel matrix over the rho
/// lattice: (K xi)(rho_i) = sum_j du K(rho_i, rho_j) xi(rho_j).
struct HalfLineOperator {
    RhoGrid grid;
    int sign = +1;     // +1 / -1 representation class
    double hbar = 1.0; // action scale
    Eigen::MatrixXcd kernel;

    StateVector apply(const StateVector& xi) const;
    HalfLineOperator adjointed() const;
    HalfLineOperator composed(const HalfLineOperator& other) const;
    double hs_norm() const; // Hilbert-Schmidt norm sqrt(du^2 sum |K|^2)
};

/// [T_sign(l,a) xi](rho) = e^{sign i a rho / hbar} xi(rho / l); l must lie on
/// the lattice e^{k du}. Shifted-out samples are dropped; their L2 mass is
/// reported through lost_mass when given.
StateVector rep_T(int sign, double hbar, const AffineElement& g, const StateVector& xi,
                  double* lost_mass = nullptr);

/// Dense matrix of T_sign(l,a) on the grid.
Eigen::MatrixXcd rep_T_matrix(int sign, double hbar, const AffineElement& g,
                              const RhoGrid& grid);

/// One-dimensional representations T_y(l,a) = l^{iy}.
cplx rep_1d(double y, const AffineElement& g);
/// L1 pairing sum over the grid of f(l,a) l^{iy}.
cplx rep_1d_pairing(const GridFunction& f, double y);

StateVector apply_rho_hat(const StateVector& xi);
/// pi = -i hbar d/du through 4th-order central differences on the u lattice.
StateVector apply_pi_hat(double hbar, const StateVector& xi);
/// || [rho,pi] xi - i hbar rho xi ||_2 / || rho xi ||_2
double commutator_residual(double hbar, const StateVector& xi);

enum class KernelPath { fast, quadrature };

/// Weyl map f -> sum_grid w_l(g) f(g) T_sign(g), assembled as the kernel
/// K(r,t) = (r/t) F_{r/t}(sign r / hbar) with F the a-direction Fourier sum
/// of the f rows. Rows with |r/hbar| beyond the a-grid Nyquist band pi/da
/// are set to zero on both paths (the quadrature cannot resolve them);
/// band_edge_amplitude reports the largest |F| at the band edge, the
/// truncation diagnostic (effectively zero for the default family).
/// hbar is a runtime parameter; the reference length that makes ln(l)
/// dimensionless is fixed to 1 and absorbed into the grid origin (shifting
/// u_min relabels the lattice by exactly that constant).
HalfLineOperator quantize(const GridFunction& f, int sign, double hbar,
                          const RhoGrid& grid, KernelPath path = KernelPath::fast,
                          double* band_edge_amplitude = nullptr);

/// phi_pm(op) = (1 / 2 pi hbar) sum_j du rho_j K(rho_j, rho_j): the weight
/// Tr(Delta .), not a trace; weight_pm_reversed composes the operators in the
/// other order for non-traciality measurements.
cplx weight_pm(const HalfLineOperator& op);

/// f_pm(l,a) = phi_pm[T^dagger(l,a) op]; l on the lattice.
cplx dequantize(const HalfLineOperator& op, const AffineElement& g);
/// f(l,a) ~ f_+ + f_- from the two signed operators.
cplx reconstruct(const HalfLineOperator& plus, const HalfLineOperator& minus,
                 const AffineElement& g);

struct PlancherelAffineReport {
    double l2_sq = 0.0;
    double dual_sum = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
};
PlancherelAffineReport plancherel_residual(const GridFunction& f, double hbar,
                                           const RhoGrid& grid,
                                           KernelPath path = KernelPath::fast);

/// W_xi(l,a) = (xi | T_{+hbar}(l,a) xi); l on the lattice.
cplx wigner(const StateVector& xi, double hbar, const AffineElement& g, int sign = +1);

/// (xi | op xi)
cplx expectation(const HalfLineOperator& op, const StateVector& xi);
/// sum over the grid of f(g) W_xi(g) with the left Haar weights.
cplx wigner_pairing(const GridFunction& f, const StateVector& xi, double hbar,
                    int sign = +1);

/// Operator-norm residual of R(rho)^{-1} T_x(l,a) R(rho) = T_{x/rho}(l,a) with
/// rho = e^{m du}, restricted to the rows where neither side was truncated.
double intertwiner_residual(int m, const AffineElement& g, double hbar, int sign,
                            const RhoGrid& grid);

/// Largest singular value of the kernel action, by power iteration on K*K.
double op_norm_estimate(const HalfLineOperator& op, int iterations = 40);

} // namespace hpq
