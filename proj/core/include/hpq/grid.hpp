#pragma once

#include <complex>
#include <vector>

#include "hpq/errors.hpp"

namespace hpq {

using cplx = std::complex<double>;

/// Log-uniform lambda lattice times uniform a grid for phase-space samples.
/// Both axes are half-open: u_j = u_min + j*du for j < n_u, likewise in a.
/// When u_min and a_min are integer multiples of the steps the lambda samples
/// form a subset of the multiplicative lattice {e^{k du}} and lambda = 1,
/// a = 0 are sample points; operator constructions require this anchoring.
struct PhaseGrid {
    double u_min = -6.0;
    int n_u = 256;
    double du = 12.0 / 256.0;
    double a_min = -16.0;
    int n_a = 512;
    double da = 32.0 / 512.0;

    double u(int j) const { return u_min + j * du; }
    double lambda(int j) const;
    double a(int m) const { return a_min + m * da; }
    double u_max() const { return u_min + n_u * du; } // exclusive
    double a_max() const { return a_min + n_a * da; } // exclusive
    std::size_t size() const { return static_cast<std::size_t>(n_u) * n_a; }

    bool lattice_anchored() const;
    /// Index j with lambda(j) = 1; requires anchoring.
    int unit_lambda_index() const;
    int zero_a_index() const;

    bool operator==(const PhaseGrid& o) const;

    /// Default grid: u in [-6,6) with 256*refine points, a in [-16,16) with
    /// 512*refine points.
    static PhaseGrid standard(int refine = 1);
};

/// Complex samples of a phase-space function on a PhaseGrid, row-major with
/// u outer, a inner.
struct GridFunction {
    PhaseGrid grid;
    std::vector<cplx> v;

    GridFunction() = default;
    explicit GridFunction(const PhaseGrid& g) : grid(g), v(g.size(), cplx{0.0, 0.0}) {}

    cplx& at(int j, int m) { return v[static_cast<std::size_t>(j) * grid.n_a + m]; }
    const cplx& at(int j, int m) const { return v[static_cast<std::size_t>(j) * grid.n_a + m]; }

    /// exp(-(ln l - u0)^2 / (2 s1^2)) * exp(-(a - a0)^2 / (2 s2^2))
    static GridFunction gaussian(const PhaseGrid& g, double u0, double a0, double s1,
                                 double s2);
};

/// Sample lattice rho_j = e^{u_min + j du} for states in L^2(R+, drho/rho);
/// the quadrature weight of every sample is du.
struct RhoGrid {
    double u_min = -12.0;
    int n = 384;
    double du = 12.0 / 256.0;

    double u(int j) const { return u_min + j * du; }
    double rho(int j) const;
    double u_max() const { return u_min + n * du; } // exclusive

    bool operator==(const RhoGrid& o) const;
    bool aligned_with(const PhaseGrid& g) const;

    /// Representation grid matching PhaseGrid::standard(refine): same du,
    /// upper end at u = +6, lower end deepened to -6 - 6*refine so that
    /// weight quadratures resolve the small-rho region as the grids refine.
    static RhoGrid standard(int refine = 1);
};

struct StateVector {
    RhoGrid grid;
    std::vector<cplx> v;

    StateVector() = default;
    explicit StateVector(const RhoGrid& g) : grid(g), v(g.n, cplx{0.0, 0.0}) {}

    double norm2_sq() const; // sum du |v|^2
    /// Gaussian profile in u: exp(-(u-u0)^2/(2 sigma^2)), optionally L2-normalized.
    static StateVector gaussian(const RhoGrid& g, double u0, double sigma,
                                bool normalize = true);
};

} // namespace hpq
