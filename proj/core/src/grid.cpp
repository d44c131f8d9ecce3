#include "hpq/grid.hpp"

#include <cmath>

namespace hpq {

namespace {
bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }
} // namespace

double PhaseGrid::lambda(int j) const { return std::exp(u(j)); }

bool PhaseGrid::lattice_anchored() const {
    return near_integer(u_min / du) && near_integer(a_min / da);
}

int PhaseGrid::unit_lambda_index() const {
    if (!lattice_anchored()) throw LatticeError("grid is not lattice-anchored", 0);
    return static_cast<int>(std::round(-u_min / du));
}

int PhaseGrid::zero_a_index() const {
    if (!lattice_anchored()) throw LatticeError("grid is not lattice-anchored", 0);
    return static_cast<int>(std::round(-a_min / da));
}

bool PhaseGrid::operator==(const PhaseGrid& o) const {
    return u_min == o.u_min && n_u == o.n_u && du == o.du && a_min == o.a_min &&
           n_a == o.n_a && da == o.da;
}

PhaseGrid PhaseGrid::standard(int refine) {
    PhaseGrid g;
    g.u_min = -6.0;
    g.n_u = 256 * refine;
    g.du = 12.0 / g.n_u;
    g.a_min = -16.0;
    g.n_a = 512 * refine;
    g.da = 32.0 / g.n_a;
    return g;
}

GridFunction GridFunction::gaussian(const PhaseGrid& g, double u0, double a0, double s1,
                                    double s2) {
    GridFunction f(g);
    for (int j = 0; j < g.n_u; ++j) {
        const double eu = std::exp(-0.5 * std::pow((g.u(j) - u0) / s1, 2));
        for (int m = 0; m < g.n_a; ++m) {
            const double ea = std::exp(-0.5 * std::pow((g.a(m) - a0) / s2, 2));
            f.at(j, m) = cplx(eu * ea, 0.0);
        }
    }
    return f;
}

double RhoGrid::rho(int j) const { return std::exp(u(j)); }

bool RhoGrid::operator==(const RhoGrid& o) const {
    return u_min == o.u_min && n == o.n && du == o.du;
}

bool RhoGrid::aligned_with(const PhaseGrid& g) const {
    return std::abs(du - g.du) < 1e-14 && near_integer(u_min / du);
}

RhoGrid RhoGrid::standard(int refine) {
    RhoGrid r;
    r.du = 12.0 / (256.0 * refine);
    r.u_min = -6.0 - 6.0 * refine;
    r.n = static_cast<int>(std::round((6.0 - r.u_min) / r.du));
    return r;
}

double StateVector::norm2_sq() const {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return grid.du * s;
}

StateVector StateVector::gaussian(const RhoGrid& g, double u0, double sigma,
                                  bool normalize) {
    StateVector xi(g);
    for (int j = 0; j < g.n; ++j) {
        xi.v[j] = cplx(std::exp(-0.5 * std::pow((g.u(j) - u0) / sigma, 2)), 0.0);
    }
    if (normalize) {
        const double nrm = std::sqrt(xi.norm2_sq());
        for (auto& z : xi.v) z /= nrm;
    }
    return xi;
}

} // namespace hpq
