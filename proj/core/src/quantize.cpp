#include "hpq/quantize.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hpq/fft.hpp"
#include "hpq/l1.hpp"
#include "hpq/parallel.hpp"

namespace hpq {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

int lattice_index(double lambda, double du) {
    const double k = std::log(lambda) / du;
    const int ki = static_cast<int>(std::llround(k));
    if (std::abs(k - ki) > 1e-9)
        throw LatticeError("lambda off the log lattice; nearest exponent index " +
                               std::to_string(ki),
                           ki);
    return ki;
}

void require_alignment(const GridFunction& f, const RhoGrid& grid) {
    if (!f.grid.lattice_anchored())
        throw LatticeError("phase grid is not lattice-anchored", 0);
    if (!grid.aligned_with(f.grid))
        throw LatticeError("rho grid is not aligned with the phase lattice", 0);
}

} // namespace

StateVector HalfLineOperator::apply(const StateVector& xi) const {
    if (!(xi.grid == grid)) throw GridMismatch("apply: state on a different grid");
    StateVector out(grid);
    Eigen::Map<const Vec> v(xi.v.data(), xi.v.size());
    Vec r = grid.du * (kernel * v);
    for (int i = 0; i < grid.n; ++i) out.v[i] = r[i];
    return out;
}

HalfLineOperator HalfLineOperator::adjointed() const {
    HalfLineOperator a{grid, sign, hbar, kernel.adjoint()};
    return a;
}

HalfLineOperator HalfLineOperator::composed(const HalfLineOperator& other) const {
    if (!(other.grid == grid)) throw GridMismatch("composed: grids differ");
    HalfLineOperator c{grid, sign, hbar, Mat(grid.du * (kernel * other.kernel))};
    return c;
}

double HalfLineOperator::hs_norm() const {
    return grid.du * kernel.norm();
}

StateVector rep_T(int sign, double hbar, const AffineElement& g, const StateVector& xi,
                  double* lost_mass) {
    const RhoGrid& grid = xi.grid;
    const int k = lattice_index(g.lambda, grid.du);
    StateVector out(grid);
    double lost = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const int j = i - k;
        if (j >= 0 && j < grid.n) {
            out.v[i] = std::polar(1.0, sign * g.a * grid.rho(i) / hbar) * xi.v[j];
        }
    }
    for (int j = 0; j < grid.n; ++j) {
        const int i = j + k;
        if (i < 0 || i >= grid.n) lost += grid.du * std::norm(xi.v[j]);
    }
    if (lost_mass) *lost_mass = lost;
    return out;
}

Mat rep_T_matrix(int sign, double hbar, const AffineElement& g, const RhoGrid& grid) {
    const int k = lattice_index(g.lambda, grid.du);
    Mat m = Mat::Zero(grid.n, grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const int j = i - k;
        if (j >= 0 && j < grid.n)
            m(i, j) = std::polar(1.0, sign * g.a * grid.rho(i) / hbar);
    }
    return m;
}

cplx rep_1d(double y, const AffineElement& g) {
    return std::polar(1.0, y * std::log(g.lambda));
}

cplx rep_1d_pairing(const GridFunction& f, double y) {
    const MeasureSpec mu = haar_measure(f.grid, MeasureSide::left);
    cplx acc{0.0, 0.0};
    for (int j = 0; j < f.grid.n_u; ++j) {
        const cplx chi = std::polar(1.0, y * f.grid.u(j));
        for (int m = 0; m < f.grid.n_a; ++m)
            acc += mu.weights[static_cast<std::size_t>(j) * f.grid.n_a + m] *
                   f.at(j, m) * chi;
    }
    return acc;
}

StateVector apply_rho_hat(const StateVector& xi) {
    StateVector out(xi.grid);
    for (int j = 0; j < xi.grid.n; ++j) out.v[j] = xi.grid.rho(j) * xi.v[j];
    return out;
}

StateVector apply_pi_hat(double hbar, const StateVector& xi) {
    const int n = xi.grid.n;
    const double du = xi.grid.du;
    StateVector out(xi.grid);
    auto val = [&](int j) -> cplx {
        return (j >= 0 && j < n) ? xi.v[j] : cplx(0.0, 0.0);
    };
    for (int j = 0; j < n; ++j) {
        const cplx d = (-val(j + 2) + 8.0 * val(j + 1) - 8.0 * val(j - 1) + val(j - 2)) /
                       (12.0 * du);
        out.v[j] = cplx(0.0, -hbar) * d;
    }
    return out;
}

double commutator_residual(double hbar, const StateVector& xi) {
    const StateVector rho_pi = apply_rho_hat(apply_pi_hat(hbar, xi));
    const StateVector pi_rho = apply_pi_hat(hbar, apply_rho_hat(xi));
    const StateVector rho_xi = apply_rho_hat(xi);
    double num = 0.0, den = 0.0;
    for (int j = 0; j < xi.grid.n; ++j) {
        const cplx comm = rho_pi.v[j] - pi_rho.v[j];
        const cplx target = cplx(0.0, hbar) * rho_xi.v[j];
        num += std::norm(comm - target);
        den += std::norm(rho_xi.v[j]);
    }
    return std::sqrt(num / den);
}

HalfLineOperator quantize(const GridFunction& f, int sign, double hbar,
                          const RhoGrid& grid, KernelPath path,
                          double* band_edge_amplitude) {
    require_alignment(f, grid);
    const PhaseGrid& pg = f.grid;
    const int off = pg.unit_lambda_index();
    const int n = grid.n;
    const double omega_max = std::numbers::pi / pg.da;

    // a-direction Fourier sums of the weighted f rows
    std::vector<FourierSum> rows;
    rows.reserve(pg.n_u);
    for (int j = 0; j < pg.n_u; ++j) {
        std::vector<cplx> c(pg.n_a);
        for (int m = 0; m < pg.n_a; ++m) c[m] = pg.da * f.at(j, m);
        rows.emplace_back(std::move(c), pg.a_min, pg.da);
    }

    if (band_edge_amplitude) {
        double edge = 0.0;
        for (int j = 0; j < pg.n_u; ++j)
            edge = std::max({edge, std::abs(rows[j].direct(omega_max)),
                             std::abs(rows[j].direct(-omega_max))});
        *band_edge_amplitude = edge;
    }

    HalfLineOperator op{grid, sign, hbar, Mat::Zero(n, n)};
    parallel_for(n, [&](std::size_t i_) {
        const int i = static_cast<int>(i_);
        const double r = grid.rho(i);
        const double w = sign * r / hbar;
        if (std::abs(w) > omega_max) return; // beyond the resolvable band
        for (int j = 0; j < n; ++j) {
            const int jf = i - j + off;
            if (jf < 0 || jf >= pg.n_u) continue;
            const double ratio = std::exp((i - j) * grid.du);
            const cplx F = (path == KernelPath::fast) ? rows[jf].fast(w)
                                                      : rows[jf].direct(w);
            op.kernel(i, j) = ratio * F;
        }
    });
    return op;
}

cplx weight_pm(const HalfLineOperator& op) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < op.grid.n; ++j)
        acc += op.grid.du * op.grid.rho(j) * op.kernel(j, j);
    return acc / (2.0 * std::numbers::pi * op.hbar);
}

cplx dequantize(const HalfLineOperator& op, const AffineElement& g) {
    const int k = lattice_index(g.lambda, op.grid.du);
    cplx acc{0.0, 0.0};
    for (int j = 0; j < op.grid.n; ++j) {
        const int i = j + k;
        if (i < 0 || i >= op.grid.n) continue;
        const double t = op.grid.rho(j);
        const cplx phase =
            std::polar(1.0, -op.sign * g.a * g.lambda * t / op.hbar);
        acc += op.grid.du * t * phase * op.kernel(i, j);
    }
    return acc / (2.0 * std::numbers::pi * op.hbar);
}

cplx reconstruct(const HalfLineOperator& plus, const HalfLineOperator& minus,
                 const AffineElement& g) {
    if (!(plus.grid == minus.grid)) throw GridMismatch("reconstruct: grids differ");
    return dequantize(plus, g) + dequantize(minus, g);
}

PlancherelAffineReport plancherel_residual(const GridFunction& f, double hbar,
                                           const RhoGrid& grid, KernelPath path) {
    PlancherelAffineReport rep;
    rep.l2_sq = l2_norm_sq(f);
    double dual = 0.0;
    for (int sign : {+1, -1}) {
        const HalfLineOperator op = quantize(f, sign, hbar, grid, path);
        // weight of K^dagger K needs only the weighted diagonal:
        // sum_j du rho_j sum_s du |K(s,j)|^2
        double acc = 0.0;
        for (int j = 0; j < grid.n; ++j)
            acc += grid.du * grid.rho(j) * grid.du * op.kernel.col(j).squaredNorm();
        dual += acc / (2.0 * std::numbers::pi * hbar);
    }
    rep.dual_sum = dual;
    rep.abs_residual = std::abs(rep.l2_sq - rep.dual_sum);
    rep.rel_residual = rep.abs_residual / rep.l2_sq;
    return rep;
}

cplx wigner(const StateVector& xi, double hbar, const AffineElement& g, int sign) {
    const int k = lattice_index(g.lambda, xi.grid.du);
    cplx acc{0.0, 0.0};
    for (int i = 0; i < xi.grid.n; ++i) {
        const int j = i - k;
        if (j < 0 || j >= xi.grid.n) continue;
        acc += xi.grid.du * std::polar(1.0, -sign * g.a * xi.grid.rho(i) / hbar) *
               xi.v[i] * std::conj(xi.v[j]);
    }
    return acc;
}

cplx expectation(const HalfLineOperator& op, const StateVector& xi) {
    const StateVector ap = op.apply(xi);
    cplx acc{0.0, 0.0};
    for (int i = 0; i < xi.grid.n; ++i)
        acc += xi.grid.du * xi.v[i] * std::conj(ap.v[i]);
    return acc;
}

cplx wigner_pairing(const GridFunction& f, const StateVector& xi, double hbar,
                    int sign) {
    if (!f.grid.lattice_anchored())
        throw LatticeError("phase grid is not lattice-anchored", 0);
    if (!xi.grid.aligned_with(f.grid))
        throw LatticeError("state grid not aligned with the phase lattice", 0);
    const PhaseGrid& pg = f.grid;
    std::vector<cplx> partial(pg.n_u, cplx(0.0, 0.0));
    parallel_for(pg.n_u, [&](std::size_t j_) {
        const int j = static_cast<int>(j_);
        const double wl = pg.du * pg.lambda(j) * pg.da;
        cplx row{0.0, 0.0};
        for (int m = 0; m < pg.n_a; ++m) {
            const AffineElement g{pg.lambda(j), pg.a(m)};
            row += wl * f.at(j, m) * wigner(xi, hbar, g, sign);
        }
        partial[j] = row;
    });
    cplx acc{0.0, 0.0};
    for (const cplx& p : partial) acc += p;
    return acc;
}

double intertwiner_residual(int m, const AffineElement& g, double hbar, int sign,
                            const RhoGrid& grid) {
    const int k = lattice_index(g.lambda, grid.du);
    const double rho = std::exp(m * grid.du);
    const Mat t = rep_T_matrix(sign, hbar, g, grid);
    // R(rho) xi(eta) = xi(eta rho): index shift by +m
    Mat r = Mat::Zero(grid.n, grid.n), rinv = Mat::Zero(grid.n, grid.n);
    for (int i = 0; i < grid.n; ++i) {
        if (i + m >= 0 && i + m < grid.n) r(i, i + m) = 1.0;
        if (i - m >= 0 && i - m < grid.n) rinv(i, i - m) = 1.0;
    }
    const Mat lhs = rinv * t * r;
    const Mat rhs = rep_T_matrix(sign, hbar * rho, g, grid);
    double res = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        // rows where neither side lost samples to the boundary
        if (i - k < 0 || i - k >= grid.n) continue;
        if (i - m < 0 || i - m >= grid.n) continue;
        if (i - m - k < 0 || i - m - k >= grid.n) continue;
        res = std::max(res, (lhs.row(i) - rhs.row(i)).cwiseAbs().maxCoeff());
    }
    return res;
}

double op_norm_estimate(const HalfLineOperator& op, int iterations) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Vec v(op.grid.n);
    for (int i = 0; i < op.grid.n; ++i) v[i] = cplx(d(rng), d(rng));
    v.normalize();
    const Mat m = op.grid.du * op.kernel;
    double sigma = 0.0;
    for (int it = 0; it < iterations; ++it) {
        Vec w = m.adjoint() * (m * v);
        const double nw = w.norm();
        if (nw == 0.0) return 0.0;
        sigma = std::sqrt(nw);
        v = w / nw;
    }
    return sigma;
}

} // namespace hpq
