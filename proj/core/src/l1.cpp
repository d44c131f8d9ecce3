#include "hpq/l1.hpp"

#include <cmath>

#include "hpq/fft.hpp"
#include "hpq/parallel.hpp"

namespace hpq {

// ------------------------------ finite case -------------------------------

Eigen::VectorXcd convolve(const FiniteGroup& G, const Eigen::VectorXcd& f,
                          const Eigen::VectorXcd& g) {
    const int n = G.order();
    if (f.size() != n || g.size() != n) throw GridMismatch("convolve: size != |G|");
    Eigen::VectorXcd h = Eigen::VectorXcd::Zero(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) h[x] += f[y] * g[G.product(G.inverse(y), x)];
    return h;
}

Eigen::VectorXcd convolve_right_form(const FiniteGroup& G, const Eigen::VectorXcd& f,
                                     const Eigen::VectorXcd& g) {
    const int n = G.order();
    if (f.size() != n || g.size() != n) throw GridMismatch("convolve: size != |G|");
    Eigen::VectorXcd h = Eigen::VectorXcd::Zero(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) h[x] += f[G.product(x, G.inverse(y))] * g[y];
    return h;
}

Eigen::VectorXcd involution(const FiniteGroup& G, const Eigen::VectorXcd& f) {
    const int n = G.order();
    Eigen::VectorXcd h(n);
    for (int x = 0; x < n; ++x) h[x] = std::conj(f[G.inverse(x)]);
    return h;
}

double l1_norm(const FiniteGroup& G, const Eigen::VectorXcd& f) {
    (void)G;
    return f.cwiseAbs().sum();
}

cplx l2_inner(const FiniteGroup& G, const Eigen::VectorXcd& f,
              const Eigen::VectorXcd& g) {
    (void)G;
    cplx s{0.0, 0.0};
    for (Eigen::Index i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
    return s;
}

// ------------------------------ affine case -------------------------------

namespace {

const cplx* row_ptr(const GridFunction& f, int j) {
    return f.v.data() + static_cast<std::size_t>(j) * f.grid.n_a;
}

cplx interp_row(const GridFunction& f, int j, double x_index, int points) {
    const long n = f.grid.n_a;
    if (x_index < 0.0 || x_index > static_cast<double>(n - 1)) return {0.0, 0.0};
    const cplx* row = row_ptr(f, j);
    const long half = points / 2;
    long base = static_cast<long>(std::floor(x_index)) - (half - 1);
    if (base < 0) base = 0;
    if (base + points > n) base = n - points;
    cplx acc(0.0, 0.0);
    for (int q = 0; q < points; ++q) {
        const double xq = static_cast<double>(base + q);
        double w = 1.0;
        for (int k = 0; k < points; ++k) {
            if (k == q) continue;
            const double xk = static_cast<double>(base + k);
            w *= (x_index - xk) / (xq - xk);
        }
        acc += w * row[base + q];
    }
    return acc;
}

int lattice_index(double lambda, double du) {
    const double k = std::log(lambda) / du;
    const int ki = static_cast<int>(std::llround(k));
    if (std::abs(k - ki) > 1e-9)
        throw LatticeError("lambda is off the log lattice; nearest exponent index " +
                               std::to_string(ki),
                           ki);
    return ki;
}

void require_anchored(const PhaseGrid& g) {
    if (!g.lattice_anchored())
        throw LatticeError("grid must be lattice-anchored (u_min, a_min multiples of the steps)", 0);
}

} // namespace

cplx convolve_at(const GridFunction& f, const GridFunction& g, const AffineElement& x) {
    if (!(f.grid == g.grid)) throw GridMismatch("convolve_at: grids differ");
    require_anchored(f.grid);
    const PhaseGrid& G = f.grid;
    const int off = G.unit_lambda_index();
    const int m0 = G.zero_a_index();
    const int kx = lattice_index(x.lambda, G.du);
    cplx acc(0.0, 0.0);
    for (int j = 0; j < G.n_u; ++j) {
        const int jg = kx - j + 2 * off;
        if (jg < 0 || jg >= G.n_u) continue;
        const double mu = G.lambda(j);
        const double wl = G.du * mu * G.da;
        cplx inner(0.0, 0.0);
        for (int m = 0; m < G.n_a; ++m) {
            // g at a-coordinate mu*(x.a - a_m): index m0 + mu*(x.a - a_m)/da
            const double xi = m0 + mu * (x.a - G.a(m)) / G.da;
            inner += f.at(j, m) * interp_row(g, jg, xi, 4);
        }
        acc += wl * inner;
    }
    return acc;
}

cplx convolve_at_right_form(const GridFunction& f, const GridFunction& g,
                            const AffineElement& x) {
    if (!(f.grid == g.grid)) throw GridMismatch("convolve_at: grids differ");
    require_anchored(f.grid);
    const PhaseGrid& G = f.grid;
    const int off = G.unit_lambda_index();
    const int m0 = G.zero_a_index();
    const int kx = lattice_index(x.lambda, G.du);
    cplx acc(0.0, 0.0);
    // (f*g)(x) = int d^r(y) f(x y^{-1}) g(y); d^r = (dmu/mu) db
    for (int j = 0; j < G.n_u; ++j) {
        const int jf = kx - j + 2 * off; // row of lambda_x / mu_j
        if (jf < 0 || jf >= G.n_u) continue;
        const double mu = G.lambda(j);
        const double wr = G.du * G.da; // right weights: du*mu*da / mu
        cplx inner(0.0, 0.0);
        for (int m = 0; m < G.n_a; ++m) {
            // x y^{-1} = (lambda/mu, a - b*mu/lambda): a-index of f
            const double xi = m0 + (x.a - G.a(m) * mu / x.lambda) / G.da;
            inner += interp_row(f, jf, xi, 4) * g.at(j, m);
        }
        acc += wr * inner;
    }
    return acc;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid == g.grid)) throw GridMismatch("convolve: grids differ");
    require_anchored(f.grid);
    const PhaseGrid& G = f.grid;
    const int nu = G.n_u, na = G.n_a;
    const int off = G.unit_lambda_index();
    const int m0 = G.zero_a_index();
    const std::size_t M = next_pow2(static_cast<std::size_t>(2) * na);

    // spectra of the weighted f rows
    std::vector<std::vector<cplx>> fhat(nu);
    parallel_for(nu, [&](std::size_t j) {
        std::vector<cplx> buf(M, cplx(0.0, 0.0));
        const cplx* row = row_ptr(f, static_cast<int>(j));
        for (int m = 0; m < na; ++m) buf[m] = G.da * row[m];
        fft_pow2(buf, -1);
        fhat[j] = std::move(buf);
    });

    GridFunction h(G);
    parallel_for(nu, [&](std::size_t i_) {
        const int i = static_cast<int>(i_);
        std::vector<cplx> acc(M, cplx(0.0, 0.0));
        std::vector<cplx> vbuf(M);
        for (int j = 0; j < nu; ++j) {
            const int jg = i - j + off;
            if (jg < 0 || jg >= nu) continue;
            const double mu = G.lambda(j);
            const double wu = G.du * mu;
            // kernel samples V[d] = g(lambda_i/mu_j, mu_j * da * d), d = m - m'
            std::fill(vbuf.begin(), vbuf.end(), cplx(0.0, 0.0));
            bool any = false;
            for (long d = -(na - 1); d <= na - 1; ++d) {
                const double xi = m0 + mu * static_cast<double>(d);
                const cplx val = interp_row(g, jg, xi, 4);
                if (val != cplx(0.0, 0.0)) any = true;
                vbuf[static_cast<std::size_t>((d + static_cast<long>(M)) % static_cast<long>(M))] = val;
            }
            if (!any) continue;
            fft_pow2(vbuf, -1);
            for (std::size_t q = 0; q < M; ++q) acc[q] += wu * fhat[j][q] * vbuf[q];
        }
        fft_pow2(acc, +1);
        const double inv = 1.0 / static_cast<double>(M);
        for (int m = 0; m < na; ++m) h.at(i, m) = acc[m] * inv;
    });
    return h;
}

GridFunction involution(const GridFunction& f) {
    require_anchored(f.grid);
    const PhaseGrid& G = f.grid;
    const int off = G.unit_lambda_index();
    const int m0 = G.zero_a_index();
    GridFunction h(G);
    for (int i = 0; i < G.n_u; ++i) {
        const int ji = 2 * off - i; // row of 1/lambda_i
        const double li = G.lambda(i);
        if (ji < 0 || ji >= G.n_u) continue;
        for (int m = 0; m < G.n_a; ++m) {
            const double xi = m0 - G.a(m) * li / G.da;
            h.at(i, m) = std::conj(interp_row(f, ji, xi, 10)) / li;
        }
    }
    return h;
}

cplx involution_at(const GridFunction& f, const AffineElement& x) {
    require_anchored(f.grid);
    const PhaseGrid& G = f.grid;
    const int off = G.unit_lambda_index();
    const int m0 = G.zero_a_index();
    const int k = lattice_index(x.lambda, G.du);
    const int ji = off - k; // row of 1/lambda
    if (ji < 0 || ji >= G.n_u) return {0.0, 0.0};
    const double xi = m0 - x.a * x.lambda / G.da;
    return std::conj(interp_row(f, ji, xi, 10)) / x.lambda;
}

double l1_norm(const GridFunction& f) {
    const MeasureSpec mu = haar_measure(f.grid, MeasureSide::left);
    double s = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) s += mu.weights[i] * std::abs(f.v[i]);
    return s;
}

double l2_norm_sq(const GridFunction& f) {
    const MeasureSpec mu = haar_measure(f.grid, MeasureSide::left);
    double s = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) s += mu.weights[i] * std::norm(f.v[i]);
    return s;
}

cplx l2_inner(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid == g.grid)) throw GridMismatch("l2_inner: grids differ");
    const MeasureSpec mu = haar_measure(f.grid, MeasureSide::left);
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < f.v.size(); ++i)
        s += mu.weights[i] * f.v[i] * std::conj(g.v[i]);
    return s;
}

TranslateResult left_translate(const GridFunction& f, const AffineElement& g) {
    require_anchored(f.grid);
    const PhaseGrid& G = f.grid;
    const int k = lattice_index(g.lambda, G.du);
    TranslateResult out{GridFunction(G), 0.0};
    // (L_g f)(l,a) = f(g^{-1}(l,a)) = f(l/lambda_g, lambda_g (a - a_g))
    for (int i = 0; i < G.n_u; ++i) {
        const int js = i - k;
        if (js < 0 || js >= G.n_u) continue;
        for (int m = 0; m < G.n_a; ++m) {
            const double xi = (g.lambda * (G.a(m) - g.a) - G.a_min) / G.da;
            out.f.at(i, m) = interp_row(f, js, xi, 4);
        }
    }
    // L2 mass of source samples whose image g*y leaves the grid
    const MeasureSpec mu = haar_measure(G, MeasureSide::left);
    for (int j = 0; j < G.n_u; ++j) {
        const int it = j + k;
        for (int m = 0; m < G.n_a; ++m) {
            const double a_img = g.a + G.a(m) / g.lambda;
            const bool inside = it >= 0 && it < G.n_u && a_img >= G.a_min &&
                                a_img < G.a_max();
            if (!inside)
                out.truncated_mass +=
                    mu.weights[static_cast<std::size_t>(j) * G.n_a + m] *
                    std::norm(f.at(j, m));
        }
    }
    return out;
}

} // namespace hpq
