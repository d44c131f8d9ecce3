#include "hpq/kac.hpp"

#include <cmath>
#include <random>

#include "hpq/l1.hpp"

namespace hpq::kac {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat kron(const Mat& A, const Mat& B) {
    Mat C(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            C.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return C;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

Vec random_vec(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = cplx(d(rng), d(rng));
    return v;
}

/// Coefficient matrix of an element of M(G) (x) M(G) in the basis
/// L(x) (x) L(y); products are two-legged group convolutions.
struct TensorCoeffs {
    Mat c; // c(x,y)
};

TensorCoeffs tc_mul(const FiniteGroup& G, const TensorCoeffs& a, const TensorCoeffs& b) {
    const int n = G.order();
    TensorCoeffs r{Mat::Zero(n, n)};
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < n; ++y1) {
            const cplx c1 = a.c(x1, y1);
            if (c1 == cplx(0.0, 0.0)) continue;
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < n; ++y2)
                    r.c(G.product(x1, x2), G.product(y1, y2)) += c1 * b.c(x2, y2);
        }
    return r;
}

TensorCoeffs tc_coproduct(const FiniteGroup& G, const Vec& f) {
    const int n = G.order();
    TensorCoeffs r{Mat::Zero(n, n)};
    for (int x = 0; x < n; ++x) r.c(x, x) = f[x];
    return r;
}

/// (id (x) phi_s): keep the L(e) column of the second leg.
Vec tc_partial_weight(const FiniteGroup& G, const TensorCoeffs& t) {
    (void)G;
    return t.c.col(0);
}

Vec coeff_antipode(const FiniteGroup& G, const Vec& f) {
    Vec r(G.order());
    for (int x = 0; x < G.order(); ++x) r[x] = f[G.inverse(x)];
    return r;
}

Vec coeff_star(const FiniteGroup& G, const Vec& f) {
    // (sum f(x) L(x))^dagger = sum conj(f(x^{-1})) L(x)
    Vec r(G.order());
    for (int x = 0; x < G.order(); ++x) r[x] = std::conj(f[G.inverse(x)]);
    return r;
}

// index helpers on G x G and permutation-defined tensor operators
struct PairIdx {
    int n;
    int operator()(int x, int y) const { return x * n + y; }
};

Mat perm_operator(int n2, const std::vector<int>& substitution) {
    // (OF)(v) = F(sub(v))  =>  O[v][sub(v)] = 1
    Mat m = Mat::Zero(n2, n2);
    for (int v = 0; v < n2; ++v) m(v, substitution[v]) = cplx(1.0, 0.0);
    return m;
}

std::vector<int> w_substitution(const FiniteGroup& G, bool dual) {
    const int n = G.order();
    PairIdx id{n};
    std::vector<int> sub(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            sub[id(x, y)] = dual ? id(G.product(G.inverse(y), x), y)
                                 : id(x, G.product(x, y));
    return sub;
}

} // namespace

Mat regular_rep(const FiniteGroup& G, int x) {
    const int n = G.order();
    Mat m = Mat::Zero(n, n);
    for (int z = 0; z < n; ++z) m(G.product(x, z), z) = cplx(1.0, 0.0);
    return m;
}

AlgebraElement fourier_rep(const FiniteGroup& G, const Vec& f) {
    if (f.size() != G.order()) throw GridMismatch("fourier_rep: size != |G|");
    return AlgebraElement{AlgebraKind::symmetric, f};
}

Mat realize(const FiniteGroup& G, const AlgebraElement& a) {
    const int n = G.order();
    if (a.kind == AlgebraKind::abelian) {
        Mat m = Mat::Zero(n, n);
        for (int x = 0; x < n; ++x) m(x, x) = a.coeffs[x];
        return m;
    }
    Mat m = Mat::Zero(n, n);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) m(G.product(x, z), z) += a.coeffs[x];
    return m;
}

AlgebraElement symmetric_from_matrix(const FiniteGroup& G, const Mat& m) {
    const int n = G.order();
    if (m.rows() != n || m.cols() != n)
        throw GridMismatch("symmetric_from_matrix: wrong size");
    // L(x) has its e-column equal to the indicator of x
    AlgebraElement a{AlgebraKind::symmetric, m.col(FiniteGroup::identity)};
    const double res = max_abs(Mat(realize(G, a) - m));
    if (res > 1e-12)
        throw Error("symmetric_from_matrix: matrix outside the span of generators");
    return a;
}

AlgebraElement multiply(const FiniteGroup& G, const AlgebraElement& a,
                        const AlgebraElement& b) {
    if (a.kind != b.kind) throw InstanceMismatch("multiply: mixed algebra kinds");
    if (a.kind == AlgebraKind::abelian)
        return {AlgebraKind::abelian, a.coeffs.cwiseProduct(b.coeffs)};
    return {AlgebraKind::symmetric, convolve(G, a.coeffs, b.coeffs)};
}

AlgebraElement star(const FiniteGroup& G, const AlgebraElement& a) {
    if (a.kind == AlgebraKind::abelian)
        return {AlgebraKind::abelian, a.coeffs.conjugate()};
    return {AlgebraKind::symmetric, coeff_star(G, a.coeffs)};
}

TensorOperator fundamental_w(const FiniteGroup& G) {
    const int n = G.order();
    return {n, perm_operator(n * n, w_substitution(G, false))};
}

TensorOperator fundamental_w_hat(const FiniteGroup& G) {
    const int n = G.order();
    return {n, perm_operator(n * n, w_substitution(G, true))};
}

TensorOperator swap_sigma(const FiniteGroup& G) {
    const int n = G.order();
    PairIdx id{n};
    std::vector<int> sub(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) sub[id(x, y)] = id(y, x);
    return {n, perm_operator(n * n, sub)};
}

double pentagonal_residual(const FiniteGroup& G, bool dual, int dimension_cap) {
    const long n = G.order();
    if (n * n * n > dimension_cap)
        throw DimensionCap("pentagonal_residual: |G|^3 exceeds cap");
    const std::vector<int> w = w_substitution(G, dual);
    PairIdx id{static_cast<int>(n)};
    auto idx3 = [&](int x, int y, int z) { return (x * n + y) * n + z; };
    // substitution maps on triples
    auto apply_w12 = [&](int& x, int& y, int&) {
        const int s = w[id(x, y)];
        x = s / n;
        y = s % static_cast<int>(n);
    };
    auto apply_w23 = [&](int&, int& y, int& z) {
        const int s = w[id(y, z)];
        y = s / n;
        z = s % static_cast<int>(n);
    };
    auto apply_s12 = [&](int& x, int& y, int&) { std::swap(x, y); };

    bool equal = true;
    for (int x = 0; x < n && equal; ++x)
        for (int y = 0; y < n && equal; ++y)
            for (int z = 0; z < n && equal; ++z) {
                int lx = x, ly = y, lz = z;
                // (1 x W)(s x 1)(1 x W)(s x 1)(W x 1): substitutions compose
                // in operator order
                apply_w23(lx, ly, lz);
                apply_s12(lx, ly, lz);
                apply_w23(lx, ly, lz);
                apply_s12(lx, ly, lz);
                apply_w12(lx, ly, lz);
                int rx = x, ry = y, rz = z;
                apply_w12(rx, ry, rz);
                apply_w23(rx, ry, rz);
                if (idx3(lx, ly, lz) != idx3(rx, ry, rz)) equal = false;
            }
    return equal ? 0.0 : 1.0;
}

TensorOperator coproduct(const FiniteGroup& G, const AlgebraElement& a) {
    const int n = G.order();
    if (a.kind == AlgebraKind::abelian) {
        Mat m = Mat::Zero(n * n, n * n);
        const Vec d = coproduct_values(G, a.coeffs);
        for (int v = 0; v < n * n; ++v) m(v, v) = d[v];
        return {n, m};
    }
    Mat m = Mat::Zero(n * n, n * n);
    for (int x = 0; x < n; ++x) {
        if (a.coeffs[x] == cplx(0.0, 0.0)) continue;
        const Mat lx = regular_rep(G, x);
        m += a.coeffs[x] * kron(lx, lx);
    }
    return {n, m};
}

Vec coproduct_values(const FiniteGroup& G, const Vec& f) {
    const int n = G.order();
    Vec d(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) d[x * n + y] = f[G.product(x, y)];
    return d;
}

AlgebraElement antipode(const FiniteGroup& G, const AlgebraElement& a) {
    return {a.kind, coeff_antipode(G, a.coeffs)};
}

cplx haar_weight(const FiniteGroup& G, const AlgebraElement& a) {
    (void)G;
    if (a.kind == AlgebraKind::abelian) return a.coeffs.sum();
    return a.coeffs[FiniteGroup::identity];
}

AlgebraElement modular_automorphism(const FiniteGroup& G, double t,
                                    const AlgebraElement& a) {
    (void)G;
    (void)t; // Delta == 1: sigma_t is the identity
    return a;
}

cplx modular_phase(double delta_value, double t) {
    // Delta^{it} = e^{i t ln Delta}
    return std::polar(1.0, t * std::log(delta_value));
}

KacReport kac_axiom_report(const FiniteGroup& G) {
    const int n = G.order();
    std::mt19937_64 rng(0x5eedULL);
    KacReport rep;
    rep.group = G.name();
    auto put = [&](const std::string& k, double v) {
        rep.residuals[k] = v;
        rep.max_residual = std::max(rep.max_residual, v);
    };

    const Mat w = fundamental_w(G).m;
    const Mat wh = fundamental_w_hat(G).m;
    const Mat sg = swap_sigma(G).m;
    const Mat eye2 = Mat::Identity(n * n, n * n);

    put("w_unitary", max_abs(Mat(w * w.adjoint() - eye2)));
    put("w_hat_unitary", max_abs(Mat(wh * wh.adjoint() - eye2)));
    put("w_hat_is_sigma_w_star_sigma", max_abs(Mat(wh - sg * w.adjoint() * sg)));
    put("pentagonal_w", pentagonal_residual(G, false));
    put("pentagonal_w_hat", pentagonal_residual(G, true));

    // coproduct implementation: W for the abelian algebra, W_hat for the dual
    {
        double r = 0.0;
        for (int z = 0; z < n; ++z) {
            AlgebraElement dz{AlgebraKind::abelian, Vec::Zero(n)};
            dz.coeffs[z] = 1.0;
            const Mat lhs = w * kron(Mat::Identity(n, n), realize(G, dz)) * w.adjoint();
            r = std::max(r, max_abs(Mat(lhs - coproduct(G, dz).m)));
        }
        put("coproduct_by_w.abelian", r);
        double rs = 0.0;
        for (int z = 0; z < n; ++z) {
            const Mat lz = regular_rep(G, z);
            const Mat lhs = wh * kron(Mat::Identity(n, n), lz) * wh.adjoint();
            rs = std::max(rs, max_abs(Mat(lhs - kron(lz, lz))));
        }
        put("coproduct_by_w_hat.symmetric", rs);
    }

    // coassociativity
    {
        const Vec f = random_vec(n, rng);
        Vec lhs(n * n * n), rhs(n * n * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    const int v = (x * n + y) * n + z;
                    lhs[v] = f[G.product(G.product(x, y), z)];
                    rhs[v] = f[G.product(x, G.product(y, z))];
                }
        put("coassociativity.abelian", max_abs(Vec(lhs - rhs)));

        // symmetric: recover D(a) coefficients from the dense matrix, then
        // apply (D x id) and (id x D) independently and compare on |G|^3
        if (static_cast<long>(n) * n * n <= 4096) {
            const Vec fs = random_vec(n, rng);
            const Mat d2 = coproduct(G, AlgebraElement{AlgebraKind::symmetric, fs}).m;
            Mat c(n, n); // coefficients in L(x) (x) L(y), read off column (e,e)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) c(x, y) = d2(x * n + y, 0);
            Mat t3a = Mat::Zero(n * n * n, n * n * n);
            Mat t3b = Mat::Zero(n * n * n, n * n * n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (c(x, y) == cplx(0.0, 0.0)) continue;
                    const Mat lx = regular_rep(G, x);
                    const Mat ly = regular_rep(G, y);
                    t3a += c(x, y) * kron(kron(lx, lx), ly);
                    t3b += c(x, y) * kron(lx, kron(ly, ly));
                }
            put("coassociativity.symmetric", max_abs(Mat(t3a - t3b)));
        }
    }

    // antipode axioms
    {
        const Vec fa = random_vec(n, rng), fb = random_vec(n, rng);
        for (auto kind : {AlgebraKind::abelian, AlgebraKind::symmetric}) {
            const std::string tag =
                kind == AlgebraKind::abelian ? ".abelian" : ".symmetric";
            AlgebraElement a{kind, fa}, b{kind, fb};
            const auto kk = antipode(G, antipode(G, a));
            put("antipode_involutive" + tag, max_abs(Vec(kk.coeffs - a.coeffs)));
            const auto lhs = antipode(G, multiply(G, a, b));
            const auto rhs = multiply(G, antipode(G, b), antipode(G, a));
            put("antipode_antimultiplicative" + tag,
                max_abs(Vec(lhs.coeffs - rhs.coeffs)));
            const auto l2 = antipode(G, star(G, a));
            const auto r2 = star(G, antipode(G, a));
            put("antipode_star" + tag, max_abs(Vec(l2.coeffs - r2.coeffs)));
        }
    }

    // anti-coautomorphism (kappa x kappa) D = sigma D kappa
    {
        const Vec f = random_vec(n, rng);
        Vec lhs(n * n), rhs(n * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                lhs[x * n + y] = f[G.product(G.inverse(x), G.inverse(y))];
                rhs[x * n + y] = f[G.inverse(G.product(y, x))];
            }
        put("anticoautomorphism.abelian", max_abs(Vec(lhs - rhs)));

        const Vec fs = random_vec(n, rng);
        Mat lc = Mat::Zero(n, n), rc = Mat::Zero(n, n);
        // (kappa x kappa) D(a): coefficients c(x,y) = f(x^{-1}) delta_{x,y}
        for (int x = 0; x < n; ++x) lc(x, x) = fs[G.inverse(x)];
        // sigma D kappa(a): kappa a has coefficients f(x^{-1}); D diagonal; swap
        for (int x = 0; x < n; ++x) rc(x, x) = fs[G.inverse(x)];
        put("anticoautomorphism.symmetric", max_abs(Mat(lc - rc)));
    }

    // Haar weight: left invariance (lia)
    {
        const Vec f = random_vec(n, rng);
        Vec lhs(n);
        for (int x = 0; x < n; ++x) {
            cplx s{0.0, 0.0};
            for (int y = 0; y < n; ++y) s += f[G.product(x, y)];
            lhs[x] = s;
        }
        const cplx phi = f.sum();
        double r = 0.0;
        for (int x = 0; x < n; ++x) r = std::max(r, std::abs(lhs[x] - phi));
        put("haar_left_invariance.abelian", r);

        const Vec fs = random_vec(n, rng);
        const Vec partial = tc_partial_weight(G, tc_coproduct(G, fs));
        Vec expect = Vec::Zero(n);
        expect[0] = fs[0]; // phi_s(f_hat) * L(e)
        put("haar_left_invariance.symmetric", max_abs(Vec(partial - expect)));
    }

    // Haar weight symmetry (syma)
    {
        const Vec fa = random_vec(n, rng), fb = random_vec(n, rng);
        // abelian
        Vec lhs(n), rhs(n);
        for (int x = 0; x < n; ++x) {
            cplx s{0.0, 0.0};
            for (int y = 0; y < n; ++y) s += std::conj(fb[y]) * fa[G.product(x, y)];
            lhs[x] = s;
        }
        for (int x = 0; x < n; ++x) {
            cplx s{0.0, 0.0};
            const int xi = G.inverse(x);
            for (int y = 0; y < n; ++y) s += std::conj(fb[G.product(xi, y)]) * fa[y];
            rhs[x] = s;
        }
        put("haar_symmetry.abelian", max_abs(Vec(lhs - rhs)));

        // symmetric, through tensor coefficients
        TensorCoeffs one_bstar{Mat::Zero(n, n)};
        const Vec bstar = coeff_star(G, fb);
        for (int v = 0; v < n; ++v) one_bstar.c(0, v) = bstar[v];
        const TensorCoeffs X = tc_mul(G, one_bstar, tc_coproduct(G, fa));
        const Vec lhs_s = tc_partial_weight(G, X);

        TensorCoeffs one_a{Mat::Zero(n, n)};
        for (int v = 0; v < n; ++v) one_a.c(0, v) = fa[v];
        const TensorCoeffs Y = tc_mul(G, tc_coproduct(G, bstar), one_a);
        const Vec rhs_s = coeff_antipode(G, tc_partial_weight(G, Y));
        put("haar_symmetry.symmetric", max_abs(Vec(lhs_s - rhs_s)));
    }

    // phi_s values (ksd, mqq) and homomorphism/involution compatibility
    {
        const Vec f = random_vec(n, rng), g = random_vec(n, rng);
        const AlgebraElement fh = fourier_rep(G, f);
        put("weight_ksd", std::abs(haar_weight(G, fh) - f[0]));
        const AlgebraElement q = multiply(G, star(G, fh), fh);
        put("weight_l2", std::abs(haar_weight(G, q) - cplx(f.squaredNorm(), 0.0)));
        const Mat lf = realize(G, fh);
        const Mat lg = realize(G, fourier_rep(G, g));
        const Mat lfg = realize(G, fourier_rep(G, convolve(G, f, g)));
        put("fourier_homomorphism", max_abs(Mat(lf * lg - lfg)));
        const Mat lstar = realize(G, fourier_rep(G, involution(G, f)));
        put("fourier_involution", max_abs(Mat(lstar - lf.adjoint())));
        // lambda(f) g = f * g
        const Vec conv = convolve(G, f, g);
        put("fourier_acts_by_convolution", max_abs(Vec(lf * g - conv)));
    }

    // modular automorphism group (trivial for unimodular G)
    {
        const Vec f = random_vec(n, rng);
        const AlgebraElement a{AlgebraKind::symmetric, f};
        const auto s1 = modular_automorphism(G, 0.7, a);
        put("modular_trivial", max_abs(Vec(s1.coeffs - a.coeffs)));
        put("modular_group_law",
            std::abs(modular_phase(1.0, 0.3) * modular_phase(1.0, 0.4) -
                     modular_phase(1.0, 0.7)));
    }

    // predual products via the dual pairing (dpcp)
    {
        const Vec w1 = random_vec(n, rng), w2 = random_vec(n, rng);
        // K^a: <delta_z, w1 * w2> = conv(w1, w2)(z)
        const Vec conv = convolve(G, w1, w2);
        double r = 0.0;
        for (int z = 0; z < n; ++z) {
            cplx s{0.0, 0.0};
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (G.product(x, y) == z) s += w1[x] * w2[y];
            r = std::max(r, std::abs(s - conv[z]));
        }
        put("predual_product.abelian", r);

        // K^s: representative functions multiply pointwise
        const Vec f = random_vec(n, rng), g = random_vec(n, rng),
                  f2 = random_vec(n, rng), g2 = random_vec(n, rng);
        auto rep_fun = [&](const Vec& u, const Vec& v) {
            // omega_{u,v}(x) = (L(x^{-1}) u | v) = (u * v-check)(x)
            Vec h(n);
            for (int x = 0; x < n; ++x) {
                cplx s{0.0, 0.0};
                for (int y = 0; y < n; ++y)
                    s += u[G.product(x, y)] * std::conj(v[y]);
                h[x] = s;
            }
            return h;
        };
        auto check_rep = [&](const Vec& u, const Vec& v) {
            Vec vch(n);
            for (int x = 0; x < n; ++x) vch[x] = std::conj(v[G.inverse(x)]);
            const Vec viaconv = convolve(G, u, vch);
            return max_abs(Vec(viaconv - rep_fun(u, v)));
        };
        double r2 = std::max(check_rep(f, g), check_rep(f2, g2));
        put("fourier_algebra_rep", r2);
        // product of two representative functions is their pointwise product;
        // check it equals the matrix coefficient of the tensor product rep,
        // i.e. closure of A(G)
        const Vec h1 = rep_fun(f, g), h2 = rep_fun(f2, g2);
        double r3 = 0.0;
        for (int x = 0; x < n; ++x) {
            // tensor rep coefficient ((L(x^-1) (x) L(x^-1))(f (x) f2) | g (x) g2)
            cplx s{0.0, 0.0};
            for (int y = 0; y < n; ++y)
                for (int y2 = 0; y2 < n; ++y2)
                    s += f[G.product(x, y)] * f2[G.product(x, y2)] *
                         std::conj(g[y]) * std::conj(g2[y2]);
            r3 = std::max(r3, std::abs(s - h1[x] * h2[x]));
        }
        put("predual_product.symmetric", r3);
    }

    // kappa(a) = J_hat a^* J_hat on the abelian algebra, with
    // J_hat psi(x) = conj(psi(x^{-1})) (Delta == 1)
    {
        const Vec f = random_vec(n, rng);
        auto jhat = [&](const Vec& psi) {
            Vec out(n);
            for (int x = 0; x < n; ++x) out[x] = std::conj(psi[G.inverse(x)]);
            return out;
        };
        Mat lhs(n, n);
        for (int y = 0; y < n; ++y) {
            Vec e = Vec::Zero(n);
            e[y] = 1.0;
            Vec t = jhat(e);
            for (int x = 0; x < n; ++x) t[x] *= std::conj(f[x]); // a^* acts pointwise
            lhs.col(y) = jhat(t);
        }
        const AlgebraElement ka = antipode(G, AlgebraElement{AlgebraKind::abelian, f});
        put("antipode_via_jhat.abelian", max_abs(Mat(lhs - realize(G, ka))));
    }

    return rep;
}

PontryaginReport pontryagin_check(const FiniteGroup& G) {
    if (!G.is_abelian()) throw InputError("pontryagin_check: group is not abelian");
    const int n = G.order();
    const CharacterTable chars(G);
    PontryaginReport rep;

    double hom = 0.0;
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                hom = std::max(hom, std::abs(chars.value(k, G.product(x, y)) -
                                             chars.value(k, x) * chars.value(k, y)));
    rep.character_homomorphism_residual = hom;

    double dual = 0.0;
    for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = 0; k2 < n; ++k2) {
            const int kp = chars.product(k1, k2);
            for (int x = 0; x < n; ++x)
                dual = std::max(dual, std::abs(chars.value(k1, x) * chars.value(k2, x) -
                                               chars.value(kp, x)));
        }
    rep.dual_group_residual = dual;

    std::mt19937_64 rng(0xabcdULL);
    Eigen::VectorXcd f = random_vec(n, rng);
    const Eigen::MatrixXcd lf = realize(G, fourier_rep(G, f));
    double diag = 0.0;
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXcd chi(n);
        for (int x = 0; x < n; ++x) chi[x] = chars.value(k, x);
        cplx eig{0.0, 0.0};
        for (int x = 0; x < n; ++x) eig += f[x] * std::conj(chars.value(k, x));
        diag = std::max(diag, max_abs(Eigen::VectorXcd(lf * chi - eig * chi)));
    }
    rep.diagonalization_residual = diag;

    rep.max_residual = std::max({rep.character_homomorphism_residual,
                                 rep.dual_group_residual,
                                 rep.diagonalization_residual});
    return rep;
}

} // namespace hpq::kac
