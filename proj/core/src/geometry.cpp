#include "hpq/geometry.hpp"

#include <cmath>

namespace hpq {

AlgebraPair lie_bracket(const AlgebraPair& X, const AlgebraPair& Y) {
    const double l = X[0], a = X[1], r = Y[0], b = Y[1];
    return {0.0, a * r - l * b};
}

PreferredObservable poisson_bracket(const PreferredObservable& h1,
                                    const PreferredObservable& h2) {
    return PreferredObservable{0.0, h1.a * h2.l - h1.l * h2.a};
}

std::pair<double, double> hamiltonian_field(const PreferredObservable& h, double x,
                                            double p) {
    if (!(x > 0.0)) throw Error("hamiltonian_field: x must be positive");
    return {h.l * x, -(h.l * p + h.a)};
}

AlgebraPair adjoint_action(const AffineElement& g, const AlgebraPair& X) {
    const double l = X[0], a = X[1];
    return {l, g.a * l + a / g.lambda};
}

CoadjointPoint coadjoint_action(const AffineElement& g, const CoadjointPoint& eta) {
    return {g.lambda * eta.eta_A, eta.eta_L - g.a * g.lambda * eta.eta_A};
}

OrbitClass classify_orbit(const CoadjointPoint& eta) {
    if (eta.eta_A > 0.0) return {OrbitFamily::plus_halfplane, 0.0};
    if (eta.eta_A < 0.0) return {OrbitFamily::minus_halfplane, 0.0};
    return {OrbitFamily::point, eta.eta_L};
}

double kirillov_form(const CoadjointPoint& eta) { return eta.eta_A; }

AffineElement solve_orbit_transport(const CoadjointPoint& eta,
                                    const CoadjointPoint& eta2) {
    if (eta.eta_A == 0.0 || eta.eta_A * eta2.eta_A <= 0.0)
        throw Error("solve_orbit_transport: points lie on different orbits");
    const double lambda = eta2.eta_A / eta.eta_A;
    const double a = (eta.eta_L - eta2.eta_L) / eta2.eta_A;
    return {lambda, a};
}

namespace matrix_realization {

namespace {

Mat2 mul(const Mat2& A, const Mat2& B) {
    Mat2 C{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            C[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
    return C;
}

double trace_mul(const Mat2& A, const Mat2& B) {
    return A[0][0] * B[0][0] + A[0][1] * B[1][0] + A[1][0] * B[0][1] +
           A[1][1] * B[1][1];
}

constexpr Mat2 kL{{{-0.5, 0.0}, {0.0, 0.5}}};
constexpr Mat2 kA{{{0.0, 1.0}, {0.0, 0.0}}};
constexpr Mat2 kThetaL{{{-1.0, 0.0}, {0.0, 1.0}}};
constexpr Mat2 kThetaA{{{0.0, 0.0}, {1.0, 0.0}}};

} // namespace

Mat2 group(const AffineElement& g) {
    const double rl = std::sqrt(g.lambda);
    return {{{1.0 / rl, g.a * rl}, {0.0, rl}}};
}

Mat2 algebra(const AlgebraPair& X) {
    Mat2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = X[0] * kL[i][j] + X[1] * kA[i][j];
    return m;
}

AlgebraPair algebra_coeffs(const Mat2& m) { return {2.0 * m[1][1], m[0][1]}; }

Mat2 dual(const CoadjointPoint& eta) {
    Mat2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m[i][j] = eta.eta_L * kThetaL[i][j] + eta.eta_A * kThetaA[i][j];
    return m;
}

AlgebraPair adjoint_by_conjugation(const AffineElement& g, const AlgebraPair& X) {
    const Mat2 gm = group(g);
    const Mat2 gi = group(affine_inverse(g));
    return algebra_coeffs(mul(mul(gm, algebra(X)), gi));
}

CoadjointPoint coadjoint_by_conjugation(const AffineElement& g,
                                        const CoadjointPoint& eta) {
    const Mat2 gm = group(g);
    const Mat2 gi = group(affine_inverse(g));
    const Mat2 m = mul(mul(gm, dual(eta)), gi);
    // components against the trace pairing <theta^mu, X_nu> = delta
    return {trace_mul(m, kA), trace_mul(m, kL)};
}

} // namespace matrix_realization

} // namespace hpq
