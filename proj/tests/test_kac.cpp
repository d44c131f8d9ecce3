#include <doctest.h>

#include <cmath>
#include <random>

#include "hpq/kac.hpp"
#include "hpq/l1.hpp"

using namespace hpq;
using namespace hpq::kac;

namespace {

Eigen::VectorXcd random_vec(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = cplx(d(rng), d(rng));
    return v;
}

} // namespace

TEST_CASE("fourier representation basics") {
    const FiniteGroup g = SemidirectProduct::s3().as_group();
    const int n = g.order();

    // delta_e maps to the identity
    Eigen::VectorXcd de = Eigen::VectorXcd::Zero(n);
    de[0] = 1.0;
    CHECK((realize(g, fourier_rep(g, de)) - Eigen::MatrixXcd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // delta_x maps to the left-translation permutation
    for (int x = 0; x < n; ++x) {
        Eigen::VectorXcd dx = Eigen::VectorXcd::Zero(n);
        dx[x] = 1.0;
        const Eigen::MatrixXcd lx = realize(g, fourier_rep(g, dx));
        CHECK((lx - regular_rep(g, x)).cwiseAbs().maxCoeff() == 0.0);
        // permutation matrix: one 1 per row/column
        CHECK((lx * lx.adjoint() - Eigen::MatrixXcd::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }

    // multiplicativity against brute-force convolution
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 8; ++rep) {
        const auto f = random_vec(n, rng);
        const auto h = random_vec(n, rng);
        const Eigen::MatrixXcd prod =
            realize(g, fourier_rep(g, f)) * realize(g, fourier_rep(g, h));
        const Eigen::MatrixXcd conv = realize(g, fourier_rep(g, convolve(g, f, h)));
        CHECK((prod - conv).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("fundamental operators") {
    // trivial group: W is the 1x1 identity
    const FiniteGroup z1 = FiniteGroup::cyclic(1);
    CHECK(fundamental_w(z1).m(0, 0) == cplx(1.0, 0.0));
    CHECK(pentagonal_residual(z1) == 0.0);

    // Z2: W maps (x,y) -> (x, x+y), an explicit 4x4 permutation
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const Eigen::MatrixXcd w2 = fundamental_w(z2).m;
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
    // basis order (x,y): 00,01,10,11; WF(x,y) = F(x, x+y)
    expect(0, 0) = 1.0; // (0,0) <- (0,0)
    expect(1, 1) = 1.0; // (0,1) <- (0,1)
    expect(2, 3) = 1.0; // (1,0) <- (1,1)
    expect(3, 2) = 1.0; // (1,1) <- (1,0)
    CHECK((w2 - expect).cwiseAbs().maxCoeff() == 0.0);

    const FiniteGroup s3 = SemidirectProduct::s3().as_group();
    const Eigen::MatrixXcd w = fundamental_w(s3).m;
    CHECK((w * w.adjoint() - Eigen::MatrixXcd::Identity(36, 36)).cwiseAbs().maxCoeff() ==
          0.0);
    CHECK(pentagonal_residual(FiniteGroup::cyclic(3)) == 0.0);
    CHECK(pentagonal_residual(s3) <= 1e-14);
    CHECK(pentagonal_residual(s3, true) <= 1e-14);

    // dimension cap
    CHECK_THROWS_AS((void)pentagonal_residual(FiniteGroup::cyclic(17), false, 4096),
                    DimensionCap);
}

TEST_CASE("coproduct values and implementation") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    Eigen::VectorXcd d1 = Eigen::VectorXcd::Zero(2);
    d1[1] = 1.0;
    const Eigen::VectorXcd dv = coproduct_values(z2, d1);
    CHECK(dv[0] == cplx(0.0, 0.0)); // (0,0) -> delta_1(0)
    CHECK(dv[1] == cplx(1.0, 0.0));
    CHECK(dv[2] == cplx(1.0, 0.0));
    CHECK(dv[3] == cplx(0.0, 0.0));

    // unital: coproduct of 1 is 1 (x) 1
    const FiniteGroup s3 = SemidirectProduct::s3().as_group();
    AlgebraElement one_a{AlgebraKind::abelian, Eigen::VectorXcd::Ones(6)};
    CHECK((coproduct(s3, one_a).m - Eigen::MatrixXcd::Identity(36, 36))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // symmetric: W_hat (1 (x) L(x)) W_hat* = L(x) (x) L(x) for all x
    const Eigen::MatrixXcd wh = fundamental_w_hat(s3).m;
    for (int x = 0; x < 6; ++x) {
        const Eigen::MatrixXcd lx = regular_rep(s3, x);
        Eigen::MatrixXcd one_lx = Eigen::MatrixXcd::Zero(36, 36);
        for (int u = 0; u < 6; ++u)
            one_lx.block(u * 6, u * 6, 6, 6) = lx;
        const Eigen::MatrixXcd lhs = wh * one_lx * wh.adjoint();
        Eigen::VectorXcd dx = Eigen::VectorXcd::Zero(6);
        dx[x] = 1.0;
        const Eigen::MatrixXcd rhs =
            coproduct(s3, AlgebraElement{AlgebraKind::symmetric, dx}).m;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("antipode and haar weight") {
    const FiniteGroup s3 = SemidirectProduct::s3().as_group();
    const int n = s3.order();
    std::mt19937_64 rng(11);
    const auto f = random_vec(n, rng);
    const auto h = random_vec(n, rng);

    for (auto kind : {AlgebraKind::abelian, AlgebraKind::symmetric}) {
        const AlgebraElement a{kind, f}, b{kind, h};
        const AlgebraElement kk = antipode(s3, antipode(s3, a));
        CHECK((kk.coeffs - a.coeffs).cwiseAbs().maxCoeff() == 0.0);
        const AlgebraElement lhs = antipode(s3, multiply(s3, a, b));
        const AlgebraElement rhs = multiply(s3, antipode(s3, b), antipode(s3, a));
        CHECK((lhs.coeffs - rhs.coeffs).cwiseAbs().maxCoeff() < 1e-13);
    }

    // phi_a(1) = |G|
    CHECK(haar_weight(s3, AlgebraElement{AlgebraKind::abelian,
                                         Eigen::VectorXcd::Ones(n)}) ==
          cplx(n, 0.0));
    // phi_s(fourier_rep(f)) = f(e)
    CHECK(std::abs(haar_weight(s3, fourier_rep(s3, f)) - f[0]) == 0.0);
    // phi_s(f_hat^dagger f_hat) = ||f||_2^2
    const AlgebraElement fh = fourier_rep(s3, f);
    const AlgebraElement q = multiply(s3, star(s3, fh), fh);
    CHECK(std::abs(haar_weight(s3, q) - cplx(f.squaredNorm(), 0.0)) < 1e-13);
    // faithfulness by contrapositive sampling: nonzero f gives positive weight
    CHECK(std::real(haar_weight(s3, q)) > 0.0);

    // antipode of the regular generators: kappa(L(x)) = L(x)^dagger
    for (int x = 0; x < n; ++x) {
        Eigen::VectorXcd dx = Eigen::VectorXcd::Zero(n);
        dx[x] = 1.0;
        const Eigen::MatrixXcd lhs =
            realize(s3, antipode(s3, AlgebraElement{AlgebraKind::symmetric, dx}));
        CHECK((lhs - regular_rep(s3, x).adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }

    // weight of a symmetric element outside the generator span
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(n, n);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS((void)symmetric_from_matrix(s3, bad), Error);
}

TEST_CASE("axiom report on the catalog") {
    for (const char* name : {"Z2", "Z3", "Z4", "S3", "Z4xZ2"}) {
        FiniteGroup g = [&]() {
            const std::string s = name;
            if (s == "S3") return SemidirectProduct::s3().as_group();
            if (s == "Z4xZ2") return SemidirectProduct::z4_z2().as_group();
            return FiniteGroup::cyclic(s[1] - '0');
        }();
        const KacReport rep = kac_axiom_report(g);
        INFO(name);
        CHECK(rep.max_residual <= 1e-12);
    }
}

TEST_CASE("modular automorphism phases") {
    // finite: identity
    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    std::mt19937_64 rng(13);
    const auto f = random_vec(4, rng);
    const AlgebraElement a{AlgebraKind::symmetric, f};
    CHECK((modular_automorphism(z4, 2.5, a).coeffs - f).cwiseAbs().maxCoeff() == 0.0);

    // affine lattice phase: Delta(4)^{i t} at t = 1 is 4^i, modulus 1
    const cplx p = modular_phase(4.0, 1.0);
    CHECK(std::abs(std::abs(p) - 1.0) < 1e-15);
    CHECK(p.real() == doctest::Approx(std::cos(std::log(4.0))));
    CHECK(p.imag() == doctest::Approx(std::sin(std::log(4.0))));
    // group law and inverse
    const cplx q = modular_phase(4.0, -1.0);
    CHECK(std::abs(p * q - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("pontryagin duality for abelian groups") {
    // Z1: everything trivial
    const PontryaginReport r1 = pontryagin_check(FiniteGroup::cyclic(1));
    CHECK(r1.max_residual == 0.0);

    // Z2: characters (1,1), (1,-1)
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const CharacterTable t2(z2);
    CHECK(t2.value(0, 0) == cplx(1.0, 0.0));
    CHECK(t2.value(0, 1) == cplx(1.0, 0.0));
    CHECK(t2.value(1, 0) == cplx(1.0, 0.0));
    CHECK(std::abs(t2.value(1, 1) - cplx(-1.0, 0.0)) < 1e-15);
    CHECK(pontryagin_check(z2).max_residual <= 1e-12);

    // Z4: eigenvalues of lambda(delta_1) are the 4th roots of unity
    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    Eigen::VectorXcd d1 = Eigen::VectorXcd::Zero(4);
    d1[1] = 1.0;
    const Eigen::MatrixXcd l1m = realize(z4, fourier_rep(z4, d1));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(l1m);
    std::vector<double> args;
    for (int i = 0; i < 4; ++i) args.push_back(std::arg(es.eigenvalues()[i]));
    std::sort(args.begin(), args.end());
    const double pi = 3.14159265358979323846;
    // 4th roots of unity: args {-pi/2, 0, pi/2, pi} (std::arg maps -1 to +pi)
    CHECK(std::abs(args[0] + pi / 2) < 1e-10);
    CHECK(std::abs(args[1] - 0.0) < 1e-10);
    CHECK(std::abs(args[2] - pi / 2) < 1e-10);
    CHECK(std::abs(args[3] - pi) < 1e-10);
    CHECK(pontryagin_check(z4).max_residual <= 1e-12);

    // Z2 x Z2 (non-cyclic) via a product table
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a2 = 0; a2 < 4; ++a2)
        for (int b = 0; b < 4; ++b)
            t[a2][b] = ((a2 ^ b) & 1) | (((a2 >> 1) ^ (b >> 1)) << 1);
    const FiniteGroup v4(t, "V4");
    CHECK(pontryagin_check(v4).max_residual <= 1e-12);

    CHECK_THROWS_AS((void)pontryagin_check(SemidirectProduct::s3().as_group()),
                    InputError);
}
