#include <doctest.h>

#include <cmath>
#include <random>

#include "hpq/l1.hpp"
#include "hpq/mackey.hpp"

using namespace hpq;
using namespace hpq::mackey;

namespace {

Eigen::VectorXcd random_vec(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = cplx(d(rng), d(rng));
    return v;
}

std::vector<FiniteRep> all_reps(const SemidirectProduct& G) {
    std::vector<FiniteRep> reps;
    for (const DualLabel& l : classify_dual(G)) reps.push_back(induced_rep(G, l));
    return reps;
}

} // namespace

TEST_CASE("dual classification") {
    const SemidirectProduct s3 = SemidirectProduct::s3();
    const auto labels3 = classify_dual(s3);
    int dimsq = 0, ones = 0, twos = 0;
    for (const auto& l : labels3) {
        dimsq += l.dim * l.dim;
        if (l.dim == 1) ++ones;
        if (l.dim == 2) ++twos;
    }
    CHECK(labels3.size() == 3);
    CHECK(ones == 2);
    CHECK(twos == 1);
    CHECK(dimsq == 6);

    // trivial S: one character label per N character
    const SemidirectProduct z5 = SemidirectProduct::trivial_s(FiniteGroup::cyclic(5));
    CHECK(classify_dual(z5).size() == 5);

    const SemidirectProduct d4 = SemidirectProduct::z4_z2();
    const auto labels4 = classify_dual(d4);
    int dimsq4 = 0, ones4 = 0, twos4 = 0;
    for (const auto& l : labels4) {
        dimsq4 += l.dim * l.dim;
        if (l.dim == 1) ++ones4;
        if (l.dim == 2) ++twos4;
    }
    CHECK(labels4.size() == 5);
    CHECK(ones4 == 4);
    CHECK(twos4 == 1);
    CHECK(dimsq4 == 8);

    // orbit labels partition N-hat minus fixed points, smallest index first
    for (const auto& l : labels4)
        if (l.kind == DualLabel::Kind::orbit) {
            CHECK(l.orbit.front() == l.n_char);
            CHECK(std::is_sorted(l.orbit.begin(), l.orbit.end()));
        }

    // intermediate stabilizer: Z4 acting on Z8 through multiplication by 3^s
    // (the action factors through Z2, so orbits have size <= 2 < |S|)
    FiniteGroup s = FiniteGroup::cyclic(4);
    FiniteGroup n = FiniteGroup::cyclic(8);
    std::vector<std::vector<int>> act(4, std::vector<int>(8));
    for (int si = 0; si < 4; ++si)
        for (int ni = 0; ni < 8; ++ni) {
            int v = ni;
            for (int k = 0; k < si; ++k) v = (3 * v) % 8;
            act[si][ni] = v;
        }
    const SemidirectProduct bad(std::move(s), std::move(n), std::move(act));
    CHECK_THROWS_AS((void)classify_dual(bad), UnsupportedStabilizer);
}

TEST_CASE("cocycle identities") {
    for (const SemidirectProduct& G :
         {SemidirectProduct::s3(), SemidirectProduct::z4_z2()}) {
        const int ns = G.S().order();
        // sigma(r; e) = 0
        for (int r = 0; r < ns; ++r) CHECK(cocycle(G, r, 0) == 0);
        // sigma(y.r; x) - sigma(r; xy) + sigma(r; y) = 0 over all triples
        for (int r = 0; r < ns; ++r)
            for (int x = 0; x < G.order(); ++x)
                for (int y = 0; y < G.order(); ++y) {
                    const int yr = G.S().product(G.s_part(y), r);
                    const int lhs =
                        G.N().product(cocycle(G, yr, x), cocycle(G, r, y));
                    CHECK(lhs == cocycle(G, r, G.product(x, y)));
                }
    }
    // affine instance: sigma(t; (l,a)) = a l t
    CHECK(affine_cocycle(3.0, AffineElement{2.0, 0.5}) == doctest::Approx(3.0));
    CHECK(affine_cocycle(1.0, AffineElement{1.0, 0.0}) == 0.0);
}

TEST_CASE("induced representations are unitary homomorphisms") {
    for (const SemidirectProduct& G :
         {SemidirectProduct::s3(), SemidirectProduct::z4_z2()}) {
        const auto reps = all_reps(G);
        for (const FiniteRep& rep : reps) {
            // identity
            CHECK((rep.at(0) - Eigen::MatrixXcd::Identity(rep.dim, rep.dim))
                      .cwiseAbs()
                      .maxCoeff() == 0.0);
            for (int x = 0; x < G.order(); ++x) {
                CHECK((rep.at(x) * rep.at(x).adjoint() -
                       Eigen::MatrixXcd::Identity(rep.dim, rep.dim))
                          .cwiseAbs()
                          .maxCoeff() < 1e-14);
                for (int y = 0; y < G.order(); ++y)
                    CHECK((rep.at(x) * rep.at(y) - rep.at(G.product(x, y)))
                              .cwiseAbs()
                              .maxCoeff() < 1e-14);
            }
            // irreducibility via the commutant
            CHECK(commutant_dimension(rep) == 1);
        }
        // character orthogonality
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = 0; j < reps.size(); ++j) {
                cplx ip{0.0, 0.0};
                for (int x = 0; x < G.order(); ++x)
                    ip += reps[i].at(x).trace() * std::conj(reps[j].at(x).trace());
                ip /= static_cast<double>(G.order());
                CHECK(std::abs(ip - (i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) <
                      1e-13);
            }
        // regular-representation decomposition (Dirac delta on the group)
        for (int x = 0; x < G.order(); ++x) {
            cplx s{0.0, 0.0};
            for (const FiniteRep& rep : reps)
                s += (static_cast<double>(rep.dim) / G.order()) * rep.at(x).trace();
            CHECK(std::abs(s - (x == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) < 1e-13);
        }
    }
}

TEST_CASE("s-character labels follow the 1d pattern and S3 character values") {
    const SemidirectProduct s3 = SemidirectProduct::s3();
    const auto labels = classify_dual(s3);
    const CharacterTable shat(s3.S());
    for (const auto& l : labels) {
        if (l.kind != DualLabel::Kind::s_character) continue;
        const FiniteRep rep = induced_rep(s3, l);
        // the fixed point of N-hat for S3 is the trivial character, so
        // T(s,n) = psi_y(s), the same pattern as the one-dimensional family
        // of the half-plane group
        for (int x = 0; x < s3.order(); ++x)
            CHECK(std::abs(rep.at(x)(0, 0) - shat.value(l.s_char, s3.s_part(x))) <
                  1e-15);
    }
    for (const auto& l : labels) {
        if (l.kind != DualLabel::Kind::orbit) continue;
        const FiniteRep rep = induced_rep(s3, l);
        CHECK(rep.dim == 2);
        CHECK(std::abs(rep.at(0).trace() - cplx(2.0, 0.0)) < 1e-14);
        CHECK(std::abs(rep.at(s3.index(0, 1)).trace() - cplx(-1.0, 0.0)) < 1e-14);
        CHECK(std::abs(rep.at(s3.index(0, 2)).trace() - cplx(-1.0, 0.0)) < 1e-14);
        for (int n = 0; n < 3; ++n)
            CHECK(std::abs(rep.at(s3.index(1, n)).trace()) < 1e-14);
    }
}

TEST_CASE("l1 representation, kernels, traces") {
    const SemidirectProduct G = SemidirectProduct::s3();
    const auto reps = all_reps(G);
    std::mt19937_64 rng(7);
    const auto f = random_vec(G.order(), rng);
    const auto g = random_vec(G.order(), rng);

    for (const FiniteRep& rep : reps) {
        // delta_e -> identity
        Eigen::VectorXcd de = Eigen::VectorXcd::Zero(G.order());
        de[0] = 1.0;
        CHECK((rep_of_l1(G, rep, de) -
               Eigen::MatrixXcd::Identity(rep.dim, rep.dim))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
        // homomorphism from (L1, *)
        const Eigen::MatrixXcd lhs = rep_of_l1(G, rep, convolve(G.as_group(), f, g));
        const Eigen::MatrixXcd rhs = rep_of_l1(G, rep, f) * rep_of_l1(G, rep, g);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
        // involution -> adjoint
        const Eigen::MatrixXcd st =
            rep_of_l1(G, rep, involution(G.as_group(), f));
        CHECK((st - rep_of_l1(G, rep, f).adjoint()).cwiseAbs().maxCoeff() < 1e-13);
        // trace of the identity and cyclicity
        CHECK(trace_alpha(rep_of_l1(G, rep, de)) == cplx(rep.dim, 0.0));
        const Eigen::MatrixXcd A = rep_of_l1(G, rep, f);
        const Eigen::MatrixXcd B = rep_of_l1(G, rep, g);
        CHECK(std::abs(trace_alpha(A * B) - trace_alpha(B * A)) < 1e-13);
        // kernel form matches the direct sum for orbit labels
        if (rep.label.kind == DualLabel::Kind::orbit) {
            CHECK((kernel_matrix(G, rep, f) - A).cwiseAbs().maxCoeff() < 1e-13);
        }
    }

    // sum_alpha c_alpha Tr f_hat_alpha = f(e)
    cplx s{0.0, 0.0};
    for (const FiniteRep& rep : reps)
        s += (static_cast<double>(rep.dim) / G.order()) *
             trace_alpha(rep_of_l1(G, rep, f));
    CHECK(std::abs(s - f[0]) < 1e-13);
}

TEST_CASE("plancherel and fourier inversion") {
    for (const SemidirectProduct& G :
         {SemidirectProduct::s3(), SemidirectProduct::z4_z2()}) {
        const auto reps = all_reps(G);
        std::mt19937_64 rng(9);

        // delta_e: both sides equal 1
        Eigen::VectorXcd de = Eigen::VectorXcd::Zero(G.order());
        de[0] = 1.0;
        const PlancherelReport pr0 = plancherel_report(G, reps, de);
        CHECK(pr0.l2_sq == doctest::Approx(1.0));
        CHECK(pr0.residual < 1e-13);

        const auto f = random_vec(G.order(), rng);
        CHECK(plancherel_report(G, reps, f).residual < 1e-13);

        // f supported on N only
        Eigen::VectorXcd fn = Eigen::VectorXcd::Zero(G.order());
        double nn = 0.0;
        for (int n = 0; n < G.N().order(); ++n) {
            fn[G.index(0, n)] = cplx(0.3 * n - 0.2, 0.1 * n);
            nn += std::norm(fn[G.index(0, n)]);
        }
        const PlancherelReport prn = plancherel_report(G, reps, fn);
        CHECK(prn.l2_sq == doctest::Approx(nn));
        CHECK(prn.residual < 1e-13);

        // inversion
        std::vector<Eigen::MatrixXcd> fh;
        for (const FiniteRep& rep : reps) fh.push_back(rep_of_l1(G, rep, f));
        const Eigen::VectorXcd back = fourier_inversion(G, reps, fh);
        CHECK((back - f).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("generator W^alpha") {
    // trivial group
    const SemidirectProduct z1 = SemidirectProduct::trivial_s(FiniteGroup::cyclic(1));
    const auto reps1 = all_reps(z1);
    CHECK(generator_check(z1, reps1[0]).max_residual == 0.0);

    for (const SemidirectProduct& G :
         {SemidirectProduct::s3(), SemidirectProduct::z4_z2()}) {
        for (const FiniteRep& rep : all_reps(G)) {
            const GeneratorReport gr = generator_check(G, rep);
            INFO(G.name(), " dim=", rep.dim);
            CHECK(gr.unitarity <= 1e-13);
            CHECK(gr.coproduct <= 1e-13);
            CHECK(gr.pentagonal <= 1e-13);
        }
    }
}

TEST_CASE("matrix coefficients") {
    const SemidirectProduct G = SemidirectProduct::s3();
    const auto reps = all_reps(G);
    std::mt19937_64 rng(21);
    for (const FiniteRep& rep : reps) {
        const auto chi = random_vec(rep.dim, rng);
        const auto xi = random_vec(rep.dim, rng);
        // x = e gives the plain inner product
        cplx ip{0.0, 0.0};
        for (int i = 0; i < rep.dim; ++i) ip += chi[i] * std::conj(xi[i]);
        CHECK(std::abs(matrix_coefficient(rep, chi, xi, 0) - ip) < 1e-14);
        // Cauchy-Schwarz bound over all of G
        for (int x = 0; x < G.order(); ++x)
            CHECK(std::abs(matrix_coefficient(rep, chi, xi, x)) <=
                  chi.norm() * xi.norm() + 1e-12);
    }
    // dimension mismatch
    CHECK_THROWS_AS((void)matrix_coefficient(reps[0], random_vec(3, rng),
                                             random_vec(reps[0].dim, rng), 0),
                    GridMismatch);

    // Peter-Weyl: h(x) = (L(x) u | v) decomposes through the inversion formula,
    // with each alpha block a sum of matrix coefficients
    const auto u = random_vec(G.order(), rng);
    const auto v = random_vec(G.order(), rng);
    Eigen::VectorXcd h(G.order());
    for (int x = 0; x < G.order(); ++x) {
        cplx s{0.0, 0.0};
        for (int y = 0; y < G.order(); ++y)
            s += u[G.product(G.inverse(x), y)] * std::conj(v[y]);
        h[x] = s;
    }
    std::vector<Eigen::MatrixXcd> hh;
    for (const FiniteRep& rep : reps) hh.push_back(rep_of_l1(G, rep, h));
    double err = 0.0;
    for (int x = 0; x < G.order(); ++x) {
        cplx s{0.0, 0.0};
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const double c = static_cast<double>(reps[i].dim) / G.order();
            // Tr(T^dagger(x) h_hat) as a sum of matrix coefficients
            for (int b = 0; b < reps[i].dim; ++b) {
                Eigen::VectorXcd e = Eigen::VectorXcd::Zero(reps[i].dim);
                e[b] = 1.0;
                s += c * matrix_coefficient(reps[i], Eigen::VectorXcd(hh[i] * e), e, x);
            }
        }
        err = std::max(err, std::abs(s - h[x]));
    }
    CHECK(err < 1e-12);
}

TEST_CASE("conjugation by the right-regular operator walks the orbit") {
    const SemidirectProduct G = SemidirectProduct::s3();
    const CharacterTable nhat(G.N());
    const int ns = G.S().order();
    // right-regular R(r) xi(s) = xi(s r) on the plain S basis
    for (int r = 0; r < ns; ++r) {
        Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(ns, ns);
        for (int s = 0; s < ns; ++s) R(s, G.S().product(s, r)) = 1.0;
        // chi' = r^{-1}.chi has phases chi(phi_r(n))
        std::vector<int> perm(G.N().order());
        for (int n = 0; n < G.N().order(); ++n) perm[n] = G.phi(r, n);
        const int k = 1; // a nontrivial orbit character
        const int kp = nhat.composed_with(k, perm);
        const FiniteRep t1 = induced_from_character(G, k);
        const FiniteRep t2 = induced_from_character(G, kp);
        for (int x = 0; x < G.order(); ++x) {
            const Eigen::MatrixXcd lhs = R.inverse() * t1.at(x) * R;
            CHECK((lhs - t2.at(x)).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}
