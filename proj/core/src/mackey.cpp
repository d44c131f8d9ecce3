#include "hpq/mackey.hpp"

#include <algorithm>
#include <cmath>

#include "hpq/kac.hpp"

namespace hpq::mackey {

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

/// Permutation action of S on N-hat: s.k with (s.chi_k)(n) = chi_k(phi_s^{-1} n).
std::vector<std::vector<int>> dual_action(const SemidirectProduct& G,
                                          const CharacterTable& nhat) {
    const int ns = G.S().order();
    const int nn = G.N().order();
    std::vector<std::vector<int>> act(ns, std::vector<int>(nn));
    for (int s = 0; s < ns; ++s) {
        std::vector<int> perm(nn);
        for (int a = 0; a < nn; ++a) perm[a] = G.phi_inv(s, a);
        for (int k = 0; k < nn; ++k) act[s][k] = nhat.composed_with(k, perm);
    }
    return act;
}

} // namespace

std::vector<DualLabel> classify_dual(const SemidirectProduct& G) {
    const CharacterTable nhat(G.N());
    const auto act = dual_action(G, nhat);
    const int ns = G.S().order();
    const int nn = G.N().order();

    std::vector<DualLabel> labels;
    std::vector<bool> seen(nn, false);
    for (int k = 0; k < nn; ++k) {
        if (seen[k]) continue;
        std::vector<int> orbit;
        for (int s = 0; s < ns; ++s) {
            const int img = act[s][k];
            if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                orbit.push_back(img);
        }
        std::sort(orbit.begin(), orbit.end());
        for (int o : orbit) seen[o] = true;

        if (static_cast<int>(orbit.size()) == 1) {
            // full stabilizer: the little group is all of S
            if (!G.S().is_abelian())
                throw UnsupportedStabilizer(
                    "fixed N-character with nonabelian S is outside the supported "
                    "trivial/full stabilizer pattern");
            const int n_schars = ns; // |S-hat| = |S| for abelian S
            for (int y = 0; y < n_schars; ++y) {
                DualLabel l;
                l.kind = DualLabel::Kind::s_character;
                l.n_char = orbit[0];
                l.orbit = orbit;
                l.s_char = y;
                l.dim = 1;
                labels.push_back(l);
            }
        } else if (static_cast<int>(orbit.size()) == ns) {
            DualLabel l;
            l.kind = DualLabel::Kind::orbit;
            l.n_char = orbit[0];
            l.orbit = orbit;
            l.dim = ns;
            labels.push_back(l);
        } else {
            throw UnsupportedStabilizer(
                "orbit with intermediate stabilizer (size " +
                std::to_string(ns / orbit.size()) + ") is unsupported");
        }
    }
    std::sort(labels.begin(), labels.end(), [](const DualLabel& a, const DualLabel& b) {
        if (a.n_char != b.n_char) return a.n_char < b.n_char;
        return a.s_char < b.s_char;
    });
    return labels;
}

int cocycle(const SemidirectProduct& G, int r, int x) {
    const int s = G.s_part(x);
    const int n = G.n_part(x);
    return G.phi_inv(G.S().product(s, r), n);
}

namespace {

FiniteRep build_orbit_rep(const SemidirectProduct& G, const DualLabel& label,
                          const std::vector<int>& basis_s, int v_char) {
    const CharacterTable nhat(G.N());
    const int ns = G.S().order();
    const int order = G.order();
    FiniteRep rep;
    rep.label = label;
    rep.dim = static_cast<int>(basis_s.size());
    rep.basis_s = basis_s;
    // slot of each S element in the basis
    std::vector<int> slot(ns, -1);
    for (int b = 0; b < rep.dim; ++b) slot[basis_s[b]] = b;

    rep.mats.resize(order);
    for (int x = 0; x < order; ++x) {
        Mat t = Mat::Zero(rep.dim, rep.dim);
        const int xs = G.s_part(x);
        const int xs_inv = G.S().inverse(xs);
        for (int b = 0; b < rep.dim; ++b) {
            const int s = basis_s[b];
            const int sprev = G.S().product(xs_inv, s); // x^{-1} . s
            const int bp = slot[sprev];
            t(b, bp) = nhat.value(v_char, cocycle(G, sprev, x));
        }
        rep.mats[x] = t;
    }
    return rep;
}

} // namespace

FiniteRep induced_rep(const SemidirectProduct& G, const DualLabel& label) {
    if (label.kind == DualLabel::Kind::s_character) {
        const CharacterTable nhat(G.N());
        const CharacterTable shat(G.S());
        FiniteRep rep;
        rep.label = label;
        rep.dim = 1;
        rep.basis_s = {0};
        rep.mats.resize(G.order());
        for (int x = 0; x < G.order(); ++x) {
            Mat t(1, 1);
            t(0, 0) = shat.value(label.s_char, G.s_part(x)) *
                      nhat.value(label.n_char, G.n_part(x));
            rep.mats[x] = t;
        }
        return rep;
    }
    // orbit label: basis slots follow the orbit elements in ascending order;
    // slot b carries the unique s with s.chi_rep = orbit[b]
    const CharacterTable nhat(G.N());
    const auto act = dual_action(G, nhat);
    const int ns = G.S().order();
    std::vector<int> s_of_orbit(G.N().order(), -1);
    for (int s = 0; s < ns; ++s) s_of_orbit[act[s][label.n_char]] = s;
    std::vector<int> basis_s;
    basis_s.reserve(label.orbit.size());
    for (int o : label.orbit) {
        if (s_of_orbit[o] < 0) throw Error("induced_rep: orbit/stabilizer mismatch");
        basis_s.push_back(s_of_orbit[o]);
    }
    return build_orbit_rep(G, label, basis_s, label.n_char);
}

FiniteRep induced_from_character(const SemidirectProduct& G, int n_char) {
    const int ns = G.S().order();
    std::vector<int> basis_s(ns);
    for (int s = 0; s < ns; ++s) basis_s[s] = s;
    DualLabel l;
    l.kind = DualLabel::Kind::orbit;
    l.n_char = n_char;
    l.dim = ns;
    return build_orbit_rep(G, l, basis_s, n_char);
}

Mat rep_of_l1(const SemidirectProduct& G, const FiniteRep& rep, const Vec& f) {
    if (f.size() != G.order()) throw GridMismatch("rep_of_l1: size != |G|");
    Mat acc = Mat::Zero(rep.dim, rep.dim);
    for (int x = 0; x < G.order(); ++x) acc += f[x] * rep.mats[x];
    return acc;
}

Mat kernel_matrix(const SemidirectProduct& G, const FiniteRep& rep, const Vec& f) {
    if (rep.label.kind != DualLabel::Kind::orbit)
        throw Error("kernel_matrix: kernel form applies to orbit labels");
    const CharacterTable nhat(G.N());
    Mat k = Mat::Zero(rep.dim, rep.dim);
    for (int b = 0; b < rep.dim; ++b) {
        const int r = rep.basis_s[b];
        for (int bp = 0; bp < rep.dim; ++bp) {
            const int t = rep.basis_s[bp];
            const int rt = G.S().product(r, G.S().inverse(t));
            cplx acc{0.0, 0.0};
            for (int n = 0; n < G.N().order(); ++n) {
                const int x = G.index(rt, n);
                acc += nhat.value(rep.label.n_char, cocycle(G, t, x)) * f[x];
            }
            k(b, bp) = acc;
        }
    }
    return k;
}

cplx trace_alpha(const Mat& op) { return op.trace(); }

cplx weight_alpha(const Mat& op) { return op.trace(); }

PlancherelReport plancherel_report(const SemidirectProduct& G,
                                   const std::vector<FiniteRep>& reps, const Vec& f) {
    PlancherelReport rep;
    rep.l2_sq = f.squaredNorm();
    double sum = 0.0;
    for (const FiniteRep& r : reps) {
        const Mat fh = rep_of_l1(G, r, f);
        sum += (static_cast<double>(r.dim) / G.order()) *
               std::real(trace_alpha(fh.adjoint() * fh));
    }
    rep.dual_sum = sum;
    rep.residual = std::abs(rep.l2_sq - rep.dual_sum);
    return rep;
}

Vec fourier_inversion(const SemidirectProduct& G, const std::vector<FiniteRep>& reps,
                      const std::vector<Mat>& fhat) {
    Vec f = Vec::Zero(G.order());
    for (int x = 0; x < G.order(); ++x) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const double c = static_cast<double>(reps[i].dim) / G.order();
            acc += c * trace_alpha(reps[i].mats[x].adjoint() * fhat[i]);
        }
        f[x] = acc;
    }
    return f;
}

GeneratorReport generator_check(const SemidirectProduct& G, const FiniteRep& rep) {
    const int d = rep.dim;
    const int n = G.order();
    if (static_cast<long>(d) * n * n > 16384)
        throw DimensionCap("generator_check: dim |G|^2 exceeds cap");
    const FiniteGroup& flat = G.as_group();

    // W-hat^alpha = blockdiag_x T(x) on H_alpha (x) l2(G), index (b, x)
    Mat wa = Mat::Zero(d * n, d * n);
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < d; ++b)
            for (int bp = 0; bp < d; ++bp)
                wa(b * n + x, bp * n + x) = rep.mats[x](b, bp);

    GeneratorReport out;
    out.unitarity =
        (wa * wa.adjoint() - Mat::Identity(d * n, d * n)).cwiseAbs().maxCoeff();

    // coproduct implementation: W^a (1 (x) L(z)) W^a* = T(z) (x) L(z),
    // the second leg acting by the left-regular representation
    const Mat id_d = Mat::Identity(d, d);
    double cop = 0.0;
    for (int z = 0; z < n; ++z) {
        const Mat lz = kac::regular_rep(flat, z);
        const Mat lhs = wa * kron(id_d, lz) * wa.adjoint();
        const Mat rhs = kron(rep.mats[z], lz);
        cop = std::max(cop, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    out.coproduct = cop;

    // corepresentation (pentagonal) identity with the group fundamental
    // operator: (1 (x) W) U13 (1 (x) W)* = U12 U13 on H_alpha (x) l2(G)^2
    {
        const int dim3 = d * n * n;
        Mat u12 = Mat::Zero(dim3, dim3), u13 = Mat::Zero(dim3, dim3);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int b = 0; b < d; ++b)
                    for (int bp = 0; bp < d; ++bp) {
                        u12((b * n + x) * n + y, (bp * n + x) * n + y) =
                            rep.mats[x](b, bp);
                        u13((b * n + x) * n + y, (bp * n + x) * n + y) =
                            rep.mats[y](b, bp);
                    }
        const Mat wg = kac::fundamental_w(flat).m; // on l2(G)^2
        const Mat one_w = kron(id_d, wg);
        const Mat lhs = one_w * u13 * one_w.adjoint();
        const Mat rhs = u12 * u13;
        out.pentagonal = (lhs - rhs).cwiseAbs().maxCoeff();
    }

    out.max_residual = std::max({out.unitarity, out.coproduct, out.pentagonal});
    return out;
}

cplx matrix_coefficient(const FiniteRep& rep, const Vec& chi, const Vec& xi, int x) {
    if (chi.size() != rep.dim || xi.size() != rep.dim)
        throw GridMismatch("matrix_coefficient: vector dimension mismatch");
    const Vec lhs = rep.mats[x].adjoint() * chi;
    cplx s{0.0, 0.0};
    for (int i = 0; i < rep.dim; ++i) s += lhs[i] * std::conj(xi[i]);
    return s;
}

int commutant_dimension(const FiniteRep& rep, double tol) {
    const int d = rep.dim;
    const int n = static_cast<int>(rep.mats.size());
    // vec(M) column-major; one block of constraints (T M - M T)_{ij} = 0 per
    // group element
    Mat sys = Mat::Zero(n * d * d, d * d);
    for (int x = 0; x < n; ++x) {
        const Mat& t = rep.mats[x];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const int row = (x * d + i) * d + j;
                for (int k = 0; k < d; ++k) {
                    sys(row, j * d + k) += t(i, k);  // T_{ik} M_{kj}
                    sys(row, k * d + i) -= t(k, j);  // -M_{ik} T_{kj}
                }
            }
    }
    Eigen::JacobiSVD<Mat> svd(sys);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > tol) ++rank;
    return d * d - rank;
}

} // namespace hpq::mackey
