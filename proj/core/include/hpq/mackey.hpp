#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hpq/characters.hpp"
#include "hpq/groups.hpp"

namespace hpq::mackey {

/// A point of the unitary dual of S x| N. Orbit labels carry the S-orbit of
/// an N-character with trivial stabilizer (dim = |S|); s_character labels sit
/// over a fixed N-character and an S-character (dim = 1).
struct DualLabel {
    enum class Kind { orbit, s_character };
    Kind kind = Kind::orbit;
    int n_char = 0;         // canonical N-hat index (smallest on the orbit)
    std::vector<int> orbit; // ascending N-hat indices; singleton when fixed
    int s_char = 0;         // S-hat index, s_character kind only
    int dim = 1;
};

/// Orbit classification of N-hat under the S-action (s.chi)(n) = chi(phi_s^{-1} n).
/// Throws UnsupportedStabilizer for stabilizers that are neither trivial nor
/// all of S, and for fixed points when S is nonabelian.
std::vector<DualLabel> classify_dual(const SemidirectProduct& G);

/// sigma(r; x) = phi_{s r}^{-1}(n) for x = (s, n); an element of N.
int cocycle(const SemidirectProduct& G, int r, int x);

struct FiniteRep {
    DualLabel label;
    int dim = 1;
    std::vector<Eigen::MatrixXcd> mats; // indexed by flat group element
    const Eigen::MatrixXcd& at(int x) const { return mats[x]; }
    /// S element attached to each basis slot (orbit labels).
    std::vector<int> basis_s;
};

/// [T(x) xi](s) = V_alpha(sigma(x^{-1}.s; x)) xi(x^{-1}.s), basis indexed by
/// the orbit elements in ascending order; s_character labels give
/// T(s,n) = psi_y(s) chi(n).
FiniteRep induced_rep(const SemidirectProduct& G, const DualLabel& label);

/// Same construction from an arbitrary orbit representative, basis in plain
/// S order; the conjugation tests use it.
FiniteRep induced_from_character(const SemidirectProduct& G, int n_char);

/// f_hat_alpha = sum_x f(x) T_alpha(x)
Eigen::MatrixXcd rep_of_l1(const SemidirectProduct& G, const FiniteRep& rep,
                           const Eigen::VectorXcd& f);

/// The same operator through the kernel K_f(r,t) = sum_n V(sigma(t; rt^{-1},n))
/// f(rt^{-1}, n) over the rep's basis (orbit labels).
Eigen::MatrixXcd kernel_matrix(const SemidirectProduct& G, const FiniteRep& rep,
                               const Eigen::VectorXcd& f);

cplx trace_alpha(const Eigen::MatrixXcd& op);
/// Tr(Delta op); finite groups are unimodular, so equal to trace_alpha.
cplx weight_alpha(const Eigen::MatrixXcd& op);

struct PlancherelReport {
    double l2_sq = 0.0;
    double dual_sum = 0.0;
    double residual = 0.0;
};
PlancherelReport plancherel_report(const SemidirectProduct& G,
                                   const std::vector<FiniteRep>& reps,
                                   const Eigen::VectorXcd& f);

/// f(x) = sum_alpha (dim/|G|) Tr(T_alpha(x)^dagger f_hat_alpha)
Eigen::VectorXcd fourier_inversion(const SemidirectProduct& G,
                                   const std::vector<FiniteRep>& reps,
                                   const std::vector<Eigen::MatrixXcd>& fhat);

struct GeneratorReport {
    double unitarity = 0.0;
    double coproduct = 0.0;  // W^a (1 (x) L(z)) W^a* = T(z) (x) L(z)
    double pentagonal = 0.0; // corepresentation identity with the group W
    double max_residual = 0.0;
};
/// Builds W^alpha-hat = blockdiag_x T_alpha(x) on H_alpha (x) l2(G).
GeneratorReport generator_check(const SemidirectProduct& G, const FiniteRep& rep);

/// omega_{chi,xi}(x) = (T^dagger(x) chi | xi), inner product linear in the
/// first slot.
cplx matrix_coefficient(const FiniteRep& rep, const Eigen::VectorXcd& chi,
                        const Eigen::VectorXcd& xi, int x);

/// Dimension of {M : M T(x) = T(x) M for all x}; 1 for irreducible reps.
int commutant_dimension(const FiniteRep& rep, double tol = 1e-10);

} // namespace hpq::mackey
