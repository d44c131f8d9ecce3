#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hpq/errors.hpp"
#include "hpq/grid.hpp"

namespace hpq {

// ---------------------------------------------------------------------------
// Affine half-plane group R+ x| R, product (l,a)(r,b) = (lr, a + b/l).
// ---------------------------------------------------------------------------

struct AffineElement {
    double lambda = 1.0; // length
    double a = 0.0;      // momentum

    AffineElement() = default;
    AffineElement(double lambda_, double a_);
};

AffineElement affine_product(const AffineElement& g, const AffineElement& h);
AffineElement affine_inverse(const AffineElement& g);

/// (l,a) = (l,0)(1, a*l): S part first.
std::pair<AffineElement, AffineElement> affine_decompose_sn(const AffineElement& g);
/// (l,a) = (1,a)(l,0): N part first.
std::pair<AffineElement, AffineElement> affine_decompose_ns(const AffineElement& g);

inline double affine_modular(const AffineElement& g) { return g.lambda; }

/// Gaugefied cocycle sigma(r; (l,a)) = phi_{l r}^{-1}(a) = a l r on the
/// affine instance.
inline double affine_cocycle(double r, const AffineElement& g) {
    return g.a * g.lambda * r;
}

// ---------------------------------------------------------------------------
// Finite groups from multiplication tables (identity = index 0).
// ---------------------------------------------------------------------------

class FiniteGroup {
public:
    FiniteGroup() = default;
    /// Validates closure, identity at 0, inverses and associativity.
    explicit FiniteGroup(std::vector<std::vector<int>> product_table,
                         std::string name = "");

    static FiniteGroup cyclic(int n);

    int order() const { return static_cast<int>(table_.size()); }
    int product(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    static constexpr int identity = 0;
    bool is_abelian() const { return abelian_; }
    const std::string& name() const { return name_; }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    bool abelian_ = true;
    std::string name_;
};

/// Semidirect product S x| N with N abelian and product
/// (s,n)(r,l) = (s r, n + phi_s(l)); phi_s must be an automorphism of N.
class SemidirectProduct {
public:
    SemidirectProduct(FiniteGroup S, FiniteGroup N,
                      std::vector<std::vector<int>> action, std::string name = "");

    /// Z2 acting on Z3 by inversion; isomorphic to the symmetric group S3.
    static SemidirectProduct s3();
    /// Z2 acting on Z4 by inversion (the dihedral group of the square).
    static SemidirectProduct z4_z2();
    /// Trivial S: the abelian group N itself.
    static SemidirectProduct trivial_s(FiniteGroup N, std::string name = "");

    const FiniteGroup& S() const { return s_; }
    const FiniteGroup& N() const { return n_; }
    const std::string& name() const { return name_; }

    int order() const { return s_.order() * n_.order(); }
    int phi(int s, int n) const { return action_[s][n]; }
    int phi_inv(int s, int n) const { return action_[s_.inverse(s)][n]; }

    int index(int s, int n) const { return s * n_.order() + n; }
    int s_part(int idx) const { return idx / n_.order(); }
    int n_part(int idx) const { return idx % n_.order(); }

    int product(int x, int y) const;
    int inverse(int x) const;

    /// (s,n) = (s,0)(e, phi_s^{-1}(n)).
    std::pair<int, int> decompose_sn(int x) const;
    /// (s,n) = (e,n)(s,0).
    std::pair<int, int> decompose_ns(int x) const;

    /// Flattened multiplication table of the whole product group.
    const FiniteGroup& as_group() const { return flat_; }

private:
    FiniteGroup s_;
    FiniteGroup n_;
    std::vector<std::vector<int>> action_;
    FiniteGroup flat_;
    std::string name_;
};

// ---------------------------------------------------------------------------
// Instance-tagged elements (mixing instances is an error).
// ---------------------------------------------------------------------------

struct FiniteSDElement {
    std::shared_ptr<const SemidirectProduct> group;
    int s = 0;
    int n = 0;
};

using GroupElement = std::variant<AffineElement, FiniteSDElement>;

GroupElement product(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
std::pair<GroupElement, GroupElement> decompose(const GroupElement& g);
double modular_function(const GroupElement& g);

// ---------------------------------------------------------------------------
// Haar measures.
// ---------------------------------------------------------------------------

enum class MeasureSide { left, right };

/// Quadrature weights for the Haar measure. Affine: per-sample weights in the
/// row-major layout of GridFunction, left weight du*lambda_j*da (the cell
/// measure of d^l = dl da on the log lattice) and right = left / lambda_j
/// (Radon-Nikodym derivative Delta(l) = l). Finite: counting measure.
struct MeasureSpec {
    MeasureSide side = MeasureSide::left;
    std::vector<double> weights;
};

MeasureSpec haar_measure(const PhaseGrid& grid, MeasureSide side);
MeasureSpec haar_measure(const FiniteGroup& group, MeasureSide side);

} // namespace hpq
