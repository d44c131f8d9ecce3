#include "hpq/groups.hpp"

#include <cmath>

namespace hpq {

AffineElement::AffineElement(double lambda_, double a_) : lambda(lambda_), a(a_) {
    if (!(lambda > 0.0)) throw Error("AffineElement: lambda must be positive");
}

AffineElement affine_product(const AffineElement& g, const AffineElement& h) {
    // (l,a)(r,b) = (l r, a + b/l)
    return {g.lambda * h.lambda, g.a + h.a / g.lambda};
}

AffineElement affine_inverse(const AffineElement& g) {
    // (l,a)^{-1} = (1/l, phi_l^{-1}(-a)) = (1/l, -a l)
    return {1.0 / g.lambda, -g.a * g.lambda};
}

std::pair<AffineElement, AffineElement> affine_decompose_sn(const AffineElement& g) {
    return {AffineElement{g.lambda, 0.0}, AffineElement{1.0, g.a * g.lambda}};
}

std::pair<AffineElement, AffineElement> affine_decompose_ns(const AffineElement& g) {
    return {AffineElement{1.0, g.a}, AffineElement{g.lambda, 0.0}};
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> product_table, std::string name)
    : table_(std::move(product_table)), name_(std::move(name)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw InputError("finite group: empty table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("finite group: table is not square");
        for (int e : row)
            if (e < 0 || e >= n) throw InputError("finite group: entry out of range");
    }
    for (int a = 0; a < n; ++a) {
        if (table_[0][a] != a || table_[a][0] != a)
            throw InputError("finite group: index 0 is not the identity");
    }
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table_[a][b] == 0) {
                if (table_[b][a] != 0) throw InputError("finite group: one-sided inverse");
                inv_[a] = b;
            }
        }
        if (inv_[a] < 0) throw InputError("finite group: missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw InputError("finite group: table is not associative");
    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] != table_[b][a]) {
                abelian_ = false;
                break;
            }
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n <= 0) throw InputError("cyclic: order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

namespace {

FiniteGroup flatten(const FiniteGroup& S, const FiniteGroup& N,
                    const std::vector<std::vector<int>>& action, const std::string& name) {
    const int ns = S.order(), nn = N.order();
    const int n = ns * nn;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int s = 0; s < ns; ++s)
        for (int a = 0; a < nn; ++a)
            for (int r = 0; r < ns; ++r)
                for (int b = 0; b < nn; ++b) {
                    const int sp = S.product(s, r);
                    const int np = N.product(a, action[s][b]);
                    t[s * nn + a][r * nn + b] = sp * nn + np;
                }
    return FiniteGroup(std::move(t), name);
}

} // namespace

SemidirectProduct::SemidirectProduct(FiniteGroup S, FiniteGroup N,
                                     std::vector<std::vector<int>> action,
                                     std::string name)
    : s_(std::move(S)),
      n_(std::move(N)),
      action_(std::move(action)),
      flat_(),
      name_(std::move(name)) {
    if (!n_.is_abelian()) throw InputError("semidirect product: N must be abelian");
    if (static_cast<int>(action_.size()) != s_.order())
        throw InputError("semidirect product: action table has wrong S extent");
    for (const auto& row : action_) {
        if (static_cast<int>(row.size()) != n_.order())
            throw InputError("semidirect product: action table has wrong N extent");
    }
    // phi must be a homomorphism S -> Aut(N)
    for (int s = 0; s < s_.order(); ++s) {
        if (action_[s][0] != 0)
            throw InputError("semidirect product: phi_s does not fix the identity");
        std::vector<bool> seen(n_.order(), false);
        for (int a = 0; a < n_.order(); ++a) {
            if (seen[action_[s][a]])
                throw InputError("semidirect product: phi_s is not a bijection");
            seen[action_[s][a]] = true;
            for (int b = 0; b < n_.order(); ++b)
                if (action_[s][n_.product(a, b)] !=
                    n_.product(action_[s][a], action_[s][b]))
                    throw InputError("semidirect product: phi_s is not a homomorphism");
        }
    }
    for (int s = 0; s < s_.order(); ++s)
        for (int r = 0; r < s_.order(); ++r)
            for (int a = 0; a < n_.order(); ++a)
                if (action_[s_.product(s, r)][a] != action_[s][action_[r][a]])
                    throw InputError("semidirect product: phi is not an S-action");
    flat_ = flatten(s_, n_, action_, name_);
}

SemidirectProduct SemidirectProduct::s3() {
    FiniteGroup S = FiniteGroup::cyclic(2);
    FiniteGroup N = FiniteGroup::cyclic(3);
    std::vector<std::vector<int>> act = {{0, 1, 2}, {0, 2, 1}};
    return SemidirectProduct(std::move(S), std::move(N), std::move(act), "S3");
}

SemidirectProduct SemidirectProduct::z4_z2() {
    FiniteGroup S = FiniteGroup::cyclic(2);
    FiniteGroup N = FiniteGroup::cyclic(4);
    std::vector<std::vector<int>> act = {{0, 1, 2, 3}, {0, 3, 2, 1}};
    return SemidirectProduct(std::move(S), std::move(N), std::move(act), "Z4xZ2");
}

SemidirectProduct SemidirectProduct::trivial_s(FiniteGroup N, std::string name) {
    FiniteGroup S = FiniteGroup::cyclic(1);
    std::vector<std::vector<int>> act(1, std::vector<int>(N.order()));
    for (int a = 0; a < N.order(); ++a) act[0][a] = a;
    if (name.empty()) name = N.name();
    return SemidirectProduct(std::move(S), std::move(N), std::move(act), std::move(name));
}

int SemidirectProduct::product(int x, int y) const {
    const int s = s_part(x), n = n_part(x), r = s_part(y), l = n_part(y);
    return index(s_.product(s, r), n_.product(n, phi(s, l)));
}

int SemidirectProduct::inverse(int x) const {
    const int s = s_part(x), n = n_part(x);
    // (s,n)^{-1} = (s^{-1}, phi_s^{-1}(-n))
    return index(s_.inverse(s), phi_inv(s, n_.inverse(n)));
}

std::pair<int, int> SemidirectProduct::decompose_sn(int x) const {
    const int s = s_part(x), n = n_part(x);
    return {index(s, 0), index(0, phi_inv(s, n))};
}

std::pair<int, int> SemidirectProduct::decompose_ns(int x) const {
    const int s = s_part(x), n = n_part(x);
    return {index(0, n), index(s, 0)};
}

namespace {

const FiniteSDElement& as_finite(const GroupElement& g) {
    return std::get<FiniteSDElement>(g);
}

} // namespace

GroupElement product(const GroupElement& g, const GroupElement& h) {
    if (g.index() != h.index())
        throw InstanceMismatch("product: mixed group instances");
    if (std::holds_alternative<AffineElement>(g))
        return affine_product(std::get<AffineElement>(g), std::get<AffineElement>(h));
    const auto& a = as_finite(g);
    const auto& b = as_finite(h);
    if (a.group != b.group)
        throw InstanceMismatch("product: elements of distinct finite groups");
    const int idx = a.group->product(a.group->index(a.s, a.n), b.group->index(b.s, b.n));
    return FiniteSDElement{a.group, a.group->s_part(idx), a.group->n_part(idx)};
}

GroupElement inverse(const GroupElement& g) {
    if (std::holds_alternative<AffineElement>(g))
        return affine_inverse(std::get<AffineElement>(g));
    const auto& a = as_finite(g);
    const int idx = a.group->inverse(a.group->index(a.s, a.n));
    return FiniteSDElement{a.group, a.group->s_part(idx), a.group->n_part(idx)};
}

std::pair<GroupElement, GroupElement> decompose(const GroupElement& g) {
    if (std::holds_alternative<AffineElement>(g)) {
        auto [s, n] = affine_decompose_sn(std::get<AffineElement>(g));
        return {GroupElement{s}, GroupElement{n}};
    }
    const auto& a = as_finite(g);
    auto [s, n] = a.group->decompose_sn(a.group->index(a.s, a.n));
    return {GroupElement{FiniteSDElement{a.group, a.group->s_part(s), a.group->n_part(s)}},
            GroupElement{FiniteSDElement{a.group, a.group->s_part(n), a.group->n_part(n)}}};
}

double modular_function(const GroupElement& g) {
    if (std::holds_alternative<AffineElement>(g))
        return affine_modular(std::get<AffineElement>(g));
    return 1.0; // finite groups are unimodular
}

MeasureSpec haar_measure(const PhaseGrid& grid, MeasureSide side) {
    if (grid.n_u <= 0 || grid.n_a <= 0) throw InputError("haar_measure: empty grid");
    MeasureSpec m;
    m.side = side;
    m.weights.resize(grid.size());
    for (int j = 0; j < grid.n_u; ++j) {
        const double lj = grid.lambda(j);
        const double wl = grid.du * lj * grid.da;
        const double w = (side == MeasureSide::left) ? wl : wl / lj;
        for (int mm = 0; mm < grid.n_a; ++mm)
            m.weights[static_cast<std::size_t>(j) * grid.n_a + mm] = w;
    }
    return m;
}

MeasureSpec haar_measure(const FiniteGroup& group, MeasureSide side) {
    MeasureSpec m;
    m.side = side;
    m.weights.assign(group.order(), 1.0);
    return m;
}

} // namespace hpq
