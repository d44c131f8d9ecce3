#include "hpq/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace hpq {

namespace {

using Table = std::vector<std::vector<int>>;

int power(const Table& t, int x, int k) {
    int acc = 0;
    for (int i = 0; i < k; ++i) acc = t[acc][x];
    return acc;
}

int order_of(const Table& t, int x) {
    int acc = x, k = 1;
    while (acc != 0) {
        acc = t[acc][x];
        ++k;
    }
    return k;
}

struct Basis {
    std::vector<int> gens;   // element indices
    std::vector<int> orders; // cyclic orders, each dividing orders[0]
};

/// Cyclic decomposition of an abelian group table: G = <g_1> + <g_2> + ...
/// with g_1 of maximal order (= the exponent) and every later order dividing
/// it; built by recursing on the quotient and lifting generators.
Basis cyclic_basis(const Table& t) {
    const int n = static_cast<int>(t.size());
    Basis b;
    if (n == 1) return b;
    int q = 1, n1 = order_of(t, 1);
    for (int x = 2; x < n; ++x) {
        const int o = order_of(t, x);
        if (o > n1) {
            n1 = o;
            q = x;
        }
    }
    // subgroup H = <q> with exponent lookup
    std::vector<int> h_exp(n, -1);
    {
        int acc = 0;
        for (int e = 0; e < n1; ++e) {
            h_exp[acc] = e;
            acc = t[acc][q];
        }
    }
    // cosets of H, canonical representative = smallest member index
    std::vector<int> canon(n, -1);
    for (int x = 0; x < n; ++x) {
        int best = x;
        int acc = x;
        for (int e = 1; e < n1; ++e) {
            acc = t[acc][q];
            best = std::min(best, acc);
        }
        canon[x] = best;
    }
    std::vector<int> reps;
    std::vector<int> coset_id(n, -1);
    for (int x = 0; x < n; ++x)
        if (canon[x] == x) reps.push_back(x);
    std::sort(reps.begin(), reps.end());
    for (std::size_t c = 0; c < reps.size(); ++c) coset_id[reps[c]] = static_cast<int>(c);
    Table qt(reps.size(), std::vector<int>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            qt[i][j] = coset_id[canon[t[reps[i]][reps[j]]]];

    Basis sub = cyclic_basis(qt);
    b.gens.push_back(q);
    b.orders.push_back(n1);
    for (std::size_t i = 0; i < sub.gens.size(); ++i) {
        const int m = sub.orders[i];
        int r = reps[sub.gens[i]];
        const int rm = power(t, r, m);
        const int texp = h_exp[rm];
        // r^m = q^texp with m | texp; replace r by r q^{-texp/m}
        const int adj = (n1 - texp / m % n1) % n1;
        r = t[r][power(t, q, adj)];
        b.gens.push_back(r);
        b.orders.push_back(m);
    }
    return b;
}

} // namespace

CharacterTable::CharacterTable(const FiniteGroup& G) {
    if (!G.is_abelian()) throw InputError("CharacterTable: group is not abelian");
    order_ = G.order();
    Table t(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
        for (int c = 0; c < order_; ++c) t[a][c] = G.product(a, c);

    const Basis b = cyclic_basis(t);
    const int r = static_cast<int>(b.gens.size());
    exponent_ = r == 0 ? 1 : b.orders[0];

    // coordinates of every element in the basis
    std::vector<std::vector<int>> coords(order_);
    {
        std::vector<int> c(r, 0);
        std::vector<bool> seen(order_, false);
        const int total = order_;
        for (int cnt = 0; cnt < total; ++cnt) {
            int x = 0;
            for (int i = 0; i < r; ++i) x = t[x][power(t, b.gens[i], c[i])];
            if (seen[x]) throw Error("CharacterTable: cyclic decomposition failed");
            seen[x] = true;
            coords[x] = c;
            for (int i = r - 1; i >= 0; --i) {
                if (++c[i] < b.orders[i]) break;
                c[i] = 0;
            }
        }
    }

    // characters, indexed by the same mixed-radix tuples as the elements
    phase_.assign(order_, std::vector<int>(order_, 0));
    std::vector<int> k(r, 0);
    for (int kk = 0; kk < order_; ++kk) {
        for (int x = 0; x < order_; ++x) {
            long p = 0;
            for (int i = 0; i < r; ++i)
                p += static_cast<long>(k[i]) * coords[x][i] * (exponent_ / b.orders[i]);
            phase_[kk][x] = static_cast<int>(p % exponent_);
        }
        for (int i = r - 1; i >= 0; --i) {
            if (++k[i] < b.orders[i]) break;
            k[i] = 0;
        }
    }
}

cplx CharacterTable::value(int k, int x) const {
    const double ang = 2.0 * std::numbers::pi * phase_[k][x] / exponent_;
    return {std::cos(ang), std::sin(ang)};
}

int CharacterTable::find(const std::vector<int>& phases) const {
    for (int k = 0; k < order_; ++k)
        if (phase_[k] == phases) return k;
    throw Error("CharacterTable: phase vector is not a character");
}

int CharacterTable::product(int k1, int k2) const {
    std::vector<int> p(order_);
    for (int x = 0; x < order_; ++x) p[x] = (phase_[k1][x] + phase_[k2][x]) % exponent_;
    return find(p);
}

int CharacterTable::inverse(int k) const {
    std::vector<int> p(order_);
    for (int x = 0; x < order_; ++x) p[x] = (exponent_ - phase_[k][x]) % exponent_;
    return find(p);
}

int CharacterTable::composed_with(int k, const std::vector<int>& perm) const {
    std::vector<int> p(order_);
    for (int x = 0; x < order_; ++x) p[x] = phase_[k][perm[x]];
    return find(p);
}

} // namespace hpq
