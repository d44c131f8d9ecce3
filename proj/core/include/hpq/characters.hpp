#pragma once

#include <vector>

#include "hpq/groups.hpp"

namespace hpq {

/// The dual of a finite abelian group, computed exactly: characters carry
/// integer phases, chi_k(x) = exp(2 pi i * phase[k][x] / exponent).
/// Built from a cyclic decomposition of the group, so products, inverses and
/// lookups of characters are integer arithmetic.
class CharacterTable {
public:
    explicit CharacterTable(const FiniteGroup& G);

    int order() const { return order_; }
    int exponent() const { return exponent_; }

    cplx value(int k, int x) const;
    int phase(int k, int x) const { return phase_[k][x]; }

    /// Index of the pointwise product chi_k1 * chi_k2.
    int product(int k1, int k2) const;
    int inverse(int k) const;
    /// Index of x -> chi_k(perm(x)) for an automorphism given as a permutation.
    int composed_with(int k, const std::vector<int>& perm) const;

private:
    int order_ = 1;
    int exponent_ = 1;
    std::vector<std::vector<int>> phase_; // phase_[k][x] in units 2 pi / exponent
    int find(const std::vector<int>& phases) const;
};

} // namespace hpq
