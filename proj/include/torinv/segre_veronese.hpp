#pragma once

#include "torinv/semigroup.hpp"
#include "torinv/torus_rep.hpp"

namespace torinv {

/// Affine cone over the image of P^{n_1-1} x ... x P^{n_r-1} under O(a_1,...,a_r).
struct SVSpec {
    std::vector<int> factors;  // n_i
    std::vector<int> degrees;  // a_i
    int characteristic = 0;    // 0 or a prime

    int r() const { return static_cast<int>(factors.size()); }
    void validate() const;

    friend bool operator==(const SVSpec&, const SVSpec&) = default;
};

struct BoundsReport {
    int case_id = 0;
    long s_lower = 0;
    long s_upper = 0;
    long s_prime_lower = 0;
    long s_prime_upper = 0;
    std::vector<int> reduced_degrees;

    friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// Replace each a_i by its part prime to the characteristic.
SVSpec reduce_inseparable(const SVSpec& spec);

/// Rank-r encoding: x_0 with weight -(a_1,...,a_r), then n_i copies of e_i.
TorusRep sv_weight_matrix(const SVSpec& spec);

/// Rank r-1 encoding of the Segre cone (all a_i = 1); needs r >= 2.
TorusRep segre_weight_matrix(const std::vector<int>& factors);

BoundsReport separating_size_bounds(const SVSpec& spec);

/// Indices i with a_i equal to 1 or to a power of the characteristic.
std::vector<int> exceptional_factors(const SVSpec& spec);

/// Size of a minimal monomial separating set.
long monomial_min_size(const SVSpec& spec);

/// A monomial separating set of size monomial_min_size(spec), in the
/// variable order of sv_weight_matrix.
MonomialSemigroup monomial_min_construction(const SVSpec& spec);

/// Monomials with support of size at most r+2 separate; asserted.
bool support_r_plus_2_separates(const SVSpec& spec, int max_dim = kHilbertBasisMaxDim);

} // namespace torinv
