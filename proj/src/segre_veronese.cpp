#include "torinv/segre_veronese.hpp"

#include "torinv/separating.hpp"

#include <algorithm>
#include <numeric>

namespace torinv {

void SVSpec::validate() const
{
    if (factors.empty())
        throw InvalidInput("at least one factor is required");
    if (factors.size() != degrees.size())
        throw InvalidInput("factors and degrees have different lengths");
    for (int n : factors)
        if (n < 2)
            throw InvalidInput("factor sizes must be at least 2");
    for (int a : degrees)
        if (a < 1)
            throw InvalidInput("degrees must be positive");
    if (characteristic != 0 && !is_prime(characteristic))
        throw InvalidInput("characteristic must be 0 or a prime");
}

SVSpec reduce_inseparable(const SVSpec& spec)
{
    spec.validate();
    SVSpec out = spec;
    if (spec.characteristic == 0)
        return out;
    for (int& a : out.degrees)
        while (a % spec.characteristic == 0)
            a /= spec.characteristic;
    return out;
}

namespace {

Eigen::Index total_dim(const SVSpec& spec)
{
    return 1 + std::accumulate(spec.factors.begin(), spec.factors.end(), Eigen::Index{0});
}

// Column of x_{i,j} (both 0-based) in the sv_weight_matrix order.
Eigen::Index var_index(const SVSpec& spec, int i, int j)
{
    Eigen::Index offset = 1;
    for (int h = 0; h < i; ++h)
        offset += spec.factors[static_cast<std::size_t>(h)];
    return offset + j;
}

bool is_power_of(long a, long p)
{
    if (p < 2)
        return a == 1;
    while (a % p == 0)
        a /= p;
    return a == 1;
}

// Advance a mixed-radix tuple; false after the last one.
bool next_tuple(std::vector<int>& tuple, const std::vector<int>& radix)
{
    for (std::size_t pos = tuple.size(); pos-- > 0;) {
        if (++tuple[pos] < radix[pos])
            return true;
        tuple[pos] = 0;
    }
    return false;
}

} // namespace

TorusRep sv_weight_matrix(const SVSpec& spec)
{
    spec.validate();
    const int r = spec.r();
    IntMatrix W = IntMatrix::Zero(r, total_dim(spec));
    for (int i = 0; i < r; ++i) {
        W(i, 0) = -spec.degrees[static_cast<std::size_t>(i)];
        for (int j = 0; j < spec.factors[static_cast<std::size_t>(i)]; ++j)
            W(i, var_index(spec, i, j)) = 1;
    }
    return TorusRep(std::move(W));
}

TorusRep segre_weight_matrix(const std::vector<int>& factors)
{
    const auto r = static_cast<int>(factors.size());
    if (r < 2)
        throw InvalidInput("the Segre encoding needs at least two factors");
    for (int n : factors)
        if (n < 1)
            throw InvalidInput("factor sizes must be positive");
    const int total = std::accumulate(factors.begin(), factors.end(), 0);
    IntMatrix W = IntMatrix::Zero(r - 1, total);
    int col = 0;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < factors[static_cast<std::size_t>(i)]; ++j, ++col) {
            if (i < r - 1)
                W(i, col) = 1;
            else
                W.col(col).setConstant(Integer(-1));
        }
    }
    return TorusRep(std::move(W));
}

BoundsReport separating_size_bounds(const SVSpec& spec)
{
    const SVSpec reduced = reduce_inseparable(spec);
    const long r = reduced.r();
    std::vector<int> n = reduced.factors;
    std::sort(n.begin(), n.end());
    const long sum = std::accumulate(n.begin(), n.end(), 0L);
    const long generic = 2 * sum - 2 * r + 1;

    BoundsReport out;
    out.reduced_degrees = reduced.degrees;
    const bool all_one = std::all_of(reduced.degrees.begin(), reduced.degrees.end(), [](int a) { return a == 1; });
    if (!all_one) {
        out.case_id = 1;
        out.s_lower = out.s_upper = generic;
    } else if (r == 2) {
        out.case_id = 2;
        out.s_lower = out.s_upper = 2 * (n[0] + n[1]) - 4;
    } else {
        out.case_id = 3;
        out.s_lower = 2 * (sum - n[0]) - 2 * r + 4;
        out.s_upper = generic;
    }
    out.s_prime_lower = out.s_lower - 1;
    out.s_prime_upper = out.s_upper - 1;
    return out;
}

std::vector<int> exceptional_factors(const SVSpec& spec)
{
    spec.validate();
    std::vector<int> out;
    for (int i = 0; i < spec.r(); ++i) {
        const int a = spec.degrees[static_cast<std::size_t>(i)];
        if (a == 1 || (spec.characteristic != 0 && is_power_of(a, spec.characteristic)))
            out.push_back(i);
    }
    return out;
}

long monomial_min_size(const SVSpec& spec)
{
    const std::vector<int> I = exceptional_factors(spec);
    const std::vector<int>& n = spec.factors;
    const long prod = std::accumulate(n.begin(), n.end(), 1L, std::multiplies<>());

    long total = prod;
    Rational half_sum = 0;
    for (int i = 0; i < spec.r(); ++i) {
        if (std::find(I.begin(), I.end(), i) != I.end())
            continue;
        const long ni = n[static_cast<std::size_t>(i)];
        total += ni * (ni - 1) / 2 * (prod / ni);
        half_sum += Rational(ni - 1, 2);
    }
    if (Rational(prod) * (1 + half_sum) != Rational(total))
        throw InvariantViolation("minimal monomial count is not integral");
    return total;
}

MonomialSemigroup monomial_min_construction(const SVSpec& spec)
{
    spec.validate();
    const int r = spec.r();
    const Eigen::Index dim = total_dim(spec);
    const std::vector<int> I = exceptional_factors(spec);
    std::vector<IntVector> gens;

    // One monomial x_0 * prod_i x_{i,j_i}^{a_i} per tuple.
    std::vector<int> tuple(static_cast<std::size_t>(r), 0);
    do {
        IntVector v = IntVector::Zero(dim);
        v(0) = 1;
        for (int i = 0; i < r; ++i)
            v(var_index(spec, i, tuple[static_cast<std::size_t>(i)])) = spec.degrees[static_cast<std::size_t>(i)];
        gens.push_back(std::move(v));
    } while (next_tuple(tuple, spec.factors));

    // For each non-exceptional factor, one mixed monomial per pair j < j'.
    for (int i0 = 0; i0 < r; ++i0) {
        if (std::find(I.begin(), I.end(), i0) != I.end())
            continue;
        const int a0 = spec.degrees[static_cast<std::size_t>(i0)];
        const int n0 = spec.factors[static_cast<std::size_t>(i0)];
        std::vector<int> radix = spec.factors;
        radix[static_cast<std::size_t>(i0)] = 1;
        for (int j = 0; j < n0; ++j) {
            for (int jp = j + 1; jp < n0; ++jp) {
                std::vector<int> rest(static_cast<std::size_t>(r), 0);
                do {
                    IntVector v = IntVector::Zero(dim);
                    v(0) = 1;
                    for (int i = 0; i < r; ++i)
                        if (i != i0)
                            v(var_index(spec, i, rest[static_cast<std::size_t>(i)])) =
                                spec.degrees[static_cast<std::size_t>(i)];
                    v(var_index(spec, i0, j)) = 1;
                    v(var_index(spec, i0, jp)) = a0 - 1;
                    gens.push_back(std::move(v));
                } while (next_tuple(rest, radix));
            }
        }
    }

    MonomialSemigroup out(dim, std::move(gens));
    const TorusRep rep = sv_weight_matrix(spec);
    check_generators(rep, out);
    if (static_cast<long>(out.size()) != monomial_min_size(spec))
        throw InvariantViolation("construction size disagrees with the formula");
    return out;
}

bool support_r_plus_2_separates(const SVSpec& spec, int max_dim)
{
    const TorusRep rep = sv_weight_matrix(spec);
    const MonomialSemigroup S = small_support_generators(rep, spec.r() + 2, max_dim);
    const bool ok = spec.characteristic == 0
                        ? check_separating_char0(rep, S, max_dim).separating
                        : check_separating_charp(rep, S, spec.characteristic, kCharPCap, max_dim).yes;
    if (!ok)
        throw InvariantViolation("monomials on at most r+2 variables failed to separate");
    return true;
}

} // namespace torinv
