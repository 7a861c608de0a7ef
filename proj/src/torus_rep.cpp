#include "torinv/torus_rep.hpp"

#include <algorithm>

namespace torinv {

TorusRep::TorusRep(IntMatrix weights) : weights_(std::move(weights))
{
    if (weights_.rows() < 1 || weights_.cols() < 1)
        throw InvalidInput("weight matrix must be nonempty");
    if (weights_.rows() > weights_.cols())
        throw InvalidInput("rank " + std::to_string(weights_.rows()) + " exceeds dimension " +
                           std::to_string(weights_.cols()));
    if (weights_.cols() > 31)
        throw InvalidInput("at most 31 coordinates are supported");
    for (Eigen::Index j = 0; j < weights_.cols(); ++j)
        if (weights_.col(j).isZero())
            throw InvalidInput("weight " + std::to_string(j + 1) + " is zero");
    if (integer_rank(weights_) != weights_.rows())
        throw InvalidInput("weight matrix does not have full row rank");
}

RatMatrix TorusRep::weight_points(const IndexSet& I) const
{
    check_index_set(I);
    return to_rational(select_columns(weights_, I));
}

void TorusRep::check_index_set(const IndexSet& I) const
{
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k] < 0 || I[k] >= dim())
            throw InvalidInput("index " + std::to_string(I[k] + 1) + " out of range");
        if (k > 0 && I[k] <= I[k - 1])
            throw InvalidInput("index set must be strictly increasing");
    }
}

const char* to_string(Containment c)
{
    switch (c) {
    case Containment::Contained:
        return "Contained";
    case Containment::NotContained:
        return "NotContained";
    case Containment::Unknown:
        break;
    }
    return "Unknown";
}

namespace {

void check_cap(const TorusRep& rep, int max_dim)
{
    if (rep.dim() > max_dim)
        throw DimensionTooLarge(static_cast<int>(rep.dim()), max_dim);
}

RatVector origin(const TorusRep& rep) { return RatVector::Zero(rep.rank()); }

// avoids[mask]: 0 is outside conv(wt(mask)). Downward closed, so a mask is
// tested only when all of its one-smaller subsets avoid 0.
std::vector<char> avoid_table(const TorusRep& rep)
{
    const std::uint32_t full = 1u << rep.dim();
    std::vector<char> avoids(full, 0);
    avoids[0] = 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        bool candidate = true;
        for (std::uint32_t rest = mask; rest != 0 && candidate; rest &= rest - 1) {
            const std::uint32_t bit = rest & (~rest + 1);
            candidate = avoids[mask ^ bit] != 0;
        }
        if (candidate)
            avoids[mask] = !in_convex_hull(rep.weight_points(mask), origin(rep));
    }
    return avoids;
}

std::vector<char> relint_table(const TorusRep& rep, const std::vector<char>& avoids)
{
    const std::uint32_t full = 1u << rep.dim();
    std::vector<char> relint(full, 0);
    for (std::uint32_t mask = 1; mask < full; ++mask)
        if (!avoids[mask])
            relint[mask] = in_relative_interior(rep.weight_points(mask), origin(rep));
    return relint;
}

bool set_less(const IndexSet& a, const IndexSet& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Masks in `admissible` that are not strictly contained in another one.
std::vector<std::uint32_t> maximal_masks(const std::vector<std::uint32_t>& admissible)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t a : admissible) {
        const bool dominated = std::any_of(admissible.begin(), admissible.end(), [a](std::uint32_t b) {
            return b != a && (a & b) == a;
        });
        if (!dominated)
            out.push_back(a);
    }
    return out;
}

std::vector<IndexSet> sorted_sets(const std::vector<std::uint32_t>& masks)
{
    std::vector<IndexSet> out;
    for (std::uint32_t m : masks)
        out.push_back(mask_to_set(m));
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

} // namespace

NullconeDecomposition nullcone(const TorusRep& rep, int max_dim)
{
    check_cap(rep, max_dim);
    const std::vector<char> avoids = avoid_table(rep);
    const std::uint32_t full = 1u << rep.dim();
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!avoids[mask])
            continue;
        bool is_max = true;
        for (Eigen::Index i = 0; i < rep.dim() && is_max; ++i) {
            const std::uint32_t bit = 1u << i;
            if (!(mask & bit) && avoids[mask | bit])
                is_max = false;
        }
        if (is_max)
            maximal.push_back(mask);
    }

    NullconeDecomposition out;
    out.components = sorted_sets(maximal);
    for (const IndexSet& I : out.components) {
        if (!separating_functional(rep.weight_points(I)))
            throw InvariantViolation("nullcone component has no separating functional");
    }
    return out;
}

bool is_orbit_closed(const TorusRep& rep, const IndexSet& support)
{
    rep.check_index_set(support);
    if (support.empty())
        return true;
    return in_relative_interior(rep.weight_points(support), origin(rep));
}

bool sepvar_is_simple(const TorusRep& rep, int max_dim)
{
    check_cap(rep, max_dim);
    const std::vector<char> relint = relint_table(rep, avoid_table(rep));
    for (std::uint32_t mask = 1; mask < relint.size(); ++mask)
        if (relint[mask] && rational_rank(rep.weight_points(mask)) != rep.rank())
            return false;
    return true;
}

Containment graph_closure_classify(const TorusRep& rep, const NullconeDecomposition& nc,
                                   const IndexSet& I, const IndexSet& J)
{
    rep.check_index_set(I);
    rep.check_index_set(J);
    auto is_component = [&nc](const IndexSet& X) {
        return std::find(nc.components.begin(), nc.components.end(), X) != nc.components.end();
    };
    if (!is_component(I))
        throw NotNullconeComponent("first index set is not a nullcone component");
    if (!is_component(J))
        throw NotNullconeComponent("second index set is not a nullcone component");

    IndexSet common;
    std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(common));
    if (common.empty())
        return Containment::Contained;
    if (!restrict_kernel(rep.weights(), common).is_zero())
        return Containment::NotContained;
    return Containment::Unknown;
}

Containment graph_closure_classify(const TorusRep& rep, const IndexSet& I, const IndexSet& J, int max_dim)
{
    return graph_closure_classify(rep, nullcone(rep, max_dim), I, J);
}

SepVarDecomposition sepvar_decompose(const TorusRep& rep, int max_dim)
{
    check_cap(rep, max_dim);
    const std::vector<char> avoids = avoid_table(rep);
    const std::vector<char> relint = relint_table(rep, avoids);
    const std::uint32_t full = 1u << rep.dim();

    SepVarDecomposition out;
    out.simple = true;
    for (std::uint32_t mask = 1; mask < full && out.simple; ++mask)
        if (relint[mask] && rational_rank(rep.weight_points(mask)) != rep.rank())
            out.simple = false;

    const NullconeDecomposition nc = nullcone(rep, max_dim);
    for (const IndexSet& I : nc.components)
        for (const IndexSet& J : nc.components)
            out.nullcone_pairs.push_back(NullconePair{I, J, graph_closure_classify(rep, nc, I, J)});

    if (out.simple)
        return out;

    // K runs over inclusion-minimal nonempty sets with 0 in relint conv(wt(K)).
    std::vector<std::uint32_t> minimal_k;
    for (std::uint32_t K = 1; K < full; ++K) {
        if (!relint[K])
            continue;
        bool minimal = true;
        for (std::uint32_t sub = (K - 1) & K; sub != 0 && minimal; sub = (sub - 1) & K)
            if (relint[sub])
                minimal = false;
        if (minimal)
            minimal_k.push_back(K);
    }
    std::vector<IndexSet> k_sets = sorted_sets(minimal_k);

    for (const IndexSet& kset : k_sets) {
        const std::uint32_t K = set_to_mask(kset);
        const std::uint32_t rest = (full - 1) & ~K;
        std::vector<std::uint32_t> admissible;
        for (std::uint32_t I = rest; I != 0; I = (I - 1) & rest)
            if (!relint[K | I])
                admissible.push_back(I);
        const std::vector<IndexSet> maximal = sorted_sets(maximal_masks(admissible));
        for (const IndexSet& I : maximal)
            for (const IndexSet& J : maximal)
                out.triples.push_back(SepVarTriple{kset, I, J});
    }
    return out;
}

} // namespace torinv
