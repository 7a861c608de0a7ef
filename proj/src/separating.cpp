#include "torinv/separating.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace torinv {

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void check_generators(const TorusRep& rep, const MonomialSemigroup& S)
{
    if (S.ambient_dim() != rep.dim())
        throw InvalidInput("generators have length " + std::to_string(S.ambient_dim()) +
                           " but the representation has dimension " + std::to_string(rep.dim()));
    for (std::size_t k = 0; k < S.size(); ++k)
        if (!(rep.weights() * S.generators()[k]).isZero())
            throw GeneratorNotInvariant("generator " + std::to_string(k) + " is not invariant");
}

namespace {

bool in_l(const TorusRep& rep, const IntVector& v)
{
    return v.size() == rep.dim() && is_exponent_vector(v) && !v.isZero() && (rep.weights() * v).isZero();
}

bool support_witness_exists(const MonomialSemigroup& S, std::uint32_t alpha_mask, int i)
{
    for (const IntVector& g : S.generators()) {
        const std::uint32_t gm = support_mask(g);
        if ((gm >> i & 1u) && (gm & ~alpha_mask) == 0)
            return true;
    }
    return false;
}

} // namespace

Char0Verdict check_separating_char0(const TorusRep& rep, const HilbertBasis& hb, const MonomialSemigroup& S)
{
    check_generators(rep, S);
    Char0Verdict out;
    // Checking I = supp(h) suffices for each h: Z·S_{supp h} ⊆ Z·S_I whenever
    // supp h ⊆ I, and the restricted Hilbert bases generate each L_I.
    for (const IntVector& h : hb.elements) {
        const IndexSet I = support(h);
        if (!generated_lattice(restrict_semigroup(S, I)).contains(h)) {
            out.certificate = LatticeFailure{I, h};
            return out;
        }
        const std::uint32_t mask = support_mask(h);
        for (int i : I) {
            if (!support_witness_exists(S, mask, i)) {
                out.certificate = SupportFailure{h, i};
                return out;
            }
        }
    }
    out.separating = true;
    return out;
}

Char0Verdict check_separating_char0(const TorusRep& rep, const MonomialSemigroup& S, int max_dim)
{
    check_generators(rep, S);
    return check_separating_char0(rep, hilbert_basis(rep.weights(), max_dim), S);
}

CharPVerdict check_separating_charp(const TorusRep& rep, const HilbertBasis& hb, const MonomialSemigroup& S,
                                    int p, int cap)
{
    if (!is_prime(p))
        throw InvalidInput("characteristic " + std::to_string(p) + " is not a prime");
    if (cap < 1)
        throw InvalidInput("p-power cap must be at least 1");
    check_generators(rep, S);

    CharPVerdict out;
    out.p = p;
    int worst = 0;
    for (const IntVector& h : hb.elements) {
        Integer power = 1;
        bool hit = false;
        for (int m = 1; m <= cap; ++m) {
            power *= p;
            std::optional<IntVector> coeffs = represent(S, IntVector(power * h));
            if (coeffs) {
                out.witnesses.push_back(PowerWitness{h, m, std::move(*coeffs)});
                worst = std::max(worst, m);
                hit = true;
                break;
            }
        }
        if (!hit) {
            out.m = cap;
            out.witnesses.clear();
            out.obstruction = h;
            return out;
        }
    }
    out.yes = true;
    out.m = std::max(worst, 1);
    return out;
}

CharPVerdict check_separating_charp(const TorusRep& rep, const MonomialSemigroup& S, int p, int cap, int max_dim)
{
    check_generators(rep, S);
    return check_separating_charp(rep, hilbert_basis(rep.weights(), max_dim), S, p, cap);
}

bool verify_certificate(const TorusRep& rep, const MonomialSemigroup& S, const Char0Certificate& cert)
{
    if (const auto* lf = std::get_if<LatticeFailure>(&cert)) {
        if (!in_l(rep, lf->alpha))
            return false;
        const std::uint32_t mask = set_to_mask(lf->I);
        if ((support_mask(lf->alpha) & ~mask) != 0)
            return false;
        return !lattice_member(generated_lattice(restrict_semigroup(S, lf->I)), lf->alpha);
    }
    if (const auto* sf = std::get_if<SupportFailure>(&cert)) {
        if (!in_l(rep, sf->alpha) || sf->coordinate < 0 || sf->coordinate >= rep.dim())
            return false;
        if (sf->alpha(sf->coordinate) == 0)
            return false;
        return !support_witness_exists(S, support_mask(sf->alpha), sf->coordinate);
    }
    return false;
}

bool verify_certificate(const TorusRep& rep, const MonomialSemigroup& S, const CharPVerdict& verdict)
{
    if (verdict.yes) {
        for (const PowerWitness& w : verdict.witnesses) {
            if (!in_l(rep, w.h) || w.coefficients.size() != static_cast<Eigen::Index>(S.size()))
                return false;
            if (!is_exponent_vector(w.coefficients))
                return false;
            Integer power = 1;
            for (int m = 0; m < w.m; ++m)
                power *= verdict.p;
            if (S.matrix() * w.coefficients != power * w.h)
                return false;
        }
        return !verdict.witnesses.empty() || S.empty();
    }
    // A bounded negative answer: re-run the membership tests on the obstruction.
    if (!verdict.obstruction || !in_l(rep, *verdict.obstruction))
        return false;
    Integer power = 1;
    for (int m = 1; m <= verdict.m; ++m) {
        power *= verdict.p;
        if (member(S, IntVector(power * *verdict.obstruction)))
            return false;
    }
    return true;
}

MonomialSemigroup small_support_generators(const TorusRep& rep, int bound, int max_dim)
{
    if (bound < 1)
        throw InvalidInput("support bound must be at least 1");
    const HilbertBasis hb = hilbert_basis(rep.weights(), max_dim);
    std::vector<IntVector> kept;
    for (const IntVector& h : hb.elements)
        if (static_cast<int>(support(h).size()) <= bound)
            kept.push_back(h);
    return MonomialSemigroup(rep.dim(), std::move(kept));
}

MonomialSemigroup construct_2rplus1(const TorusRep& rep, int max_dim)
{
    const int bound = static_cast<int>(2 * rep.rank() + 1);
    MonomialSemigroup S = small_support_generators(rep, bound, max_dim);
    if (!check_separating_char0(rep, S, max_dim).separating)
        throw InvariantViolation("invariants in at most 2r+1 variables failed to separate");
    return S;
}

KernelSpan kernel_small_support_spans(const TorusRep& rep, int max_dim)
{
    if (rep.dim() > max_dim)
        throw DimensionTooLarge(static_cast<int>(rep.dim()), max_dim);
    const auto n = static_cast<int>(rep.dim());
    const int k = std::min(static_cast<int>(rep.rank()) + 1, n);

    KernelSpan out;
    std::set<std::vector<Integer>> seen;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k)
            continue;
        const LatticeBasis local = restrict_kernel(rep.weights(), mask_to_set(mask));
        for (Eigen::Index row = 0; row < local.rank(); ++row) {
            IntVector v = local.vector(row);
            std::vector<Integer> key(v.data(), v.data() + v.size());
            if (seen.insert(key).second)
                out.generators.push_back(std::move(v));
        }
    }
    std::sort(out.generators.begin(), out.generators.end(), [](const IntVector& a, const IntVector& b) {
        return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
    });
    out.spans = lattice_equal(LatticeBasis::from_vectors(out.generators, rep.dim()), kernel_basis(rep.weights()));
    if (!out.spans)
        throw InvariantViolation("kernel vectors on r+1 coordinates do not span the kernel");
    return out;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n)
{
    const std::size_t k = idx.size();
    for (std::size_t pos = k; pos-- > 0;) {
        if (idx[pos] < n - k + pos) {
            ++idx[pos];
            for (std::size_t q = pos + 1; q < k; ++q)
                idx[q] = idx[q - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

MinimalSearch minimal_monomial_size(const TorusRep& rep, const MonomialSemigroup& pool,
                                    const MinimalSearchOptions& options)
{
    check_generators(rep, pool);
    if (options.prime && !is_prime(*options.prime))
        throw InvalidInput("characteristic " + std::to_string(*options.prime) + " is not a prime");
    const HilbertBasis hb = hilbert_basis(rep.weights(), options.max_dim);
    const std::size_t n = pool.size();
    const std::size_t cap = options.cap == 0 ? n : std::min(options.cap, n);

    auto separates = [&](const MonomialSemigroup& S) {
        if (options.prime)
            return check_separating_charp(rep, hb, S, *options.prime, options.charp_cap).yes;
        return check_separating_char0(rep, hb, S).separating;
    };

    MinimalSearch out;
    out.witness = MonomialSemigroup(rep.dim());
    for (std::size_t k = 0; k <= cap; ++k) {
        if (binomial(n, k) > options.budget)
            throw SearchSpaceTooLarge("C(" + std::to_string(n) + ", " + std::to_string(k) +
                                      ") subsets exceed the search budget of " + std::to_string(options.budget));
        out.largest_size_searched = k;
        std::vector<std::size_t> idx(k);
        for (std::size_t q = 0; q < k; ++q)
            idx[q] = q;
        do {
            std::vector<IntVector> chosen;
            for (std::size_t q : idx)
                chosen.push_back(pool.generators()[q]);
            MonomialSemigroup S(rep.dim(), std::move(chosen));
            if (separates(S)) {
                out.found = true;
                out.size = k;
                out.indices = idx;
                out.witness = std::move(S);
                return out;
            }
        } while (k > 0 && next_combination(idx, n));
    }
    return out;
}

std::optional<long> TorusPoint::evaluate(const IntVector& gamma) const
{
    long acc = 0;
    for (Eigen::Index i = 0; i < gamma.size(); ++i) {
        if (gamma(i) == 0)
            continue;
        const auto& c = coords[static_cast<std::size_t>(i)];
        if (!c)
            return std::nullopt;
        const Integer term = Integer(*c) * (gamma(i) % modulus);
        acc = (acc + (term % modulus).convert_to<long>()) % modulus;
    }
    return acc;
}

namespace {

bool splits(const TorusPoint& u, const TorusPoint& v, const IntVector& gamma)
{
    return u.evaluate(gamma) != v.evaluate(gamma);
}

bool any_splits(const TorusPoint& u, const TorusPoint& v, const std::vector<IntVector>& gammas)
{
    return std::any_of(gammas.begin(), gammas.end(), [&](const IntVector& g) { return splits(u, v, g); });
}

const IntVector* first_split(const TorusPoint& u, const TorusPoint& v, const std::vector<IntVector>& gammas)
{
    for (const IntVector& g : gammas)
        if (splits(u, v, g))
            return &g;
    return nullptr;
}

TorusPoint unit_point(long modulus, Eigen::Index n, std::uint32_t mask)
{
    TorusPoint p;
    p.modulus = modulus;
    p.coords.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        if (mask >> i & 1u)
            p.coords[static_cast<std::size_t>(i)] = 0;
    return p;
}

} // namespace

std::optional<OracleWitness> oracle_refute(const TorusRep& rep, const MonomialSemigroup& S, long modulus,
                                           std::uint64_t budget, int max_dim)
{
    if (modulus < 2)
        throw InvalidInput("oracle modulus must be at least 2");
    if (S.ambient_dim() != rep.dim())
        throw InvalidInput("generators and representation have different dimensions");
    const HilbertBasis hb = hilbert_basis(rep.weights(), max_dim);
    const Eigen::Index n = rep.dim();
    std::uint64_t spent = 0;

    // Zero patterns: the support of α against the same support minus one coordinate.
    for (const IntVector& alpha : hb.elements) {
        const std::uint32_t mask = support_mask(alpha);
        for (int i0 : support(alpha)) {
            if (spent++ >= budget)
                return std::nullopt;
            TorusPoint u = unit_point(modulus, n, mask);
            TorusPoint v = u;
            v.coords[static_cast<std::size_t>(i0)].reset();
            if (!any_splits(u, v, S.generators()))
                return OracleWitness{u, v, alpha};
        }
    }

    // Unit points differing in a single coordinate's root-of-unity class.
    std::vector<std::uint32_t> masks;
    for (const IntVector& alpha : hb.elements) {
        const std::uint32_t m = support_mask(alpha);
        if (std::find(masks.begin(), masks.end(), m) == masks.end())
            masks.push_back(m);
    }
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    if (std::find(masks.begin(), masks.end(), full) == masks.end())
        masks.push_back(full);

    for (std::uint32_t mask : masks) {
        for (int i : mask_to_set(mask)) {
            for (long c = 1; c < modulus; ++c) {
                if (spent++ >= budget)
                    return std::nullopt;
                TorusPoint u = unit_point(modulus, n, mask);
                TorusPoint v = u;
                v.coords[static_cast<std::size_t>(i)] = c;
                if (any_splits(u, v, S.generators()))
                    continue;
                if (const IntVector* alpha = first_split(u, v, hb.elements))
                    return OracleWitness{u, v, *alpha};
            }
        }
    }
    return std::nullopt;
}

bool verify_oracle_witness(const TorusRep& rep, const MonomialSemigroup& S, const OracleWitness& w)
{
    if (w.u.modulus != w.v.modulus || w.u.modulus < 1)
        return false;
    if (w.u.coords.size() != static_cast<std::size_t>(rep.dim()) || w.v.coords.size() != w.u.coords.size())
        return false;
    if (!in_l(rep, w.alpha) || !splits(w.u, w.v, w.alpha))
        return false;
    return !any_splits(w.u, w.v, S.generators());
}

} // namespace torinv
