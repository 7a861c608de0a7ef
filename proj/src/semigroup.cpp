#include "torinv/semigroup.hpp"

#include "torinv/simplex.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace torinv {

bool graded_less(const IntVector& a, const IntVector& b)
{
    const Integer da = a.sum();
    const Integer db = b.sum();
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

bool is_exponent_vector(const IntVector& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) < 0)
            return false;
    return true;
}

MonomialSemigroup::MonomialSemigroup(Eigen::Index ambient_dim) : dim_(ambient_dim) {}

MonomialSemigroup::MonomialSemigroup(Eigen::Index ambient_dim, std::vector<IntVector> generators)
    : dim_(ambient_dim), gens_(std::move(generators))
{
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        const IntVector& g = gens_[k];
        if (g.size() != dim_)
            throw InvalidInput("generator " + std::to_string(k) + " has length " +
                               std::to_string(g.size()) + ", expected " + std::to_string(dim_));
        if (!is_exponent_vector(g))
            throw InvalidInput("generator " + std::to_string(k) + " has a negative entry");
        if (g.isZero())
            throw InvalidInput("generator " + std::to_string(k) + " is the zero vector");
        for (std::size_t l = 0; l < k; ++l)
            if (gens_[l] == g)
                throw InvalidInput("generator " + std::to_string(k) + " duplicates generator " +
                                   std::to_string(l));
    }
}

IntMatrix MonomialSemigroup::matrix() const
{
    IntMatrix m(dim_, static_cast<Eigen::Index>(gens_.size()));
    for (std::size_t k = 0; k < gens_.size(); ++k)
        m.col(static_cast<Eigen::Index>(k)) = gens_[k];
    return m;
}

// ---------------------------------------------------------------------------
// Hilbert basis

namespace {

using Word = std::int64_t;
using WordVec = std::vector<Word>;

[[noreturn]] void overflow()
{
    throw SearchSpaceTooLarge("machine-word overflow during Hilbert basis search");
}

Word add(Word a, Word b)
{
    Word out;
    if (__builtin_add_overflow(a, b, &out))
        overflow();
    return out;
}

Word mul(Word a, Word b)
{
    Word out;
    if (__builtin_mul_overflow(a, b, &out))
        overflow();
    return out;
}

Word to_word(const Integer& v)
{
    constexpr Word limit = Word{1} << 40;
    if (v > limit || v < -limit)
        throw SearchSpaceTooLarge("weight entry too large for Hilbert basis search");
    return v.convert_to<Word>();
}

bool dominates(const WordVec& y, const WordVec& s)
{
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] < s[i])
            return false;
    return true;
}

struct Node {
    WordVec x;
    WordVec image; // A x
};

} // namespace

HilbertBasis hilbert_basis(const IntMatrix& A, int max_dim)
{
    const Eigen::Index n = A.cols();
    const Eigen::Index r = A.rows();
    if (n > max_dim)
        throw DimensionTooLarge(static_cast<int>(n), max_dim);

    std::vector<WordVec> cols(static_cast<std::size_t>(n), WordVec(static_cast<std::size_t>(r)));
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < r; ++i)
            cols[j][i] = to_word(A(i, j));

    std::vector<WordVec> found;
    std::set<WordVec> frontier;
    for (Eigen::Index j = 0; j < n; ++j) {
        WordVec e(static_cast<std::size_t>(n), 0);
        e[j] = 1;
        frontier.insert(e);
    }

    auto image_of = [&](const WordVec& x) {
        WordVec img(static_cast<std::size_t>(r), 0);
        for (Eigen::Index j = 0; j < n; ++j)
            if (x[j] != 0)
                for (Eigen::Index i = 0; i < r; ++i)
                    img[i] = add(img[i], mul(cols[j][i], x[j]));
        return img;
    };

    while (!frontier.empty()) {
        std::vector<Node> open;
        for (const WordVec& x : frontier) {
            WordVec img = image_of(x);
            if (std::all_of(img.begin(), img.end(), [](Word w) { return w == 0; })) {
                const bool redundant = std::any_of(found.begin(), found.end(),
                                                   [&](const WordVec& s) { return dominates(x, s); });
                if (!redundant)
                    found.push_back(x);
            } else {
                open.push_back(Node{x, std::move(img)});
            }
        }
        std::set<WordVec> next;
        for (const Node& node : open) {
            for (Eigen::Index j = 0; j < n; ++j) {
                Word dot = 0;
                for (Eigen::Index i = 0; i < r; ++i)
                    dot = add(dot, mul(node.image[i], cols[j][i]));
                if (dot >= 0)
                    continue;
                WordVec y = node.x;
                y[j] = add(y[j], 1);
                const bool pruned = std::any_of(found.begin(), found.end(),
                                                [&](const WordVec& s) { return dominates(y, s); });
                if (!pruned)
                    next.insert(std::move(y));
            }
        }
        frontier = std::move(next);
    }

    HilbertBasis out;
    out.ambient_dim = n;
    for (const WordVec& x : found) {
        IntVector v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v(i) = x[i];
        out.elements.push_back(std::move(v));
    }
    std::sort(out.elements.begin(), out.elements.end(), graded_less);

    for (std::size_t a = 0; a < found.size(); ++a)
        for (std::size_t b = 0; b < found.size(); ++b)
            if (a != b && dominates(found[a], found[b]))
                throw InvariantViolation("Hilbert basis element dominates another");
    return out;
}

HilbertBasis restrict_basis(const HilbertBasis& hb, const IndexSet& I)
{
    const std::uint32_t mask = set_to_mask(I);
    HilbertBasis out;
    out.ambient_dim = hb.ambient_dim;
    for (const IntVector& h : hb.elements)
        if ((support_mask(h) & ~mask) == 0)
            out.elements.push_back(h);
    return out;
}

HilbertBasis hilbert_basis_restricted(const IntMatrix& A, const IndexSet& I, int max_dim)
{
    for (int i : I)
        if (i < 0 || i >= A.cols())
            throw InvalidInput("index " + std::to_string(i) + " out of range");
    return restrict_basis(hilbert_basis(A, max_dim), I);
}

// ---------------------------------------------------------------------------
// Membership

namespace {

struct Bound {
    Eigen::Index var;
    bool upper;
    Integer value;
};

Integer floor_of(const Rational& q)
{
    return floor_div(Integer(numerator(q)), Integer(denominator(q)));
}

// Integer z with c0 + H^T z >= 0, searched by LP branch and bound.
std::optional<IntVector> branch_and_bound(const IntVector& c0, const IntMatrix& H, std::vector<Bound>& bounds)
{
    const Eigen::Index d = H.rows();
    const Eigen::Index k = H.cols();
    const auto nb = static_cast<Eigen::Index>(bounds.size());
    const Eigen::Index vars = 2 * d + k + nb;

    RatMatrix A = RatMatrix::Zero(k + nb, vars);
    RatVector b(k + nb);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            A(i, j) = H(j, i);
            A(i, d + j) = -H(j, i);
        }
        A(i, 2 * d + i) = -1;
        b(i) = -c0(i);
    }
    for (Eigen::Index q = 0; q < nb; ++q) {
        const Bound& bd = bounds[static_cast<std::size_t>(q)];
        A(k + q, bd.var) = 1;
        A(k + q, d + bd.var) = -1;
        A(k + q, 2 * d + k + q) = bd.upper ? 1 : -1;
        b(k + q) = bd.value;
    }

    const LpResult<Rational> lp = simplex_feasible<Rational>(A, b);
    if (lp.status != LpStatus::Optimal)
        return std::nullopt;

    IntVector z(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const Rational value = lp.x(j) - lp.x(d + j);
        if (denominator(value) != 1) {
            const Integer fl = floor_of(value);
            bounds.push_back(Bound{j, true, fl});
            std::optional<IntVector> found = branch_and_bound(c0, H, bounds);
            bounds.pop_back();
            if (found)
                return found;
            bounds.push_back(Bound{j, false, fl + 1});
            found = branch_and_bound(c0, H, bounds);
            bounds.pop_back();
            return found;
        }
        z(j) = Integer(numerator(value));
    }
    return z;
}

} // namespace

std::optional<IntVector> represent(const MonomialSemigroup& S, const IntVector& t)
{
    if (t.size() != S.ambient_dim())
        throw InvalidInput("target length does not match semigroup dimension");
    const std::size_t k = S.size();
    IntVector coeffs = IntVector::Zero(static_cast<Eigen::Index>(k));
    if (!is_exponent_vector(t))
        return std::nullopt;
    if (t.isZero())
        return coeffs;

    // Generators leaving supp(t) can never occur with a positive coefficient.
    const std::uint32_t tmask = support_mask(t);
    std::vector<std::size_t> usable;
    for (std::size_t j = 0; j < k; ++j)
        if ((support_mask(S.generators()[j]) & ~tmask) == 0)
            usable.push_back(j);
    if (usable.empty())
        return std::nullopt;

    IntMatrix G(t.size(), static_cast<Eigen::Index>(usable.size()));
    for (std::size_t q = 0; q < usable.size(); ++q)
        G.col(static_cast<Eigen::Index>(q)) = S.generators()[usable[q]];

    std::optional<IntegerSolution> sol = solve_integer(G, t);
    if (!sol)
        return std::nullopt;

    IntVector c;
    if (sol->homogeneous.rows() == 0) {
        c = sol->particular;
        if (!is_exponent_vector(c))
            return std::nullopt;
    } else {
        std::vector<Bound> bounds;
        std::optional<IntVector> z = branch_and_bound(sol->particular, sol->homogeneous, bounds);
        if (!z)
            return std::nullopt;
        c = sol->particular + sol->homogeneous.transpose() * *z;
    }

    for (std::size_t q = 0; q < usable.size(); ++q)
        coeffs(static_cast<Eigen::Index>(usable[q])) = c(static_cast<Eigen::Index>(q));
    if (!is_exponent_vector(coeffs) || S.matrix() * coeffs != t)
        throw InvariantViolation("semigroup representation failed to re-verify");
    return coeffs;
}

bool member(const MonomialSemigroup& S, const IntVector& t) { return represent(S, t).has_value(); }

LatticeBasis generated_lattice(const MonomialSemigroup& S)
{
    return LatticeBasis::from_vectors(S.generators(), S.ambient_dim());
}

MonomialSemigroup restrict_semigroup(const MonomialSemigroup& S, const IndexSet& I)
{
    for (int i : I)
        if (i < 0 || i >= S.ambient_dim())
            throw InvalidInput("index " + std::to_string(i) + " out of range");
    const std::uint32_t mask = set_to_mask(I);
    std::vector<IntVector> kept;
    for (const IntVector& g : S.generators())
        if ((support_mask(g) & ~mask) == 0)
            kept.push_back(g);
    return MonomialSemigroup(S.ambient_dim(), std::move(kept));
}

} // namespace torinv
