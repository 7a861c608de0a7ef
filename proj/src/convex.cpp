#include "torinv/convex.hpp"

#include "torinv/simplex.hpp"

#include <numeric>

namespace torinv {

namespace {

void check_dims(const RatMatrix& points, const RatVector& target)
{
    if (points.rows() != target.size())
        throw InvalidInput("points and target have different dimensions");
}

// Constraint matrix of { lambda >= 0 : sum lambda = 1, sum lambda_i p_i = target }.
std::pair<RatMatrix, RatVector> hull_system(const RatMatrix& points, const RatVector& target)
{
    const Eigen::Index r = points.rows();
    const Eigen::Index k = points.cols();
    RatMatrix A(r + 1, k);
    A.topRows(r) = points;
    A.row(r).setOnes();
    RatVector b(r + 1);
    b.head(r) = target;
    b(r) = 1;
    return {A, b};
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref(RatMatrix& M)
{
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < M.cols() && row < M.rows(); ++col) {
        Eigen::Index p = -1;
        for (Eigen::Index i = row; i < M.rows(); ++i) {
            if (M(i, col) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        if (p != row)
            M.row(p).swap(M.row(row));
        M.row(row) /= M(row, col);
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            if (i != row && M(i, col) != 0) {
                const Rational f = M(i, col);
                M.row(i) -= f * M.row(row);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Eigen::Index rational_rank(const RatMatrix& M)
{
    RatMatrix work = M;
    return static_cast<Eigen::Index>(rref(work).size());
}

std::optional<RatVector> null_vector(const RatMatrix& M)
{
    RatMatrix work = M;
    const std::vector<Eigen::Index> pivots = rref(work);
    if (static_cast<Eigen::Index>(pivots.size()) == M.cols())
        return std::nullopt;
    // First free column gets 1; pivot variables follow from the RREF rows.
    Eigen::Index free_col = 0;
    for (Eigen::Index p : pivots) {
        if (p != free_col)
            break;
        ++free_col;
    }
    RatVector v = RatVector::Zero(M.cols());
    v(free_col) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        v(pivots[i]) = -work(static_cast<Eigen::Index>(i), free_col);
    return v;
}

Eigen::Index affine_dimension(const RatMatrix& points)
{
    if (points.cols() == 0)
        return -1;
    RatMatrix lifted(points.rows() + 1, points.cols());
    lifted.topRows(points.rows()) = points;
    lifted.bottomRows(1).setOnes();
    return rational_rank(lifted) - 1;
}

bool in_convex_hull(const RatMatrix& points, const RatVector& target)
{
    check_dims(points, target);
    if (points.cols() == 0)
        return false;
    auto [A, b] = hull_system(points, target);
    return simplex_feasible<Rational>(A, b).status == LpStatus::Optimal;
}

bool in_relative_interior(const RatMatrix& points, const RatVector& target)
{
    check_dims(points, target);
    const Eigen::Index k = points.cols();
    if (k == 0)
        return false;
    // lambda_i = t + s_i with t, s_i >= 0; maximize t.
    auto [H, b] = hull_system(points, target);
    RatMatrix A(H.rows(), k + 1);
    A.col(0) = H.rowwise().sum();
    A.rightCols(k) = H;
    RatVector c = RatVector::Zero(k + 1);
    c(0) = 1;
    const LpResult<Rational> res = simplex_maximize<Rational>(A, b, c);
    return res.status == LpStatus::Optimal && res.objective > 0;
}

ConvexCombination caratheodory(const RatMatrix& points, const RatVector& target)
{
    check_dims(points, target);
    if (points.cols() == 0)
        throw NotInHull();
    auto [A, b] = hull_system(points, target);
    const LpResult<Rational> res = simplex_feasible<Rational>(A, b);
    if (res.status != LpStatus::Optimal)
        throw NotInHull();

    std::vector<Eigen::Index> idx;
    std::vector<Rational> lambda;
    for (Eigen::Index i = 0; i < points.cols(); ++i) {
        if (res.x(i) != 0) {
            idx.push_back(i);
            lambda.push_back(res.x(i));
        }
    }

    // Greedy elimination: while the support is affinely dependent, move along
    // a dependency until the lowest-index blocking coefficient hits zero.
    for (;;) {
        RatMatrix lifted(points.rows() + 1, static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k) {
            lifted.col(static_cast<Eigen::Index>(k)).head(points.rows()) = points.col(idx[k]);
            lifted(points.rows(), static_cast<Eigen::Index>(k)) = 1;
        }
        std::optional<RatVector> mu = null_vector(lifted);
        if (!mu)
            break;
        if ((mu->array() > 0).count() == 0)
            *mu = -*mu;
        std::size_t hit = idx.size();
        Rational theta;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const Rational& m = (*mu)(static_cast<Eigen::Index>(k));
            if (m <= 0)
                continue;
            const Rational ratio = lambda[k] / m;
            if (hit == idx.size() || ratio < theta) {
                hit = k;
                theta = ratio;
            }
        }
        std::vector<Eigen::Index> next_idx;
        std::vector<Rational> next_lambda;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k == hit)
                continue;
            Rational value = lambda[k] - theta * (*mu)(static_cast<Eigen::Index>(k));
            if (value != 0) {
                next_idx.push_back(idx[k]);
                next_lambda.push_back(value);
            }
        }
        idx = std::move(next_idx);
        lambda = std::move(next_lambda);
    }

    return ConvexCombination{std::move(idx), std::move(lambda)};
}

std::optional<IntVector> separating_functional(const RatMatrix& points)
{
    const Eigen::Index r = points.rows();
    const Eigen::Index k = points.cols();
    if (k == 0)
        return IntVector::Zero(r);
    // delta = dp - dm; delta·p_j - s_j = 1; minimize sum(dp + dm).
    RatMatrix A = RatMatrix::Zero(k, 2 * r + k);
    A.leftCols(r) = points.transpose();
    A.middleCols(r, r) = -points.transpose();
    A.rightCols(k) = -RatMatrix::Identity(k, k);
    RatVector b = RatVector::Ones(k);
    RatVector c = RatVector::Zero(2 * r + k);
    c.head(2 * r).setConstant(Rational(-1));
    const LpResult<Rational> res = simplex_maximize<Rational>(A, b, c);
    if (res.status != LpStatus::Optimal)
        return std::nullopt;

    RatVector delta = res.x.head(r) - res.x.segment(r, r);
    Integer lcm = 1;
    for (Eigen::Index i = 0; i < r; ++i)
        lcm = mp::lcm(lcm, Integer(denominator(delta(i))));
    IntVector out(r);
    Integer g = 0;
    for (Eigen::Index i = 0; i < r; ++i) {
        out(i) = Integer(numerator(delta(i))) * (lcm / Integer(denominator(delta(i))));
        g = mp::gcd(g, out(i));
    }
    if (g > 1)
        for (Eigen::Index i = 0; i < r; ++i)
            out(i) /= g;
    return out;
}

} // namespace torinv
